#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"

#include "argaudit/af.hpp"
#include "argaudit/catalog.hpp"
#include "argaudit/policy.hpp"

namespace test_helpers {

inline std::filesystem::path repo_dir() { return ARGAUDIT_REPO_DIR; }
inline std::filesystem::path data_dir() { return repo_dir() / "data"; }
inline std::filesystem::path golden_dir() { return repo_dir() / "tests" / "golden"; }

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline argaudit::Dataset load_fixture() {
    return argaudit::load_catalog_files((data_dir() / "movies.csv").string(),
                                        (data_dir() / "ratings.csv").string());
}

// The ten-argument graph used as the golden solver test: nine mutual
// conflicts over arguments 1..10, with 1, 5 and 7 unattacked.
inline argaudit::ArgGraph golden_ten_graph() {
    argaudit::ArgGraph g;
    for (int i = 1; i <= 10; ++i) g.add_argument(std::to_string(i));
    const std::pair<int, int> edges[] = {{2, 8}, {2, 9}, {2, 6}, {2, 3}, {3, 6},
                                         {3, 8}, {4, 6}, {6, 8}, {8, 10}};
    for (const auto& [a, b] : edges) {
        g.add_attack(std::to_string(a), std::to_string(b));
        g.add_attack(std::to_string(b), std::to_string(a));
    }
    return g;
}

// Random graph over ids "0".."n-1" where each ordered pair (including
// self-attacks) is an attack with probability `density`.
inline argaudit::ArgGraph random_af(std::mt19937& rng, int n, double density) {
    argaudit::ArgGraph g;
    for (int i = 0; i < n; ++i) g.add_argument(std::to_string(i));
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (coin(rng) < density)
                g.add_attack(std::to_string(i), std::to_string(j));
        }
    }
    return g;
}

// Random extended definite program over at most `max_atoms` atoms (some
// strongly negated) and at most `max_clauses` clauses.
inline argaudit::Program random_program(std::mt19937& rng, int max_atoms,
                                        int max_clauses) {
    static const std::vector<argaudit::Atom> pool = {
        argaudit::make_atom("a"),       argaudit::make_atom("b"),
        argaudit::make_atom("c"),       argaudit::make_atom("d"),
        argaudit::make_atom("a", true), argaudit::make_atom("b", true),
        argaudit::make_atom("e"),       argaudit::make_atom("f"),
    };
    std::uniform_int_distribution<int> atom_count(1, max_atoms);
    int n_atoms = atom_count(rng);
    std::uniform_int_distribution<int> pick(0, n_atoms - 1);
    std::uniform_int_distribution<int> clause_count(0, max_clauses);
    std::uniform_int_distribution<int> body_size(0, 3);

    std::vector<argaudit::Clause> clauses;
    int n_clauses = clause_count(rng);
    for (int i = 0; i < n_clauses; ++i) {
        argaudit::Atom head = pool[pick(rng)];
        std::vector<argaudit::Atom> body;
        int k = body_size(rng);
        for (int j = 0; j < k; ++j) body.push_back(pool[pick(rng)]);
        clauses.push_back(argaudit::make_clause(head, body));
    }
    return argaudit::Program(clauses);
}

// Independent least-model oracle: the unique minimal atom set closed under
// every clause, found by checking all subsets of the program language.
inline std::set<argaudit::Atom> brute_force_least_model(const argaudit::Program& p) {
    std::vector<argaudit::Atom> atoms(p.language().begin(), p.language().end());
    std::size_t n = atoms.size();
    REQUIRE(n <= 20);
    std::set<argaudit::Atom> best;
    bool found = false;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::set<argaudit::Atom> s;
        for (std::size_t i = 0; i < n; ++i) {
            if ((mask >> i) & 1u) s.insert(atoms[i]);
        }
        bool closed = true;
        for (const argaudit::Clause& c : p.clauses()) {
            bool body_in = true;
            for (const argaudit::Atom& a : c.body) {
                if (!s.contains(a)) {
                    body_in = false;
                    break;
                }
            }
            if (body_in && !s.contains(c.head)) {
                closed = false;
                break;
            }
        }
        if (!closed) continue;
        if (!found || s.size() < best.size()) {
            best = std::move(s);
            found = true;
        }
    }
    REQUIRE(found);
    return best;
}

}  // namespace test_helpers
