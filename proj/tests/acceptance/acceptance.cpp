// Acceptance suite: runs every top-level criterion and prints one PASS/FAIL
// line each. Returns non-zero if any criterion fails.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "argaudit/af.hpp"
#include "argaudit/argument.hpp"
#include "argaudit/catalog.hpp"
#include "argaudit/config.hpp"
#include "argaudit/dialogue.hpp"
#include "argaudit/errors.hpp"
#include "argaudit/investigation.hpp"
#include "argaudit/pipeline.hpp"
#include "argaudit/policy.hpp"
#include "argaudit/recommender.hpp"

using namespace argaudit;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void report(const std::string& name, bool ok, const std::string& detail) {
    std::cout << (ok ? "PASS " : "FAIL ") << name;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n";
    if (!ok) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
}

fs::path repo_dir() { return ARGAUDIT_REPO_DIR; }

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// ---------------------------------------------------------------------------
// The ten-argument golden graph, entered as the published ordered pair list
// (duplicates included); the attack relation is a set.

ArgGraph golden_graph() {
    ArgGraph g;
    for (int i = 1; i <= 10; ++i) g.add_argument(std::to_string(i));
    const std::pair<int, int> listed[] = {
        {2, 8}, {8, 2}, {2, 9}, {9, 2}, {2, 6}, {6, 2}, {2, 3},  {3, 2},  {3, 6},
        {6, 3}, {3, 8}, {8, 3}, {3, 2}, {2, 3}, {4, 6}, {6, 4},  {6, 3},  {3, 6},
        {6, 8}, {8, 6}, {6, 4}, {4, 6}, {6, 2}, {2, 6}, {8, 6},  {6, 8},  {8, 3},
        {3, 8}, {8, 10}, {10, 8}, {9, 2}, {2, 9}, {10, 8}, {8, 10}};
    for (const auto& [a, b] : listed)
        g.add_attack(std::to_string(a), std::to_string(b));
    return g;
}

void criterion_golden_af() {
    auto start = std::chrono::steady_clock::now();
    ArgGraph g = golden_graph();

    Extension ground = grounded(g);
    bool grounded_ok = ground == make_extension({"1", "5", "7"});

    std::vector<Extension> expected = {
        make_extension({"1", "4", "5", "7", "8", "9"}),
        make_extension({"1", "5", "6", "7", "9", "10"}),
        make_extension({"1", "2", "4", "5", "7", "10"}),
        make_extension({"1", "3", "4", "5", "7", "9", "10"}),
    };
    std::sort(expected.begin(), expected.end(), extension_less);
    bool stable_ok = stable(g) == expected;

    double took = seconds_since(start);
    report("golden_af", grounded_ok && stable_ok && took < 1.0,
           "grounded {1,5,7}: " + std::string(grounded_ok ? "yes" : "NO") +
               ", stable = 4 published sets: " + (stable_ok ? "yes" : "NO") + ", " +
               std::to_string(took) + "s");
}

// ---------------------------------------------------------------------------

ArgGraph random_af(std::mt19937& rng, int n, double density) {
    ArgGraph g;
    for (int i = 0; i < n; ++i) g.add_argument(std::to_string(i));
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (coin(rng) < density) g.add_attack(std::to_string(i), std::to_string(j));
        }
    }
    return g;
}

void criterion_oracle_equivalence() {
    auto start = std::chrono::steady_clock::now();
    std::mt19937 rng(90210);
    std::uniform_int_distribution<int> size(1, 10);
    const double densities[] = {0.1, 0.3, 0.5};
    const Semantics all[] = {Semantics::grounded, Semantics::stable, Semantics::complete,
                             Semantics::preferred};
    int checked = 0, mismatches = 0;
    for (int i = 0; i < 500; ++i) {
        ArgGraph g = random_af(rng, size(rng), densities[i % 3]);
        for (Semantics s : all) {
            ++checked;
            if (solve(g, s) != brute_force(g, s)) ++mismatches;
        }
    }
    double took = seconds_since(start);
    report("oracle_equivalence", mismatches == 0 && took < 60.0,
           "500 graphs x 4 semantics, " + std::to_string(mismatches) + "/" +
               std::to_string(checked) + " mismatches, " + std::to_string(took) + "s");
}

// ---------------------------------------------------------------------------
// Maximal conflict-free sets by direct enumeration, for the symmetric-AF
// property.

std::vector<Extension> maximal_conflict_free(const ArgGraph& g) {
    const std::vector<std::string>& ids = g.arg_ids();
    int n = static_cast<int>(ids.size());
    std::vector<std::uint32_t> conflicts(n, 0);
    for (const auto& [from, to] : g.attack_pairs()) {
        int f = static_cast<int>(std::find(ids.begin(), ids.end(), from) - ids.begin());
        int t = static_cast<int>(std::find(ids.begin(), ids.end(), to) - ids.begin());
        conflicts[f] |= 1u << t;
        conflicts[t] |= 1u << f;
    }
    std::vector<std::uint32_t> cf;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            if (((mask >> i) & 1u) && (conflicts[i] & mask)) ok = false;
        }
        if (ok) cf.push_back(mask);
    }
    std::vector<Extension> maximal;
    for (std::uint32_t mask : cf) {
        bool is_max = std::none_of(cf.begin(), cf.end(), [&](std::uint32_t other) {
            return other != mask && (mask & other) == mask;
        });
        if (!is_max) continue;
        std::vector<std::string> members;
        for (int i = 0; i < n; ++i) {
            if ((mask >> i) & 1u) members.push_back(ids[i]);
        }
        maximal.push_back(make_extension(std::move(members)));
    }
    std::sort(maximal.begin(), maximal.end(), extension_less);
    return maximal;
}

void criterion_symmetric_af() {
    Dataset data = load_catalog_files((repo_dir() / "data" / "movies.csv").string(),
                                      (repo_dir() / "data" / "ratings.csv").string());
    SuspectSystem system = make_toy_suspect(data.catalog, data.ratings);
    DescriptionMap describe = make_description_map(data.catalog, {});
    AgentId investigator{"investigator", AgentRole::investigator};
    AgentId suspect{"suspect", AgentRole::suspect};
    Topic topic = make_topic(InputClassSpec{},
                             {make_atom("highVariety"), make_atom("lowVariety"),
                              make_atom("mediumVariety")},
                             "all");

    std::vector<InputPoint> pool = system.input_dataset();
    std::mt19937 rng(424242);
    const double thresholds[] = {0.3, 0.5, 0.8, 1.0};
    int violations = 0;
    for (int round = 0; round < 200; ++round) {
        std::shuffle(pool.begin(), pool.end(), rng);
        std::uniform_int_distribution<std::size_t> count(1, 12);
        std::size_t k = count(rng);

        Dialogue d;
        d.participants = {investigator, suspect};
        d.moves.push_back(open_move(investigator, topic));
        for (std::size_t i = 0; i < k; ++i) {
            OutputValue y = system.evaluate(pool[i]);
            for (const Atom& c : describe(y))
                d.moves.push_back(assert_move(suspect, {pool[i], c}));
        }
        d.moves.push_back(close_move(suspect));
        d.moves.push_back(close_move(investigator));
        if (!validate_dialogue(d, data.catalog).empty()) {
            ++violations;
            continue;
        }

        SimilaritySpec spec;
        spec.threshold = thresholds[round % 4];
        DialogueAf daf = extract_af(d, spec, data.catalog);

        // Symmetric and irreflexive by construction.
        for (const auto& [from, to] : daf.graph.attack_pairs()) {
            if (from == to || !daf.graph.has_attack(to, from)) ++violations;
        }

        std::vector<Extension> st = stable(daf.graph);
        std::vector<Extension> pr = preferred(daf.graph);
        std::vector<Extension> mcf = maximal_conflict_free(daf.graph);
        if (!(st == pr && pr == mcf)) ++violations;
        if (st != brute_force(daf.graph, Semantics::stable)) ++violations;
        if (pr != brute_force(daf.graph, Semantics::preferred)) ++violations;
    }
    report("symmetric_af_property", violations == 0,
           "200 extracted graphs, " + std::to_string(violations) + " violations");
}

// ---------------------------------------------------------------------------

void criterion_dialogue_protocol() {
    Dataset data = load_catalog_files((repo_dir() / "data" / "movies.csv").string(),
                                      (repo_dir() / "data" / "ratings.csv").string());
    SuspectSystem system = make_toy_suspect(data.catalog, data.ratings);
    AuditConfig config =
        load_config_file((repo_dir() / "data" / "audit.cfg").string());
    Program policy = parse_policy(read_file(repo_dir() / "data" / "policy.pol"));
    DescriptionMap describe = make_description_map(data.catalog, config.thresholds);

    InvestigatorAgent investigator;
    investigator.policy = policy;
    investigator.system = &system;
    investigator.catalog = &data.catalog;
    investigator.similarity = config.similarity;
    investigator.strategy = topic_strategy_from(config);

    bool ok = true;
    std::string detail;

    std::vector<Topic> topics = generate_topics(investigator);
    for (const Topic& topic : topics) {
        Dialogue d = run_dialogue(investigator.id, {"suspect", AgentRole::suspect}, topic,
                                  system, describe, data.catalog,
                                  investigator.strategy.sampling);
        if (!validate_dialogue(d, data.catalog).empty()) {
            ok = false;
            detail = "well-formedness violated for " + topic.label;
        }
    }

    // Mutations of the ten-assert dialogue must each produce the specific
    // expected violation.
    Dialogue base = run_dialogue(investigator.id, {"suspect", AgentRole::suspect},
                                 topics[2], system, describe, data.catalog,
                                 investigator.strategy.sampling);

    Dialogue dropped = base;
    dropped.moves.erase(dropped.moves.begin() + 11);
    std::vector<Violation> v1 = validate_dialogue(dropped, data.catalog);
    if (!(v1.size() == 1 && v1[0].condition == 4 && v1[0].move_index == 11)) {
        ok = false;
        detail = "dropped close not caught as condition 4";
    }

    Dialogue reordered = base;
    std::swap(reordered.moves[10], reordered.moves[11]);
    std::vector<Violation> v2 = validate_dialogue(reordered, data.catalog);
    bool has2 = false, has4 = false;
    for (const Violation& v : v2) {
        if (v.condition == 2 && v.move_index == 11) has2 = true;
        if (v.condition == 4 && v.move_index == 12) has4 = true;
    }
    if (!(has2 && has4)) {
        ok = false;
        detail = "reordered assert not caught as conditions 2 and 4";
    }

    Dialogue swapped = base;
    std::swap(swapped.moves[11].sender, swapped.moves[12].sender);
    std::vector<Violation> v3 = validate_dialogue(swapped, data.catalog);
    if (!(v3.size() == 1 && v3[0].condition == 5 && v3[0].move_index == 13)) {
        ok = false;
        detail = "swapped final close not caught as condition 5";
    }

    report("dialogue_protocol", ok,
           ok ? std::to_string(topics.size()) + " topics well-formed, 3 mutations caught"
              : detail);
}

// ---------------------------------------------------------------------------

void criterion_topic_counts() {
    AuditConfig config =
        load_config_file((repo_dir() / "data" / "audit.cfg").string());

    InvestigatorAgent investigator;
    investigator.policy = parse_policy(read_file(repo_dir() / "data" / "policy.pol"));
    investigator.strategy = topic_strategy_from(config);
    std::size_t running = generate_topics(investigator).size();

    investigator.policy = parse_policy(
        "highVariety <- woman(director(x)), independent(type(x)).\n"
        "highVariety <- woman(director(x)), independent(type(x)), action(genre(x)).\n");
    std::size_t synthetic = generate_topics(investigator).size();

    report("topic_counts", running == 7 && synthetic == 10,
           "running-example: " + std::to_string(running) +
               ", two-clause synthetic: " + std::to_string(synthetic));
}

// ---------------------------------------------------------------------------

Program random_program(std::mt19937& rng) {
    static const std::vector<Atom> pool = {
        make_atom("a"),       make_atom("b"),       make_atom("c"),
        make_atom("d"),       make_atom("a", true), make_atom("b", true),
        make_atom("e"),       make_atom("f"),
    };
    std::uniform_int_distribution<int> clause_count(0, 12);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(pool.size()) - 1);
    std::uniform_int_distribution<int> body_size(0, 3);
    std::vector<Clause> clauses;
    int n = clause_count(rng);
    for (int i = 0; i < n; ++i) {
        std::vector<Atom> body;
        int k = body_size(rng);
        for (int j = 0; j < k; ++j) body.push_back(pool[pick(rng)]);
        clauses.push_back(make_clause(pool[pick(rng)], body));
    }
    return Program(clauses);
}

std::set<Atom> brute_force_model(const Program& p) {
    std::vector<Atom> atoms(p.language().begin(), p.language().end());
    std::size_t n = atoms.size();
    std::set<Atom> best;
    bool found = false;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::set<Atom> s;
        for (std::size_t i = 0; i < n; ++i) {
            if ((mask >> i) & 1u) s.insert(atoms[i]);
        }
        bool closed = true;
        for (const Clause& c : p.clauses()) {
            bool body_in = true;
            for (const Atom& a : c.body) {
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
        if (closed && (!found || s.size() < best.size())) {
            best = std::move(s);
            found = true;
        }
    }
    return best;
}

void criterion_logic_engine() {
    auto start = std::chrono::steady_clock::now();
    std::mt19937 rng(616);
    std::uniform_int_distribution<int> extra_count(0, 3);
    static const std::vector<Atom> pool = {make_atom("a"), make_atom("b"),
                                           make_atom("a", true), make_atom("c")};
    std::uniform_int_distribution<int> pick(0, static_cast<int>(pool.size()) - 1);

    int model_mismatches = 0, consistency_mismatches = 0;
    for (int i = 0; i < 100; ++i) {
        Program p = random_program(rng);
        std::set<Atom> expected = brute_force_model(p);
        if (least_model(p) != expected) ++model_mismatches;

        std::set<Atom> extras;
        int k = extra_count(rng);
        for (int j = 0; j < k; ++j) extras.insert(pool[pick(rng)]);

        std::vector<Clause> clauses = p.clauses();
        for (const Atom& a : extras) clauses.push_back(make_clause(a));
        std::set<Atom> model = brute_force_model(Program(clauses));
        bool expected_consistent = true;
        for (const Atom& a : model) {
            if (a.negated && model.contains(make_atom(a.text))) expected_consistent = false;
        }
        if (is_consistent(p, extras) != expected_consistent) ++consistency_mismatches;
    }
    double took = seconds_since(start);
    report("logic_engine",
           model_mismatches == 0 && consistency_mismatches == 0 && took < 10.0,
           "100 programs, " + std::to_string(model_mismatches) + " model mismatches, " +
               std::to_string(consistency_mismatches) + " consistency mismatches, " +
               std::to_string(took) + "s");
}

// ---------------------------------------------------------------------------

struct CliOptions {
    std::string cli;
    fs::path work;
};

bool same_file_bytes(const fs::path& a, const fs::path& b, std::string& detail) {
    std::string ca = read_file(a), cb = read_file(b);
    if (ca != cb) {
        detail = a.filename().string() + " differs";
        return false;
    }
    return true;
}

void criterion_determinism(const CliOptions& options) {
    fs::path golden = repo_dir() / "tests" / "golden" / "fixture_out";
    bool ok = true;
    std::string detail;
    std::vector<fs::path> runs;

    for (int i = 0; i < 3 && ok; ++i) {
        fs::path out = options.work / ("run" + std::to_string(i));
        fs::remove_all(out);
        fs::create_directories(out);
        std::string command =
            options.cli + " audit --policy " + (repo_dir() / "data" / "policy.pol").string() +
            " --movies " + (repo_dir() / "data" / "movies.csv").string() + " --ratings " +
            (repo_dir() / "data" / "ratings.csv").string() + " --config " +
            (repo_dir() / "data" / "audit.cfg").string() + " --out " + out.string() +
            " > " + (out / "stdout.txt").string();
        auto start = std::chrono::steady_clock::now();
        int rc = std::system(command.c_str());
        double took = seconds_since(start);
        if (rc != 0) {
            ok = false;
            detail = "audit exited with " + std::to_string(rc);
        } else if (took >= 10.0) {
            ok = false;
            detail = "run took " + std::to_string(took) + "s";
        }
        runs.push_back(out);
    }

    std::size_t golden_count = 0;
    if (ok) {
        for (const auto& entry : fs::directory_iterator(golden)) {
            ++golden_count;
            fs::path name = entry.path().filename();
            for (const fs::path& run : runs) {
                if (!fs::exists(run / name)) {
                    ok = false;
                    detail = name.string() + " missing from a run";
                    break;
                }
                if (!same_file_bytes(entry.path(), run / name, detail)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) break;
        }
    }
    report("end_to_end_determinism", ok,
           ok ? "3 runs x " + std::to_string(golden_count) +
                    " files byte-identical to the committed goldens"
              : detail);
}

// ---------------------------------------------------------------------------

void criterion_nonmonotonicity_witness(const CliOptions& options) {
    fs::path report_path = options.work / "run0" / "report.json";
    bool ok = fs::exists(report_path);
    std::string detail = "report.json missing";
    if (ok) {
        auto produced = nlohmann::json::parse(read_file(report_path));
        auto expected = nlohmann::json::parse(
            read_file(repo_dir() / "tests" / "golden" / "fixture_expected.json"));
        const auto& witnesses = produced["non_monotonicity"]["input_refinement_mode"];
        ok = witnesses.is_array() && witnesses.size() >= 1 &&
             witnesses == expected["witnesses_input_refinement"];
        detail = std::to_string(witnesses.size()) +
                 " input-refinement witnesses, matching the committed golden report";
    }
    report("nonmonotonicity_witness", ok, detail);
}

}  // namespace

int main(int argc, char** argv) {
    CliOptions options;
    options.work = fs::temp_directory_path() / "argaudit_acceptance";
    for (int i = 1; i + 1 < argc; i += 2) {
        std::string flag = argv[i];
        if (flag == "--cli") options.cli = argv[i + 1];
        if (flag == "--work") options.work = argv[i + 1];
    }
    if (options.cli.empty()) {
        std::cerr << "usage: acceptance_tests --cli <argaudit binary> [--work <dir>]\n";
        return 2;
    }
    fs::create_directories(options.work);

    try {
        criterion_golden_af();
        criterion_oracle_equivalence();
        criterion_symmetric_af();
        criterion_dialogue_protocol();
        criterion_topic_counts();
        criterion_logic_engine();
        criterion_determinism(options);
        criterion_nonmonotonicity_witness(options);
    } catch (const std::exception& e) {
        std::cout << "FAIL (unhandled error: " << e.what() << ")\n";
        return 1;
    }

    std::cout << (g_failures == 0 ? "all criteria passed"
                                  : std::to_string(g_failures) + " criteria failed")
              << "\n";
    return g_failures == 0 ? 0 : 1;
}
