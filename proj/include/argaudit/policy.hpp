#pragma once

#include <compare>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace argaudit {

// A propositional atom. `text` is the canonical identifier with all
// whitespace stripped; functor syntax is allowed but opaque, e.g.
// "woman(director(x))". `negated` marks strong negation, written "~".
// Two atoms are equal iff both fields are equal.
struct Atom {
    std::string text;
    bool negated = false;

    auto operator<=>(const Atom&) const = default;

    std::string to_string() const { return negated ? "~" + text : text; }
};

inline Atom make_atom(std::string text, bool negated = false) {
    return Atom{std::move(text), negated};
}

// head <- a1, ..., an. An empty body stands for a fact. Body atoms are kept
// sorted and duplicate-free, which defines the canonical clause form.
struct Clause {
    Atom head;
    std::vector<Atom> body;

    bool operator==(const Clause&) const = default;
};

Clause make_clause(Atom head, std::vector<Atom> body = {});

// A finite list of clauses together with the language they span.
class Program {
public:
    Program() = default;
    explicit Program(std::vector<Clause> clauses);

    const std::vector<Clause>& clauses() const { return clauses_; }

    // Exactly the atoms occurring in the clauses.
    const std::set<Atom>& language() const { return language_; }

    bool operator==(const Program&) const = default;

private:
    std::vector<Clause> clauses_;
    std::set<Atom> language_;
};

// Parses a policy written in the concrete syntax:
//
//   clause := atom "." | atom "<-" body "."
//   body   := atom ("," atom)*
//   atom   := ["~"] ident ["(" termlist ")"]
//   term   := ident ["(" termlist ")"]
//   ident  := [A-Za-z_][A-Za-z0-9_]*
//
// "%" starts a comment running to end of line. Throws SyntaxError with a
// 1-based line/column on malformed input.
Program parse_policy(std::string_view source);

// Parses a single atom (used for config keys). Throws SyntaxError.
Atom parse_atom(std::string_view source);

// One clause per line, body atoms comma-space separated, terminating period.
std::string serialize_policy(const Program& program);

// Least fixpoint of forward chaining. A strongly negated atom ~a is treated
// as an atom of its own, distinct from a.
std::set<Atom> least_model(const Program& program);

// True iff the least model of program + {a. : a in extra_atoms} contains no
// complementary pair {a, ~a}.
bool is_consistent(const Program& program, const std::set<Atom>& extra_atoms);

}  // namespace argaudit
