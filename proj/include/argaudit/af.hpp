#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "argaudit/policy.hpp"

namespace argaudit {

// Orders argument identifiers naturally: all-digit ids compare numerically,
// everything else lexicographically, numbers before names.
bool id_less(const std::string& a, const std::string& b);

// An abstract argumentation graph: arguments plus a set of ordered attack
// pairs. `conclusion_of` is an optional annotation filled in for graphs
// extracted from dialogues.
class ArgGraph {
public:
    void add_argument(std::string id);
    void add_attack(const std::string& attacker, const std::string& target);

    bool has_argument(const std::string& id) const { return id_set_.contains(id); }
    bool has_attack(const std::string& attacker, const std::string& target) const {
        return attacks_.contains({attacker, target});
    }

    // Declaration order.
    const std::vector<std::string>& arg_ids() const { return ids_; }
    const std::set<std::pair<std::string, std::string>>& attack_pairs() const {
        return attacks_;
    }
    std::size_t size() const { return ids_.size(); }

    std::map<std::string, Atom> conclusion_of;

private:
    std::vector<std::string> ids_;
    std::set<std::string> id_set_;
    std::set<std::pair<std::string, std::string>> attacks_;
};

// A set of arguments selected by a semantics. Members are kept sorted in
// id_less order.
struct Extension {
    std::vector<std::string> members;

    bool contains(const std::string& id) const;
    bool subset_of(const Extension& other) const;
    bool operator==(const Extension&) const = default;
};

Extension make_extension(std::vector<std::string> members);

// Lexicographic order over sorted member lists, using id_less per element.
bool extension_less(const Extension& a, const Extension& b);

std::string to_string(const Extension& e);  // "[1,5,7]"

enum class Semantics { grounded, stable, complete, preferred };

Semantics semantics_from_name(std::string_view name);  // throws ConfigError
std::string semantics_name(Semantics s);

inline constexpr std::size_t kDefaultMaxExtensions = 10000;

// True iff no attack pair has both endpoints in S.
bool conflict_free(const Extension& s, const ArgGraph& g);

// True iff every attacker of `arg` is attacked by some member of S.
bool defends(const ArgGraph& g, const Extension& s, const std::string& arg);

// Least fixpoint of S -> {a : defends(g, S, a)} starting from the empty set.
Extension grounded(const ArgGraph& g);

// Labelling-based enumeration. Results are canonical: each extension sorted,
// the list sorted by extension_less. Throws ExtensionOverflowError when more
// than max_extensions extensions exist.
std::vector<Extension> stable(const ArgGraph& g,
                              std::size_t max_extensions = kDefaultMaxExtensions);
std::vector<Extension> complete(const ArgGraph& g,
                                std::size_t max_extensions = kDefaultMaxExtensions);
std::vector<Extension> preferred(const ArgGraph& g,
                                 std::size_t max_extensions = kDefaultMaxExtensions);

std::vector<Extension> solve(const ArgGraph& g, Semantics semantics,
                             std::size_t max_extensions = kDefaultMaxExtensions);

// Test oracle: checks the defining predicate of the semantics against every
// subset of arguments. Throws TooLargeError above 20 arguments.
std::vector<Extension> brute_force(const ArgGraph& g, Semantics semantics);

// APX interchange: lines of `arg(<id>).` and `att(<id>,<id>).`.
ArgGraph parse_apx(std::string_view text);
std::string emit_apx(const ArgGraph& g);

// DOT rendering; nodes of `highlight` are drawn filled.
std::string emit_dot(const ArgGraph& g, const Extension* highlight = nullptr);

}  // namespace argaudit
