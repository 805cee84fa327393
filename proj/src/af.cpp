#include "argaudit/af.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <stdexcept>

#include "argaudit/errors.hpp"

namespace argaudit {

bool id_less(const std::string& a, const std::string& b) {
    auto numeric = [](const std::string& s) {
        return !s.empty() && s.size() <= 18 &&
               std::all_of(s.begin(), s.end(),
                           [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    };
    bool na = numeric(a), nb = numeric(b);
    if (na && nb) {
        unsigned long long va = std::stoull(a), vb = std::stoull(b);
        if (va != vb) return va < vb;
        return a < b;  // "01" vs "1"
    }
    if (na != nb) return na;
    return a < b;
}

void ArgGraph::add_argument(std::string id) {
    if (id.empty()) throw std::invalid_argument("empty argument id");
    if (!id_set_.insert(id).second)
        throw std::invalid_argument("duplicate argument id: " + id);
    ids_.push_back(std::move(id));
}

void ArgGraph::add_attack(const std::string& attacker, const std::string& target) {
    if (!has_argument(attacker))
        throw UndeclaredArgumentError("attack references undeclared argument: " + attacker);
    if (!has_argument(target))
        throw UndeclaredArgumentError("attack references undeclared argument: " + target);
    attacks_.insert({attacker, target});
}

Extension make_extension(std::vector<std::string> members) {
    std::sort(members.begin(), members.end(), id_less);
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return Extension{std::move(members)};
}

bool Extension::contains(const std::string& id) const {
    return std::binary_search(members.begin(), members.end(), id, id_less);
}

bool Extension::subset_of(const Extension& other) const {
    return std::all_of(members.begin(), members.end(),
                       [&](const std::string& m) { return other.contains(m); });
}

bool extension_less(const Extension& a, const Extension& b) {
    return std::lexicographical_compare(a.members.begin(), a.members.end(),
                                        b.members.begin(), b.members.end(), id_less);
}

std::string to_string(const Extension& e) {
    std::string out = "[";
    for (std::size_t i = 0; i < e.members.size(); ++i) {
        if (i > 0) out += ",";
        out += e.members[i];
    }
    out += "]";
    return out;
}

Semantics semantics_from_name(std::string_view name) {
    if (name == "grounded") return Semantics::grounded;
    if (name == "stable") return Semantics::stable;
    if (name == "complete") return Semantics::complete;
    if (name == "preferred") return Semantics::preferred;
    throw ConfigError("unknown semantics: " + std::string(name) +
                      " (expected grounded|stable|complete|preferred)");
}

std::string semantics_name(Semantics s) {
    switch (s) {
        case Semantics::grounded: return "grounded";
        case Semantics::stable: return "stable";
        case Semantics::complete: return "complete";
        case Semantics::preferred: return "preferred";
    }
    return "?";
}

namespace {

// Index-based adjacency view of a graph.
struct Adjacency {
    std::vector<std::string> ids;
    std::map<std::string, int> index;
    std::vector<std::vector<int>> attackers;
    std::vector<std::vector<int>> targets;

    explicit Adjacency(const ArgGraph& g) {
        ids = g.arg_ids();
        attackers.resize(ids.size());
        targets.resize(ids.size());
        for (std::size_t i = 0; i < ids.size(); ++i) index[ids[i]] = static_cast<int>(i);
        for (const auto& [from, to] : g.attack_pairs()) {
            int f = index.at(from), t = index.at(to);
            attackers[t].push_back(f);
            targets[f].push_back(t);
        }
    }

    int n() const { return static_cast<int>(ids.size()); }
};

enum class Lab : unsigned char { unknown, in, out, undec };

// Enumerates legal {in,out,undec} labellings by backtracking with forced-out
// propagation; a full verification at every leaf keeps the search sound
// independent of the pruning. In two-valued mode undec is never assigned,
// which yields exactly the stable extensions.
class LabellingEnumerator {
public:
    LabellingEnumerator(const Adjacency& adj, bool two_valued, std::size_t max_extensions)
        : adj_(adj), two_valued_(two_valued), max_(max_extensions) {
        lab_.assign(adj_.n(), Lab::unknown);
    }

    std::vector<std::vector<int>> run() {
        search(0);
        return std::move(results_);
    }

private:
    bool force(int a, Lab v, std::vector<int>& trail) {
        if (lab_[a] != Lab::unknown) return lab_[a] == v;
        lab_[a] = v;
        trail.push_back(a);
        if (v == Lab::in) {
            for (int b : adj_.attackers[a]) {
                if (b == a) return false;  // self-attacker can never be in
                if (!force(b, Lab::out, trail)) return false;
            }
            for (int b : adj_.targets[a]) {
                if (!force(b, Lab::out, trail)) return false;
            }
        } else if (v == Lab::out) {
            bool attacker_possible = false;
            for (int b : adj_.attackers[a]) {
                if (lab_[b] == Lab::in || lab_[b] == Lab::unknown) {
                    attacker_possible = true;
                    break;
                }
            }
            if (!attacker_possible) return false;
        } else {  // undec
            for (int b : adj_.attackers[a]) {
                if (lab_[b] == Lab::in) return false;
            }
        }
        return true;
    }

    void undo(const std::vector<int>& trail) {
        for (int a : trail) lab_[a] = Lab::unknown;
    }

    void search(int from) {
        int next = -1;
        for (int i = from; i < adj_.n(); ++i) {
            if (lab_[i] == Lab::unknown) {
                next = i;
                break;
            }
        }
        if (next < 0) {
            if (legal_labelling()) record();
            return;
        }
        const Lab choices[3] = {Lab::in, Lab::out, Lab::undec};
        int num_choices = two_valued_ ? 2 : 3;
        for (int k = 0; k < num_choices; ++k) {
            std::vector<int> trail;
            if (force(next, choices[k], trail)) search(next + 1);
            undo(trail);
        }
    }

    bool legal_labelling() const {
        for (int a = 0; a < adj_.n(); ++a) {
            bool any_in = false, any_undec = false, all_out = true;
            for (int b : adj_.attackers[a]) {
                if (lab_[b] == Lab::in) any_in = true;
                if (lab_[b] == Lab::undec) any_undec = true;
                if (lab_[b] != Lab::out) all_out = false;
            }
            switch (lab_[a]) {
                case Lab::in:
                    if (!all_out) return false;
                    break;
                case Lab::out:
                    if (!any_in) return false;
                    break;
                case Lab::undec:
                    if (any_in || !any_undec) return false;
                    break;
                case Lab::unknown:
                    return false;
            }
        }
        return true;
    }

    void record() {
        std::vector<int> in_set;
        for (int a = 0; a < adj_.n(); ++a) {
            if (lab_[a] == Lab::in) in_set.push_back(a);
        }
        results_.push_back(std::move(in_set));
        if (results_.size() > max_) {
            throw ExtensionOverflowError("more than " + std::to_string(max_) +
                                         " extensions");
        }
    }

    const Adjacency& adj_;
    bool two_valued_;
    std::size_t max_;
    std::vector<Lab> lab_;
    std::vector<std::vector<int>> results_;
};

std::vector<Extension> to_extensions(const Adjacency& adj,
                                     std::vector<std::vector<int>> index_sets) {
    std::vector<Extension> out;
    out.reserve(index_sets.size());
    for (const auto& s : index_sets) {
        std::vector<std::string> members;
        members.reserve(s.size());
        for (int i : s) members.push_back(adj.ids[i]);
        out.push_back(make_extension(std::move(members)));
    }
    std::sort(out.begin(), out.end(), extension_less);
    return out;
}

}  // namespace

bool conflict_free(const Extension& s, const ArgGraph& g) {
    for (const auto& [from, to] : g.attack_pairs()) {
        if (s.contains(from) && s.contains(to)) return false;
    }
    return true;
}

bool defends(const ArgGraph& g, const Extension& s, const std::string& arg) {
    if (!g.has_argument(arg)) throw std::invalid_argument("no such argument: " + arg);
    for (const auto& [attacker, target] : g.attack_pairs()) {
        if (target != arg) continue;
        bool countered = false;
        for (const std::string& member : s.members) {
            if (g.has_attack(member, attacker)) {
                countered = true;
                break;
            }
        }
        if (!countered) return false;
    }
    return true;
}

Extension grounded(const ArgGraph& g) {
    Extension current;
    for (;;) {
        std::vector<std::string> next;
        for (const std::string& id : g.arg_ids()) {
            if (defends(g, current, id)) next.push_back(id);
        }
        Extension candidate = make_extension(std::move(next));
        if (candidate == current) return current;
        current = std::move(candidate);
    }
}

std::vector<Extension> stable(const ArgGraph& g, std::size_t max_extensions) {
    Adjacency adj(g);
    return to_extensions(adj, LabellingEnumerator(adj, true, max_extensions).run());
}

std::vector<Extension> complete(const ArgGraph& g, std::size_t max_extensions) {
    Adjacency adj(g);
    return to_extensions(adj, LabellingEnumerator(adj, false, max_extensions).run());
}

std::vector<Extension> preferred(const ArgGraph& g, std::size_t max_extensions) {
    std::vector<Extension> all = complete(g, max_extensions);
    std::vector<Extension> out;
    for (const Extension& e : all) {
        bool maximal = true;
        for (const Extension& other : all) {
            if (&e != &other && e.subset_of(other) && !(e == other)) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.push_back(e);
    }
    return out;
}

std::vector<Extension> solve(const ArgGraph& g, Semantics semantics,
                             std::size_t max_extensions) {
    switch (semantics) {
        case Semantics::grounded: return {grounded(g)};
        case Semantics::stable: return stable(g, max_extensions);
        case Semantics::complete: return complete(g, max_extensions);
        case Semantics::preferred: return preferred(g, max_extensions);
    }
    throw std::invalid_argument("bad semantics");
}

std::vector<Extension> brute_force(const ArgGraph& g, Semantics semantics) {
    Adjacency adj(g);
    int n = adj.n();
    if (n > 20) throw TooLargeError("brute force capped at 20 arguments, got " +
                                    std::to_string(n));

    std::vector<std::uint32_t> attacker_mask(n, 0), target_mask(n, 0);
    for (int a = 0; a < n; ++a) {
        for (int b : adj.attackers[a]) attacker_mask[a] |= 1u << b;
        for (int b : adj.targets[a]) target_mask[a] |= 1u << b;
    }

    auto cf = [&](std::uint32_t s) {
        for (int a = 0; a < n; ++a) {
            if ((s >> a) & 1u) {
                if (target_mask[a] & s) return false;
            }
        }
        return true;
    };
    auto attacked_by = [&](std::uint32_t s) {
        std::uint32_t out = 0;
        for (int a = 0; a < n; ++a) {
            if ((s >> a) & 1u) out |= target_mask[a];
        }
        return out;
    };
    auto defended_by = [&](std::uint32_t s) {
        std::uint32_t range = attacked_by(s), out = 0;
        for (int a = 0; a < n; ++a) {
            if ((attacker_mask[a] & ~range) == 0) out |= 1u << a;
        }
        return out;
    };

    std::uint32_t all = n == 32 ? ~0u : ((1u << n) - 1u);
    std::vector<std::uint32_t> found;
    for (std::uint32_t s = 0; s <= all; ++s) {
        if (!cf(s)) {
            if (s == all) break;
            continue;
        }
        switch (semantics) {
            case Semantics::stable:
                if ((s | attacked_by(s)) == all) found.push_back(s);
                break;
            case Semantics::grounded:
            case Semantics::complete:
            case Semantics::preferred:
                if (defended_by(s) == s) found.push_back(s);
                break;
        }
        if (s == all) break;
    }

    if (semantics == Semantics::grounded) {
        // The least complete extension: contained in every other one.
        for (std::uint32_t s : found) {
            bool least = std::all_of(found.begin(), found.end(),
                                     [&](std::uint32_t t) { return (s & t) == s; });
            if (least) {
                found = {s};
                break;
            }
        }
    } else if (semantics == Semantics::preferred) {
        std::vector<std::uint32_t> maximal;
        for (std::uint32_t s : found) {
            bool is_max = std::none_of(found.begin(), found.end(), [&](std::uint32_t t) {
                return t != s && (s & t) == s;
            });
            if (is_max) maximal.push_back(s);
        }
        found = std::move(maximal);
    }

    std::vector<std::vector<int>> index_sets;
    for (std::uint32_t s : found) {
        std::vector<int> members;
        for (int a = 0; a < n; ++a) {
            if ((s >> a) & 1u) members.push_back(a);
        }
        index_sets.push_back(std::move(members));
    }
    return to_extensions(adj, std::move(index_sets));
}

namespace {

bool apx_id_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class ApxScanner {
public:
    explicit ApxScanner(std::string_view src) : src_(src) {}

    void skip_space() {
        while (pos_ < src_.size() &&
               std::isspace(static_cast<unsigned char>(src_[pos_]))) {
            advance();
        }
    }

    bool at_end() {
        skip_space();
        return pos_ >= src_.size();
    }

    std::string word() {
        skip_space();
        std::string out;
        while (pos_ < src_.size() && apx_id_char(src_[pos_])) {
            out.push_back(src_[pos_]);
            advance();
        }
        if (out.empty()) fail("expected identifier");
        return out;
    }

    void expect(char c) {
        skip_space();
        if (pos_ >= src_.size() || src_[pos_] != c)
            fail(std::string("expected '") + c + "'");
        advance();
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw SyntaxError(message, line_, column_);
    }

private:
    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
};

}  // namespace

ArgGraph parse_apx(std::string_view text) {
    ApxScanner sc(text);
    std::vector<std::string> args;
    std::set<std::string> seen;
    std::vector<std::pair<std::string, std::string>> atts;
    while (!sc.at_end()) {
        std::string kw = sc.word();
        if (kw == "arg") {
            sc.expect('(');
            std::string id = sc.word();
            sc.expect(')');
            sc.expect('.');
            if (seen.insert(id).second) args.push_back(std::move(id));
        } else if (kw == "att") {
            sc.expect('(');
            std::string from = sc.word();
            sc.expect(',');
            std::string to = sc.word();
            sc.expect(')');
            sc.expect('.');
            atts.emplace_back(std::move(from), std::move(to));
        } else {
            sc.fail("expected 'arg' or 'att', got '" + kw + "'");
        }
    }
    ArgGraph g;
    for (std::string& id : args) g.add_argument(std::move(id));
    for (const auto& [from, to] : atts) g.add_attack(from, to);  // may throw UndeclaredArgument
    return g;
}

std::string emit_apx(const ArgGraph& g) {
    std::vector<std::string> ids = g.arg_ids();
    std::sort(ids.begin(), ids.end(), id_less);
    std::string out;
    for (const std::string& id : ids) out += "arg(" + id + ").\n";

    std::vector<std::pair<std::string, std::string>> atts(g.attack_pairs().begin(),
                                                          g.attack_pairs().end());
    std::sort(atts.begin(), atts.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return id_less(a.first, b.first);
        return id_less(a.second, b.second);
    });
    for (const auto& [from, to] : atts) out += "att(" + from + "," + to + ").\n";
    return out;
}

std::string emit_dot(const ArgGraph& g, const Extension* highlight) {
    if (g.size() == 0 && g.attack_pairs().empty()) return "digraph af { }\n";

    auto render = [](const std::string& id) {
        bool named = !id.empty() &&
                     (std::isalpha(static_cast<unsigned char>(id[0])) || id[0] == '_') &&
                     std::all_of(id.begin(), id.end(), apx_id_char);
        bool numeral = !id.empty() && std::all_of(id.begin(), id.end(), [](char c) {
            return std::isdigit(static_cast<unsigned char>(c));
        });
        bool plain = named || numeral;
        if (plain) return id;
        std::string quoted = "\"";
        for (char c : id) {
            if (c == '"' || c == '\\') quoted += '\\';
            quoted += c;
        }
        quoted += '"';
        return quoted;
    };

    std::vector<std::string> ids = g.arg_ids();
    std::sort(ids.begin(), ids.end(), id_less);
    std::string out = "digraph af {\n";
    for (const std::string& id : ids) {
        out += "  " + render(id);
        if (highlight != nullptr && highlight->contains(id)) out += " [style=filled]";
        out += ";\n";
    }
    std::vector<std::pair<std::string, std::string>> atts(g.attack_pairs().begin(),
                                                          g.attack_pairs().end());
    std::sort(atts.begin(), atts.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return id_less(a.first, b.first);
        return id_less(a.second, b.second);
    });
    for (const auto& [from, to] : atts) {
        out += "  " + render(from) + " -> " + render(to) + ";\n";
    }
    out += "}\n";
    return out;
}

}  // namespace argaudit
