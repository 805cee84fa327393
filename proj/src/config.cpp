#include "argaudit/config.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "argaudit/errors.hpp"

namespace argaudit {

namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

int parse_positive_int(const std::string& value, const std::string& key) {
    try {
        std::size_t used = 0;
        int v = std::stoi(value, &used);
        if (used != value.size() || v <= 0) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("bad value for " + key + ": '" + value + "'");
    }
}

double parse_unit_real(const std::string& value, const std::string& key) {
    try {
        std::size_t used = 0;
        double v = std::stod(value, &used);
        if (used != value.size() || v < 0.0 || v > 1.0) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("value for " + key + " must be a real in [0, 1], got '" +
                          value + "'");
    }
}

Atom parse_atom_key(const std::string& key, int line_no) {
    try {
        return parse_atom(key);
    } catch (const SyntaxError& e) {
        throw ConfigError("bad atom '" + key + "' on line " + std::to_string(line_no) +
                          ": " + e.what());
    }
}

}  // namespace

AuditConfig parse_config(std::string_view text) {
    AuditConfig config;
    std::istringstream in{std::string(text)};
    std::string line;
    std::string section;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string stripped = trim(line);
        if (!stripped.empty() && stripped.back() == '\r') stripped.pop_back();
        if (stripped.empty() || stripped[0] == '#') continue;

        if (stripped.front() == '[') {
            if (stripped.back() != ']')
                throw ConfigError("unterminated section header on line " +
                                  std::to_string(line_no));
            section = trim(stripped.substr(1, stripped.size() - 2));
            static const std::set<std::string> known = {
                "similarity", "descriptors", "bindings", "thresholds",
                "sampling",   "semantics",   "topics"};
            if (!known.contains(section))
                throw ConfigError("unknown section [" + section + "] on line " +
                                  std::to_string(line_no));
            continue;
        }

        std::size_t eq = stripped.find('=');
        if (eq == std::string::npos)
            throw ConfigError("expected 'key = value' on line " + std::to_string(line_no));
        std::string key = trim(stripped.substr(0, eq));
        std::string value = trim(stripped.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ConfigError("expected 'key = value' on line " + std::to_string(line_no));

        if (section == "similarity") {
            if (key == "kind") {
                if (value == "same_user_keyword_cosine")
                    config.similarity.kind = SimilarityKind::same_user_keyword_cosine;
                else if (value == "same_class")
                    config.similarity.kind = SimilarityKind::same_class;
                else
                    throw ConfigError("unknown similarity kind '" + value + "'");
            } else if (key == "threshold") {
                config.similarity.threshold = parse_unit_real(value, "similarity.threshold");
            } else if (key == "class") {
                config.similarity.class_predicates.clear();
                std::size_t start = 0;
                while (start <= value.size()) {
                    std::size_t sep = value.find("&&", start);
                    std::string part = trim(sep == std::string::npos
                                                ? value.substr(start)
                                                : value.substr(start, sep - start));
                    if (!part.empty())
                        config.similarity.class_predicates.push_back(
                            parse_feature_predicate(part));
                    if (sep == std::string::npos) break;
                    start = sep + 2;
                }
            } else {
                throw ConfigError("unknown similarity key '" + key + "'");
            }
        } else if (section == "descriptors") {
            config.descriptor_groups[parse_atom_key(key, line_no)] = value;
        } else if (section == "bindings") {
            config.bindings[parse_atom_key(key, line_no)] = parse_feature_predicate(value);
        } else if (section == "thresholds") {
            if (key == "high_min_genres")
                config.thresholds.high_min_genres = parse_positive_int(value, key);
            else if (key == "low_max_genres")
                config.thresholds.low_max_genres = parse_positive_int(value, key);
            else
                throw ConfigError("unknown thresholds key '" + key + "'");
        } else if (section == "sampling") {
            if (key == "max_users_per_movie")
                config.sampling.max_users_per_movie = parse_positive_int(value, key);
            else
                throw ConfigError("unknown sampling key '" + key + "'");
        } else if (section == "semantics") {
            if (key == "semantics") config.semantics = semantics_from_name(value);
            else throw ConfigError("unknown semantics key '" + key + "'");
        } else if (section == "topics") {
            if (key == "tp_mode") {
                if (value == "group") config.tp_mode = TpMode::group;
                else if (value == "head_only") config.tp_mode = TpMode::head_only;
                else throw ConfigError("tp_mode must be group or head_only, got '" +
                                       value + "'");
            } else {
                throw ConfigError("unknown topics key '" + key + "'");
            }
        } else {
            throw ConfigError("key outside any section on line " + std::to_string(line_no));
        }
    }
    return config;
}

AuditConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

void validate_config(const AuditConfig& config, const Program& policy) {
    if (config.thresholds.low_max_genres >= config.thresholds.high_min_genres)
        throw ConfigError("low_max_genres must be below high_min_genres");

    // Binding keys that never occur in the policy are dead entries, not
    // errors; a mistyped key surfaces as MissingBinding for the real atom.
    for (const Clause& clause : policy.clauses()) {
        for (const Atom& atom : clause.body) {
            if (!config.bindings.contains(atom))
                throw MissingBindingError("no binding for body atom " + atom.to_string());
        }
        if (config.tp_mode == TpMode::group &&
            !config.descriptor_groups.contains(clause.head)) {
            throw MissingDescriptorGroupError("no descriptor group for clause head " +
                                              clause.head.to_string());
        }
    }
}

TopicStrategy topic_strategy_from(const AuditConfig& config) {
    return TopicStrategy{config.bindings, config.descriptor_groups, config.sampling,
                         config.tp_mode};
}

}  // namespace argaudit
