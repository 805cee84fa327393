#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "argaudit/investigation.hpp"
#include "argaudit/recommender.hpp"

namespace argaudit {

// Audit configuration, read from a line-based `key = value` file with
// `[section]` headers. Sections: [similarity] [descriptors] [bindings]
// [thresholds] [sampling] [semantics] [topics]. `#` starts a comment.
struct AuditConfig {
    SimilaritySpec similarity;
    std::map<Atom, std::string> descriptor_groups;
    std::map<Atom, FeaturePredicate> bindings;
    DescriptorThresholds thresholds;
    SamplingLimits sampling;
    Semantics semantics = Semantics::stable;
    TpMode tp_mode = TpMode::group;
};

AuditConfig parse_config(std::string_view text);  // throws ConfigError
AuditConfig load_config_file(const std::string& path);

// Cross-checks a parsed config against the policy it will drive: every
// binding key and every descriptor-group key that names a clause head must
// exist in the policy, thresholds must be ordered, the similarity threshold
// must lie in [0, 1]. Throws ConfigError.
void validate_config(const AuditConfig& config, const Program& policy);

TopicStrategy topic_strategy_from(const AuditConfig& config);

}  // namespace argaudit
