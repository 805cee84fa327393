#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "argaudit/af.hpp"
#include "argaudit/argument.hpp"
#include "argaudit/dialogue.hpp"
#include "argaudit/policy.hpp"
#include "argaudit/system.hpp"

namespace argaudit {

// Whether a topic's descriptor set is the head's whole descriptor group or
// just the head atom.
enum class TpMode { group, head_only };

// Everything the investigator needs to turn policy clauses into topics.
struct TopicStrategy {
    std::map<Atom, FeaturePredicate> bindings;      // body atom -> class predicate
    std::map<Atom, std::string> descriptor_groups;  // atom -> group name
    SamplingLimits sampling;
    TpMode tp_mode = TpMode::group;
};

// Agents are non-owning views over the shared system and catalog; both must
// outlive the agent.
struct InvestigatorAgent {
    AgentId id{"investigator", AgentRole::investigator};
    Program policy;
    const SuspectSystem* system = nullptr;
    const Catalog* catalog = nullptr;
    SimilaritySpec similarity;
    TopicStrategy strategy;
};

struct SuspectAgent {
    AgentId id{"suspect", AgentRole::suspect};
    Program policy;
    const SuspectSystem* system = nullptr;
    const Catalog* catalog = nullptr;
    DescriptionMap describe;
};

// The topic generator q: one topic per non-empty subset of each clause body
// (a fact yields the single unconstrained topic), ordered by (clause index,
// subset size, lexicographic). Throws MissingBinding or
// MissingDescriptorGroup.
std::vector<Topic> generate_topics(const InvestigatorAgent& agent);

enum class AcceptanceStatus { sceptical, credulous, rejected };

std::string to_string(AcceptanceStatus s);

// Classification witness: which topic descriptors are missing from the
// intersection (somewhere) and the union (everywhere) of the extensions'
// conclusion sets.
struct TopicStatus {
    AcceptanceStatus value = AcceptanceStatus::rejected;
    std::vector<Atom> missing_somewhere;
    std::vector<Atom> missing_everywhere;
};

// sceptical iff every extension concludes all topic descriptors, credulous
// iff the union over extensions does, rejected otherwise. An empty extension
// list classifies as rejected.
TopicStatus classify_topic(const std::vector<Extension>& extensions,
                           const std::map<std::string, Atom>& conclusion_of,
                           const Topic& topic);

// The three belief-checking outcomes; `empty` corresponds to a rejected
// topic.
enum class ArguesStatus { sceptical, credulous, empty };

// Runs the full chain: dialogue, graph extraction, semantics, topic
// classification.
ArguesStatus argues_status(const SuspectAgent& suspect,
                           const InvestigatorAgent& investigator, const Topic& topic,
                           Semantics semantics);

enum class VerdictValue { strong_belief, credulous_belief, strong_disbelief, mixed };

std::string to_string(VerdictValue v);

// Everything learned about one topic during an interrogation.
struct TopicReport {
    Topic topic;
    TopicStatus status;
    bool consistent = false;
    Dialogue dialogue;
    DialogueAf af;
    std::vector<Extension> extensions;
    std::size_t sampled = 0;   // inputs actually used
    std::size_t matching = 0;  // rated pairs matching the class
};

struct NonMonotonicityReport {
    struct Witness {
        std::string topic1;
        std::string status1;
        std::string topic2;
        std::string status2;

        bool operator==(const Witness&) const = default;
    };

    // Pairs with nested descriptor sets and differing statuses.
    std::vector<Witness> descriptor_mode;
    // Pairs with equal descriptor sets, a strictly refined input class, and
    // differing statuses.
    std::vector<Witness> input_refinement_mode;
    bool non_monotonic = false;  // descriptor mode non-empty
};

NonMonotonicityReport check_nonmonotonicity(
    const std::vector<std::pair<Topic, AcceptanceStatus>>& statuses);

struct Verdict {
    VerdictValue value = VerdictValue::mixed;
    Semantics semantics = Semantics::stable;
    std::vector<TopicReport> topics;
    NonMonotonicityReport non_monotonicity;
};

// Evaluates every generated topic: strong belief when all are sceptical,
// credulous belief when all are at least credulous, strong disbelief when
// all are rejected — each additionally requiring every consistency check to
// pass — and mixed otherwise.
Verdict interrogate(const InvestigatorAgent& investigator, const SuspectAgent& suspect,
                    Semantics semantics);

// Stable report rendering. `paths`, when given, supplies the per-topic
// (transcript, af) file locations in topic order.
nlohmann::ordered_json verdict_json(
    const Verdict& verdict,
    const std::vector<std::pair<std::string, std::string>>& paths = {});

// One-line summary for the terminal.
std::string verdict_summary(const Verdict& verdict);

}  // namespace argaudit
