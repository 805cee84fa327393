#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "argaudit/af.hpp"
#include "argaudit/argument.hpp"
#include "argaudit/system.hpp"

#include "json.hpp"

namespace argaudit {

enum class AgentRole { investigator, suspect };

std::string to_string(AgentRole role);

struct AgentId {
    std::string name;
    AgentRole role = AgentRole::investigator;

    auto operator<=>(const AgentId&) const = default;
};

enum class MoveKind { open, assert_arg, close };

std::string to_string(MoveKind kind);

// One move; exactly the payload demanded by the kind is present.
struct Move {
    AgentId sender;
    MoveKind kind = MoveKind::close;
    std::optional<Topic> topic;              // open only
    std::optional<BlackBoxArgument> argument;  // assert only
};

Move open_move(AgentId sender, Topic topic);
Move assert_move(AgentId sender, BlackBoxArgument argument);
Move close_move(AgentId sender);

struct Dialogue {
    std::vector<AgentId> participants;
    std::vector<Move> moves;
};

// A violated well-formedness condition. `move_index` is 1-based; `condition`
// numbers the five conditions: (1) the first move opens, (2) the middle
// moves assert, (3) asserted arguments relate to the topic, (4) the final
// |participants| moves close, (5) the last sender equals the first.
struct Violation {
    int move_index = 0;
    int condition = 0;
    std::string message;

    bool operator==(const Violation&) const = default;
};

// Opens the topic as the investigator, asserts every generated argument as
// the suspect in canonical order, then both agents close; the investigator
// closes last. The result always passes validate_dialogue.
Dialogue run_dialogue(const AgentId& investigator, const AgentId& suspect,
                      const Topic& topic, const SuspectSystem& system,
                      const DescriptionMap& describe, const Catalog& catalog,
                      const SamplingLimits& sampling);

// Single-participant variant: the agent opens, asserts and closes by itself.
Dialogue run_self_dialogue(const AgentId& agent, const Topic& topic,
                           const SuspectSystem& system, const DescriptionMap& describe,
                           const Catalog& catalog, const SamplingLimits& sampling);

// Checks the five well-formedness conditions and returns every violation
// found; an empty result means the dialogue is well-formed.
std::vector<Violation> validate_dialogue(const Dialogue& dialogue, const Catalog& catalog);

// Precondition: dialogue is well-formed.
bool is_self_reflective(const Dialogue& dialogue);

// An argumentation graph extracted from a dialogue. Canonical argument ids
// are 1-based assert ordinals; the move index of each assert is kept as
// metadata.
struct DialogueAf {
    ArgGraph graph;
    std::map<std::string, BlackBoxArgument> argument_of;
    std::map<std::string, int> move_of;
};

// Collects the asserted arguments and every ordered pair related by the
// attack predicate. Throws UnknownInput.
DialogueAf extract_af(const Dialogue& dialogue, const SimilaritySpec& spec,
                      const Catalog& catalog);

// Stable transcript rendering; field order is fixed.
nlohmann::ordered_json transcript_json(const Dialogue& dialogue);
nlohmann::ordered_json topic_json(const Topic& topic);

}  // namespace argaudit
