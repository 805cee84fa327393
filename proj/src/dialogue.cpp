#include "argaudit/dialogue.hpp"

#include <algorithm>
#include <stdexcept>

#include "argaudit/errors.hpp"

namespace argaudit {

std::string to_string(AgentRole role) {
    return role == AgentRole::investigator ? "investigator" : "suspect";
}

std::string to_string(MoveKind kind) {
    switch (kind) {
        case MoveKind::open: return "open";
        case MoveKind::assert_arg: return "assert";
        case MoveKind::close: return "close";
    }
    return "?";
}

Move open_move(AgentId sender, Topic topic) {
    return Move{std::move(sender), MoveKind::open, std::move(topic), std::nullopt};
}

Move assert_move(AgentId sender, BlackBoxArgument argument) {
    return Move{std::move(sender), MoveKind::assert_arg, std::nullopt, std::move(argument)};
}

Move close_move(AgentId sender) {
    return Move{std::move(sender), MoveKind::close, std::nullopt, std::nullopt};
}

namespace {

Dialogue assemble(std::vector<AgentId> participants, const AgentId& opener,
                  const AgentId& asserter, const Topic& topic,
                  const SuspectSystem& system, const DescriptionMap& describe,
                  const Catalog& catalog, const SamplingLimits& sampling) {
    std::vector<BlackBoxArgument> args =
        generate_arguments(system, describe, topic, catalog, sampling);
    Dialogue d;
    d.participants = std::move(participants);
    d.moves.push_back(open_move(opener, topic));
    for (BlackBoxArgument& a : args) d.moves.push_back(assert_move(asserter, std::move(a)));
    // Everyone closes; the opener closes last.
    for (auto it = d.participants.rbegin(); it != d.participants.rend(); ++it) {
        if (*it == opener) continue;
        d.moves.push_back(close_move(*it));
    }
    d.moves.push_back(close_move(opener));
    return d;
}

}  // namespace

Dialogue run_dialogue(const AgentId& investigator, const AgentId& suspect,
                      const Topic& topic, const SuspectSystem& system,
                      const DescriptionMap& describe, const Catalog& catalog,
                      const SamplingLimits& sampling) {
    if (investigator.name == suspect.name)
        throw std::invalid_argument("participants must have distinct names");
    return assemble({investigator, suspect}, investigator, suspect, topic, system,
                    describe, catalog, sampling);
}

Dialogue run_self_dialogue(const AgentId& agent, const Topic& topic,
                           const SuspectSystem& system, const DescriptionMap& describe,
                           const Catalog& catalog, const SamplingLimits& sampling) {
    return assemble({agent}, agent, agent, topic, system, describe, catalog, sampling);
}

std::vector<Violation> validate_dialogue(const Dialogue& dialogue, const Catalog& catalog) {
    std::vector<Violation> violations;
    const auto& moves = dialogue.moves;
    int t = static_cast<int>(moves.size());
    int n = static_cast<int>(dialogue.participants.size());

    if (t == 0 || moves[0].kind != MoveKind::open || !moves[0].topic.has_value()) {
        violations.push_back({1, 1, "first move must open a topic"});
    }

    // Moves 2 .. t-n must assert.
    for (int i = 2; i <= t - n; ++i) {
        if (moves[i - 1].kind != MoveKind::assert_arg) {
            violations.push_back(
                {i, 2, "move " + std::to_string(i) + " must be an assert, got " +
                           to_string(moves[i - 1].kind)});
        }
    }

    // Every asserted argument must relate to the topic of the first move.
    if (t > 0 && moves[0].kind == MoveKind::open && moves[0].topic.has_value()) {
        const Topic& topic = *moves[0].topic;
        for (int i = 1; i <= t; ++i) {
            const Move& m = moves[i - 1];
            if (m.kind != MoveKind::assert_arg || !m.argument.has_value()) continue;
            bool related = false;
            std::string detail;
            try {
                related = related_to(*m.argument, topic, catalog);
            } catch (const UnknownInputError& e) {
                detail = e.what();
            }
            if (!related) {
                violations.push_back(
                    {i, 3, "asserted argument not related to the topic" +
                               (detail.empty() ? "" : " (" + detail + ")")});
            }
        }
    }

    // The final n moves must close.
    for (int i = std::max(1, t - n + 1); i <= t; ++i) {
        if (moves[i - 1].kind != MoveKind::close) {
            violations.push_back(
                {i, 4, "move " + std::to_string(i) + " must be a close, got " +
                           to_string(moves[i - 1].kind)});
        }
    }

    if (t > 0 && !(moves[t - 1].sender == moves[0].sender)) {
        violations.push_back({t, 5, "the sender of the last move must equal the sender "
                                    "of the first"});
    }

    std::sort(violations.begin(), violations.end(),
              [](const Violation& a, const Violation& b) {
                  if (a.move_index != b.move_index) return a.move_index < b.move_index;
                  return a.condition < b.condition;
              });
    return violations;
}

bool is_self_reflective(const Dialogue& dialogue) {
    return dialogue.participants.size() == 1;
}

DialogueAf extract_af(const Dialogue& dialogue, const SimilaritySpec& spec,
                      const Catalog& catalog) {
    DialogueAf out;
    std::vector<std::string> ids;
    std::vector<const BlackBoxArgument*> args;
    int ordinal = 0;
    for (std::size_t i = 0; i < dialogue.moves.size(); ++i) {
        const Move& m = dialogue.moves[i];
        if (m.kind != MoveKind::assert_arg || !m.argument.has_value()) continue;
        std::string id = std::to_string(++ordinal);
        out.graph.add_argument(id);
        out.graph.conclusion_of[id] = m.argument->conclusion;
        out.argument_of[id] = *m.argument;
        out.move_of[id] = static_cast<int>(i + 1);
        ids.push_back(std::move(id));
        args.push_back(&*m.argument);
    }
    for (std::size_t i = 0; i < args.size(); ++i) {
        for (std::size_t j = 0; j < args.size(); ++j) {
            if (i == j) continue;
            if (attacks(*args[i], *args[j], spec, catalog))
                out.graph.add_attack(ids[i], ids[j]);
        }
    }
    return out;
}

nlohmann::ordered_json topic_json(const Topic& topic) {
    nlohmann::ordered_json j;
    j["label"] = topic.label;
    nlohmann::ordered_json cls = nlohmann::ordered_json::array();
    for (const FeaturePredicate& p : topic.input_class.predicates) {
        nlohmann::ordered_json pj;
        pj["column"] = p.column;
        pj["op"] = p.op == PredicateOp::equals ? "equals" : "contains";
        pj["value"] = p.value;
        cls.push_back(std::move(pj));
    }
    j["input_class"] = std::move(cls);
    nlohmann::ordered_json descriptors = nlohmann::ordered_json::array();
    for (const Atom& a : topic.descriptors) descriptors.push_back(a.to_string());
    j["descriptors"] = std::move(descriptors);
    return j;
}

nlohmann::ordered_json transcript_json(const Dialogue& dialogue) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json participants = nlohmann::ordered_json::array();
    for (const AgentId& a : dialogue.participants) {
        nlohmann::ordered_json p;
        p["name"] = a.name;
        p["role"] = to_string(a.role);
        participants.push_back(std::move(p));
    }
    j["participants"] = std::move(participants);

    nlohmann::ordered_json moves = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < dialogue.moves.size(); ++i) {
        const Move& m = dialogue.moves[i];
        nlohmann::ordered_json mj;
        mj["index"] = i + 1;
        mj["sender"] = m.sender.name;
        mj["kind"] = to_string(m.kind);
        if (m.kind == MoveKind::open && m.topic.has_value())
            mj["topic"] = topic_json(*m.topic);
        if (m.kind == MoveKind::assert_arg && m.argument.has_value()) {
            nlohmann::ordered_json aj;
            nlohmann::ordered_json support;
            support["user_id"] = m.argument->support.user_id;
            support["movie_id"] = m.argument->support.movie_id;
            aj["support"] = std::move(support);
            aj["conclusion"] = m.argument->conclusion.to_string();
            mj["argument"] = std::move(aj);
        }
        moves.push_back(std::move(mj));
    }
    j["moves"] = std::move(moves);
    return j;
}

}  // namespace argaudit
