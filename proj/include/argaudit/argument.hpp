#pragma once

#include <string>
#include <vector>

#include "argaudit/catalog.hpp"
#include "argaudit/policy.hpp"
#include "argaudit/system.hpp"

namespace argaudit {

// An assertion about the audited system: for input `support`, the output has
// the property named by `conclusion`.
struct BlackBoxArgument {
    InputPoint support;
    Atom conclusion;

    auto operator<=>(const BlackBoxArgument&) const = default;
};

// A conjunction of feature predicates over the input movie; the empty
// conjunction denotes all inputs.
struct InputClassSpec {
    std::vector<FeaturePredicate> predicates;

    bool matches(const MovieRecord& movie) const;
    std::string to_string() const;  // "director_gender == \"F\" && ..."

    bool operator==(const InputClassSpec&) const = default;
};

// A topic scoping one dialogue: the acceptable input class and the accepted
// descriptor set, plus a human-readable label.
struct Topic {
    InputClassSpec input_class;
    std::vector<Atom> descriptors;  // sorted, non-empty
    std::string label;

    bool has_descriptor(const Atom& a) const;
};

Topic make_topic(InputClassSpec input_class, std::vector<Atom> descriptors,
                 std::string label);

struct SamplingLimits {
    int max_users_per_movie = 5;
};

// True iff the argument's support satisfies the topic's input class and its
// conclusion is one of the topic's descriptors. Throws UnknownInput.
bool related_to(const BlackBoxArgument& arg, const Topic& topic, const Catalog& catalog);

// True iff the supports are similar and the conclusions differ. Symmetric
// and irreflexive. Throws UnknownInput.
bool attacks(const BlackBoxArgument& a1, const BlackBoxArgument& a2,
             const SimilaritySpec& spec, const Catalog& catalog);

struct TopicInputs {
    std::vector<InputPoint> sampled;  // (movie_id, user_id) order
    std::size_t matching = 0;         // rated pairs matching the class, before capping
};

// Grounds the topic's input class over the system's dataset: the rated
// (user, movie) pairs whose movie satisfies the class, capped at
// max_users_per_movie users per movie (ascending user_id).
TopicInputs enumerate_topic_inputs(const SuspectSystem& system, const Topic& topic,
                                   const Catalog& catalog, const SamplingLimits& sampling);

// The argument generator g: evaluates every sampled input, applies the
// description map and keeps the descriptors that fall inside the topic.
// Inputs whose descriptors all fall outside the topic contribute nothing.
std::vector<BlackBoxArgument> generate_arguments(const SuspectSystem& system,
                                                 const DescriptionMap& describe,
                                                 const Topic& topic, const Catalog& catalog,
                                                 const SamplingLimits& sampling);

}  // namespace argaudit
