#include "argaudit/argument.hpp"

#include <algorithm>

#include "argaudit/errors.hpp"

namespace argaudit {

bool InputClassSpec::matches(const MovieRecord& movie) const {
    return std::all_of(predicates.begin(), predicates.end(),
                       [&](const FeaturePredicate& p) { return p.matches(movie); });
}

std::string InputClassSpec::to_string() const {
    if (predicates.empty()) return "(all inputs)";
    std::string out;
    for (std::size_t i = 0; i < predicates.size(); ++i) {
        if (i > 0) out += " && ";
        out += predicates[i].to_string();
    }
    return out;
}

bool Topic::has_descriptor(const Atom& a) const {
    return std::binary_search(descriptors.begin(), descriptors.end(), a);
}

Topic make_topic(InputClassSpec input_class, std::vector<Atom> descriptors,
                 std::string label) {
    std::sort(descriptors.begin(), descriptors.end());
    descriptors.erase(std::unique(descriptors.begin(), descriptors.end()),
                      descriptors.end());
    if (descriptors.empty())
        throw ConfigError("topic '" + label + "' has an empty descriptor set");
    return Topic{std::move(input_class), std::move(descriptors), std::move(label)};
}

bool related_to(const BlackBoxArgument& arg, const Topic& topic, const Catalog& catalog) {
    const MovieRecord* movie = catalog.find(arg.support.movie_id);
    if (movie == nullptr)
        throw UnknownInputError("argument support movie_id " +
                                std::to_string(arg.support.movie_id) + " not in catalog");
    return topic.input_class.matches(*movie) && topic.has_descriptor(arg.conclusion);
}

bool attacks(const BlackBoxArgument& a1, const BlackBoxArgument& a2,
             const SimilaritySpec& spec, const Catalog& catalog) {
    if (a1.conclusion == a2.conclusion) return false;
    return similar(spec, a1.support, a2.support, catalog);
}

TopicInputs enumerate_topic_inputs(const SuspectSystem& system, const Topic& topic,
                                   const Catalog& catalog,
                                   const SamplingLimits& sampling) {
    TopicInputs out;
    int current_movie = -1;
    bool movie_matches = false;
    int taken = 0;
    // Dataset is sorted by (movie_id, user_id), so one pass groups by movie.
    for (const InputPoint& x : system.input_dataset()) {
        if (x.movie_id != current_movie) {
            current_movie = x.movie_id;
            taken = 0;
            const MovieRecord* movie = catalog.find(x.movie_id);
            if (movie == nullptr)
                throw UnknownInputError("dataset movie_id " + std::to_string(x.movie_id) +
                                        " not in catalog");
            movie_matches = topic.input_class.matches(*movie);
        }
        if (!movie_matches) continue;
        ++out.matching;
        if (taken < sampling.max_users_per_movie) {
            out.sampled.push_back(x);
            ++taken;
        }
    }
    return out;
}

std::vector<BlackBoxArgument> generate_arguments(const SuspectSystem& system,
                                                 const DescriptionMap& describe,
                                                 const Topic& topic,
                                                 const Catalog& catalog,
                                                 const SamplingLimits& sampling) {
    TopicInputs inputs = enumerate_topic_inputs(system, topic, catalog, sampling);
    std::vector<BlackBoxArgument> args;
    for (const InputPoint& x : inputs.sampled) {
        OutputValue y = system.evaluate(x);
        std::vector<Atom> descriptors = describe(y);
        std::sort(descriptors.begin(), descriptors.end());
        descriptors.erase(std::unique(descriptors.begin(), descriptors.end()),
                          descriptors.end());
        for (const Atom& c : descriptors) {
            if (topic.has_descriptor(c)) args.push_back(BlackBoxArgument{x, c});
        }
    }
    return args;
}

}  // namespace argaudit
