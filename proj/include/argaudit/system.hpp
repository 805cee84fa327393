#pragma once

#include <compare>
#include <functional>
#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <vector>

#include "argaudit/catalog.hpp"
#include "argaudit/policy.hpp"

namespace argaudit {

// One query to the system under audit: a (user, movie) pair in the demo
// domain.
struct InputPoint {
    int user_id = 0;
    int movie_id = 0;

    auto operator<=>(const InputPoint&) const = default;

    std::string to_string() const {
        return "(user " + std::to_string(user_id) + ", movie " + std::to_string(movie_id) +
               ")";
    }
};

// The system's answer; an ordered list of recommended movie ids in the demo
// domain.
struct OutputValue {
    std::vector<int> movie_ids;

    bool operator==(const OutputValue&) const = default;
};

// d: Y -> 2^L, translating raw outputs into descriptor atoms.
using DescriptionMap = std::function<std::vector<Atom>(const OutputValue&)>;

// Wraps an opaque evaluable function together with its input dataset.
// Repeated evaluation of the same input returns the cached first answer, so
// audits are reproducible even over a non-deterministic system. Reads may be
// concurrent; cache fills are serialized.
class SuspectSystem {
public:
    using EvalFn = std::function<OutputValue(const InputPoint&)>;

    SuspectSystem(EvalFn evaluate, std::vector<InputPoint> input_dataset);

    // Throws EvaluationError when the wrapped system fails; the offending
    // input is attached to the message.
    OutputValue evaluate(const InputPoint& x) const;

    // Sorted by (movie_id, user_id).
    const std::vector<InputPoint>& input_dataset() const { return dataset_; }

    std::size_t underlying_calls() const;

private:
    EvalFn evaluate_;
    std::vector<InputPoint> dataset_;
    mutable std::shared_mutex mutex_;
    mutable std::map<InputPoint, OutputValue> cache_;
    mutable std::size_t calls_ = 0;
};

// Sparse nonnegative vector keyed by feature name.
using SparseVector = std::map<std::string, double>;

// <v1,v2> / (|v1||v2|); 0.0 when either vector is zero. Exact 1.0 for equal
// binary vectors.
double cosine_similarity(const SparseVector& v1, const SparseVector& v2);

// Binary presence vector over the movie's keywords.
SparseVector keyword_vector(const MovieRecord& movie);

enum class SimilarityKind { same_user_keyword_cosine, same_class };

struct SimilaritySpec {
    SimilarityKind kind = SimilarityKind::same_user_keyword_cosine;
    double threshold = 0.8;  // cosine kind only, in [0, 1]
    std::vector<FeaturePredicate> class_predicates;  // class kind only
};

// same_user_keyword_cosine: equal user ids and keyword cosine of the two
// movies at least `threshold`. same_class: both movies satisfy every class
// predicate. Throws UnknownInput when a movie id is absent from the catalog.
bool similar(const SimilaritySpec& spec, const InputPoint& x1, const InputPoint& x2,
             const Catalog& feature_source);

}  // namespace argaudit
