#include "argaudit/system.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

#include "argaudit/errors.hpp"

namespace argaudit {

SuspectSystem::SuspectSystem(EvalFn evaluate, std::vector<InputPoint> input_dataset)
    : evaluate_(std::move(evaluate)), dataset_(std::move(input_dataset)) {
    std::sort(dataset_.begin(), dataset_.end(),
              [](const InputPoint& a, const InputPoint& b) {
                  if (a.movie_id != b.movie_id) return a.movie_id < b.movie_id;
                  return a.user_id < b.user_id;
              });
    dataset_.erase(std::unique(dataset_.begin(), dataset_.end()), dataset_.end());
}

OutputValue SuspectSystem::evaluate(const InputPoint& x) const {
    {
        std::shared_lock lock(mutex_);
        auto it = cache_.find(x);
        if (it != cache_.end()) return it->second;
    }
    std::unique_lock lock(mutex_);
    auto it = cache_.find(x);
    if (it != cache_.end()) return it->second;
    try {
        ++calls_;
        OutputValue y = evaluate_(x);
        return cache_.emplace(x, std::move(y)).first->second;
    } catch (const std::exception& e) {
        throw EvaluationError("system evaluation failed for input " + x.to_string() +
                              ": " + e.what());
    }
}

std::size_t SuspectSystem::underlying_calls() const {
    std::shared_lock lock(mutex_);
    return calls_;
}

double cosine_similarity(const SparseVector& v1, const SparseVector& v2) {
    double dot = 0.0, n1 = 0.0, n2 = 0.0;
    for (const auto& [k, x] : v1) {
        n1 += x * x;
        auto it = v2.find(k);
        if (it != v2.end()) dot += x * it->second;
    }
    for (const auto& [k, x] : v2) n2 += x * x;
    if (n1 == 0.0 || n2 == 0.0) return 0.0;
    return std::min(1.0, dot / std::sqrt(n1 * n2));
}

SparseVector keyword_vector(const MovieRecord& movie) {
    SparseVector v;
    for (const std::string& kw : movie.keywords) v[kw] = 1.0;
    return v;
}

bool similar(const SimilaritySpec& spec, const InputPoint& x1, const InputPoint& x2,
             const Catalog& feature_source) {
    const MovieRecord* m1 = feature_source.find(x1.movie_id);
    if (m1 == nullptr)
        throw UnknownInputError("input movie_id " + std::to_string(x1.movie_id) +
                                " not in catalog");
    const MovieRecord* m2 = feature_source.find(x2.movie_id);
    if (m2 == nullptr)
        throw UnknownInputError("input movie_id " + std::to_string(x2.movie_id) +
                                " not in catalog");

    if (spec.kind == SimilarityKind::same_user_keyword_cosine) {
        if (x1.user_id != x2.user_id) return false;
        return cosine_similarity(keyword_vector(*m1), keyword_vector(*m2)) >=
               spec.threshold;
    }
    auto in_class = [&](const MovieRecord& m) {
        return std::all_of(spec.class_predicates.begin(), spec.class_predicates.end(),
                           [&](const FeaturePredicate& p) { return p.matches(m); });
    };
    return in_class(*m1) && in_class(*m2);
}

}  // namespace argaudit
