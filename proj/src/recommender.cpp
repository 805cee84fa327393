#include "argaudit/recommender.hpp"

#include <algorithm>
#include <set>

#include "argaudit/errors.hpp"

namespace argaudit {

OutputValue recommend(const Catalog& catalog, const Ratings& ratings, int /*user_id*/,
                      int movie_id) {
    const MovieRecord& input = catalog.at(movie_id);
    if (catalog.size() < 11)
        throw InsufficientCatalogError("catalog has " + std::to_string(catalog.size()) +
                                       " movies, need at least 11");

    SparseVector input_kw = keyword_vector(input);
    struct Scored {
        int id;
        double score;
    };
    std::vector<Scored> scored;
    scored.reserve(catalog.size() - 1);
    for (const auto& [id, movie] : catalog) {
        if (id == movie_id) continue;
        scored.push_back({id, cosine_similarity(input_kw, keyword_vector(movie))});
    }
    std::sort(scored.begin(), scored.end(), [](const Scored& a, const Scored& b) {
        if (a.score != b.score) return a.score > b.score;
        return a.id < b.id;
    });
    if (scored.size() > 20) scored.resize(20);

    struct Ranked {
        int id;
        double mean;
    };
    std::vector<Ranked> ranked;
    ranked.reserve(scored.size());
    for (const Scored& s : scored) ranked.push_back({s.id, ratings.mean_rating(s.id)});
    std::sort(ranked.begin(), ranked.end(), [](const Ranked& a, const Ranked& b) {
        if (a.mean != b.mean) return a.mean > b.mean;
        return a.id < b.id;
    });

    OutputValue out;
    for (std::size_t i = 0; i < ranked.size() && i < 10; ++i)
        out.movie_ids.push_back(ranked[i].id);
    return out;
}

Atom describe_output(const Catalog& catalog, const OutputValue& output,
                     const DescriptorThresholds& thresholds) {
    std::set<std::string> genres;
    for (int id : output.movie_ids) {
        const MovieRecord& movie = catalog.at(id);
        genres.insert(movie.genres.begin(), movie.genres.end());
    }
    int count = static_cast<int>(genres.size());
    if (count >= thresholds.high_min_genres) return make_atom("highVariety");
    if (count <= thresholds.low_max_genres) return make_atom("lowVariety");
    return make_atom("mediumVariety");
}

DescriptionMap make_description_map(const Catalog& catalog,
                                    const DescriptorThresholds& thresholds) {
    return [&catalog, thresholds](const OutputValue& output) {
        return std::vector<Atom>{describe_output(catalog, output, thresholds)};
    };
}

SuspectSystem make_toy_suspect(const Catalog& catalog, const Ratings& ratings) {
    std::vector<InputPoint> dataset;
    for (const auto& [user, movie] : ratings.rated_pairs())
        dataset.push_back(InputPoint{user, movie});
    auto fn = [&catalog, &ratings](const InputPoint& x) {
        return recommend(catalog, ratings, x.user_id, x.movie_id);
    };
    return SuspectSystem(std::move(fn), std::move(dataset));
}

}  // namespace argaudit
