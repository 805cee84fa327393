#pragma once

#include "argaudit/catalog.hpp"
#include "argaudit/policy.hpp"
#include "argaudit/system.hpp"

namespace argaudit {

// Genre-count bands for the variety descriptors: highVariety at
// high_min_genres or more distinct genres, lowVariety at low_max_genres or
// fewer, mediumVariety in between.
struct DescriptorThresholds {
    int high_min_genres = 10;
    int low_max_genres = 5;
};

// Deterministic two-step recommender: score every other movie by keyword
// cosine to the input movie and keep the top 20 (score desc, movie_id asc),
// then rank those by mean rating (desc, movie_id asc; unrated counts as 0)
// and return the top 10 in rank order. Pure function of its inputs; the
// user id is carried by the input but does not personalize the ranking.
// Throws UnknownMovie or InsufficientCatalog (< 11 movies).
OutputValue recommend(const Catalog& catalog, const Ratings& ratings, int user_id,
                      int movie_id);

// Maps an output to exactly one variety descriptor based on the number of
// distinct genres across its movies. Throws UnknownMovie.
Atom describe_output(const Catalog& catalog, const OutputValue& output,
                     const DescriptorThresholds& thresholds);

// The demo description map: a singleton set around describe_output.
DescriptionMap make_description_map(const Catalog& catalog,
                                    const DescriptorThresholds& thresholds);

// Wraps the toy recommender as a suspect system whose input dataset is the
// set of rated (user, movie) pairs.
SuspectSystem make_toy_suspect(const Catalog& catalog, const Ratings& ratings);

}  // namespace argaudit
