#pragma once

#include <compare>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace argaudit {

enum class DirectorGender { F, M, U };
enum class ProductionType { independent, studio };

std::string to_string(DirectorGender g);
std::string to_string(ProductionType t);

struct MovieRecord {
    int movie_id = 0;
    std::string title;
    std::set<std::string> genres;    // non-empty
    std::set<std::string> keywords;  // non-empty
    DirectorGender director_gender = DirectorGender::U;
    ProductionType production_type = ProductionType::studio;
};

struct RatingRecord {
    int user_id = 0;
    int movie_id = 0;
    double rating = 0.0;  // in [0.5, 5.0]
};

// Immutable movie lookup keyed by movie_id.
class Catalog {
public:
    Catalog() = default;
    explicit Catalog(std::vector<MovieRecord> movies);  // throws DuplicateKey

    const MovieRecord* find(int movie_id) const;
    const MovieRecord& at(int movie_id) const;  // throws UnknownMovie
    std::size_t size() const { return movies_.size(); }

    auto begin() const { return movies_.begin(); }
    auto end() const { return movies_.end(); }

private:
    std::map<int, MovieRecord> movies_;
};

// Immutable rating table with per-movie aggregates.
class Ratings {
public:
    Ratings() = default;
    explicit Ratings(std::vector<RatingRecord> rows);  // throws DuplicateKey

    std::size_t size() const { return rows_.size(); }
    const std::vector<RatingRecord>& rows() const { return rows_; }

    // 0.0 for unrated movies.
    double mean_rating(int movie_id) const;

    // Ascending user ids; empty for unrated movies.
    std::vector<int> users_of(int movie_id) const;

    // All (user, movie) pairs sorted by (movie_id, user_id).
    std::vector<std::pair<int, int>> rated_pairs() const;

    std::size_t user_count() const;

private:
    std::vector<RatingRecord> rows_;  // sorted by (movie_id, user_id)
    std::map<int, std::pair<double, int>> sums_;
};

struct Dataset {
    Catalog catalog;
    Ratings ratings;
};

// Loads and validates the two CSV sources. movies.csv header:
//   movie_id,title,genres,keywords,director_gender,production_type
// with genres/keywords pipe-separated, director_gender in {F,M,U} and
// production_type in {independent,studio}. ratings.csv header:
//   user_id,movie_id,rating
// Throws FormatError, DuplicateKey or EmptyCatalog.
Dataset load_catalog(std::istream& movies_source, std::istream& ratings_source);
Dataset load_catalog_files(const std::string& movies_path, const std::string& ratings_path);

enum class PredicateOp { equals, contains };

// A single feature predicate over a movie record, e.g.
//   director_gender == "F"        genres contains "Action"
// Supported columns: movie_id, title, genres, keywords, director_gender,
// production_type. For set-valued columns `contains` tests membership and
// `equals` compares against the pipe-joined sorted rendering; for scalar
// columns `contains` is substring search.
struct FeaturePredicate {
    std::string column;
    PredicateOp op = PredicateOp::equals;
    std::string value;

    auto operator<=>(const FeaturePredicate&) const = default;

    bool matches(const MovieRecord& movie) const;
    std::string to_string() const;
};

// Parses the mini-language `<column> == "<literal>"` or
// `<column> contains "<literal>"`. Throws ConfigError.
FeaturePredicate parse_feature_predicate(std::string_view text);

}  // namespace argaudit
