#include "argaudit/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>

#include "argaudit/errors.hpp"

namespace argaudit {

std::string to_string(DirectorGender g) {
    switch (g) {
        case DirectorGender::F: return "F";
        case DirectorGender::M: return "M";
        case DirectorGender::U: return "U";
    }
    return "?";
}

std::string to_string(ProductionType t) {
    return t == ProductionType::independent ? "independent" : "studio";
}

Catalog::Catalog(std::vector<MovieRecord> movies) {
    for (MovieRecord& m : movies) {
        int id = m.movie_id;
        if (!movies_.emplace(id, std::move(m)).second)
            throw DuplicateKeyError("duplicate movie_id " + std::to_string(id));
    }
}

const MovieRecord* Catalog::find(int movie_id) const {
    auto it = movies_.find(movie_id);
    return it == movies_.end() ? nullptr : &it->second;
}

const MovieRecord& Catalog::at(int movie_id) const {
    const MovieRecord* m = find(movie_id);
    if (m == nullptr) throw UnknownMovieError(movie_id);
    return *m;
}

Ratings::Ratings(std::vector<RatingRecord> rows) : rows_(std::move(rows)) {
    std::sort(rows_.begin(), rows_.end(), [](const RatingRecord& a, const RatingRecord& b) {
        if (a.movie_id != b.movie_id) return a.movie_id < b.movie_id;
        return a.user_id < b.user_id;
    });
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i > 0 && rows_[i].movie_id == rows_[i - 1].movie_id &&
            rows_[i].user_id == rows_[i - 1].user_id) {
            throw DuplicateKeyError("duplicate rating for user " +
                                    std::to_string(rows_[i].user_id) + ", movie " +
                                    std::to_string(rows_[i].movie_id));
        }
        auto& [sum, count] = sums_[rows_[i].movie_id];
        sum += rows_[i].rating;
        count += 1;
    }
}

double Ratings::mean_rating(int movie_id) const {
    auto it = sums_.find(movie_id);
    if (it == sums_.end() || it->second.second == 0) return 0.0;
    return it->second.first / it->second.second;
}

std::vector<int> Ratings::users_of(int movie_id) const {
    std::vector<int> users;
    for (const RatingRecord& r : rows_) {
        if (r.movie_id == movie_id) users.push_back(r.user_id);
    }
    return users;  // already ascending: rows sorted by (movie, user)
}

std::vector<std::pair<int, int>> Ratings::rated_pairs() const {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(rows_.size());
    for (const RatingRecord& r : rows_) pairs.emplace_back(r.user_id, r.movie_id);
    return pairs;
}

std::size_t Ratings::user_count() const {
    std::set<int> users;
    for (const RatingRecord& r : rows_) users.insert(r.user_id);
    return users.size();
}

namespace {

// Minimal CSV reader: comma-separated, optional double quotes with ""
// escapes, no embedded newlines.
std::vector<std::string> split_csv_row(const std::string& line, int line_no) {
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field += c;
            }
        } else if (c == '"' && field.empty()) {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(field));
            field.clear();
        } else {
            field += c;
        }
    }
    if (quoted)
        throw FormatError("unterminated quote on line " + std::to_string(line_no));
    fields.push_back(std::move(field));
    return fields;
}

std::string strip_cr(std::string s) {
    if (!s.empty() && s.back() == '\r') s.pop_back();
    return s;
}

int parse_int(const std::string& s, const std::string& what, int line_no) {
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw FormatError("bad " + what + " '" + s + "' on line " + std::to_string(line_no));
    }
}

double parse_real(const std::string& s, const std::string& what, int line_no) {
    try {
        std::size_t used = 0;
        double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw FormatError("bad " + what + " '" + s + "' on line " + std::to_string(line_no));
    }
}

std::set<std::string> parse_pipe_set(const std::string& s, const std::string& what,
                                     int line_no) {
    std::set<std::string> out;
    std::string item;
    std::stringstream ss(s);
    while (std::getline(ss, item, '|')) {
        if (!item.empty()) out.insert(item);
    }
    if (out.empty())
        throw FormatError("empty " + what + " on line " + std::to_string(line_no));
    return out;
}

constexpr const char* kMoviesHeader =
    "movie_id,title,genres,keywords,director_gender,production_type";
constexpr const char* kRatingsHeader = "user_id,movie_id,rating";

std::vector<MovieRecord> read_movies(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || strip_cr(line) != kMoviesHeader)
        throw FormatError(std::string("movies header must be exactly '") + kMoviesHeader +
                          "'");
    std::vector<MovieRecord> movies;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        if (line.empty()) continue;
        std::vector<std::string> f = split_csv_row(line, line_no);
        if (f.size() != 6)
            throw FormatError("expected 6 columns, got " + std::to_string(f.size()) +
                              " on line " + std::to_string(line_no));
        MovieRecord m;
        m.movie_id = parse_int(f[0], "movie_id", line_no);
        m.title = f[1];
        m.genres = parse_pipe_set(f[2], "genres", line_no);
        m.keywords = parse_pipe_set(f[3], "keywords", line_no);
        if (f[4] == "F") m.director_gender = DirectorGender::F;
        else if (f[4] == "M") m.director_gender = DirectorGender::M;
        else if (f[4] == "U") m.director_gender = DirectorGender::U;
        else
            throw FormatError("bad director_gender '" + f[4] + "' on line " +
                              std::to_string(line_no));
        if (f[5] == "independent") m.production_type = ProductionType::independent;
        else if (f[5] == "studio") m.production_type = ProductionType::studio;
        else
            throw FormatError("bad production_type '" + f[5] + "' on line " +
                              std::to_string(line_no));
        movies.push_back(std::move(m));
    }
    return movies;
}

std::vector<RatingRecord> read_ratings(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || strip_cr(line) != kRatingsHeader)
        throw FormatError(std::string("ratings header must be exactly '") + kRatingsHeader +
                          "'");
    std::vector<RatingRecord> rows;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        if (line.empty()) continue;
        std::vector<std::string> f = split_csv_row(line, line_no);
        if (f.size() != 3)
            throw FormatError("expected 3 columns, got " + std::to_string(f.size()) +
                              " on line " + std::to_string(line_no));
        RatingRecord r;
        r.user_id = parse_int(f[0], "user_id", line_no);
        r.movie_id = parse_int(f[1], "movie_id", line_no);
        r.rating = parse_real(f[2], "rating", line_no);
        if (r.rating < 0.5 || r.rating > 5.0)
            throw FormatError("rating " + f[2] + " out of range [0.5, 5.0] on line " +
                              std::to_string(line_no));
        rows.push_back(r);
    }
    return rows;
}

}  // namespace

Dataset load_catalog(std::istream& movies_source, std::istream& ratings_source) {
    std::vector<MovieRecord> movies = read_movies(movies_source);
    if (movies.empty()) throw EmptyCatalogError("movies file contains no records");
    Catalog catalog(std::move(movies));
    std::vector<RatingRecord> rows = read_ratings(ratings_source);
    for (const RatingRecord& r : rows) {
        if (catalog.find(r.movie_id) == nullptr)
            throw FormatError("rating references unknown movie_id " +
                              std::to_string(r.movie_id));
    }
    return Dataset{std::move(catalog), Ratings(std::move(rows))};
}

Dataset load_catalog_files(const std::string& movies_path, const std::string& ratings_path) {
    std::ifstream movies(movies_path);
    if (!movies) throw FormatError("cannot open " + movies_path);
    std::ifstream ratings(ratings_path);
    if (!ratings) throw FormatError("cannot open " + ratings_path);
    return load_catalog(movies, ratings);
}

namespace {

std::string pipe_join(const std::set<std::string>& items) {
    std::string out;
    for (const std::string& s : items) {
        if (!out.empty()) out += "|";
        out += s;
    }
    return out;
}

}  // namespace

bool FeaturePredicate::matches(const MovieRecord& movie) const {
    auto scalar = [&](const std::string& field) {
        return op == PredicateOp::equals ? field == value
                                         : field.find(value) != std::string::npos;
    };
    auto set_field = [&](const std::set<std::string>& field) {
        return op == PredicateOp::equals ? pipe_join(field) == value
                                         : field.contains(value);
    };
    if (column == "movie_id") return scalar(std::to_string(movie.movie_id));
    if (column == "title") return scalar(movie.title);
    if (column == "genres") return set_field(movie.genres);
    if (column == "keywords") return set_field(movie.keywords);
    if (column == "director_gender") return scalar(argaudit::to_string(movie.director_gender));
    if (column == "production_type") return scalar(argaudit::to_string(movie.production_type));
    throw ConfigError("unknown column in predicate: " + column);
}

std::string FeaturePredicate::to_string() const {
    return column + (op == PredicateOp::equals ? " == \"" : " contains \"") + value + "\"";
}

FeaturePredicate parse_feature_predicate(std::string_view text) {
    auto skip = [&](std::size_t i) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        return i;
    };
    std::size_t i = skip(0);
    std::size_t start = i;
    while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) ||
                               text[i] == '_')) {
        ++i;
    }
    std::string column(text.substr(start, i - start));
    if (column.empty()) throw ConfigError("predicate missing column name: '" +
                                          std::string(text) + "'");

    static const std::set<std::string> known = {"movie_id", "title", "genres", "keywords",
                                                "director_gender", "production_type"};
    if (!known.contains(column)) throw ConfigError("unknown column in predicate: " + column);

    i = skip(i);
    PredicateOp op;
    if (text.substr(i, 2) == "==") {
        op = PredicateOp::equals;
        i += 2;
    } else if (text.substr(i, 8) == "contains") {
        op = PredicateOp::contains;
        i += 8;
    } else {
        throw ConfigError("predicate operator must be == or contains: '" +
                          std::string(text) + "'");
    }

    i = skip(i);
    if (i >= text.size() || text[i] != '"')
        throw ConfigError("predicate literal must be double-quoted: '" +
                          std::string(text) + "'");
    ++i;
    std::size_t close = text.find('"', i);
    if (close == std::string_view::npos)
        throw ConfigError("unterminated predicate literal: '" + std::string(text) + "'");
    std::string value(text.substr(i, close - i));
    if (skip(close + 1) != text.size())
        throw ConfigError("trailing input after predicate: '" + std::string(text) + "'");
    return FeaturePredicate{std::move(column), op, std::move(value)};
}

}  // namespace argaudit
