#include "argaudit/policy.hpp"

#include <algorithm>
#include <cctype>

#include "argaudit/errors.hpp"

namespace argaudit {

namespace {

bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

// Recursive-descent scanner over the policy grammar. Tracks 1-based
// line/column for error reporting.
class Scanner {
public:
    explicit Scanner(std::string_view src) : src_(src) {}

    void skip_space_and_comments() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '%') {
                while (pos_ < src_.size() && src_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    bool at_end() {
        skip_space_and_comments();
        return pos_ >= src_.size();
    }

    char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

    bool try_consume(char c) {
        skip_space_and_comments();
        if (peek() == c) {
            advance();
            return true;
        }
        return false;
    }

    // Two-character arrow "<-".
    bool try_consume_arrow() {
        skip_space_and_comments();
        if (pos_ + 1 < src_.size() && src_[pos_] == '<' && src_[pos_ + 1] == '-') {
            advance();
            advance();
            return true;
        }
        return false;
    }

    void expect(char c, const std::string& what) {
        if (!try_consume(c)) fail("expected '" + std::string(1, c) + "' " + what);
    }

    std::string ident() {
        skip_space_and_comments();
        if (pos_ >= src_.size() || !ident_start(src_[pos_]))
            fail("expected identifier");
        std::string out;
        while (pos_ < src_.size() && ident_char(src_[pos_])) {
            out.push_back(src_[pos_]);
            advance();
        }
        return out;
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw SyntaxError(message, line_, column_);
    }

    int line() const { return line_; }
    int column() const { return column_; }

private:
    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
};

// term := ident ["(" termlist ")"]; appends the canonical text to out.
void parse_term(Scanner& sc, std::string& out) {
    out += sc.ident();
    if (sc.try_consume('(')) {
        out += '(';
        parse_term(sc, out);
        while (sc.try_consume(',')) {
            out += ',';
            parse_term(sc, out);
        }
        sc.expect(')', "to close term list");
        out += ')';
    }
}

Atom parse_atom_at(Scanner& sc) {
    sc.skip_space_and_comments();
    bool negated = sc.try_consume('~');
    std::string text;
    parse_term(sc, text);
    return Atom{std::move(text), negated};
}

}  // namespace

Clause make_clause(Atom head, std::vector<Atom> body) {
    std::sort(body.begin(), body.end());
    body.erase(std::unique(body.begin(), body.end()), body.end());
    return Clause{std::move(head), std::move(body)};
}

Program::Program(std::vector<Clause> clauses) : clauses_(std::move(clauses)) {
    for (const Clause& c : clauses_) {
        language_.insert(c.head);
        language_.insert(c.body.begin(), c.body.end());
    }
}

Program parse_policy(std::string_view source) {
    Scanner sc(source);
    std::vector<Clause> clauses;
    while (!sc.at_end()) {
        Atom head = parse_atom_at(sc);
        std::vector<Atom> body;
        if (sc.try_consume_arrow()) {
            body.push_back(parse_atom_at(sc));
            while (sc.try_consume(',')) body.push_back(parse_atom_at(sc));
        }
        sc.expect('.', "to terminate clause");
        clauses.push_back(make_clause(std::move(head), std::move(body)));
    }
    return Program(std::move(clauses));
}

Atom parse_atom(std::string_view source) {
    Scanner sc(source);
    Atom a = parse_atom_at(sc);
    if (!sc.at_end()) sc.fail("trailing input after atom");
    return a;
}

std::string serialize_policy(const Program& program) {
    std::string out;
    for (const Clause& c : program.clauses()) {
        out += c.head.to_string();
        if (!c.body.empty()) {
            out += " <- ";
            for (std::size_t i = 0; i < c.body.size(); ++i) {
                if (i > 0) out += ", ";
                out += c.body[i].to_string();
            }
        }
        out += ".\n";
    }
    return out;
}

std::set<Atom> least_model(const Program& program) {
    std::set<Atom> model;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Clause& c : program.clauses()) {
            if (model.contains(c.head)) continue;
            bool fires = std::all_of(c.body.begin(), c.body.end(),
                                     [&](const Atom& a) { return model.contains(a); });
            if (fires) {
                model.insert(c.head);
                changed = true;
            }
        }
    }
    return model;
}

bool is_consistent(const Program& program, const std::set<Atom>& extra_atoms) {
    std::vector<Clause> clauses = program.clauses();
    for (const Atom& a : extra_atoms) clauses.push_back(Clause{a, {}});
    std::set<Atom> model = least_model(Program(std::move(clauses)));
    for (const Atom& a : model) {
        if (a.negated && model.contains(Atom{a.text, false})) return false;
    }
    return true;
}

}  // namespace argaudit
