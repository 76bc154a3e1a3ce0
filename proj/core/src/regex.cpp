#include "tqft/regex.hpp"

#include <cctype>
#include <sstream>

namespace tqft {

bool operator==(const Regex& a, const Regex& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case Regex::Kind::empty:
        case Regex::Kind::epsilon:
            return true;
        case Regex::Kind::letter:
            return a.letter == b.letter;
        case Regex::Kind::star:
            return *a.left == *b.left;
        case Regex::Kind::concat:
        case Regex::Kind::alt:
            return *a.left == *b.left && *a.right == *b.right;
    }
    return false;
}

namespace {

bool is_letter(char c) {
    return std::islower(static_cast<unsigned char>(c)) ||
           std::isdigit(static_cast<unsigned char>(c));
}

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    Regex parse() {
        Regex r = union_expr();
        if (pos_ < s_.size()) throw ParseError("unexpected character", pos_);
        return r;
    }

private:
    bool eof() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }

    bool atom_ahead() const {
        if (eof()) return false;
        char c = peek();
        return c == '(' || c == '%' || c == '#' || is_letter(c);
    }

    Regex union_expr() {
        Regex r = concat_expr();
        while (!eof() && peek() == '+') {
            ++pos_;
            r = Regex::alt(std::move(r), concat_expr());
        }
        return r;
    }

    Regex concat_expr() {
        if (!atom_ahead()) throw ParseError("expected expression", pos_);
        Regex r = starred_atom();
        while (atom_ahead()) r = Regex::concat(std::move(r), starred_atom());
        return r;
    }

    Regex starred_atom() {
        Regex r = atom();
        while (!eof() && peek() == '*') {
            ++pos_;
            r = Regex::star(std::move(r));
        }
        return r;
    }

    Regex atom() {
        if (eof()) throw ParseError("expected expression", pos_);
        char c = peek();
        if (c == '(') {
            ++pos_;
            Regex r = union_expr();
            if (eof() || peek() != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
            return r;
        }
        if (c == '%') {
            ++pos_;
            return Regex::epsilon();
        }
        if (c == '#') {
            ++pos_;
            return Regex::empty();
        }
        if (is_letter(c)) {
            ++pos_;
            return Regex::lit(c);
        }
        throw ParseError("unexpected character", pos_);
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

int precedence(Regex::Kind k) {
    switch (k) {
        case Regex::Kind::alt: return 0;
        case Regex::Kind::concat: return 1;
        case Regex::Kind::star: return 2;
        default: return 3;
    }
}

void print(const Regex& r, int parent_prec, std::ostringstream& out) {
    int prec = precedence(r.kind);
    bool parens = prec < parent_prec;
    if (parens) out << '(';
    switch (r.kind) {
        case Regex::Kind::empty:
            out << '#';
            break;
        case Regex::Kind::epsilon:
            out << '%';
            break;
        case Regex::Kind::letter:
            out << r.letter;
            break;
        case Regex::Kind::alt:
            // right child one level up so right-nested trees reparse identically
            print(*r.left, 0, out);
            out << '+';
            print(*r.right, 1, out);
            break;
        case Regex::Kind::concat:
            print(*r.left, 1, out);
            print(*r.right, 2, out);
            break;
        case Regex::Kind::star:
            // star of star needs parens: a** parses as (a*)* already, but
            // star of concat/alt always does.
            print(*r.left, 3, out);
            out << '*';
            break;
    }
    if (parens) out << ')';
}

}  // namespace

Regex parse_regex(const std::string& text) { return Parser(text).parse(); }

std::string print_regex(const Regex& r) {
    std::ostringstream out;
    print(r, 0, out);
    return out.str();
}

}  // namespace tqft
