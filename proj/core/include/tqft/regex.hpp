/*
 * Regular expression ASTs over single-character alphabets.
 *
 * Concrete syntax: letters are lowercase latin letters or digits, `+` is
 * union, juxtaposition is concatenation, `*` is Kleene star, `%` is the
 * empty word and `#` the empty language. Star binds tighter than
 * concatenation, which binds tighter than union.
 */

#pragma once

#include <memory>
#include <string>

#include "tqft/errors.hpp"

namespace tqft {

struct Regex {
    enum class Kind { empty, epsilon, letter, concat, alt, star };

    Kind kind = Kind::empty;
    char letter = 0;
    std::shared_ptr<const Regex> left, right;  // star uses left only

    static Regex empty() { return {}; }
    static Regex epsilon() { return {Kind::epsilon, 0, nullptr, nullptr}; }
    static Regex lit(char c) { return {Kind::letter, c, nullptr, nullptr}; }
    static Regex concat(Regex a, Regex b) {
        return {Kind::concat, 0, wrap(std::move(a)), wrap(std::move(b))};
    }
    static Regex alt(Regex a, Regex b) {
        return {Kind::alt, 0, wrap(std::move(a)), wrap(std::move(b))};
    }
    static Regex star(Regex a) { return {Kind::star, 0, wrap(std::move(a)), nullptr}; }

private:
    static std::shared_ptr<const Regex> wrap(Regex r) {
        return std::make_shared<const Regex>(std::move(r));
    }
};

bool operator==(const Regex& a, const Regex& b);

/// Throws ParseError with the offending offset on malformed input.
Regex parse_regex(const std::string& text);

/// Prints in the concrete syntax above; parse_regex(print_regex(r)) == r.
std::string print_regex(const Regex& r);

}  // namespace tqft
