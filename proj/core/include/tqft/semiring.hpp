/*
 * Commutative semiring abstraction and the concrete instances used across
 * the library: the Boolean semiring {0,1 : 1+1=1}, the min-plus tropical
 * semiring over integers, and arbitrary-precision integers.
 *
 * A semiring here is a value type providing +, *, ==, static zero()/one(),
 * and a canonical text form. No subtraction is assumed anywhere in the
 * generic code; types that happen to be rings may additionally offer
 * operator-, but nothing templated on Semiring uses it.
 */

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace tqft {

using bigint = boost::multiprecision::cpp_int;

template <typename R>
concept Semiring = requires(R a, R b) {
    { R::zero() } -> std::convertible_to<R>;
    { R::one() } -> std::convertible_to<R>;
    { a + b } -> std::convertible_to<R>;
    { a * b } -> std::convertible_to<R>;
    { a == b } -> std::convertible_to<bool>;
    { a.text() } -> std::convertible_to<std::string>;
};

/// Boolean semiring: addition is OR (so 1+1 = 1), multiplication is AND.
struct Bool {
    bool v = false;

    static Bool zero() { return {false}; }
    static Bool one() { return {true}; }

    friend Bool operator+(Bool a, Bool b) { return {a.v || b.v}; }
    friend Bool operator*(Bool a, Bool b) { return {a.v && b.v}; }
    friend bool operator==(Bool a, Bool b) { return a.v == b.v; }

    std::string text() const { return v ? "1" : "0"; }
    static Bool parse(const std::string& s) {
        if (s == "0") return {false};
        if (s == "1") return {true};
        throw std::invalid_argument("Bool::parse: expected 0 or 1, got '" + s + "'");
    }
};

/// Min-plus tropical semiring: + is min, * is integer addition,
/// zero is +infinity, one is 0.
struct Tropical {
    std::int64_t v = 0;
    bool inf = true;  // default-constructed value is the additive identity

    static Tropical zero() { return {0, true}; }
    static Tropical one() { return {0, false}; }
    static Tropical of(std::int64_t w) { return {w, false}; }

    friend Tropical operator+(Tropical a, Tropical b) {
        if (a.inf) return b;
        if (b.inf) return a;
        return {a.v < b.v ? a.v : b.v, false};
    }
    friend Tropical operator*(Tropical a, Tropical b) {
        if (a.inf || b.inf) return zero();
        return {a.v + b.v, false};
    }
    friend bool operator==(Tropical a, Tropical b) {
        if (a.inf != b.inf) return false;
        return a.inf || a.v == b.v;
    }

    std::string text() const { return inf ? "inf" : std::to_string(v); }
    static Tropical parse(const std::string& s) {
        if (s == "inf") return zero();
        return of(std::stoll(s));
    }
};

/// Integer semiring with arbitrary-precision values (path counting does not
/// overflow and skein coefficients stay exact on large diagrams).
struct Integer {
    bigint v = 0;

    Integer() = default;
    Integer(int x) : v(x) {}
    Integer(bigint x) : v(std::move(x)) {}

    static Integer zero() { return {0}; }
    static Integer one() { return {1}; }

    friend Integer operator+(const Integer& a, const Integer& b) { return {a.v + b.v}; }
    friend Integer operator*(const Integer& a, const Integer& b) { return {a.v * b.v}; }
    friend Integer operator-(const Integer& a, const Integer& b) { return {a.v - b.v}; }
    friend bool operator==(const Integer& a, const Integer& b) { return a.v == b.v; }

    std::string text() const { return v.str(); }
    static Integer parse(const std::string& s) { return {bigint(s)}; }
};

}  // namespace tqft
