/*
 * Sparse Laurent polynomials with arbitrary-precision integer coefficients:
 * one-variable polynomials in q (quantum integers, factorials, binomials)
 * and two-variable polynomials in (a, z) used by the skein module.
 *
 * Storage is a map from exponent to nonzero coefficient, so equal
 * polynomials always have identical term maps. The canonical text form
 * lists terms with exponents ascending, e.g. "q^-1 + q".
 */

#pragma once

#include <map>
#include <string>
#include <utility>

#include "tqft/semiring.hpp"

namespace tqft {

class Laurent {
public:
    Laurent() = default;
    Laurent(int c) : Laurent(bigint(c)) {}
    Laurent(bigint c) {
        if (c != 0) terms_[0] = std::move(c);
    }

    static Laurent zero() { return {}; }
    static Laurent one() { return {1}; }
    /// The generator q itself.
    static Laurent q() { return monomial(1, 1); }
    static Laurent monomial(bigint c, int exp);

    bool is_zero() const { return terms_.empty(); }
    const std::map<int, bigint>& terms() const { return terms_; }
    bigint coeff(int exp) const;
    int min_exp() const;  // throws on zero polynomial
    int max_exp() const;

    friend Laurent operator+(const Laurent& x, const Laurent& y);
    friend Laurent operator-(const Laurent& x, const Laurent& y);
    friend Laurent operator*(const Laurent& x, const Laurent& y);
    friend bool operator==(const Laurent& x, const Laurent& y) { return x.terms_ == y.terms_; }

    Laurent operator-() const;
    /// Multiply by q^d.
    Laurent shifted(int d) const;
    Laurent pow(unsigned n) const;

    bigint eval_at_one() const;
    bool palindromic() const;       // invariant under q <-> q^-1
    bool coeffs_nonnegative() const;

    /// Exact division: returns true and sets quotient iff num = den * quotient.
    static bool divide_exact(const Laurent& num, const Laurent& den, Laurent& quotient);

    std::string text() const;
    static Laurent parse(const std::string& s);

private:
    std::map<int, bigint> terms_;
};

/// [n] = q^{n-1} + q^{n-3} + ... + q^{1-n}; [0] = 0.
Laurent qint(int n);
/// [n]! = [1][2]...[n]; [0]! = 1.
Laurent qfactorial(int n);
/// Quantum binomial [n]! / ([k]! [n-k]!) by iterative product-then-divide;
/// every intermediate division is checked to be exact.
Laurent qbinom(int n, int k);

/// Laurent polynomial in two variables a and z, exponents stored as
/// (a-exponent, z-exponent) pairs ordered lexicographically.
class TwoVar {
public:
    using Key = std::pair<int, int>;

    TwoVar() = default;
    TwoVar(int c) : TwoVar(bigint(c)) {}
    TwoVar(bigint c) {
        if (c != 0) terms_[{0, 0}] = std::move(c);
    }

    static TwoVar zero() { return {}; }
    static TwoVar one() { return {1}; }
    static TwoVar monomial(bigint c, int a_exp, int z_exp);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, bigint>& terms() const { return terms_; }
    bigint coeff(int a_exp, int z_exp) const;
    int min_z_exp() const;  // throws on zero polynomial

    friend TwoVar operator+(const TwoVar& x, const TwoVar& y);
    friend TwoVar operator-(const TwoVar& x, const TwoVar& y);
    friend TwoVar operator*(const TwoVar& x, const TwoVar& y);
    friend bool operator==(const TwoVar& x, const TwoVar& y) { return x.terms_ == y.terms_; }

    TwoVar operator-() const;
    TwoVar pow(unsigned n) const;

    std::string text() const;
    static TwoVar parse(const std::string& s);

private:
    std::map<Key, bigint> terms_;
};

}  // namespace tqft
