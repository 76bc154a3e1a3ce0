#include "tqft/laurent.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace tqft {

namespace {

// Shared monomial renderer. vars lists (name, exponent) with zero exponents
// already dropped; coeff is nonzero.
void render_term(std::ostringstream& out, bool first, const bigint& coeff,
                 const std::vector<std::pair<const char*, int>>& vars) {
    bigint c = coeff;
    if (first) {
        if (c < 0) {
            out << "-";
            c = -c;
        }
    } else {
        out << (c < 0 ? " - " : " + ");
        if (c < 0) c = -c;
    }
    bool coeff_printed = false;
    if (c != 1 || vars.empty()) {
        out << c.str();
        coeff_printed = true;
    }
    bool anything = coeff_printed;
    for (const auto& [name, exp] : vars) {
        if (anything) out << "*";
        out << name;
        if (exp != 1) out << "^" << exp;
        anything = true;
    }
}

// Minimal recursive-descent parser for the canonical form. Accepts sums of
// monomials over the given variable names.
class TermParser {
public:
    TermParser(const std::string& s, std::vector<std::string> names)
        : s_(s), names_(std::move(names)) {}

    // Calls sink(coeff, exps) once per monomial; exps aligned with names.
    template <typename Sink>
    void run(Sink sink) {
        skip_ws();
        if (eof()) throw std::invalid_argument("empty polynomial text");
        bool first = true;
        while (!eof()) {
            int sign = 1;
            skip_ws();
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
            } else if (!first) {
                throw std::invalid_argument("expected + or - at offset " + std::to_string(pos_));
            }
            skip_ws();
            auto [coeff, exps] = monomial();
            sink(sign * coeff, exps);
            first = false;
            skip_ws();
        }
    }

private:
    bool eof() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    bigint integer() {
        bool neg = false;
        if (!eof() && (peek() == '-' || peek() == '+')) {
            neg = peek() == '-';
            ++pos_;
        }
        if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
            throw std::invalid_argument("expected integer at offset " + std::to_string(pos_));
        bigint v = 0;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (peek() - '0');
            ++pos_;
        }
        return neg ? -v : v;
    }

    int var_index() {
        for (std::size_t i = 0; i < names_.size(); ++i) {
            const auto& n = names_[i];
            if (s_.compare(pos_, n.size(), n) == 0) {
                pos_ += n.size();
                return static_cast<int>(i);
            }
        }
        return -1;
    }

    std::pair<bigint, std::vector<int>> monomial() {
        bigint coeff = 1;
        std::vector<int> exps(names_.size(), 0);
        bool saw_factor = false;
        if (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = integer();
            saw_factor = true;
        }
        for (;;) {
            std::size_t save = pos_;
            if (saw_factor) {
                skip_ws();
                if (eof() || peek() != '*') {
                    pos_ = save;
                    break;
                }
                ++pos_;
                skip_ws();
            }
            int vi = var_index();
            if (vi < 0) {
                if (saw_factor) throw std::invalid_argument(
                    "expected variable at offset " + std::to_string(pos_));
                break;
            }
            int e = 1;
            if (!eof() && peek() == '^') {
                ++pos_;
                e = static_cast<int>(integer());
            }
            exps[vi] += e;
            saw_factor = true;
        }
        if (!saw_factor)
            throw std::invalid_argument("expected monomial at offset " + std::to_string(pos_));
        return {coeff, exps};
    }

    const std::string& s_;
    std::vector<std::string> names_;
    std::size_t pos_ = 0;
};

}  // namespace

Laurent Laurent::monomial(bigint c, int exp) {
    Laurent p;
    if (c != 0) p.terms_[exp] = std::move(c);
    return p;
}

bigint Laurent::coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? bigint(0) : it->second;
}

int Laurent::min_exp() const {
    if (terms_.empty()) throw std::logic_error("min_exp of zero polynomial");
    return terms_.begin()->first;
}

int Laurent::max_exp() const {
    if (terms_.empty()) throw std::logic_error("max_exp of zero polynomial");
    return terms_.rbegin()->first;
}

Laurent operator+(const Laurent& x, const Laurent& y) {
    Laurent r = x;
    for (const auto& [e, c] : y.terms_) {
        auto it = r.terms_.find(e);
        if (it == r.terms_.end()) {
            r.terms_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) r.terms_.erase(it);
        }
    }
    return r;
}

Laurent operator-(const Laurent& x, const Laurent& y) { return x + (-y); }

Laurent operator*(const Laurent& x, const Laurent& y) {
    Laurent r;
    for (const auto& [ex, cx] : x.terms_)
        for (const auto& [ey, cy] : y.terms_) {
            bigint& slot = r.terms_[ex + ey];
            slot += cx * cy;
        }
    for (auto it = r.terms_.begin(); it != r.terms_.end();)
        it = it->second == 0 ? r.terms_.erase(it) : std::next(it);
    return r;
}

Laurent Laurent::operator-() const {
    Laurent r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

Laurent Laurent::shifted(int d) const {
    Laurent r;
    for (const auto& [e, c] : terms_) r.terms_[e + d] = c;
    return r;
}

Laurent Laurent::pow(unsigned n) const {
    Laurent r = one();
    Laurent base = *this;
    while (n) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

bigint Laurent::eval_at_one() const {
    bigint s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

bool Laurent::palindromic() const {
    for (const auto& [e, c] : terms_)
        if (coeff(-e) != c) return false;
    return true;
}

bool Laurent::coeffs_nonnegative() const {
    for (const auto& [e, c] : terms_)
        if (c < 0) return false;
    return true;
}

bool Laurent::divide_exact(const Laurent& num, const Laurent& den, Laurent& quotient) {
    if (den.is_zero()) return false;
    if (num.is_zero()) {
        quotient = zero();
        return true;
    }
    Laurent rem = num;
    Laurent quot;
    const int dlead = den.max_exp();
    const bigint& dc = den.terms_.rbegin()->second;
    while (!rem.is_zero()) {
        int rlead = rem.max_exp();
        if (rlead - dlead < rem.min_exp() - den.min_exp()) return false;
        const bigint& rc = rem.terms_.rbegin()->second;
        if (rc % dc != 0) return false;
        Laurent t = monomial(rc / dc, rlead - dlead);
        quot = quot + t;
        rem = rem - t * den;
        if (!rem.is_zero() && rem.max_exp() >= rlead) return false;
    }
    quotient = quot;
    return true;
}

std::string Laurent::text() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::vector<std::pair<const char*, int>> vars;
        if (e != 0) vars.emplace_back("q", e);
        render_term(out, first, c, vars);
        first = false;
    }
    return out.str();
}

Laurent Laurent::parse(const std::string& s) {
    Laurent p;
    TermParser tp(s, {"q"});
    tp.run([&](const bigint& c, const std::vector<int>& exps) {
        p = p + monomial(c, exps[0]);
    });
    return p;
}

Laurent qint(int n) {
    if (n < 0) throw std::invalid_argument("qint: negative argument");
    Laurent r;
    for (int e = n - 1; e >= 1 - n; e -= 2) r = r + Laurent::monomial(1, e);
    return r;
}

Laurent qfactorial(int n) {
    if (n < 0) throw std::invalid_argument("qfactorial: negative argument");
    Laurent r = Laurent::one();
    for (int c = 1; c <= n; ++c) r = r * qint(c);
    return r;
}

Laurent qbinom(int n, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("qbinom: need 0 <= k <= n");
    // [n choose k] = prod_{c=1..k} [n-k+c] / [c]; each partial product is
    // itself a quantum binomial, so every division is exact.
    Laurent r = Laurent::one();
    for (int c = 1; c <= k; ++c) {
        r = r * qint(n - k + c);
        Laurent q;
        if (!Laurent::divide_exact(r, qint(c), q))
            throw std::logic_error("qbinom: internal error, division not exact");
        r = q;
    }
    return r;
}

TwoVar TwoVar::monomial(bigint c, int a_exp, int z_exp) {
    TwoVar p;
    if (c != 0) p.terms_[{a_exp, z_exp}] = std::move(c);
    return p;
}

bigint TwoVar::coeff(int a_exp, int z_exp) const {
    auto it = terms_.find({a_exp, z_exp});
    return it == terms_.end() ? bigint(0) : it->second;
}

int TwoVar::min_z_exp() const {
    if (terms_.empty()) throw std::logic_error("min_z_exp of zero polynomial");
    int m = terms_.begin()->first.second;
    for (const auto& [k, c] : terms_) m = std::min(m, k.second);
    return m;
}

TwoVar operator+(const TwoVar& x, const TwoVar& y) {
    TwoVar r = x;
    for (const auto& [k, c] : y.terms_) {
        auto it = r.terms_.find(k);
        if (it == r.terms_.end()) {
            r.terms_[k] = c;
        } else {
            it->second += c;
            if (it->second == 0) r.terms_.erase(it);
        }
    }
    return r;
}

TwoVar operator-(const TwoVar& x, const TwoVar& y) { return x + (-y); }

TwoVar operator*(const TwoVar& x, const TwoVar& y) {
    TwoVar r;
    for (const auto& [kx, cx] : x.terms_)
        for (const auto& [ky, cy] : y.terms_) {
            TwoVar::Key k{kx.first + ky.first, kx.second + ky.second};
            bigint& slot = r.terms_[k];
            slot += cx * cy;
        }
    for (auto it = r.terms_.begin(); it != r.terms_.end();)
        it = it->second == 0 ? r.terms_.erase(it) : std::next(it);
    return r;
}

TwoVar TwoVar::operator-() const {
    TwoVar r;
    for (const auto& [k, c] : terms_) r.terms_[k] = -c;
    return r;
}

TwoVar TwoVar::pow(unsigned n) const {
    TwoVar r = one();
    TwoVar base = *this;
    while (n) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

std::string TwoVar::text() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        std::vector<std::pair<const char*, int>> vars;
        if (k.first != 0) vars.emplace_back("a", k.first);
        if (k.second != 0) vars.emplace_back("z", k.second);
        render_term(out, first, c, vars);
        first = false;
    }
    return out.str();
}

TwoVar TwoVar::parse(const std::string& s) {
    TwoVar p;
    TermParser tp(s, {"a", "z"});
    tp.run([&](const bigint& c, const std::vector<int>& exps) {
        p = p + monomial(c, exps[0], exps[1]);
    });
    return p;
}

}  // namespace tqft
