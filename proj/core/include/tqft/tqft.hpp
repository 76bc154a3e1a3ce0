/*
 * The evaluation functor: TQFT data over a commutative semiring assigns a
 * rank-n free module to the + point, an endomorphism to each alphabet
 * letter, a vector to the incoming half-interval and a covector to the
 * outgoing one. Evaluating a cobordism produces a matrix between tensor
 * powers; closed components evaluate to scalars that multiply the result.
 *
 * Words are stored along strand orientation but act on the right: a strand
 * carrying w = a1...an evaluates to m_{an} ... m_{a1}, so a floating
 * interval gives vstar . m_{an} ... m_{a1} . v0 and a circle gives the
 * trace of the same product.
 */

#pragma once

#include <future>
#include <map>
#include <string>
#include <vector>

#include "tqft/cobordism.hpp"
#include "tqft/errors.hpp"
#include "tqft/matrix.hpp"
#include "tqft/nfa.hpp"

namespace tqft {

template <Semiring R>
struct TqftData {
    std::vector<char> alphabet;
    int rank = 0;
    std::map<char, Matrix<R>> m;  // one rank x rank matrix per letter
    Matrix<R> v0;                 // rank x 1
    Matrix<R> vstar;              // 1 x rank
    Basis basis;                  // labels, optional niceties for rendering

    const Matrix<R>& letter_matrix(char a) const {
        auto it = m.find(a);
        if (it == m.end())
            throw std::invalid_argument(std::string("letter '") + a + "' not in TQFT data");
        return it->second;
    }
};

template <Semiring R>
TqftData<R> from_generic(std::vector<char> alphabet, int rank, std::map<char, Matrix<R>> maps,
                         Matrix<R> v0, Matrix<R> vstar) {
    if (rank < 1) throw std::invalid_argument("from_generic: rank must be positive");
    for (char a : alphabet) {
        auto it = maps.find(a);
        if (it == maps.end())
            throw std::invalid_argument(std::string("from_generic: no map for letter ") + a);
        if (it->second.rows() != rank || it->second.cols() != rank)
            throw std::invalid_argument("from_generic: letter map dimension mismatch");
    }
    if (v0.rows() != rank || v0.cols() != 1)
        throw std::invalid_argument("from_generic: v0 must be rank x 1");
    if (vstar.rows() != 1 || vstar.cols() != rank)
        throw std::invalid_argument("from_generic: vstar must be 1 x rank");
    TqftData<R> d;
    d.alphabet = std::move(alphabet);
    d.rank = rank;
    d.m = std::move(maps);
    d.v0 = std::move(v0);
    d.vstar = std::move(vstar);
    for (int i = 0; i < rank; ++i) d.basis.labels.push_back("e" + std::to_string(i));
    return d;
}

inline TqftData<Bool> from_automaton(const Nfa& nfa) {
    TqftData<Bool> d;
    d.alphabet = nfa.alphabet;
    d.rank = nfa.size();
    for (char a : nfa.alphabet) d.m.emplace(a, transition_matrix(nfa, a));
    d.v0 = initial_vector(nfa);
    d.vstar = accepting_covector(nfa);
    d.basis.labels = nfa.states;
    return d;
}

/// m_{an} ... m_{a1} for w = a1...an; the identity for the empty word.
template <Semiring R>
Matrix<R> word_operator(const TqftData<R>& d, const std::string& w) {
    Matrix<R> acc = Matrix<R>::identity(d.rank);
    for (char a : w) acc = compose(d.letter_matrix(a), acc);
    return acc;
}

template <Semiring R>
R evaluate_closed(const TqftData<R>& d, ComponentKind kind, const std::string& word) {
    Matrix<R> op = word_operator(d, word);
    if (kind == ComponentKind::circle) return trace(op);
    if (kind == ComponentKind::floating_interval)
        return compose(compose(d.vstar, op), d.v0).at(0, 0);
    throw std::invalid_argument("evaluate_closed: component is not closed");
}

template <Semiring R>
Matrix<R> evaluate(const TqftData<R>& d, const Morphism& morphism) {
    morphism.validate();
    const int n = d.rank;

    // Scalars from closed components multiply everything.
    R scalar = R::one();
    struct OpenPart {
        enum class Shape { arc, outer_head, outer_tail } shape;
        Slot a, b;        // arc: a = head slot, b = tail slot
        Matrix<R> table;  // arc: n x n; halves: vector indexed by the outer slot
    };
    std::vector<OpenPart> open;
    for (const auto& c : morphism.components) {
        switch (c.kind()) {
            case ComponentKind::circle:
                scalar = scalar * evaluate_closed(d, ComponentKind::circle, c.dots);
                break;
            case ComponentKind::floating_interval:
                scalar = scalar * evaluate_closed(d, ComponentKind::floating_interval, c.dots);
                break;
            case ComponentKind::arc:
                open.push_back({OpenPart::Shape::arc, *c.head, *c.tail, word_operator(d, c.dots)});
                break;
            default: {
                Matrix<R> op = word_operator(d, c.dots);
                if (c.head && !c.tail)  // inner tail: starts at v0
                    open.push_back({OpenPart::Shape::outer_head, *c.head, {}, compose(op, d.v0)});
                else  // inner head: ends at vstar
                    open.push_back({OpenPart::Shape::outer_tail, *c.tail, {}, compose(d.vstar, op)});
                break;
            }
        }
    }

    auto dim_pow = [&](std::size_t k) {
        double total = 1;
        std::size_t v = 1;
        for (std::size_t i = 0; i < k; ++i) {
            total *= n;
            if (total > 1e8) throw BudgetError("evaluate: boundary tensor power too large");
            v *= static_cast<std::size_t>(n);
        }
        return v;
    };
    const std::size_t n_rows = dim_pow(morphism.target.size());
    const std::size_t n_cols = dim_pow(morphism.source.size());

    Matrix<R> result(static_cast<int>(n_rows), static_cast<int>(n_cols));
    std::vector<int> tgt_digits(morphism.target.size()), src_digits(morphism.source.size());
    for (std::size_t row = 0; row < n_rows; ++row) {
        // left-major digits: slot 0 is the most significant
        std::size_t acc_r = row;
        for (std::size_t i = morphism.target.size(); i-- > 0;) {
            tgt_digits[i] = static_cast<int>(acc_r % n);
            acc_r /= n;
        }
        for (std::size_t col = 0; col < n_cols; ++col) {
            std::size_t acc_c = col;
            for (std::size_t i = morphism.source.size(); i-- > 0;) {
                src_digits[i] = static_cast<int>(acc_c % n);
                acc_c /= n;
            }
            auto digit = [&](const Slot& s) {
                return s.top ? tgt_digits[s.index] : src_digits[s.index];
            };
            R value = scalar;
            for (const auto& part : open) {
                switch (part.shape) {
                    case OpenPart::Shape::arc:
                        value = value * part.table.at(digit(part.a), digit(part.b));
                        break;
                    case OpenPart::Shape::outer_head:
                        value = value * part.table.at(digit(part.a), 0);
                        break;
                    case OpenPart::Shape::outer_tail:
                        value = value * part.table.at(0, digit(part.a));
                        break;
                }
            }
            result.at(static_cast<int>(row), static_cast<int>(col)) = value;
        }
    }
    return result;
}

struct CorrespondenceReport {
    bool ok = true;
    long words_checked = 0;
    std::string counterexample;  // meaningful when !ok

    std::string json() const {
        std::string out = "{\"status\": \"";
        out += ok ? "ok" : "mismatch";
        out += "\", \"words_checked\": " + std::to_string(words_checked);
        if (!ok) out += ", \"counterexample\": \"" + counterexample + "\"";
        out += "}";
        return out;
    }
};

/// Verifies floating-interval evaluation against subset-simulation
/// acceptance for every word of length <= max_len, in shortlex order.
/// Stops at the first mismatch.
inline CorrespondenceReport check_data_against_nfa(const TqftData<Bool>& d, const Nfa& nfa,
                                                   int max_len, int threads = 1) {
    CorrespondenceReport report;
    struct Item {
        std::string word;
        Matrix<Bool> vec;  // word_operator(prefix) * v0
    };
    std::vector<Item> level{{"", d.v0}};
    for (int len = 0; len <= max_len && report.ok; ++len) {
        auto process = [&](std::size_t lo, std::size_t hi) {
            std::pair<bool, std::string> bad{false, ""};
            for (std::size_t i = lo; i < hi && !bad.first; ++i) {
                bool tq = compose(d.vstar, level[i].vec).at(0, 0).v;
                if (tq != accepts(nfa, level[i].word)) bad = {true, level[i].word};
            }
            return bad;
        };
        int usable = threads > 1 ? threads : 1;
        std::vector<std::future<std::pair<bool, std::string>>> futures;
        std::size_t chunk = (level.size() + usable - 1) / usable;
        for (std::size_t lo = 0; lo < level.size(); lo += chunk)
            futures.push_back(std::async(usable > 1 ? std::launch::async : std::launch::deferred,
                                         process, lo, std::min(lo + chunk, level.size())));
        for (auto& f : futures) {
            auto [found, word] = f.get();
            if (found && report.ok) {
                report.ok = false;
                report.counterexample = word;
            }
        }
        report.words_checked += static_cast<long>(level.size());
        if (!report.ok || len == max_len) break;

        std::vector<Item> next;
        next.reserve(level.size() * d.alphabet.size());
        for (const auto& item : level)
            for (char a : d.alphabet)
                next.push_back({item.word + a, compose(d.letter_matrix(a), item.vec)});
        level = std::move(next);
    }
    return report;
}

inline CorrespondenceReport check_correspondence(const Nfa& nfa, int max_len, int threads = 1) {
    return check_data_against_nfa(from_automaton(nfa), nfa, max_len, threads);
}

}  // namespace tqft
