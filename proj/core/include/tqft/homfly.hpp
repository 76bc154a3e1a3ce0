/*
 * HOMFLYPT polynomial by descending-diagram skein recursion.
 *
 * The two-variable invariant P satisfies a.P(L+) - a^-1.P(L-) = z.P(L0)
 * with P(unknot) = 1 in the reduced normalization; a k-component unlink
 * evaluates to ((a - a^-1)/z)^(k-1). The recursion orders components,
 * walks each from a base arc, and branches on the first crossing met on
 * its under-strand; switched diagrams keep the same traversal while
 * smoothed diagrams drop a crossing, so the recursion terminates.
 * Intermediate diagrams are simplified by crossing-removing R1/R2 moves
 * and memoized under a canonical arc relabelling.
 */

#pragma once

#include <random>
#include <unordered_map>

#include "tqft/laurent.hpp"
#include "tqft/pd.hpp"

namespace tqft {

/// (a - a^-1) * z^-1, the value of one extra unlink component.
TwoVar unlink_factor();

class HomflyEngine {
public:
    explicit HomflyEngine(long long max_nodes = 1'000'000) : budget_(max_nodes) {}

    /// Reduced two-variable invariant (unknot = 1). Throws BudgetError when
    /// the recursion exceeds the node budget.
    TwoVar reduced(const LinkDiagram& d);
    /// Same value computed with randomized component order and base points;
    /// used to exercise choice independence.
    TwoVar reduced_randomized(const LinkDiagram& d, std::mt19937& rng);

    long long nodes_used() const { return nodes_; }

private:
    struct Choices {
        std::vector<int> comp_order;
        std::vector<int> rotations;
    };

    TwoVar eval(const LinkDiagram& d, const Choices* inherited, std::mt19937* rng);
    Choices make_choices(const std::vector<std::vector<int>>& comps, std::mt19937* rng) const;

    std::unordered_map<std::string, TwoVar> memo_;
    long long budget_;
    long long nodes_ = 0;
};

struct HomflyOptions {
    bool unreduced = false;          // multiply by (a - a^-1)/z
    long long max_nodes = 1'000'000;
};

TwoVar homfly(const LinkDiagram& d, const HomflyOptions& opts = {});

/// Substitute a = q^N, z = q - q^-1. Negative z-powers are cleared first
/// and divided back out exactly. With unreduced set the result is
/// multiplied by [N]; N = 0 is rejected there since [0] = 0 collapses the
/// unreduced invariant.
Laurent specialize(const TwoVar& p, int N, bool unreduced = false);

}  // namespace tqft
