/*
 * Oriented link diagrams in a PD-like combinatorial form.
 *
 * A crossing stores the four incident arcs by role: the under-strand enters
 * at under_in and leaves at under_out, the over-strand at over_in/over_out.
 * sign is +1 for a positive crossing (right-hand rule), -1 for negative.
 * Arcs are integer labels; each arc is produced by exactly one crossing
 * port and consumed by exactly one. Crossing-free unknot components are
 * counted separately in free_loops.
 *
 * Text input uses the standard PD convention X[i,j,k,l]: the four arcs
 * counterclockwise starting from the incoming under-strand arc i (so the
 * under-strand runs i -> k). The over-strand direction is inferred from
 * global orientation consistency, falling back to consecutive arc
 * numbering for components that never pass under. A line "O" adds a
 * crossing-free unknot component; '#' starts a comment.
 */

#pragma once

#include <string>
#include <vector>

#include "tqft/errors.hpp"

namespace tqft {

struct Crossing {
    int under_in = 0, under_out = 0, over_in = 0, over_out = 0;
    int sign = +1;
};

struct LinkDiagram {
    std::vector<Crossing> crossings;
    int free_loops = 0;

    int writhe() const;
    bool empty() const { return crossings.empty() && free_loops == 0; }

    /// Partition of arcs into oriented components; each component lists its
    /// arcs in traversal order. Crossing-free loops are not included.
    std::vector<std::vector<int>> components() const;
    /// Total component count including free loops.
    int component_count() const { return static_cast<int>(components().size()) + free_loops; }

    /// Checks that every arc is produced once and consumed once.
    void validate() const;
};

LinkDiagram parse_pd(const std::string& text);
std::string pd_text(const LinkDiagram& d);

/// Swap over/under at crossing c (flips its sign).
LinkDiagram switch_crossing(const LinkDiagram& d, int c);
/// Replace crossing c by the oriented smoothing, re-fusing arcs; component
/// count is recomputed (it changes by one).
LinkDiagram smooth_crossing(const LinkDiagram& d, int c);

/// Disjoint union with arcs of d2 relabelled past those of d1.
LinkDiagram disjoint_union(const LinkDiagram& d1, const LinkDiagram& d2);

/// Closure of a braid word on `strands` strands. Letters are generator
/// indices 1..strands-1, negative for inverse crossings.
LinkDiagram braid_closure(int strands, const std::vector<int>& word);

/// Greedy reduction by crossing-removing Reidemeister I and II moves.
LinkDiagram simplify(const LinkDiagram& d);

/// Insert a kink on the given arc. `positive` picks the crossing sign and
/// `over_first` which pass of the strand is the over one.
LinkDiagram add_r1_kink(const LinkDiagram& d, int arc, bool positive, bool over_first);

/// Canonical encoding used as a memoization key: arcs renumbered along a
/// traversal, minimized over component order and per-component base arcs.
std::string canonical_key(const LinkDiagram& d);

}  // namespace tqft
