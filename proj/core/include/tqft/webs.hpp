/*
 * Structural resolutions of crossings between strands of arbitrary
 * thickness into ladder webs. The output is a formal sum: for thicknesses
 * (a, b) the terms range over k from max(0, a-b) to a, each carrying a
 * signed power of q and a two-rung ladder whose edge labels satisfy the
 * flow condition at every trivalent vertex. Webs are emitted as data only;
 * no numerical web evaluation is attempted.
 */

#pragma once

#include <string>
#include <vector>

#include "tqft/laurent.hpp"

namespace tqft {

struct WebVertex {
    std::vector<std::string> in, out;  // edge names
};

/// Two vertical strands joined by a bottom rung (label k, right to left)
/// and a top rung (label b+k-a, left to right). Boundary labels read
/// (b, a) at the bottom and (a, b) at the top.
struct LadderWeb {
    int a = 0, b = 0, k = 0;
    std::vector<std::pair<std::string, int>> edges;  // name -> thickness
    std::vector<WebVertex> vertices;

    int edge_label(const std::string& name) const;
    /// Every vertex satisfies sum(in) == sum(out).
    bool flow_ok() const;
};

struct WebResolution {
    int a = 0, b = 0;
    int sign = +1;
    struct Term {
        int k;
        Laurent coeff;
        LadderWeb web;
    };
    std::vector<Term> terms;

    std::string json() const;
};

/// The formal crossing resolution for strand thicknesses a, b >= 1 and the
/// given crossing sign: coefficients are (-1)^(k-a) q^(a-k) for positive
/// crossings and (-1)^(a-k) q^(k-a) for negative ones.
WebResolution resolve_crossing_general(int a, int b, int sign);

}  // namespace tqft
