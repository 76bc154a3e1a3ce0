/*
 * The symmetric monoidal category of decorated oriented 1-dimensional
 * cobordisms with letter-labelled dot defects and inner endpoints.
 *
 * Objects are finite sequences of signs. A morphism from a source sequence
 * (bottom) to a target sequence (top) is a set of components, each an
 * oriented strand, covering every boundary slot exactly once:
 *
 *   - arcs have two outer endpoints,
 *   - half-intervals have one outer and one inner endpoint,
 *   - floating intervals have two inner endpoints,
 *   - circles are closed.
 *
 * Orientation is determined by the boundary signs: a strand begins (tail)
 * at a bottom + slot or a top - slot, and ends (head) at a top + slot or a
 * bottom - slot. Dot words are stored tail-to-head along the orientation;
 * circle words are cyclic and kept in their lexicographically least
 * rotation. Morphisms are abstract matchings: no planarity is imposed, so
 * transpositions are ordinary morphisms.
 */

#pragma once

#include <optional>
#include <string>
#include <vector>

namespace tqft {

enum class Sign { plus, minus };

using SignedSeq = std::vector<Sign>;

inline Sign opposite(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }

/// A boundary slot: bottom (source) index or top (target) index.
struct Slot {
    bool top = false;
    int index = 0;

    friend bool operator==(const Slot& a, const Slot& b) {
        return a.top == b.top && a.index == b.index;
    }
    std::string name() const { return (top ? "t" : "b") + std::to_string(index); }
};

enum class ComponentKind { arc, half_interval_in, half_interval_out, floating_interval, circle };

struct Component {
    std::optional<Slot> tail;  // orientation start; absent = inner endpoint
    std::optional<Slot> head;  // orientation end; absent = inner endpoint
    bool closed = false;       // circle
    std::string dots;          // letters along the orientation

    ComponentKind kind() const;
};

struct Morphism {
    SignedSeq source, target;
    std::vector<Component> components;

    /// Checks slot coverage and orientation compatibility; throws on violation.
    void validate() const;
    /// Canonical form: circle words rotated to their least representative,
    /// components sorted. Equality of morphisms is equality of canonical forms.
    Morphism canonical() const;

    friend bool operator==(const Morphism& a, const Morphism& b);
};

// Generators.
Morphism identity_morphism(const SignedSeq& s);
Morphism dotted_strand(Sign s, char letter);
/// cup(first): the morphism {} -> (first, opposite(first)) with one arc.
Morphism cup(Sign first);
/// cap(first): the morphism (first, opposite(first)) -> {} with one arc.
Morphism cap(Sign first);
Morphism transposition(Sign s0, Sign s1);
/// half_in(s): {} -> (s); half_out(s): (s) -> {}.
Morphism half_in(Sign s);
Morphism half_out(Sign s);

/// compose(top, bottom): bottom.target must equal top.source. Matched
/// endpoints are glued, dot words concatenate along orientation, and newly
/// closed loops become circles (or floating intervals when two inner
/// endpoints remain).
Morphism compose(const Morphism& top, const Morphism& bottom);
Morphism tensor(const Morphism& left, const Morphism& right);

struct ClosedPart {
    ComponentKind kind;  // circle or floating_interval
    std::string word;
};
std::vector<ClosedPart> closed_components(const Morphism& m);

/// Total multiset of dot letters, sorted (used by conservation checks).
std::string dot_multiset(const Morphism& m);

std::string to_json(const Morphism& m);
Morphism morphism_from_json(const std::string& text);

}  // namespace tqft
