/*
 * Quasi-automata: TQFT data valued in non-free projective Boolean modules,
 * realized as the union-closed lattice of open sets of a finite topological
 * space. Transition maps send opens to opens preserving the empty set and
 * unions; the terminal map is additive into the Boolean semiring.
 *
 * Ground sets are capped at 31 elements so opens fit in a bitmask word.
 */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tqft/nfa.hpp"

namespace tqft {

struct OpenSetLattice {
    std::vector<std::string> ground;   // element names; bit i <-> ground[i]
    std::vector<std::uint32_t> opens;  // sorted, distinct bitmasks

    int size() const { return static_cast<int>(opens.size()); }
    std::uint32_t full_mask() const {
        return ground.empty() ? 0u : (ground.size() >= 32 ? ~0u : (1u << ground.size()) - 1u);
    }
    /// Index of a mask in opens, or -1.
    int find_open(std::uint32_t mask) const;
    /// Indices of the join-irreducible opens (nonempty, not a union of
    /// strictly smaller opens).
    std::vector<int> join_irreducibles() const;
};

struct QuasiAutomaton {
    OpenSetLattice lattice;
    std::vector<char> alphabet;
    /// delta[letter][open index] = open index of the image.
    std::vector<std::vector<int>> delta;
    int initial = 0;              // open index
    std::vector<char> terminal;   // 0/1 per open index

    int letter_index(char a) const;
};

struct QuasiReport {
    bool ok = true;
    std::vector<std::string> violations;
    std::string json() const;
};

/// Exhaustively checks the lattice axioms, union preservation of every
/// delta, and additivity of the terminal map.
QuasiReport validate(const QuasiAutomaton& qa);

bool evaluate_word(const QuasiAutomaton& qa, const Word& w);

struct RetractPair {
    bool found = false;
    /// iota[open index] = subset of the free basis, as a bitmask.
    std::vector<std::uint32_t> iota;
    /// p_basis[t] = open index assigned to basis vector t; p extends by unions.
    std::vector<int> p_basis;
};

/// Searches for union-preserving maps iota: opens -> B^n and p: B^n -> opens
/// with p(iota(U)) = U for every open U. Throws BudgetError when the
/// bounded exhaustive search space exceeds the budget.
RetractPair retract_check(const OpenSetLattice& lattice, int n, long long budget = 20'000'000);

/// The discrete-topology quasi-automaton of an NFA: opens are all subsets
/// of the state set, transitions are the subset images, terminal tests
/// intersection with the accepting set.
QuasiAutomaton discrete_from_nfa(const Nfa& nfa);

std::string to_json(const QuasiAutomaton& qa);
QuasiAutomaton quasi_from_json(const std::string& text);

}  // namespace tqft
