/*
 * Nondeterministic finite automata with powerset-valued transitions,
 * classical acceptance, regex compilation, and extraction of the matrix
 * data (transition matrices, initial vector, accepting covector) that
 * drives TQFT evaluation.
 *
 * Matrix convention: column j of transition_matrix(a) is the indicator of
 * delta(a, q_j) -- the column-as-image convention.
 */

#pragma once

#include <string>
#include <vector>

#include "tqft/matrix.hpp"
#include "tqft/regex.hpp"
#include "tqft/semiring.hpp"

namespace tqft {

using Word = std::string;

struct Nfa {
    std::vector<std::string> states;
    std::vector<char> alphabet;
    /// delta[letter][state] = sorted list of target state indices.
    /// Total on alphabet x states; empty targets are allowed.
    std::vector<std::vector<std::vector<int>>> delta;
    std::vector<int> initial;    // sorted state indices
    std::vector<int> accepting;  // sorted state indices

    int size() const { return static_cast<int>(states.size()); }
    /// Index of a letter in the alphabet; throws on unknown letters.
    int letter_index(char a) const;
    /// Structural sanity: delta shape, index ranges, sortedness.
    void validate() const;
};

bool accepts(const Nfa& nfa, const Word& w);

/// True iff some state admits a directed cycle whose labels read w.
/// The word must be nonempty.
bool has_cycle_labeled(const Nfa& nfa, const Word& w);

Matrix<Bool> transition_matrix(const Nfa& nfa, char a);
Matrix<Bool> initial_vector(const Nfa& nfa);     // |Q| x 1 indicator column
Matrix<Bool> accepting_covector(const Nfa& nfa); // 1 x |Q| indicator row

/// Thompson construction followed by epsilon elimination; the result has
/// no epsilon transitions and accepts exactly the language of r.
Nfa compile_regex(const Regex& r);

std::string to_json(const Nfa& nfa);
Nfa nfa_from_json(const std::string& text);
std::string to_dot(const Nfa& nfa);

}  // namespace tqft
