#include "tqft/quasi.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

#include "tqft/errors.hpp"

namespace tqft {

int OpenSetLattice::find_open(std::uint32_t mask) const {
    auto it = std::lower_bound(opens.begin(), opens.end(), mask);
    if (it == opens.end() || *it != mask) return -1;
    return static_cast<int>(it - opens.begin());
}

std::vector<int> OpenSetLattice::join_irreducibles() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i) {
        if (opens[i] == 0) continue;
        std::uint32_t join = 0;
        for (int j = 0; j < size(); ++j)
            if (opens[j] != opens[i] && (opens[j] & ~opens[i]) == 0) join |= opens[j];
        if (join != opens[i]) out.push_back(i);
    }
    return out;
}

int QuasiAutomaton::letter_index(char a) const {
    for (std::size_t i = 0; i < alphabet.size(); ++i)
        if (alphabet[i] == a) return static_cast<int>(i);
    throw std::invalid_argument(std::string("letter '") + a + "' not in alphabet");
}

QuasiReport validate(const QuasiAutomaton& qa) {
    QuasiReport r;
    auto violation = [&](std::string msg) {
        r.ok = false;
        r.violations.push_back(std::move(msg));
    };
    const auto& L = qa.lattice;
    if (L.ground.size() > 31) {
        violation("ground set too large for bitmask representation");
        return r;
    }
    if (!std::is_sorted(L.opens.begin(), L.opens.end()) ||
        std::adjacent_find(L.opens.begin(), L.opens.end()) != L.opens.end())
        violation("opens not a sorted set of distinct masks");
    if (L.find_open(0) < 0) violation("opens missing the empty set");
    if (L.find_open(L.full_mask()) < 0) violation("opens missing the whole space");
    for (int i = 0; i < L.size(); ++i)
        for (int j = i; j < L.size(); ++j) {
            if (L.find_open(L.opens[i] | L.opens[j]) < 0)
                violation("opens not closed under union: " + std::to_string(i) + "," +
                          std::to_string(j));
            if (L.find_open(L.opens[i] & L.opens[j]) < 0)
                violation("opens not closed under intersection: " + std::to_string(i) + "," +
                          std::to_string(j));
        }

    if (qa.delta.size() != qa.alphabet.size())
        violation("delta must have one table per letter");
    int zero = L.find_open(0);
    for (std::size_t li = 0; li < qa.delta.size(); ++li) {
        const auto& table = qa.delta[li];
        std::string letter(1, li < qa.alphabet.size() ? qa.alphabet[li] : '?');
        if (static_cast<int>(table.size()) != L.size()) {
            violation("delta[" + letter + "] has wrong size");
            continue;
        }
        for (int v : table)
            if (v < 0 || v >= L.size()) {
                violation("delta[" + letter + "] has out-of-range image");
                return r;
            }
        if (zero >= 0 && table[zero] != zero)
            violation("delta[" + letter + "] does not fix the empty set");
        for (int i = 0; i < L.size(); ++i)
            for (int j = i + 1; j < L.size(); ++j) {
                int u = L.find_open(L.opens[i] | L.opens[j]);
                if (u < 0) continue;
                std::uint32_t image_union = L.opens[table[i]] | L.opens[table[j]];
                if (L.opens[table[u]] != image_union)
                    violation("delta[" + letter + "] does not preserve union of opens " +
                              std::to_string(i) + "," + std::to_string(j));
            }
    }

    if (static_cast<int>(qa.terminal.size()) != L.size()) {
        violation("terminal table has wrong size");
        return r;
    }
    if (zero >= 0 && qa.terminal[zero])
        violation("terminal does not vanish on the empty set");
    for (int i = 0; i < L.size(); ++i)
        for (int j = i + 1; j < L.size(); ++j) {
            int u = L.find_open(L.opens[i] | L.opens[j]);
            if (u < 0) continue;
            bool lhs = qa.terminal[u] != 0;
            bool rhs = (qa.terminal[i] != 0) || (qa.terminal[j] != 0);
            if (lhs != rhs)
                violation("terminal not additive on opens " + std::to_string(i) + "," +
                          std::to_string(j));
        }
    if (qa.initial < 0 || qa.initial >= L.size()) violation("initial open out of range");
    return r;
}

bool evaluate_word(const QuasiAutomaton& qa, const Word& w) {
    int cur = qa.initial;
    for (char a : w) cur = qa.delta[qa.letter_index(a)][cur];
    return qa.terminal[cur] != 0;
}

RetractPair retract_check(const OpenSetLattice& lattice, int n, long long budget) {
    if (n < 0 || n > 20) throw std::invalid_argument("retract_check: bad rank");
    const int n_opens = lattice.size();
    const std::uint32_t n_subsets = 1u << n;
    std::vector<int> irr = lattice.join_irreducibles();

    // iota is determined by its values on join-irreducibles (the lattice is
    // distributive, so extension by joins is automatically additive);
    // p is determined freely on the n basis vectors.
    long long iota_space = 1, p_space = 1;
    for (std::size_t i = 0; i < irr.size(); ++i) {
        if (iota_space > budget / n_subsets)
            throw BudgetError("retract_check: search budget exceeded");
        iota_space *= n_subsets;
    }
    for (int t = 0; t < n; ++t) {
        if (p_space > budget / n_opens)
            throw BudgetError("retract_check: search budget exceeded");
        p_space *= n_opens;
    }
    if (iota_space > budget / p_space)
        throw BudgetError("retract_check: search budget exceeded");

    std::vector<std::uint32_t> iota_of_irr(irr.size(), 0);
    std::vector<int> p_basis(n, 0);
    RetractPair result;

    std::vector<std::uint32_t> iota(n_opens, 0);
    auto build_iota = [&]() {
        for (int u = 0; u < n_opens; ++u) {
            std::uint32_t img = 0;
            for (std::size_t k = 0; k < irr.size(); ++k)
                if ((lattice.opens[irr[k]] & ~lattice.opens[u]) == 0) img |= iota_of_irr[k];
            iota[u] = img;
        }
    };

    for (long long ci = 0; ci < iota_space; ++ci) {
        long long acc = ci;
        for (std::size_t k = 0; k < irr.size(); ++k) {
            iota_of_irr[k] = static_cast<std::uint32_t>(acc % n_subsets);
            acc /= n_subsets;
        }
        build_iota();
        for (long long cp = 0; cp < p_space; ++cp) {
            long long pa = cp;
            for (int t = 0; t < n; ++t) {
                p_basis[t] = static_cast<int>(pa % n_opens);
                pa /= n_opens;
            }
            bool ok = true;
            for (int u = 0; u < n_opens && ok; ++u) {
                std::uint32_t mask = 0;
                for (int t = 0; t < n; ++t)
                    if (iota[u] & (1u << t)) mask |= lattice.opens[p_basis[t]];
                ok = mask == lattice.opens[u];
            }
            if (ok) {
                result.found = true;
                result.iota = iota;
                result.p_basis = p_basis;
                return result;
            }
        }
    }
    return result;
}

QuasiAutomaton discrete_from_nfa(const Nfa& nfa) {
    if (nfa.size() > 20)
        throw std::invalid_argument("discrete_from_nfa: too many states for the powerset lattice");
    QuasiAutomaton qa;
    qa.lattice.ground = nfa.states;
    const std::uint32_t n_subsets = 1u << nfa.size();
    for (std::uint32_t s = 0; s < n_subsets; ++s) qa.lattice.opens.push_back(s);
    qa.alphabet = nfa.alphabet;

    std::vector<std::vector<std::uint32_t>> point_image(nfa.alphabet.size(),
                                                        std::vector<std::uint32_t>(nfa.size(), 0));
    for (std::size_t li = 0; li < nfa.alphabet.size(); ++li)
        for (int q = 0; q < nfa.size(); ++q)
            for (int t : nfa.delta[li][q]) point_image[li][q] |= 1u << t;

    qa.delta.assign(nfa.alphabet.size(), std::vector<int>(n_subsets, 0));
    for (std::size_t li = 0; li < nfa.alphabet.size(); ++li)
        for (std::uint32_t s = 0; s < n_subsets; ++s) {
            std::uint32_t img = 0;
            for (int q = 0; q < nfa.size(); ++q)
                if (s & (1u << q)) img |= point_image[li][q];
            qa.delta[li][s] = static_cast<int>(img);  // opens are identity-indexed here
        }

    std::uint32_t init = 0, acc = 0;
    for (int q : nfa.initial) init |= 1u << q;
    for (int q : nfa.accepting) acc |= 1u << q;
    qa.initial = static_cast<int>(init);
    qa.terminal.assign(n_subsets, 0);
    for (std::uint32_t s = 0; s < n_subsets; ++s) qa.terminal[s] = (s & acc) ? 1 : 0;
    return qa;
}

std::string QuasiReport::json() const {
    nlohmann::ordered_json j;
    j["status"] = ok ? "valid" : "invalid";
    j["violations"] = violations;
    return j.dump(2);
}

std::string to_json(const QuasiAutomaton& qa) {
    nlohmann::ordered_json j;
    j["ground"] = qa.lattice.ground;
    auto open_list = [&](std::uint32_t mask) {
        std::vector<std::string> elems;
        for (std::size_t i = 0; i < qa.lattice.ground.size(); ++i)
            if (mask & (1u << i)) elems.push_back(qa.lattice.ground[i]);
        return elems;
    };
    j["opens"] = nlohmann::ordered_json::array();
    for (std::uint32_t m : qa.lattice.opens) j["opens"].push_back(open_list(m));
    j["delta"] = nlohmann::ordered_json::object();
    for (std::size_t li = 0; li < qa.alphabet.size(); ++li)
        j["delta"][std::string(1, qa.alphabet[li])] = qa.delta[li];
    j["initial"] = qa.initial;
    std::vector<int> term(qa.terminal.begin(), qa.terminal.end());
    j["terminal"] = term;
    return j.dump(2);
}

QuasiAutomaton quasi_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("quasi-automaton JSON: ") + e.what());
    }
    QuasiAutomaton qa;
    try {
        qa.lattice.ground = j.at("ground").get<std::vector<std::string>>();
        if (qa.lattice.ground.size() > 31) throw ParseError("ground set too large");
        std::map<std::string, int> elem_index;
        for (std::size_t i = 0; i < qa.lattice.ground.size(); ++i)
            elem_index[qa.lattice.ground[i]] = static_cast<int>(i);
        for (const auto& open : j.at("opens")) {
            std::uint32_t mask = 0;
            for (const auto& name : open.get<std::vector<std::string>>()) {
                auto it = elem_index.find(name);
                if (it == elem_index.end()) throw ParseError("unknown element '" + name + "'");
                mask |= 1u << it->second;
            }
            qa.lattice.opens.push_back(mask);
        }
        if (!std::is_sorted(qa.lattice.opens.begin(), qa.lattice.opens.end()))
            std::sort(qa.lattice.opens.begin(), qa.lattice.opens.end());
        for (const auto& [letter, table] : j.at("delta").items()) {
            if (letter.size() != 1) throw ParseError("bad delta letter '" + letter + "'");
            qa.alphabet.push_back(letter[0]);
            qa.delta.push_back(table.get<std::vector<int>>());
        }
        qa.initial = j.at("initial").get<int>();
        for (int v : j.at("terminal").get<std::vector<int>>())
            qa.terminal.push_back(v ? 1 : 0);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("quasi-automaton JSON: ") + e.what());
    }
    return qa;
}

}  // namespace tqft
