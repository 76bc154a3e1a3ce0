#include "tqft/nfa.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "tqft/errors.hpp"

namespace tqft {

int Nfa::letter_index(char a) const {
    for (std::size_t i = 0; i < alphabet.size(); ++i)
        if (alphabet[i] == a) return static_cast<int>(i);
    throw std::invalid_argument(std::string("letter '") + a + "' not in alphabet");
}

void Nfa::validate() const {
    if (delta.size() != alphabet.size())
        throw std::invalid_argument("Nfa: delta must have one table per letter");
    auto check_set = [&](const std::vector<int>& s, const char* what) {
        if (!std::is_sorted(s.begin(), s.end()) ||
            std::adjacent_find(s.begin(), s.end()) != s.end())
            throw std::invalid_argument(std::string("Nfa: ") + what + " not a sorted set");
        for (int q : s)
            if (q < 0 || q >= size())
                throw std::invalid_argument(std::string("Nfa: ") + what + " index out of range");
    };
    for (const auto& table : delta) {
        if (static_cast<int>(table.size()) != size())
            throw std::invalid_argument("Nfa: delta table has wrong state count");
        for (const auto& targets : table) check_set(targets, "delta target");
    }
    check_set(initial, "initial");
    check_set(accepting, "accepting");
    std::set<std::string> names(states.begin(), states.end());
    if (static_cast<int>(names.size()) != size())
        throw std::invalid_argument("Nfa: duplicate state names");
}

namespace {

std::vector<char> step(const Nfa& nfa, const std::vector<char>& current, int letter) {
    std::vector<char> next(nfa.size(), 0);
    for (int q = 0; q < nfa.size(); ++q) {
        if (!current[q]) continue;
        for (int t : nfa.delta[letter][q]) next[t] = 1;
    }
    return next;
}

}  // namespace

bool accepts(const Nfa& nfa, const Word& w) {
    std::vector<char> cur(nfa.size(), 0);
    for (int q : nfa.initial) cur[q] = 1;
    for (char a : w) cur = step(nfa, cur, nfa.letter_index(a));
    for (int q : nfa.accepting)
        if (cur[q]) return true;
    return false;
}

bool has_cycle_labeled(const Nfa& nfa, const Word& w) {
    if (w.empty()) throw std::invalid_argument("has_cycle_labeled: empty word");
    std::vector<int> letters;
    for (char a : w) letters.push_back(nfa.letter_index(a));
    for (int q = 0; q < nfa.size(); ++q) {
        std::vector<char> cur(nfa.size(), 0);
        cur[q] = 1;
        for (int li : letters) cur = step(nfa, cur, li);
        if (cur[q]) return true;
    }
    return false;
}

Matrix<Bool> transition_matrix(const Nfa& nfa, char a) {
    int li = nfa.letter_index(a);
    Matrix<Bool> m(nfa.size(), nfa.size());
    for (int j = 0; j < nfa.size(); ++j)
        for (int t : nfa.delta[li][j]) m.at(t, j) = Bool::one();
    return m;
}

Matrix<Bool> initial_vector(const Nfa& nfa) {
    Matrix<Bool> m(nfa.size(), 1);
    for (int q : nfa.initial) m.at(q, 0) = Bool::one();
    return m;
}

Matrix<Bool> accepting_covector(const Nfa& nfa) {
    Matrix<Bool> m(1, nfa.size());
    for (int q : nfa.accepting) m.at(0, q) = Bool::one();
    return m;
}

namespace {

// Thompson fragments over an epsilon-NFA under construction.
struct EpsNfa {
    int n = 0;
    std::vector<std::vector<int>> eps;                 // eps[q] = eps targets
    std::map<std::pair<char, int>, std::vector<int>> move;

    int fresh() {
        eps.emplace_back();
        return n++;
    }
    void add_eps(int from, int to) { eps[from].push_back(to); }
    void add_move(int from, char a, int to) { move[{a, from}].push_back(to); }
};

struct Frag {
    int start, accept;
};

Frag build(const Regex& r, EpsNfa& e) {
    switch (r.kind) {
        case Regex::Kind::empty: {
            Frag f{e.fresh(), e.fresh()};
            return f;  // no path from start to accept
        }
        case Regex::Kind::epsilon: {
            Frag f{e.fresh(), e.fresh()};
            e.add_eps(f.start, f.accept);
            return f;
        }
        case Regex::Kind::letter: {
            Frag f{e.fresh(), e.fresh()};
            e.add_move(f.start, r.letter, f.accept);
            return f;
        }
        case Regex::Kind::concat: {
            Frag a = build(*r.left, e);
            Frag b = build(*r.right, e);
            e.add_eps(a.accept, b.start);
            return {a.start, b.accept};
        }
        case Regex::Kind::alt: {
            Frag a = build(*r.left, e);
            Frag b = build(*r.right, e);
            Frag f{e.fresh(), e.fresh()};
            e.add_eps(f.start, a.start);
            e.add_eps(f.start, b.start);
            e.add_eps(a.accept, f.accept);
            e.add_eps(b.accept, f.accept);
            return f;
        }
        case Regex::Kind::star: {
            Frag a = build(*r.left, e);
            Frag f{e.fresh(), e.fresh()};
            e.add_eps(f.start, f.accept);
            e.add_eps(f.start, a.start);
            e.add_eps(a.accept, a.start);
            e.add_eps(a.accept, f.accept);
            return f;
        }
    }
    throw std::logic_error("build: unreachable");
}

std::vector<int> eps_closure(const EpsNfa& e, int q) {
    std::vector<char> seen(e.n, 0);
    std::vector<int> stack{q}, out;
    seen[q] = 1;
    while (!stack.empty()) {
        int s = stack.back();
        stack.pop_back();
        out.push_back(s);
        for (int t : e.eps[s])
            if (!seen[t]) {
                seen[t] = 1;
                stack.push_back(t);
            }
    }
    std::sort(out.begin(), out.end());
    return out;
}

void collect_letters(const Regex& r, std::set<char>& out) {
    switch (r.kind) {
        case Regex::Kind::letter:
            out.insert(r.letter);
            break;
        case Regex::Kind::star:
            collect_letters(*r.left, out);
            break;
        case Regex::Kind::concat:
        case Regex::Kind::alt:
            collect_letters(*r.left, out);
            collect_letters(*r.right, out);
            break;
        default:
            break;
    }
}

}  // namespace

Nfa compile_regex(const Regex& r) {
    EpsNfa e;
    Frag f = build(r, e);

    std::set<char> letters;
    collect_letters(r, letters);

    // Epsilon elimination: delta'(a, q) = closure(move(a, closure(q))),
    // accepting' = { q : closure(q) hits the Thompson accept state }.
    std::vector<std::vector<int>> closure(e.n);
    for (int q = 0; q < e.n; ++q) closure[q] = eps_closure(e, q);

    Nfa nfa;
    nfa.alphabet.assign(letters.begin(), letters.end());
    std::vector<std::vector<std::vector<int>>> full_delta(
        nfa.alphabet.size(), std::vector<std::vector<int>>(e.n));
    std::vector<char> is_accepting(e.n, 0);
    for (int q = 0; q < e.n; ++q) {
        for (int p : closure[q]) {
            if (p == f.accept) is_accepting[q] = 1;
            for (std::size_t li = 0; li < nfa.alphabet.size(); ++li) {
                auto it = e.move.find({nfa.alphabet[li], p});
                if (it == e.move.end()) continue;
                for (int t : it->second)
                    for (int u : closure[t]) full_delta[li][q].push_back(u);
            }
        }
        for (auto& targets : full_delta)
            if (!targets[q].empty()) {
                std::sort(targets[q].begin(), targets[q].end());
                targets[q].erase(std::unique(targets[q].begin(), targets[q].end()),
                                 targets[q].end());
            }
    }

    // Keep only states reachable from the start; renumber densely.
    std::vector<int> index(e.n, -1);
    std::vector<int> order;
    std::vector<int> stack{f.start};
    index[f.start] = 0;
    order.push_back(f.start);
    while (!stack.empty()) {
        int q = stack.back();
        stack.pop_back();
        for (const auto& targets : full_delta)
            for (int t : targets[q])
                if (index[t] < 0) {
                    index[t] = static_cast<int>(order.size());
                    order.push_back(t);
                    stack.push_back(t);
                }
    }

    for (std::size_t i = 0; i < order.size(); ++i)
        nfa.states.push_back("s" + std::to_string(i));
    nfa.delta.assign(nfa.alphabet.size(),
                     std::vector<std::vector<int>>(order.size()));
    for (std::size_t li = 0; li < nfa.alphabet.size(); ++li)
        for (std::size_t i = 0; i < order.size(); ++i) {
            for (int t : full_delta[li][order[i]])
                if (index[t] >= 0) nfa.delta[li][i].push_back(index[t]);
            std::sort(nfa.delta[li][i].begin(), nfa.delta[li][i].end());
        }
    nfa.initial = {0};
    for (std::size_t i = 0; i < order.size(); ++i)
        if (is_accepting[order[i]]) nfa.accepting.push_back(static_cast<int>(i));
    nfa.validate();
    return nfa;
}

std::string to_json(const Nfa& nfa) {
    nlohmann::ordered_json j;
    j["states"] = nfa.states;
    std::vector<std::string> alpha;
    for (char a : nfa.alphabet) alpha.emplace_back(1, a);
    j["alphabet"] = alpha;
    nlohmann::ordered_json d = nlohmann::ordered_json::object();
    for (std::size_t li = 0; li < nfa.alphabet.size(); ++li) {
        nlohmann::ordered_json per_state = nlohmann::ordered_json::object();
        for (int q = 0; q < nfa.size(); ++q) {
            if (nfa.delta[li][q].empty()) continue;
            std::vector<std::string> targets;
            for (int t : nfa.delta[li][q]) targets.push_back(nfa.states[t]);
            per_state[nfa.states[q]] = targets;
        }
        d[std::string(1, nfa.alphabet[li])] = per_state;
    }
    j["delta"] = d;
    std::vector<std::string> init, acc;
    for (int q : nfa.initial) init.push_back(nfa.states[q]);
    for (int q : nfa.accepting) acc.push_back(nfa.states[q]);
    j["initial"] = init;
    j["accepting"] = acc;
    return j.dump(2);
}

Nfa nfa_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("automaton JSON: ") + e.what());
    }
    Nfa nfa;
    try {
        nfa.states = j.at("states").get<std::vector<std::string>>();
        std::map<std::string, int> state_index;
        for (int q = 0; q < nfa.size(); ++q) state_index[nfa.states[q]] = q;
        auto lookup_state = [&](const std::string& name) {
            auto it = state_index.find(name);
            if (it == state_index.end()) throw ParseError("unknown state '" + name + "'");
            return it->second;
        };

        for (const auto& s : j.at("alphabet").get<std::vector<std::string>>()) {
            if (s.size() != 1) throw ParseError("alphabet letters must be single characters");
            nfa.alphabet.push_back(s[0]);
        }
        nfa.delta.assign(nfa.alphabet.size(), std::vector<std::vector<int>>(nfa.size()));
        if (j.contains("delta")) {
            for (const auto& [letter, per_state] : j.at("delta").items()) {
                if (letter.size() != 1) throw ParseError("bad delta letter '" + letter + "'");
                int li = nfa.letter_index(letter[0]);
                for (const auto& [state, targets] : per_state.items()) {
                    int q = lookup_state(state);
                    for (const auto& t : targets.get<std::vector<std::string>>())
                        nfa.delta[li][q].push_back(lookup_state(t));
                    std::sort(nfa.delta[li][q].begin(), nfa.delta[li][q].end());
                    nfa.delta[li][q].erase(
                        std::unique(nfa.delta[li][q].begin(), nfa.delta[li][q].end()),
                        nfa.delta[li][q].end());
                }
            }
        }
        for (const auto& s : j.at("initial").get<std::vector<std::string>>())
            nfa.initial.push_back(lookup_state(s));
        for (const auto& s : j.at("accepting").get<std::vector<std::string>>())
            nfa.accepting.push_back(lookup_state(s));
        std::sort(nfa.initial.begin(), nfa.initial.end());
        std::sort(nfa.accepting.begin(), nfa.accepting.end());
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("automaton JSON: ") + e.what());
    }
    nfa.validate();
    return nfa;
}

std::string to_dot(const Nfa& nfa) {
    std::ostringstream out;
    out << "digraph nfa {\n  rankdir=LR;\n  node [shape=circle];\n";
    for (int q : nfa.accepting)
        out << "  \"" << nfa.states[q] << "\" [shape=doublecircle];\n";
    for (std::size_t i = 0; i < nfa.initial.size(); ++i) {
        out << "  \"__start" << i << "\" [shape=point];\n";
        out << "  \"__start" << i << "\" -> \"" << nfa.states[nfa.initial[i]] << "\";\n";
    }
    for (std::size_t li = 0; li < nfa.alphabet.size(); ++li)
        for (int q = 0; q < nfa.size(); ++q)
            for (int t : nfa.delta[li][q])
                out << "  \"" << nfa.states[q] << "\" -> \"" << nfa.states[t]
                    << "\" [label=\"" << nfa.alphabet[li] << "\"];\n";
    out << "}\n";
    return out.str();
}

}  // namespace tqft
