// Batch command-line front end: automata, TQFT checks, cobordism
// evaluation, quasi-automata, skein polynomials and q-binomials.
//
// Exit codes: 0 success, 1 semantic failure (rejected word, equivalence
// mismatch, failed validation), 2 input error, 3 resource budget exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tqft/errors.hpp"
#include "tqft/homfly.hpp"
#include "tqft/nfa.hpp"
#include "tqft/quasi.hpp"
#include "tqft/tqft.hpp"
#include "tqft/webs.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSemantic = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw tqft::ParseError("cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int thread_cap() {
    const char* env = std::getenv("TQFT_THREADS");
    if (!env) return 1;
    int n = std::atoi(env);
    return n < 1 ? 1 : n;
}

tqft::Nfa load_nfa(const std::string& regex_text, const std::string& json_path) {
    if (!regex_text.empty() && !json_path.empty())
        throw tqft::ParseError("give either --regex or --json, not both");
    if (!regex_text.empty()) return tqft::compile_regex(tqft::parse_regex(regex_text));
    if (!json_path.empty()) return tqft::nfa_from_json(slurp(json_path));
    throw tqft::ParseError("an automaton is required (--regex or --json)");
}

// Integer 0/1 data counting accepting paths of the machine.
tqft::TqftData<tqft::Integer> integer_data(const tqft::Nfa& nfa) {
    std::map<char, tqft::Matrix<tqft::Integer>> maps;
    for (std::size_t li = 0; li < nfa.alphabet.size(); ++li) {
        tqft::Matrix<tqft::Integer> m(nfa.size(), nfa.size());
        for (int q = 0; q < nfa.size(); ++q)
            for (int t : nfa.delta[li][q]) m.at(t, q) = tqft::Integer::one();
        maps.emplace(nfa.alphabet[li], std::move(m));
    }
    tqft::Matrix<tqft::Integer> v0(nfa.size(), 1), vstar(1, nfa.size());
    for (int q : nfa.initial) v0.at(q, 0) = tqft::Integer::one();
    for (int q : nfa.accepting) vstar.at(0, q) = tqft::Integer::one();
    return tqft::from_generic(nfa.alphabet, nfa.size(), std::move(maps), std::move(v0),
                              std::move(vstar));
}

// Tropical data with unit edge weights: value is the shortest accepting
// path length.
tqft::TqftData<tqft::Tropical> tropical_data(const tqft::Nfa& nfa) {
    std::map<char, tqft::Matrix<tqft::Tropical>> maps;
    for (std::size_t li = 0; li < nfa.alphabet.size(); ++li) {
        tqft::Matrix<tqft::Tropical> m(nfa.size(), nfa.size());
        for (int q = 0; q < nfa.size(); ++q)
            for (int t : nfa.delta[li][q]) m.at(t, q) = tqft::Tropical::of(1);
        maps.emplace(nfa.alphabet[li], std::move(m));
    }
    tqft::Matrix<tqft::Tropical> v0(nfa.size(), 1), vstar(1, nfa.size());
    for (int q : nfa.initial) v0.at(q, 0) = tqft::Tropical::one();
    for (int q : nfa.accepting) vstar.at(0, q) = tqft::Tropical::one();
    return tqft::from_generic(nfa.alphabet, nfa.size(), std::move(maps), std::move(v0),
                              std::move(vstar));
}

template <tqft::Semiring R>
nlohmann::ordered_json word_table(const tqft::TqftData<R>& data,
                                  const std::vector<char>& alphabet, int max_len) {
    nlohmann::ordered_json table = nlohmann::ordered_json::object();
    std::vector<std::string> level{""};
    for (int len = 0; len <= max_len; ++len) {
        for (const auto& w : level)
            table[w] =
                evaluate_closed(data, tqft::ComponentKind::floating_interval, w).text();
        if (len == max_len) break;
        std::vector<std::string> next;
        for (const auto& w : level)
            for (char a : alphabet) next.push_back(w + a);
        level = std::move(next);
    }
    return table;
}

int cmd_nfa(const std::string& regex_text, const std::string& json_path, bool print_json,
            bool print_dot, const std::vector<std::string>& accept_words,
            const std::vector<std::string>& reject_words) {
    tqft::Nfa nfa = load_nfa(regex_text, json_path);
    if (print_json) std::cout << tqft::to_json(nfa) << "\n";
    if (print_dot) std::cout << tqft::to_dot(nfa);
    bool all_ok = true;
    for (const auto& w : accept_words) {
        bool got = tqft::accepts(nfa, w);
        std::cout << (got ? "accept" : "reject") << " " << w << "\n";
        if (!got) all_ok = false;
    }
    for (const auto& w : reject_words) {
        bool got = tqft::accepts(nfa, w);
        std::cout << (got ? "accept" : "reject") << " " << w << "\n";
        if (got) all_ok = false;
    }
    return all_ok ? kExitOk : kExitSemantic;
}

int cmd_tqft_check(const std::string& regex_text, const std::string& json_path, int max_len,
                   const std::string& semiring, const std::string& against_regex,
                   const std::string& against_json) {
    tqft::Nfa nfa = load_nfa(regex_text, json_path);
    if (semiring == "boolean") {
        // By default the machine is checked against itself; --against-*
        // compares its TQFT data to another machine's acceptance.
        tqft::Nfa reference = against_regex.empty() && against_json.empty()
                                  ? nfa
                                  : load_nfa(against_regex, against_json);
        auto report = tqft::check_data_against_nfa(tqft::from_automaton(nfa), reference,
                                                   max_len, thread_cap());
        std::cout << report.json() << "\n";
        return report.ok ? kExitOk : kExitSemantic;
    }
    nlohmann::ordered_json out;
    out["semiring"] = semiring;
    if (semiring == "integer") {
        out["values"] = word_table(integer_data(nfa), nfa.alphabet, max_len);
    } else if (semiring == "tropical") {
        out["values"] = word_table(tropical_data(nfa), nfa.alphabet, max_len);
    } else {
        throw tqft::ParseError("unknown semiring '" + semiring + "'");
    }
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

int cmd_eval(const std::string& morphism_path, const std::string& regex_text,
             const std::string& json_path, const std::string& semiring) {
    tqft::Morphism m = tqft::morphism_from_json(slurp(morphism_path));
    tqft::Nfa nfa = load_nfa(regex_text, json_path);
    auto print_result = [&](const auto& matrix) {
        if (matrix.rows() == 1 && matrix.cols() == 1)
            std::cout << matrix.at(0, 0).text() << "\n";
        else
            std::cout << matrix.json() << "\n";
    };
    if (semiring == "boolean")
        print_result(evaluate(tqft::from_automaton(nfa), m));
    else if (semiring == "integer")
        print_result(evaluate(integer_data(nfa), m));
    else
        throw tqft::ParseError("unknown semiring '" + semiring + "'");
    return kExitOk;
}

int cmd_quasi(const std::string& json_path, bool do_validate,
              const std::vector<std::string>& eval_words, int retract_rank,
              long long budget) {
    tqft::QuasiAutomaton qa = tqft::quasi_from_json(slurp(json_path));
    int status = kExitOk;
    if (do_validate) {
        auto report = tqft::validate(qa);
        std::cout << report.json() << "\n";
        if (!report.ok) status = kExitSemantic;
    }
    for (const auto& w : eval_words)
        std::cout << w << " -> " << (tqft::evaluate_word(qa, w) ? "1" : "0") << "\n";
    if (retract_rank >= 0) {
        auto pair = tqft::retract_check(qa.lattice, retract_rank, budget);
        nlohmann::ordered_json rj;
        rj["rank"] = retract_rank;
        rj["found"] = pair.found;
        if (pair.found) {
            rj["iota"] = pair.iota;
            rj["p_basis"] = pair.p_basis;
        }
        std::cout << rj.dump(2) << "\n";
        if (!pair.found) status = kExitSemantic;
    }
    return status;
}

int cmd_homfly(const std::string& pd_path, std::vector<int> ns, const std::string& normalization,
               long long max_nodes, const std::string& format, unsigned seed) {
    tqft::LinkDiagram d = tqft::parse_pd(slurp(pd_path));
    bool unreduced = normalization == "unreduced";
    if (!unreduced && normalization != "reduced")
        throw tqft::ParseError("normalization must be 'reduced' or 'unreduced'");

    tqft::HomflyEngine engine(max_nodes);
    tqft::TwoVar p;
    if (seed == 0) {
        p = engine.reduced(d);
    } else {
        std::mt19937 rng(seed);
        p = engine.reduced_randomized(d, rng);
    }
    tqft::TwoVar reported = unreduced && !d.empty() ? p * tqft::unlink_factor() : p;

    nlohmann::ordered_json out;
    out["homfly"] = reported.text();
    out["jones"] = tqft::specialize(p, 2, unreduced && !d.empty()).text();
    nlohmann::ordered_json pn = nlohmann::ordered_json::object();
    for (int n : ns)
        pn[std::to_string(n)] = tqft::specialize(p, n, unreduced && !d.empty()).text();
    out["pN"] = pn;

    if (format == "json") {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "homfly: " << out["homfly"].get<std::string>() << "\n";
        std::cout << "jones: " << out["jones"].get<std::string>() << "\n";
        for (int n : ns)
            std::cout << "p" << n << ": " << pn[std::to_string(n)].get<std::string>() << "\n";
    }
    return kExitOk;
}

int cmd_qbinom(int n, int k) {
    std::cout << tqft::qbinom(n, k).text() << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"semiring TQFT and skein toolkit"};
    app.require_subcommand(1);

    std::string regex_text, json_path, morphism_path, pd_path;
    std::string semiring = "boolean";
    std::string normalization = "reduced";
    std::string format = "text";
    std::vector<std::string> accept_words, reject_words, eval_words;
    std::vector<int> ns;
    bool print_json = false, print_dot = false, do_validate = false;
    int max_len = 6;
    int retract_rank = -1;
    long long max_nodes = 1'000'000;
    long long budget = 20'000'000;
    unsigned seed = 0;
    int qb_n = 0, qb_k = 0;

    auto* nfa_cmd = app.add_subcommand("nfa", "build an automaton, print it, test words");
    nfa_cmd->add_option("--regex", regex_text, "regular expression to compile");
    nfa_cmd->add_option("--json", json_path, "automaton JSON file");
    nfa_cmd->add_flag("--print-json", print_json, "print the automaton as JSON");
    nfa_cmd->add_flag("--dot", print_dot, "print the automaton as DOT");
    nfa_cmd->add_option("--accept", accept_words, "word expected to be accepted");
    nfa_cmd->add_option("--reject", reject_words, "word expected to be rejected");

    std::string against_regex, against_json;
    auto* check_cmd = app.add_subcommand("tqft-check",
                                         "verify floating-interval evaluation against acceptance");
    check_cmd->add_option("--regex", regex_text, "regular expression to compile");
    check_cmd->add_option("--json", json_path, "automaton JSON file");
    check_cmd->add_option("--max-len", max_len, "maximum word length")->required();
    check_cmd->add_option("--semiring", semiring, "boolean | integer | tropical");
    check_cmd->add_option("--against-regex", against_regex,
                          "reference automaton for the acceptance side");
    check_cmd->add_option("--against-json", against_json,
                          "reference automaton JSON for the acceptance side");

    auto* eval_cmd = app.add_subcommand("eval-cobordism", "evaluate a cobordism JSON file");
    eval_cmd->add_option("--morphism", morphism_path, "morphism JSON file")->required();
    eval_cmd->add_option("--regex", regex_text, "regular expression to compile");
    eval_cmd->add_option("--json", json_path, "automaton JSON file");
    eval_cmd->add_option("--semiring", semiring, "boolean | integer");

    auto* quasi_cmd = app.add_subcommand("quasi", "validate and run a quasi-automaton");
    quasi_cmd->add_option("--json", json_path, "quasi-automaton JSON file")->required();
    quasi_cmd->add_flag("--validate", do_validate, "check the structure axioms");
    quasi_cmd->add_option("--eval", eval_words, "word to evaluate");
    quasi_cmd->add_option("--retract", retract_rank, "search for a retract of this free rank");
    quasi_cmd->add_option("--budget", budget, "retract search budget");

    auto* homfly_cmd = app.add_subcommand("homfly", "skein polynomial of a PD-coded link");
    homfly_cmd->add_option("--pd", pd_path, "PD code file")->required();
    homfly_cmd->add_option("--n", ns, "specialization exponent (repeatable)");
    homfly_cmd->add_option("--normalization", normalization, "reduced | unreduced");
    homfly_cmd->add_option("--max-nodes", max_nodes, "skein recursion budget");
    homfly_cmd->add_option("--format", format, "text | json");
    homfly_cmd->add_option("--seed", seed, "randomize traversal choices (0 = canonical)");

    auto* qbinom_cmd = app.add_subcommand("qbinom", "print a quantum binomial coefficient");
    qbinom_cmd->add_option("n", qb_n, "upper argument")->required();
    qbinom_cmd->add_option("k", qb_k, "lower argument")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (nfa_cmd->parsed())
            return cmd_nfa(regex_text, json_path, print_json, print_dot, accept_words,
                           reject_words);
        if (check_cmd->parsed())
            return cmd_tqft_check(regex_text, json_path, max_len, semiring, against_regex,
                                  against_json);
        if (eval_cmd->parsed()) return cmd_eval(morphism_path, regex_text, json_path, semiring);
        if (quasi_cmd->parsed())
            return cmd_quasi(json_path, do_validate, eval_words, retract_rank, budget);
        if (homfly_cmd->parsed())
            return cmd_homfly(pd_path, ns, normalization, max_nodes, format, seed);
        if (qbinom_cmd->parsed()) return cmd_qbinom(qb_n, qb_k);
    } catch (const tqft::BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
