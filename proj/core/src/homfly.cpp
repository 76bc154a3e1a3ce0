#include "tqft/homfly.hpp"

#include <algorithm>
#include <map>

namespace tqft {

TwoVar unlink_factor() {
    return TwoVar::monomial(1, 1, -1) + TwoVar::monomial(-1, -1, -1);
}

namespace {

// First crossing met on its under-strand when walking components in the
// given order from the given base rotations; -1 when descending.
int first_defect(const LinkDiagram& d, const std::vector<std::vector<int>>& comps,
                 const std::vector<int>& comp_order, const std::vector<int>& rotations) {
    std::map<int, std::pair<int, bool>> consumer;  // arc -> (crossing, is_under)
    for (int c = 0; c < static_cast<int>(d.crossings.size()); ++c) {
        consumer[d.crossings[c].under_in] = {c, true};
        consumer[d.crossings[c].over_in] = {c, false};
    }
    std::vector<char> seen(d.crossings.size(), 0);
    for (int ci : comp_order) {
        const auto& comp = comps[ci];
        const int r = rotations[ci];
        for (std::size_t i = 0; i < comp.size(); ++i) {
            int arc = comp[(i + r) % comp.size()];
            auto [c, under] = consumer.at(arc);
            if (seen[c]) continue;
            seen[c] = 1;
            if (under) return c;
        }
    }
    return -1;
}

}  // namespace

HomflyEngine::Choices HomflyEngine::make_choices(const std::vector<std::vector<int>>& comps,
                                                 std::mt19937* rng) const {
    Choices ch;
    ch.comp_order.resize(comps.size());
    for (std::size_t i = 0; i < comps.size(); ++i) ch.comp_order[i] = static_cast<int>(i);
    ch.rotations.assign(comps.size(), 0);
    if (rng) {
        std::shuffle(ch.comp_order.begin(), ch.comp_order.end(), *rng);
        for (std::size_t i = 0; i < comps.size(); ++i)
            ch.rotations[i] = static_cast<int>((*rng)() % comps[i].size());
    }
    return ch;
}

TwoVar HomflyEngine::eval(const LinkDiagram& input, const Choices* inherited, std::mt19937* rng) {
    if (++nodes_ > budget_) throw BudgetError("homfly: recursion budget exceeded");

    LinkDiagram d = simplify(input);
    const Choices* choices = d.crossings.size() == input.crossings.size() ? inherited : nullptr;

    if (d.crossings.empty()) {
        int k = d.free_loops;
        return k <= 1 ? TwoVar::one() : unlink_factor().pow(static_cast<unsigned>(k - 1));
    }

    std::string key = canonical_key(d);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    auto comps = d.components();
    Choices local;
    if (!choices) {
        local = make_choices(comps, rng);
        choices = &local;
    }

    int c = first_defect(d, comps, choices->comp_order, choices->rotations);
    TwoVar value;
    if (c < 0) {
        // Descending diagrams are unlinks.
        int k = static_cast<int>(comps.size()) + d.free_loops;
        value = k <= 1 ? TwoVar::one() : unlink_factor().pow(static_cast<unsigned>(k - 1));
    } else {
        // The switched diagram keeps the same arcs, so the traversal choices
        // stay valid and the defect moves strictly later.
        LinkDiagram switched = switch_crossing(d, c);
        LinkDiagram smoothed = smooth_crossing(d, c);
        if (d.crossings[c].sign > 0) {
            // P(L+) = a^-2 P(L-) + a^-1 z P(L0)
            value = TwoVar::monomial(1, -2, 0) * eval(switched, choices, rng) +
                    TwoVar::monomial(1, -1, 1) * eval(smoothed, nullptr, rng);
        } else {
            // P(L-) = a^2 P(L+) - a z P(L0)
            value = TwoVar::monomial(1, 2, 0) * eval(switched, choices, rng) -
                    TwoVar::monomial(1, 1, 1) * eval(smoothed, nullptr, rng);
        }
    }
    memo_[key] = value;
    return value;
}

TwoVar HomflyEngine::reduced(const LinkDiagram& d) {
    d.validate();
    return eval(d, nullptr, nullptr);
}

TwoVar HomflyEngine::reduced_randomized(const LinkDiagram& d, std::mt19937& rng) {
    d.validate();
    return eval(d, nullptr, &rng);
}

TwoVar homfly(const LinkDiagram& d, const HomflyOptions& opts) {
    HomflyEngine engine(opts.max_nodes);
    TwoVar p = engine.reduced(d);
    if (opts.unreduced && !d.empty()) p = p * unlink_factor();
    return p;
}

Laurent specialize(const TwoVar& p, int N, bool unreduced) {
    if (N < 0) throw std::invalid_argument("specialize: N must be nonnegative");
    if (unreduced && N == 0)
        throw std::invalid_argument(
            "specialize: unreduced normalization degenerates at N = 0 ([0] = 0); "
            "use the reduced form");
    if (p.is_zero()) return Laurent::zero();

    const int clear = std::max(0, -p.min_z_exp());
    const Laurent zsub = Laurent::monomial(1, 1) + Laurent::monomial(-1, -1);  // q - q^-1
    Laurent num;
    for (const auto& [key, c] : p.terms()) {
        auto [a_exp, z_exp] = key;
        Laurent term = Laurent::monomial(c, N * a_exp) * zsub.pow(static_cast<unsigned>(z_exp + clear));
        num = num + term;
    }
    Laurent result;
    if (!Laurent::divide_exact(num, zsub.pow(static_cast<unsigned>(clear)), result))
        throw std::logic_error("specialize: exact division by (q - q^-1)^k failed");
    if (unreduced) result = result * qint(N);
    return result;
}

}  // namespace tqft
