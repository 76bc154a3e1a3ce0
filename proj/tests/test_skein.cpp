#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "oracles.hpp"
#include "tqft/homfly.hpp"
#include "tqft/pd.hpp"

using namespace tqft;

namespace {

TwoVar a_pow(int e) { return TwoVar::monomial(1, e, 0); }
const TwoVar z_mono = TwoVar::monomial(1, 0, 1);

}  // namespace

TEST_CASE("pd parsing basics") {
    LinkDiagram empty = parse_pd("");
    CHECK(empty.empty());
    CHECK(empty.component_count() == 0);

    LinkDiagram tref = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]");
    CHECK(tref.crossings.size() == 3);
    CHECK(tref.component_count() == 1);
    CHECK(tref.writhe() == -3);  // the standard table diagram is left-handed
    for (const auto& c : tref.crossings) CHECK(c.sign == tref.crossings[0].sign);

    LinkDiagram loops = parse_pd("O\nO");
    CHECK(loops.component_count() == 2);

    CHECK_THROWS_AS(parse_pd("X[1,2,3]"), ParseError);
    CHECK_THROWS_AS(parse_pd("X[1,2,3,4] X[1,2,3,4]"), ParseError);
    CHECK_THROWS_AS(parse_pd("X[1,2,3,4]"), ParseError);  // dangling labels
    CHECK_THROWS_AS(parse_pd("Y[1,2,3,4]"), ParseError);
}

TEST_CASE("pd text round trips") {
    for (const auto& [name, d] : gen::diagram_corpus()) {
        if (d.crossings.empty()) continue;
        LinkDiagram back = parse_pd(pd_text(d));
        CHECK(back.crossings.size() == d.crossings.size());
        CHECK(back.component_count() == d.component_count());
        CHECK(back.writhe() == d.writhe());
        CHECK(canonical_key(back) == canonical_key(d));
    }
}

TEST_CASE("braid closures have the expected shapes") {
    CHECK(braid_closure(1, {}).component_count() == 1);
    CHECK(braid_closure(1, {}).crossings.empty());
    CHECK(braid_closure(2, {}).component_count() == 2);
    CHECK(braid_closure(2, {1}).component_count() == 1);
    CHECK(braid_closure(2, {1, 1}).component_count() == 2);   // Hopf link
    CHECK(braid_closure(2, {1, 1, 1}).component_count() == 1);
    CHECK(braid_closure(2, {1, 1, 1}).writhe() == 3);
    CHECK(braid_closure(3, {1, -2, 1, -2}).component_count() == 1);
    CHECK(braid_closure(3, {1, -2, 1, -2}).writhe() == 0);
    CHECK(braid_closure(3, {1, -2, 1, -2, 1, -2}).component_count() == 3);
    CHECK_THROWS_AS(braid_closure(2, {5}), std::invalid_argument);
}

TEST_CASE("switching a crossing twice restores the diagram") {
    LinkDiagram tref = braid_closure(2, {1, 1, 1});
    for (int c = 0; c < 3; ++c) {
        LinkDiagram once = switch_crossing(tref, c);
        CHECK(once.crossings[c].sign == -1);
        LinkDiagram twice = switch_crossing(once, c);
        CHECK(canonical_key(twice) == canonical_key(tref));
    }
    CHECK_THROWS_AS(switch_crossing(tref, 9), std::invalid_argument);
}

TEST_CASE("smoothings split and merge components as expected") {
    LinkDiagram kink = braid_closure(2, {1});
    LinkDiagram smoothed = smooth_crossing(kink, 0);
    CHECK(smoothed.crossings.empty());
    CHECK(smoothed.component_count() == 2);  // two-component unlink

    LinkDiagram tref = braid_closure(2, {1, 1, 1});
    LinkDiagram hopf = smooth_crossing(tref, 1);
    CHECK(hopf.crossings.size() == 2);
    CHECK(hopf.component_count() == 2);
    CHECK(canonical_key(hopf) == canonical_key(braid_closure(2, {1, 1})));
}

TEST_CASE("simplify removes kinks and pokes") {
    LinkDiagram poke = braid_closure(2, {1, -1});
    LinkDiagram reduced = simplify(poke);
    CHECK(reduced.crossings.empty());
    CHECK(reduced.component_count() == 2);

    LinkDiagram kink = braid_closure(2, {1});
    CHECK(simplify(kink).component_count() == 1);
    CHECK(simplify(kink).crossings.empty());

    // R2/R1 must not fire on the Hopf link or trefoil
    CHECK(simplify(braid_closure(2, {1, 1})).crossings.size() == 2);
    CHECK(simplify(braid_closure(2, {1, 1, 1})).crossings.size() == 3);
}

TEST_CASE("canonical keys are label-invariant") {
    LinkDiagram f8 = braid_closure(3, {1, -2, 1, -2});
    LinkDiagram shifted = f8;
    for (auto& c : shifted.crossings) {
        c.under_in += 100;
        c.under_out += 100;
        c.over_in += 100;
        c.over_out += 100;
    }
    CHECK(canonical_key(shifted) == canonical_key(f8));
    CHECK(canonical_key(f8) != canonical_key(braid_closure(2, {1, 1, 1})));
}

TEST_CASE("homfly of unlinks") {
    CHECK(homfly(parse_pd("")) == TwoVar::one());
    CHECK(homfly(braid_closure(1, {})) == TwoVar::one());
    CHECK(homfly(braid_closure(2, {1})) == TwoVar::one());
    CHECK(homfly(braid_closure(2, {})) == TwoVar::parse("-a^-1*z^-1 + a*z^-1"));
    CHECK(homfly(braid_closure(3, {})) == unlink_factor() * unlink_factor());
}

TEST_CASE("homfly frozen values for small links") {
    CHECK(homfly(braid_closure(2, {1, 1})) ==
          TwoVar::parse("-a^-3*z^-1 + a^-1*z^-1 + a^-1*z"));
    CHECK(homfly(braid_closure(2, {1, 1, 1})) ==
          TwoVar::parse("-a^-4 + 2*a^-2 + a^-2*z^2"));
    CHECK(homfly(braid_closure(2, {-1, -1, -1})) ==
          TwoVar::parse("2*a^2 + a^2*z^2 - a^4"));
    CHECK(homfly(braid_closure(3, {1, -2, 1, -2})) ==
          TwoVar::parse("a^-2 - 1 - z^2 + a^2"));
    // cinquefoil, by unwinding the relation through the trefoil and the
    // (2,4) torus link
    CHECK(homfly(braid_closure(2, {1, 1, 1, 1, 1})) ==
          TwoVar::parse("-2*a^-6 - a^-6*z^2 + 3*a^-4 + 4*a^-4*z^2 + a^-4*z^4"));
    // granny = trefoil # trefoil, square = trefoil # mirror trefoil
    CHECK(homfly(braid_closure(3, {1, 1, 1, 2, 2, 2})) ==
          homfly(braid_closure(2, {1, 1, 1})) * homfly(braid_closure(2, {1, 1, 1})));
    CHECK(homfly(braid_closure(3, {1, 1, 1, -2, -2, -2})) ==
          homfly(braid_closure(2, {1, 1, 1})) * homfly(braid_closure(2, {-1, -1, -1})));
}

TEST_CASE("skein residual vanishes at every crossing of every corpus diagram") {
    for (const auto& [name, d] : gen::diagram_corpus()) {
        for (int c = 0; c < static_cast<int>(d.crossings.size()); ++c) {
            LinkDiagram plus = d.crossings[c].sign > 0 ? d : switch_crossing(d, c);
            LinkDiagram minus = d.crossings[c].sign > 0 ? switch_crossing(d, c) : d;
            LinkDiagram zero = smooth_crossing(d, c);
            TwoVar residual = a_pow(1) * homfly(plus) - a_pow(-1) * homfly(minus) -
                              z_mono * homfly(zero);
            INFO(name, " crossing ", c);
            CHECK(residual == TwoVar::zero());
        }
    }
}

TEST_CASE("homfly does not depend on traversal choices") {
    std::mt19937 rng(2025);
    for (const auto& [name, d] : gen::diagram_corpus()) {
        HomflyEngine engine;
        TwoVar expect = engine.reduced(d);
        for (int run = 0; run < 5; ++run) {
            HomflyEngine fresh;
            INFO(name, " run ", run);
            CHECK(fresh.reduced_randomized(d, rng) == expect);
        }
    }
}

TEST_CASE("homfly is invariant under braid-level Reidemeister moves") {
    std::mt19937 rng(5150);
    int sequences = 0;
    auto corpus = gen::braid_corpus();
    while (sequences < 60) {
        const auto& base = corpus[sequences % corpus.size()];
        TwoVar expect = homfly(braid_closure(base.strands, base.word));
        gen::BraidEntry moved = {base.name, base.strands, base.word};
        int nmoves = 2 + static_cast<int>(rng() % 5);
        for (int m = 0; m < nmoves; ++m) gen::random_braid_move(moved, rng);
        INFO(base.name, " after ", nmoves, " moves");
        CHECK(homfly(braid_closure(moved.strands, moved.word)) == expect);
        ++sequences;
    }
}

TEST_CASE("homfly is invariant under the braid relation in random contexts") {
    std::mt19937 rng(6001);
    for (int trial = 0; trial < 20; ++trial) {
        int strands = 3 + static_cast<int>(rng() % 2);
        std::vector<int> prefix, suffix;
        for (int i = 0; i < 2; ++i)
            prefix.push_back((1 + static_cast<int>(rng() % (strands - 1))) *
                             (rng() % 2 ? 1 : -1));
        for (int i = 0; i < 2; ++i)
            suffix.push_back((1 + static_cast<int>(rng() % (strands - 1))) *
                             (rng() % 2 ? 1 : -1));
        int i = 1 + static_cast<int>(rng() % (strands - 2));
        int s = rng() % 2 ? 1 : -1;
        std::vector<int> left = prefix, right = prefix;
        left.insert(left.end(), {s * i, s * (i + 1), s * i});
        right.insert(right.end(), {s * (i + 1), s * i, s * (i + 1)});
        left.insert(left.end(), suffix.begin(), suffix.end());
        right.insert(right.end(), suffix.begin(), suffix.end());
        CHECK(homfly(braid_closure(strands, left)) == homfly(braid_closure(strands, right)));
    }
}

TEST_CASE("homfly is invariant under kinks added directly to diagrams") {
    std::mt19937 rng(6002);
    for (const auto& [name, d] : gen::diagram_corpus()) {
        if (d.crossings.empty()) continue;
        TwoVar expect = homfly(d);
        for (int trial = 0; trial < 4; ++trial) {
            int arc = d.crossings[rng() % d.crossings.size()].under_in;
            LinkDiagram kinked =
                add_r1_kink(d, arc, rng() % 2 == 0, rng() % 2 == 0);
            INFO(name, " trial ", trial);
            CHECK(homfly(kinked) == expect);
        }
    }
}

TEST_CASE("specializations: P1 trivial, P2 matches the bracket oracle") {
    for (const auto& [name, d] : gen::diagram_corpus()) {
        TwoVar p = homfly(d);
        INFO(name);
        if (!d.empty()) CHECK(specialize(p, 1) == Laurent::one());
        CHECK(specialize(p, 2) == oracle::jones(d));
    }
}

TEST_CASE("frozen Jones values") {
    CHECK(specialize(homfly(braid_closure(2, {1, 1, 1})), 2) ==
          Laurent::parse("-q^-8 + q^-6 + q^-2"));
    CHECK(specialize(homfly(braid_closure(2, {-1, -1, -1})), 2) ==
          Laurent::parse("q^2 + q^6 - q^8"));
    CHECK(specialize(homfly(braid_closure(3, {1, -2, 1, -2})), 2) ==
          Laurent::parse("q^-4 - q^-2 + 1 - q^2 + q^4"));
    CHECK(specialize(homfly(braid_closure(2, {1, 1})), 2) ==
          Laurent::parse("q^-5 + q^-1"));
}

TEST_CASE("alexander specialization stays well-defined") {
    // Only the substitution itself is asserted at N = 0.
    for (const auto& [name, d] : gen::diagram_corpus()) {
        if (d.component_count() != 1) continue;
        Laurent alex = specialize(homfly(d), 0);
        INFO(name);
        CHECK(alex.eval_at_one() == bigint(1));  // Alexander at q = 1 for a knot
    }
    CHECK(specialize(homfly(braid_closure(2, {1, 1, 1})), 0) ==
          Laurent::parse("q^-2 - 1 + q^2"));
}

TEST_CASE("unreduced normalization and the unknot") {
    TwoVar unknot_unreduced = homfly(braid_closure(1, {}), {.unreduced = true});
    CHECK(unknot_unreduced == unlink_factor());
    for (int n = 2; n <= 4; ++n)
        CHECK(specialize(TwoVar::one(), n, true) == qint(n));
    CHECK(specialize(unknot_unreduced, 3, false) == qint(3));
    CHECK_THROWS_AS(specialize(TwoVar::one(), 0, true), std::invalid_argument);
}

TEST_CASE("disjoint unions") {
    LinkDiagram tref = braid_closure(2, {1, 1, 1});
    CHECK(canonical_key(disjoint_union(tref, parse_pd(""))) == canonical_key(tref));

    LinkDiagram two_unknots = disjoint_union(braid_closure(1, {}), braid_closure(1, {}));
    CHECK(specialize(homfly(two_unknots, {.unreduced = true}), 2) ==
          Laurent::parse("q^-2 + 2 + q^2"));  // (q + q^-1)^2

    LinkDiagram tref_unknot = disjoint_union(tref, braid_closure(1, {}));
    CHECK(homfly(tref_unknot) == homfly(tref) * unlink_factor());
    for (int n = 2; n <= 4; ++n)
        CHECK(specialize(homfly(tref_unknot), n) == specialize(homfly(tref), n) * qint(n));

    LinkDiagram tref_hopf = disjoint_union(tref, braid_closure(2, {1, 1}));
    CHECK(tref_hopf.component_count() == 3);
    CHECK(homfly(tref_hopf) ==
          homfly(tref) * homfly(braid_closure(2, {1, 1})) * unlink_factor());
}

TEST_CASE("homfly agrees across independent encodings of the same knot") {
    LinkDiagram atlas = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]");
    CHECK(homfly(atlas) == homfly(braid_closure(2, {-1, -1, -1})));
    CHECK(specialize(homfly(atlas), 2) == oracle::jones(atlas));

    // the standard table diagram of the figure-eight knot vs its braid form
    LinkDiagram atlas_f8 = parse_pd("X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]");
    CHECK(atlas_f8.component_count() == 1);
    CHECK(homfly(atlas_f8) == homfly(braid_closure(3, {1, -2, 1, -2})));
    CHECK(specialize(homfly(atlas_f8), 2) == oracle::jones(atlas_f8));
}

TEST_CASE("recursion budget is enforced and reported") {
    LinkDiagram big = braid_closure(3, {1, -2, 1, -2, 1, -2});
    HomflyEngine engine(4);
    CHECK_THROWS_AS(engine.reduced(big), BudgetError);
    CHECK_THROWS_AS(homfly(big, {.max_nodes = 4}), BudgetError);
}

TEST_CASE("memoization shares work across calls") {
    HomflyEngine engine;
    LinkDiagram f8 = braid_closure(3, {1, -2, 1, -2});
    TwoVar first = engine.reduced(f8);
    long long nodes_after_first = engine.nodes_used();
    CHECK(engine.reduced(f8) == first);
    // the second call costs a single memo lookup node
    CHECK(engine.nodes_used() == nodes_after_first + 1);
}
