#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "tqft/cobordism.hpp"
#include "tqft/errors.hpp"

using namespace tqft;

namespace {
const Sign P = Sign::plus;
const Sign M = Sign::minus;
}  // namespace

TEST_CASE("generators have the advertised shapes") {
    Morphism c = cup(P);
    CHECK(c.source.empty());
    CHECK(c.target == SignedSeq{P, M});
    CHECK(c.components.size() == 1);
    CHECK(c.components[0].kind() == ComponentKind::arc);
    c.validate();

    Morphism d = dotted_strand(P, 'a');
    CHECK(d.components[0].dots == "a");
    d.validate();

    Morphism h = half_in(P);
    CHECK(h.source.empty());
    CHECK(h.target == SignedSeq{P});
    CHECK(h.components[0].kind() == ComponentKind::half_interval_in);
    CHECK(half_out(M).components[0].kind() == ComponentKind::half_interval_out);

    cap(P).validate();
    cap(M).validate();
    cup(M).validate();
    transposition(P, M).validate();
    half_in(M).validate();
    half_out(P).validate();
}

TEST_CASE("snake compositions give the identity strand") {
    Morphism id_plus = identity_morphism({P});
    // (id x ev) . (coev x id) on the + strand
    Morphism left = compose(tensor(identity_morphism({P}), cap(M)),
                            tensor(cup(P), identity_morphism({P})));
    CHECK(left == id_plus);
    // (ev x id) . (id x coev), with the transposed cup/cap pair
    Morphism right = compose(tensor(cap(P), identity_morphism({P})),
                             tensor(identity_morphism({P}), cup(M)));
    CHECK(right == id_plus);
    // dual snake on the - strand
    Morphism dual = compose(tensor(cap(M), identity_morphism({M})),
                            tensor(identity_morphism({M}), cup(P)));
    CHECK(dual == identity_morphism({M}));
}

TEST_CASE("fully closing cup against cap yields a circle") {
    Morphism closed = compose(cap(M), cup(M));
    CHECK(closed.source.empty());
    CHECK(closed.target.empty());
    REQUIRE(closed.components.size() == 1);
    CHECK(closed.components[0].kind() == ComponentKind::circle);
    CHECK(closed.components[0].dots.empty());
}

TEST_CASE("dots concatenate along the orientation") {
    Morphism ab = compose(dotted_strand(P, 'b'), dotted_strand(P, 'a'));
    REQUIRE(ab.components.size() == 1);
    CHECK(ab.components[0].dots == "ab");

    // On a downward strand the tail is on top, so the top morphism's dot
    // comes first.
    Morphism down = compose(dotted_strand(M, 'b'), dotted_strand(M, 'a'));
    CHECK(down.components[0].dots == "ba");
}

TEST_CASE("closing a dotted strand produces a cyclic word") {
    // b-dotted cup under an a-dotted cap: the circle reads the strand word.
    Morphism cup_b = cup(M);
    cup_b.components[0].dots = "b";
    Morphism cap_a = cap(M);
    cap_a.components[0].dots = "a";
    Morphism closed = compose(cap_a, cup_b);
    REQUIRE(closed.components.size() == 1);
    CHECK(closed.components[0].kind() == ComponentKind::circle);
    CHECK(closed.components[0].dots == "ab");  // least cyclic rotation of "ba"
}

TEST_CASE("circle words are cyclically canonical") {
    Morphism a{{}, {}, {{std::nullopt, std::nullopt, true, "ba"}}};
    Morphism b{{}, {}, {{std::nullopt, std::nullopt, true, "ab"}}};
    CHECK(a == b);
    Morphism c{{}, {}, {{std::nullopt, std::nullopt, true, "aab"}}};
    Morphism d{{}, {}, {{std::nullopt, std::nullopt, true, "aba"}}};
    CHECK(c == d);
    Morphism e{{}, {}, {{std::nullopt, std::nullopt, true, "abb"}}};
    CHECK_FALSE(c == e);
}

TEST_CASE("two half-intervals glue to a floating interval") {
    Morphism glued = compose(half_out(P), half_in(P));
    CHECK(glued.source.empty());
    CHECK(glued.target.empty());
    REQUIRE(glued.components.size() == 1);
    CHECK(glued.components[0].kind() == ComponentKind::floating_interval);
}

TEST_CASE("tensor concatenates boundaries and re-indexes slots") {
    Morphism t = tensor(identity_morphism({P}), identity_morphism({M}));
    CHECK(t == identity_morphism({P, M}));
    Morphism empty{{}, {}, {}};
    Morphism m = tensor(empty, cup(P));
    CHECK(m == cup(P));
    Morphism arities = tensor(cup(P), cap(M));
    CHECK(arities.source == SignedSeq{M, P});
    CHECK(arities.target == SignedSeq{P, M});
}

TEST_CASE("transpositions square to the identity and satisfy the braid-free relation") {
    for (Sign s0 : {P, M})
        for (Sign s1 : {P, M}) {
            Morphism sq = compose(transposition(s1, s0), transposition(s0, s1));
            CHECK(sq == identity_morphism({s0, s1}));
        }
    Morphism s01 = tensor(transposition(P, P), identity_morphism({P}));
    Morphism s12 = tensor(identity_morphism({P}), transposition(P, P));
    Morphism lhs = compose(s01, compose(s12, s01));
    Morphism rhs = compose(s12, compose(s01, s12));
    CHECK(lhs == rhs);
}

TEST_CASE("composition is associative on random stacks") {
    std::mt19937 rng(404);
    for (int trial = 0; trial < 60; ++trial) {
        SignedSeq src = gen::random_signs(rng, 4);
        auto layers = gen::random_stack(rng, src, {'a', 'b'}, 8);
        if (layers.size() < 3) continue;
        Morphism left = layers[0];
        for (std::size_t i = 1; i < layers.size(); ++i) left = compose(layers[i], left);
        Morphism right = layers.back();
        for (std::size_t i = layers.size() - 1; i-- > 0;) right = compose(right, layers[i]);
        CHECK(left == right);
    }
}

TEST_CASE("interchange of tensor and composition") {
    std::mt19937 rng(405);
    for (int trial = 0; trial < 80; ++trial) {
        SignedSeq s1 = gen::random_signs(rng, 3), s2 = gen::random_signs(rng, 3);
        Morphism f1 = gen::random_layer(rng, s1, {'a', 'b'});
        Morphism f2 = gen::random_layer(rng, f1.target, {'a', 'b'});
        Morphism g1 = gen::random_layer(rng, s2, {'a', 'b'});
        Morphism g2 = gen::random_layer(rng, g1.target, {'a', 'b'});
        Morphism lhs = compose(tensor(f2, g2), tensor(f1, g1));
        Morphism rhs = tensor(compose(f2, f1), compose(g2, g1));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("dot multiset is preserved by composition and tensor") {
    std::mt19937 rng(406);
    for (int trial = 0; trial < 80; ++trial) {
        SignedSeq src = gen::random_signs(rng, 4);
        Morphism f = gen::random_layer(rng, src, {'a', 'b', 'c'});
        Morphism g = gen::random_layer(rng, f.target, {'a', 'b', 'c'});
        std::string before = dot_multiset(f) + dot_multiset(g);
        std::sort(before.begin(), before.end());
        CHECK(dot_multiset(compose(g, f)) == before);
        CHECK(dot_multiset(tensor(f, g)) == before);
    }
}

TEST_CASE("morphism JSON round trip and the seven-component fixture") {
    // Fixture shaped like a morphism from (+--+) to (+--): two arcs, three
    // half-intervals, one floating interval, one circle.
    const char* fixture = R"({
      "source": ["+", "-", "-", "+"],
      "target": ["+", "-", "-"],
      "components": [
        {"kind": "arc", "from": "b0", "to": "b2", "dots": ["c", "b"]},
        {"kind": "half-interval-in", "to": "t0", "dots": ["a"]},
        {"kind": "arc", "from": "t1", "to": "b1", "dots": ["b"]},
        {"kind": "half-interval-in", "from": "t2", "dots": ["a"]},
        {"kind": "half-interval-out", "from": "b3", "dots": []},
        {"kind": "floating-interval", "dots": ["a", "b"]},
        {"kind": "circle", "dots": ["b", "a", "c"]}
      ]
    })";
    Morphism m = morphism_from_json(fixture);
    m.validate();
    auto closed = closed_components(m);
    REQUIRE(closed.size() == 2);
    int circles = 0, floats = 0;
    for (const auto& c : closed) {
        if (c.kind == ComponentKind::circle) {
            ++circles;
            CHECK(c.word == "acb");  // least rotation of "bac"
        } else {
            ++floats;
            CHECK(c.word == "ab");
        }
    }
    CHECK(circles == 1);
    CHECK(floats == 1);

    Morphism back = morphism_from_json(to_json(m));
    CHECK(back == m);
}

TEST_CASE("identity has no closed components") {
    CHECK(closed_components(identity_morphism({P, M, P})).empty());
}

TEST_CASE("validation rejects malformed morphisms") {
    // double-covered slot
    Morphism bad{{P}, {P}, {}};
    bad.components.push_back({Slot{false, 0}, Slot{true, 0}, false, ""});
    bad.components.push_back({Slot{false, 0}, Slot{true, 0}, false, ""});
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    // orientation clash: tail on a + top slot
    Morphism clash{{}, {P, P}, {}};
    clash.components.push_back({Slot{true, 0}, Slot{true, 1}, false, ""});
    CHECK_THROWS_AS(clash.validate(), std::invalid_argument);

    CHECK_THROWS_AS(compose(cup(P), cup(P)), std::invalid_argument);
    CHECK_THROWS_AS(morphism_from_json("{\"source\":[\"x\"]}"), ParseError);
}
