#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "tqft/matrix.hpp"
#include "tqft/nfa.hpp"

using namespace tqft;

namespace {

Matrix<Bool> bool_matrix(int rows, int cols, std::initializer_list<int> bits) {
    Matrix<Bool> m(rows, cols);
    auto it = bits.begin();
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = Bool{*it++ != 0};
    return m;
}

// All sixteen 2x2 Boolean matrices.
std::vector<Matrix<Bool>> all_2x2() {
    std::vector<Matrix<Bool>> out;
    for (int bits = 0; bits < 16; ++bits)
        out.push_back(bool_matrix(2, 2, {bits & 1, (bits >> 1) & 1, (bits >> 2) & 1, (bits >> 3) & 1}));
    return out;
}

}  // namespace

TEST_CASE("compose with identity and 1x1 case") {
    std::mt19937 rng(3);
    auto m = gen::random_matrix<Integer>(rng, 3, 4, gen::random_integer);
    CHECK(compose(Matrix<Integer>::identity(3), m) == m);
    CHECK(compose(m, Matrix<Integer>::identity(4)) == m);
    Matrix<Integer> x(1, 1), y(1, 1);
    x.at(0, 0) = Integer{5};
    y.at(0, 0) = Integer{7};
    CHECK(compose(x, y).at(0, 0) == Integer{35});
    CHECK_THROWS_AS(compose(m, m), std::invalid_argument);
}

TEST_CASE("transition matrices of the example machine compose as paths") {
    Nfa nfa = gen::example_nfa();
    auto da = transition_matrix(nfa, 'a');
    auto db = transition_matrix(nfa, 'b');
    // q1 -a-> q1 -b-> q2: the first column of db.da is the indicator of q2
    auto ba = compose(db, da);
    CHECK(ba.at(0, 0) == Bool::zero());
    CHECK(ba.at(1, 0) == Bool::one());
    CHECK(ba.at(2, 0) == Bool::zero());
}

TEST_CASE("tensor dimensions and identities") {
    Nfa nfa = gen::example_nfa();
    auto da = transition_matrix(nfa, 'a');
    auto t = tensor(da, da);
    CHECK(t.rows() == 9);
    CHECK(t.cols() == 9);
    CHECK(tensor(Matrix<Bool>::identity(2), Matrix<Bool>::identity(3)) ==
          Matrix<Bool>::identity(6));
}

TEST_CASE("tensor is associative under the left-major flattening") {
    std::mt19937 rng(9);
    for (int i = 0; i < 40; ++i) {
        auto f = gen::random_matrix<Integer>(rng, 2, 3, gen::random_integer);
        auto g = gen::random_matrix<Integer>(rng, 3, 1, gen::random_integer);
        auto h = gen::random_matrix<Integer>(rng, 2, 2, gen::random_integer);
        CHECK(tensor(tensor(f, g), h) == tensor(f, tensor(g, h)));
    }
}

TEST_CASE("a letter with no transitions gives the zero matrix") {
    Nfa nfa;
    nfa.states = {"q0", "q1"};
    nfa.alphabet = {'a'};
    nfa.delta = {{{}, {}}};
    nfa.validate();
    CHECK(transition_matrix(nfa, 'a') == Matrix<Bool>(2, 2));
}

TEST_CASE("interchange law, exhaustively over 2x2 Boolean matrices") {
    auto ms = all_2x2();
    for (const auto& f : ms)
        for (const auto& g : ms)
            for (const auto& f2 : ms)
                for (const auto& g2 : ms)
                    CHECK(compose(tensor(f, g), tensor(f2, g2)) ==
                          tensor(compose(f, f2), compose(g, g2)));
}

TEST_CASE("interchange and associativity on random Laurent matrices") {
    std::mt19937 rng(17);
    for (int i = 0; i < 50; ++i) {
        auto f = gen::random_matrix<Laurent>(rng, 2, 2, gen::random_laurent);
        auto g = gen::random_matrix<Laurent>(rng, 2, 3, gen::random_laurent);
        auto h = gen::random_matrix<Laurent>(rng, 3, 2, gen::random_laurent);
        CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
        auto f2 = gen::random_matrix<Laurent>(rng, 2, 3, gen::random_laurent);
        CHECK(compose(tensor(f, f2), tensor(g, h)) ==
              tensor(compose(f, g), compose(f2, h)));
    }
}

TEST_CASE("transpose and trace") {
    Nfa nfa = gen::example_nfa();
    auto da = transition_matrix(nfa, 'a');
    CHECK(transpose(transpose(da)) == da);
    CHECK(trace(da) == Bool::one());  // diagonal is 1,0,0
    CHECK(trace(Matrix<Bool>::identity(5)) == Bool::one());
    Matrix<Bool> row(1, 3);
    CHECK_THROWS_AS(trace(row), std::invalid_argument);

    std::mt19937 rng(23);
    for (int i = 0; i < 200; ++i) {
        auto f = gen::random_matrix<Integer>(rng, 3, 3, gen::random_integer);
        auto g = gen::random_matrix<Integer>(rng, 3, 3, gen::random_integer);
        CHECK(trace(compose(f, g)) == trace(compose(g, f)));
    }
}

TEST_CASE("ev and coev") {
    CHECK(ev_map<Bool>(1) == Matrix<Bool>::identity(1));
    CHECK(coev_map<Bool>(1) == Matrix<Bool>::identity(1));
    // ev . coev is the n-fold sum 1 + ... + 1, which is 1 over the Booleans
    CHECK(compose(ev_map<Bool>(3), coev_map<Bool>(3)).at(0, 0) == Bool::one());
    CHECK(compose(ev_map<Integer>(3), coev_map<Integer>(3)).at(0, 0) == Integer{3});
}

TEST_CASE("zigzag identities for ranks 1 through 6") {
    for (int n = 1; n <= 6; ++n) {
        auto id = Matrix<Integer>::identity(n);
        auto left = compose(tensor(ev_map<Integer>(n), id), tensor(id, coev_map<Integer>(n)));
        auto right = compose(tensor(id, ev_map<Integer>(n)), tensor(coev_map<Integer>(n), id));
        CHECK(left == id);
        CHECK(right == id);

        auto idb = Matrix<Bool>::identity(n);
        CHECK(compose(tensor(ev_map<Bool>(n), idb), tensor(idb, coev_map<Bool>(n))) == idb);
        CHECK(compose(tensor(idb, ev_map<Bool>(n)), tensor(coev_map<Bool>(n), idb)) == idb);
    }
}

TEST_CASE("matrix JSON form") {
    Matrix<Bool> m(1, 2);
    m.at(0, 1) = Bool::one();
    CHECK(m.json() == "{\"rows\": 1, \"cols\": 2, \"entries\": [\"0\", \"1\"]}");
}
