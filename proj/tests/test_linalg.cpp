#include <doctest.h>
#include "sbl/chain_complex.hpp"
#include "sbl/matrix.hpp"

using namespace sbl;

TEST_CASE("rref and rank over Q") {
    MatrixQ m(3, 3);
    m(0, 0) = Rat(1); m(0, 1) = Rat(2); m(0, 2) = Rat(3);
    m(1, 0) = Rat(2); m(1, 1) = Rat(4); m(1, 2) = Rat(6);
    m(2, 0) = Rat(1); m(2, 1) = Rat(0); m(2, 2) = Rat(1);
    CHECK(rank(m) == 2);
    MatrixQ id = MatrixQ::identity(4);
    CHECK(rank(id) == 4);
}

TEST_CASE("rank over F2 differs from Q where parity matters") {
    // [[1,1],[1,1]] has rank 1 over both; [[2]] is zero over F2
    MatrixF2 m(1, 1);
    m(0, 0) = F2(2); // 2 = 0 mod 2
    CHECK(rank(m) == 0);
    MatrixQ q(1, 1);
    q(0, 0) = Rat(2);
    CHECK(rank(q) == 1);
}

TEST_CASE("matrix multiplication shape checks") {
    MatrixQ a(2, 3), b(2, 2);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
}

TEST_CASE("chain complex of the circle") {
    // S^1: one 0-cell at degree 0, one 1-cell at degree -1 (cellular
    // boundary as cohomological d), d = 0
    ChainComplex<Rat> cc;
    cc.set_dim(0, 1);
    cc.set_dim(-1, 1);
    cc.set_boundary(-1, MatrixQ(1, 1));
    GradedDims h = cc.homology();
    CHECK(h.at(0) == 1);
    CHECK(h.at(-1) == 1);
}

TEST_CASE("chain complex rejects d^2 != 0") {
    ChainComplex<Rat> cc;
    cc.set_dim(0, 1);
    cc.set_dim(1, 1);
    cc.set_dim(2, 1);
    MatrixQ d0(1, 1), d1(1, 1);
    d0(0, 0) = Rat(1);
    d1(0, 0) = Rat(1);
    cc.set_boundary(0, d0);
    cc.set_boundary(1, d1);
    CHECK_THROWS_AS(cc.validate(), std::invalid_argument);
}

TEST_CASE("quotient requires boundary-closed selection") {
    // interval: vertices u, v; edge u -> v
    ChainComplex<Rat> cc;
    cc.set_dim(0, 2);
    cc.set_dim(-1, 1);
    MatrixQ d(2, 1);
    d(0, 0) = Rat(-1);
    d(1, 0) = Rat(1);
    cc.set_boundary(-1, d);
    // selecting the edge without its endpoints is not closed
    CHECK_THROWS_AS(cc.quotient({{-1, {0}}}), std::invalid_argument);
    // quotient by one endpoint: contractible rel point -> zero homology
    GradedDims h = cc.quotient({{0, {0}}}).homology();
    CHECK(h.empty());
}
