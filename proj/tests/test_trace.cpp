#include <doctest.h>
#include "sbl/field.hpp"
#include "sbl/matrix.hpp"
#include "sbl/trace_model.hpp"
#include <random>

using namespace sbl;

namespace {

template <class K, class Rng>
Matrix<K> random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
    std::uniform_int_distribution<int> d(-3, 3);
    Matrix<K> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = K(d(rng));
    return m;
}

// P e P^-1 for a random invertible P: a generic idempotent of chosen rank.
template <class K, class Rng>
Matrix<K> random_idempotent(Rng& rng, std::size_t n, std::size_t rank) {
    Matrix<K> diag(n, n);
    for (std::size_t j = 0; j < rank; ++j) diag(j, j) = field_one<K>();
    for (;;) {
        Matrix<K> p = random_matrix<K>(rng, n, n);
        if (sbl::rank(p) != n) continue;
        // invert via rref of [p | I]
        Matrix<K> aug(n, 2 * n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) aug(i, j) = p(i, j);
            aug(i, n + i) = field_one<K>();
        }
        aug.rref();
        Matrix<K> pinv(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) pinv(i, j) = aug(i, n + j);
        return p * diag * pinv;
    }
}

} // namespace

TEST_CASE_TEMPLATE("split of degenerate idempotents", K, Rat, F2) {
    SplitIdempotentDatum<K> id = split_idempotent(Matrix<K>::identity(4));
    CHECK(id.retract_rank == 4);
    CHECK((id.i * id.r) == Matrix<K>::identity(4));
    SplitIdempotentDatum<K> z = split_idempotent(Matrix<K>(3, 3));
    CHECK(z.retract_rank == 0);
    Matrix<K> d(3, 3);
    d(0, 0) = d(1, 1) = field_one<K>();
    CHECK(split_idempotent(d).retract_rank == 2);
}

TEST_CASE_TEMPLATE("non-idempotents and non-square matrices are rejected", K, Rat, F2) {
    Matrix<K> n(2, 3);
    CHECK_THROWS_AS(split_idempotent(n), std::invalid_argument);
    Matrix<K> m(2, 2);
    m(0, 1) = field_one<K>();
    m(1, 0) = field_one<K>();
    CHECK_THROWS_AS(split_idempotent(m), std::invalid_argument);
}

TEST_CASE("random conjugated idempotents over Q") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 25; ++t) {
        std::size_t n = 2 + t % 5, k = t % (n + 1);
        Matrix<Rat> e = random_idempotent<Rat>(rng, n, k);
        TraceRetractReport<Rat> rep = trace_retract_check(e);
        CHECK(rep.retract_rank == k);
        CHECK(rep.trace_equals_rank);
        CHECK(rep.trace_commutes);
    }
}

TEST_CASE("random conjugated idempotents over F2 (trace = rank mod 2)") {
    std::mt19937_64 rng(32);
    for (int t = 0; t < 25; ++t) {
        std::size_t n = 2 + t % 5, k = t % (n + 1);
        Matrix<F2> e = random_idempotent<F2>(rng, n, k);
        TraceRetractReport<F2> rep = trace_retract_check(e);
        CHECK(rep.retract_rank == k);
        CHECK(rep.trace_equals_rank);
        CHECK(e.trace() == F2(int(k % 2)));
    }
}

TEST_CASE_TEMPLATE("trace commutativity for rectangular pairs", K, Rat, F2) {
    std::mt19937_64 rng(33);
    for (int t = 0; t < 30; ++t) {
        std::size_t n = 1 + t % 4, m = 1 + (t / 4) % 5;
        Matrix<K> a = random_matrix<K>(rng, n, m);
        Matrix<K> b = random_matrix<K>(rng, m, n);
        CHECK(trace_commutativity(a, b));
    }
}
