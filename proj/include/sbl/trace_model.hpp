#pragma once
#include "sbl/matrix.hpp"
#include <string>
#include <vector>

namespace sbl {

// Finite-dimensional witness of the duality-of-retraction trace lemma:
// an exact idempotent e splits through its column space, and
// trace(e) = rank of the retract.

template <class K>
struct SplitIdempotentDatum {
    Matrix<K> e; // n x n idempotent
    Matrix<K> i; // n x k injection (pivot columns of e)
    Matrix<K> r; // k x n surjection (nonzero rref rows of e)
    std::size_t retract_rank = 0;
};

// Column-space factorization e = i * r with r * i = identity.  The identity
// r * i = I is a consequence of idempotency (R C R = R with R surjective);
// both factorization identities are verified before returning.
template <class K>
SplitIdempotentDatum<K> split_idempotent(const Matrix<K>& e) {
    if (e.rows() != e.cols())
        throw std::invalid_argument("split_idempotent: matrix must be square");
    if (!((e * e) - e).is_zero_matrix())
        throw std::invalid_argument("split_idempotent: matrix is not idempotent");
    Matrix<K> red = e;
    std::vector<std::size_t> pivots = red.rref();
    std::size_t n = e.rows(), k = pivots.size();
    SplitIdempotentDatum<K> out;
    out.e = e;
    out.retract_rank = k;
    out.i = Matrix<K>(n, k);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t a = 0; a < n; ++a) out.i(a, j) = e(a, pivots[j]);
    out.r = Matrix<K>(k, n);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t b = 0; b < n; ++b) out.r(j, b) = red(j, b);
    if (!((out.i * out.r) - e).is_zero_matrix())
        throw std::runtime_error("split_idempotent: factorization e = i r failed");
    if (!((out.r * out.i) - Matrix<K>::identity(k)).is_zero_matrix())
        throw std::runtime_error("split_idempotent: r i is not the identity");
    return out;
}

template <class K>
struct TraceRetractReport {
    std::size_t retract_rank = 0;
    bool trace_equals_rank = false;   // trace(e) == rank(retract) in K
    bool trace_commutes = false;      // trace(i r) == trace(r i)
    std::string detail;
};

// trace(e) = trace(i r) = trace(r i) = trace(id on the retract) = rank,
// with the rank reduced into K (over F2 this is rank mod 2).
template <class K>
TraceRetractReport<K> trace_retract_check(const Matrix<K>& e) {
    SplitIdempotentDatum<K> s = split_idempotent(e);
    TraceRetractReport<K> rep;
    rep.retract_rank = s.retract_rank;
    K rank_in_field = field_zero<K>();
    for (std::size_t j = 0; j < s.retract_rank; ++j) rank_in_field += field_one<K>();
    rep.trace_equals_rank = is_zero(e.trace() - rank_in_field);
    rep.trace_commutes = is_zero((s.i * s.r).trace() - (s.r * s.i).trace());
    rep.detail = rep.trace_equals_rank && rep.trace_commutes
                     ? "trace identities hold"
                     : "trace identity FAILED";
    return rep;
}

// The non-idempotent commutativity instance: trace(AB) = trace(BA) for
// rectangular A (n x m), B (m x n).
template <class K>
bool trace_commutativity(const Matrix<K>& A, const Matrix<K>& B) {
    return is_zero((A * B).trace() - (B * A).trace());
}

} // namespace sbl
