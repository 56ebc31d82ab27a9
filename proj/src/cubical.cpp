#include "sbl/cubical.hpp"
#include <numeric>
#include <stdexcept>

namespace sbl {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[a] = b;
    }
};

[[noreturn]] void bad(const char* msg) { throw std::runtime_error(std::string("cubical: ") + msg); }

} // namespace

void PairComplexGrid::validate() const {
    const int nxm = nx - 1, nym = ny - 1;
    if (nx < 2 || ny < 2) bad("grid too small");
    if (int(vX.size()) != nx * ny || int(ehX.size()) != nxm * ny ||
        int(evX.size()) != nx * nym || int(sX.size()) != nxm * nym ||
        vA.size() != vX.size() || ehA.size() != ehX.size() ||
        evA.size() != evX.size() || sA.size() != sX.size())
        bad("bit array size mismatch");
    auto sub = [](const std::vector<uint8_t>& a, const std::vector<uint8_t>& x) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] && !x[i]) return false;
        return true;
    };
    if (!sub(vA, vX) || !sub(ehA, ehX) || !sub(evA, evX) || !sub(sA, sX))
        bad("A is not a subset of X");
    auto closed = [&](const std::vector<uint8_t>& v, const std::vector<uint8_t>& eh,
                      const std::vector<uint8_t>& ev, const std::vector<uint8_t>& sq) {
        for (int j = 0; j < ny; ++j)
            for (int i = 0; i < nxm; ++i)
                if (eh[j * nxm + i] && (!v[j * nx + i] || !v[j * nx + i + 1]))
                    return false;
        for (int j = 0; j < nym; ++j)
            for (int i = 0; i < nx; ++i)
                if (ev[j * nx + i] && (!v[j * nx + i] || !v[(j + 1) * nx + i]))
                    return false;
        for (int j = 0; j < nym; ++j)
            for (int i = 0; i < nxm; ++i)
                if (sq[j * nxm + i] &&
                    (!eh[j * nxm + i] || !eh[(j + 1) * nxm + i] ||
                     !ev[j * nx + i] || !ev[j * nx + i + 1]))
                    return false;
        return true;
    };
    if (!closed(vX, ehX, evX, sX)) bad("X is not a closed subcomplex");
    if (!closed(vA, ehA, evA, sA)) bad("A is not a closed subcomplex");
}

GradedDims pair_homology(const PairComplexGrid& P) {
    P.validate();
    const int nx = P.nx, ny = P.ny, nxm = nx - 1, nym = ny - 1;

    // h0: components of X containing no A-vertex.
    UnionFind uf(std::size_t(nx) * ny);
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nxm; ++i)
            if (P.ehX[j * nxm + i]) uf.unite(j * nx + i, j * nx + i + 1);
    for (int j = 0; j < nym; ++j)
        for (int i = 0; i < nx; ++i)
            if (P.evX[j * nx + i]) uf.unite(j * nx + i, (j + 1) * nx + i);
    std::vector<uint8_t> comp_has_A(std::size_t(nx) * ny, 0);
    std::vector<uint8_t> comp_seen(std::size_t(nx) * ny, 0);
    for (int v = 0; v < nx * ny; ++v)
        if (P.vA[v]) comp_has_A[uf.find(v)] = 1;
    int64_t h0 = 0;
    for (int v = 0; v < nx * ny; ++v)
        if (P.vX[v]) {
            int r = uf.find(v);
            if (!comp_seen[r]) {
                comp_seen[r] = 1;
                if (!comp_has_A[r]) ++h0;
            }
        }

    // h2: components of X\A squares glued along X\A edges, discarding any
    // component owning an exposed X\A edge (a face of exactly one X\A square).
    auto relsq = [&](int j, int i) {
        int id = j * nxm + i;
        return P.sX[id] && !P.sA[id];
    };
    UnionFind sf(std::size_t(nxm) * nym);
    std::vector<uint8_t> invalid(std::size_t(nxm) * nym, 0);
    for (int j = 0; j < ny; ++j) // horizontal edges; neighbors above/below
        for (int i = 0; i < nxm; ++i) {
            int e = j * nxm + i;
            if (!P.ehX[e] || P.ehA[e]) continue;
            bool below = j > 0 && relsq(j - 1, i);
            bool above = j < nym && relsq(j, i);
            if (below && above) sf.unite((j - 1) * nxm + i, j * nxm + i);
            else if (below) invalid[(j - 1) * nxm + i] = 1;
            else if (above) invalid[j * nxm + i] = 1;
        }
    for (int j = 0; j < nym; ++j) // vertical edges; neighbors left/right
        for (int i = 0; i < nx; ++i) {
            int e = j * nx + i;
            if (!P.evX[e] || P.evA[e]) continue;
            bool left = i > 0 && relsq(j, i - 1);
            bool right = i < nxm && relsq(j, i);
            if (left && right) sf.unite(j * nxm + i - 1, j * nxm + i);
            else if (left) invalid[j * nxm + i - 1] = 1;
            else if (right) invalid[j * nxm + i] = 1;
        }
    std::vector<uint8_t> comp_invalid(std::size_t(nxm) * nym, 0);
    std::vector<uint8_t> scomp_seen(std::size_t(nxm) * nym, 0);
    for (int j = 0; j < nym; ++j)
        for (int i = 0; i < nxm; ++i)
            if (relsq(j, i) && invalid[j * nxm + i]) comp_invalid[sf.find(j * nxm + i)] = 1;
    int64_t h2 = 0;
    for (int j = 0; j < nym; ++j)
        for (int i = 0; i < nxm; ++i)
            if (relsq(j, i)) {
                int r = sf.find(j * nxm + i);
                if (!scomp_seen[r]) {
                    scomp_seen[r] = 1;
                    if (!comp_invalid[r]) ++h2;
                }
            }

    // Euler identity for h1 on the relative complex.
    int64_t c0 = 0, c1 = 0, c2 = 0;
    for (std::size_t i = 0; i < P.vX.size(); ++i) c0 += P.vX[i] && !P.vA[i];
    for (std::size_t i = 0; i < P.ehX.size(); ++i) c1 += P.ehX[i] && !P.ehA[i];
    for (std::size_t i = 0; i < P.evX.size(); ++i) c1 += P.evX[i] && !P.evA[i];
    for (std::size_t i = 0; i < P.sX.size(); ++i) c2 += P.sX[i] && !P.sA[i];
    int64_t h1 = h0 + h2 - (c0 - c1 + c2);
    if (h1 < 0) bad("negative Betti number (internal inconsistency)");

    GradedDims g;
    if (h0) g.add(0, h0);
    if (h1) g.add(1, h1);
    if (h2) g.add(2, h2);
    return g;
}

namespace {

// Threshold subcomplex bits of {vals <= t} (closed rule), with the outer node
// ring forced in when force_boundary is set (the dBox part of A).
void threshold_bits(const std::vector<double>& vals, int nx, int ny, double t,
                    bool force_boundary, std::vector<uint8_t>& v,
                    std::vector<uint8_t>& eh, std::vector<uint8_t>& ev,
                    std::vector<uint8_t>& sq) {
    const int nxm = nx - 1, nym = ny - 1;
    v.assign(std::size_t(nx) * ny, 0);
    eh.assign(std::size_t(nxm) * ny, 0);
    ev.assign(std::size_t(nx) * nym, 0);
    sq.assign(std::size_t(nxm) * nym, 0);
    auto in = [&](int j, int i) { return vals[std::size_t(j) * nx + i] <= t; };
    auto bnd = [&](int j, int i) {
        return force_boundary && (i == 0 || j == 0 || i == nx - 1 || j == ny - 1);
    };
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i)
            v[j * nx + i] = in(j, i) || bnd(j, i);
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nxm; ++i)
            eh[j * nxm + i] = (in(j, i) && in(j, i + 1)) || (bnd(j, i) && bnd(j, i + 1));
    for (int j = 0; j < nym; ++j)
        for (int i = 0; i < nx; ++i)
            ev[j * nx + i] = (in(j, i) && in(j + 1, i)) || (bnd(j, i) && bnd(j + 1, i));
    for (int j = 0; j < nym; ++j)
        for (int i = 0; i < nxm; ++i)
            sq[j * nxm + i] = in(j, i) && in(j, i + 1) && in(j + 1, i) && in(j + 1, i + 1);
}

PairComplexGrid sublevel_pair_bits(const std::vector<double>& vals, int nx, int ny,
                                   double a, double b) {
    PairComplexGrid P;
    P.nx = nx;
    P.ny = ny;
    threshold_bits(vals, nx, ny, b, true, P.vX, P.ehX, P.evX, P.sX);
    threshold_bits(vals, nx, ny, a, true, P.vA, P.ehA, P.evA, P.sA);
    // A must sit inside X: nodes <= a are <= b, and the forced ring is shared.
    return P;
}

void union_into(const std::vector<uint8_t>& src, std::vector<uint8_t>& dst) {
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = dst[i] || src[i];
}

} // namespace

GradedDims sublevel_pair_grid(const std::vector<double>& node_vals, int nx, int ny,
                              double a, double b) {
    if (!(a < b)) throw std::invalid_argument("sublevel_pair_grid: need a < b");
    if (int64_t(nx) * ny != int64_t(node_vals.size()))
        throw std::invalid_argument("sublevel_pair_grid: size mismatch");
    return pair_homology(sublevel_pair_bits(node_vals, nx, ny, a, b));
}

GradedDims sublevel_pair_map_rank(const std::vector<double>& g_vals,
                                  const std::vector<double>& f_vals, int nx, int ny,
                                  double a, double b) {
    if (g_vals.size() != f_vals.size() || int64_t(nx) * ny != int64_t(f_vals.size()))
        throw std::invalid_argument("sublevel_pair_map_rank: size mismatch");
    for (std::size_t i = 0; i < g_vals.size(); ++i)
        if (g_vals[i] < f_vals[i] - 1e-12)
            throw std::runtime_error("sublevel_pair_map_rank: monotonicity certificate failed");
    PairComplexGrid C = sublevel_pair_bits(g_vals, nx, ny, a, b); // source pair
    PairComplexGrid D = sublevel_pair_bits(f_vals, nx, ny, a, b); // target pair
    GradedDims hC = pair_homology(C), hD = pair_homology(D);
    // Quotient complex of the inclusion: the pair (X_F, A_F u X_G).
    PairComplexGrid Q = D;
    union_into(C.vX, Q.vA);
    union_into(C.ehX, Q.ehA);
    union_into(C.evX, Q.evA);
    union_into(C.sX, Q.sA);
    GradedDims hQ = pair_homology(Q);
    // Cone LES: hQ_k = hD_k - r_k + hC_{k-1} - r_{k-1},  hQ_3 = hC_2 - r_2 = 0.
    int64_t r2 = hC.at(2);
    int64_t r0 = hD.at(0) - hQ.at(0);
    int64_t r1 = hD.at(1) + hC.at(0) - r0 - hQ.at(1);
    int64_t check2 = hD.at(2) - r2 + hC.at(1) - r1;
    if (r0 < 0 || r1 < 0 || r2 < 0 || r0 > std::min(hC.at(0), hD.at(0)) ||
        r1 > std::min(hC.at(1), hD.at(1)) || r2 > hD.at(2) || check2 != hQ.at(2))
        throw std::runtime_error("sublevel_pair_map_rank: cone rank identity failed");
    GradedDims r;
    if (r0) r.add(0, r0);
    if (r1) r.add(1, r1);
    if (r2) r.add(2, r2);
    return r;
}

} // namespace sbl
