#include "sbl/bm.hpp"
#include "sbl/chain_complex.hpp"
#include "sbl/field.hpp"

namespace sbl {

namespace {

// Cells of dimension k live at complex degree -k, so the cellular boundary
// C_k -> C_{k-1} matches the cohomological convention d : C^{-k} -> C^{-k+1}.
// The returned GradedDims is reindexed back to cellular degrees.
GradedDims pair_homology_model(const ChainComplex<Rat>& total,
                               const std::map<int, std::set<std::size_t>>& sub) {
    GradedDims raw = total.quotient(sub).homology();
    GradedDims out;
    for (const auto& [deg, d] : raw.entries()) out.add(-deg, d);
    return out;
}

// Closed disk: vertex v, loop edge e, 2-cell f (d f = 0 since the loop's
// cellular boundary cancels; d e = 0).  A = boundary circle {v, e}.
GradedDims disk_rel_boundary() {
    ChainComplex<Rat> cc;
    cc.set_dim(0, 1);   // v
    cc.set_dim(-1, 1);  // e
    cc.set_dim(-2, 1);  // f
    cc.set_boundary(-1, Matrix<Rat>(1, 1)); // d e = 0
    cc.set_boundary(-2, Matrix<Rat>(1, 1)); // d f = 0 (degree-2 attachment
                                            // cancels over the loop)
    return pair_homology_model(cc, {{0, {0}}, {-1, {0}}});
}

// Annulus: vertices v_in, v_out; edges e_in (loop), e_out (loop),
// e_r (v_in -> v_out); square 2-cell f with d f = e_in - e_out.
// A = outer circle {v_out, e_out} (the circle at infinity).
GradedDims annulus_rel_outer() {
    ChainComplex<Rat> cc;
    cc.set_dim(0, 2);   // v_in, v_out
    cc.set_dim(-1, 3);  // e_in, e_out, e_r
    cc.set_dim(-2, 1);  // f
    Matrix<Rat> d1(2, 3);
    d1(0, 2) = Rat(-1); // e_r: v_out - v_in
    d1(1, 2) = Rat(1);
    cc.set_boundary(-1, d1);
    Matrix<Rat> d2(3, 1);
    d2(0, 0) = Rat(1);  // e_in
    d2(1, 0) = Rat(-1); // -e_out
    cc.set_boundary(-2, d2);
    return pair_homology_model(cc, {{0, {1}}, {-1, {1}}});
}

} // namespace

GradedDims bm_homology(PlanarRegion region) {
    switch (region) {
    case PlanarRegion::OpenDisk:
        // closure rel frontier = (closed disk, boundary circle)
        return disk_rel_boundary();
    case PlanarRegion::ClosedComplement:
        // already closed; frontier at infinity = outer circle of an annulus
        return annulus_rel_outer();
    case PlanarRegion::Plane:
        // (closed disk, circle at infinity): same model as the open disk
        return disk_rel_boundary();
    }
    throw std::invalid_argument("bm_homology: unknown region");
}

GradedDims bm_invariant_degrees(PlanarRegion region) {
    GradedDims bm = bm_homology(region);
    GradedDims out;
    for (const auto& [deg, d] : bm.entries()) out.add(2 - deg, d);
    return out;
}

} // namespace sbl
