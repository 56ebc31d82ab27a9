#pragma once
#include "sbl/grading.hpp"

namespace sbl {

// Reference planar regions with hand-built PL pair models.  For a region U,
// Borel-Moore homology is the homology of a compact cellular pair (X, A):
// the closure rel its frontier (including the circle at infinity for
// unbounded regions).  The three models have torsion-free, totally
// unimodular boundary matrices, so the dimensions are field-independent.
enum class PlanarRegion {
    OpenDisk,          // bounded open disk
    ClosedComplement,  // closed complement of an open disk in the plane
    Plane              // all of R^2
};

// Borel-Moore Betti numbers, indexed by geometric (cellular) degree.
GradedDims bm_homology(PlanarRegion region);

// Invariant-side reindexing: degree = 2 - (Borel-Moore degree).
GradedDims bm_invariant_degrees(PlanarRegion region);

} // namespace sbl
