#pragma once
#include <array>
#include <vector>
#include "sbl/sheaf.hpp"
#include "sbl/grading.hpp"

namespace sbl {

// Finite stratification of R by a sorted list of points.  Strata are indexed
// 0..2k: even indices are open intervals (stratum 0 = leftmost ray), odd
// indices are the points themselves.  k = 0 means the single stratum R.
struct Stratification {
    std::vector<ExtRat> points; // sorted, distinct, finite

    std::size_t num_strata() const { return 2 * points.size() + 1; }
    bool is_point_stratum(std::size_t i) const { return i % 2 == 1; }
    // Bounds of an open stratum (even index).
    ExtRat open_left(std::size_t i) const {
        return i == 0 ? ExtRat::neg_inf() : points[i / 2 - 1];
    }
    ExtRat open_right(std::size_t i) const {
        return i == 2 * points.size() ? ExtRat::pos_inf() : points[i / 2];
    }
    const ExtRat& point(std::size_t i) const { return points[(i - 1) / 2]; }
};

// Stalk dimension (0 or 1) of a single interval summand on a stratum of a
// stratification refining the summand's endpoints.
bool stalk_nonzero(const IntervalSummand& s, const Stratification& st, std::size_t i);

// Faithful stratified model of a SheafOnR: per-stratum graded stalk dims and
// the ranks of the generization maps from each point stratum to its two
// neighbouring open strata (left = 0, right = 1).
struct ZigzagRep {
    Stratification strat;
    std::vector<GradedDims> stalks;                      // per stratum
    std::vector<std::array<GradedDims, 2>> gen_ranks;    // per point, rank of map
};

ZigzagRep quiver_model(const SheafOnR& f, const std::vector<ExtRat>& extra_points = {});

// Derived global Hom between two SheafOnR, computed stratum-combinatorially
// (two-term cellular Hom complex on the common refinement; the stratification
// poset has global dimension 1).  Result is independent of extra refinement
// points, which exist for property tests.
GradedDims rhom_graded(const SheafOnR& f, const SheafOnR& g,
                       const std::vector<ExtRat>& extra_points = {});

} // namespace sbl
