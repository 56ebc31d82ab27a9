#pragma once
#include "sbl/grading.hpp"
#include <cstdint>
#include <vector>

namespace sbl {

// A closed cubical pair (X, A), A subcomplex of X, on an nx-by-ny node grid.
// Bits are stored per cell: nodes, horizontal edges (node -> node+x), vertical
// edges, squares; row-major.  The boundary matrices of such a pair are network
// matrices (every edge row meets at most two squares, with opposite signs
// under the standard orientations), hence totally unimodular: homology is
// free and field-independent, and the Betti numbers in geometric degrees
// 0..2 reduce to exact combinatorial counts (union-find + Euler identity).
struct PairComplexGrid {
    int nx = 0, ny = 0;
    std::vector<uint8_t> vX, vA;   // nx*ny
    std::vector<uint8_t> ehX, ehA; // (nx-1)*ny
    std::vector<uint8_t> evX, evA; // nx*(ny-1)
    std::vector<uint8_t> sX, sA;   // (nx-1)*(ny-1)

    void validate() const; // A subset of X; both closed subcomplexes
};

GradedDims pair_homology(const PairComplexGrid& P);

// H_*({F <= b}, {F <= a} u dBox): closed-subcomplex rule (a cell belongs to a
// sublevel iff all its corner nodes do); the outermost node ring is dBox.
GradedDims sublevel_pair_grid(const std::vector<double>& node_vals, int nx, int ny,
                              double a, double b);

// Rank per geometric degree of H_*(pair of G) -> H_*(pair of F) induced by
// inclusion when G >= F nodewise (sublevels of G nest into sublevels of F).
// Computed from the mapping-cone identity: the quotient complex is the pair
// (X_F, A_F u X_G), so all three terms are union-find computations.
GradedDims sublevel_pair_map_rank(const std::vector<double>& g_vals,
                                  const std::vector<double>& f_vals, int nx, int ny,
                                  double a, double b);

} // namespace sbl
