#pragma once
#include "sbl/sheaf.hpp"
#include "sbl/grading.hpp"

namespace sbl {

// Compactly supported cohomology of an interval, shifted by the summand
// degree: closed bounded -> {-n:1}; open (bounded, ray or R) -> {1-n:1};
// half-open -> {}.  Infinite ends count as open.
GradedDims gamma_c_interval(const IntervalSummand& s);

// Graded stalk of (F * G) at t via proper base change: compactly supported
// cohomology of the fiber I cap (t - J) summed over summand pairs.
GradedDims convolve_stalk_oracle(const SheafOnR& f, const SheafOnR& g, const ExtRat& t);

// Convolution F * G = s_!(F box G).  Symbolic: per summand pair, the exact
// stalk-degree function on the Minkowski-sum stratification is computed and
// maximal constant-degree runs are glued into interval summands.
SheafOnR convolve(const SheafOnR& f, const SheafOnR& g);

// Projection to the Tamarkin normal form: F * 1_{[0,inf)}.
SheafOnR tamarkin_project(const SheafOnR& f);

// Internal Hom for the convolution structure, on Tamarkin normal forms.
// Closed-form rules validated by the adjunction
// rhom(convolve(X,G), H) = rhom(X, shom_star(G,H)).
SheafOnR shom_star(const SheafOnR& f, const SheafOnR& g);

} // namespace sbl
