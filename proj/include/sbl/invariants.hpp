#pragma once
#include "sbl/bm.hpp"
#include "sbl/gf_engine.hpp"
#include <memory>
#include <string>
#include <vector>

namespace sbl {

// Open quadratic sublevel set U = { z : z^T Q z < 1 } with Q positive
// definite.  All window invariants depend only on the capacity (area), and
// the stabilization state (cofinal profiles and their orbit tables) is
// shared across every window computed on the same DomainSpec.
class DomainSpec {
public:
    static DomainSpec ball(double capacity);
    static DomainSpec quadratic(const Mat2& Q);

    double capacity() const { return capacity_; }
    const Mat2& form() const { return Q_; }
    std::vector<double> spectrum(int k_max) const;
    double min_period() const { return capacity_; }
    StabilizationContext& context();
    // Replace the default alpha schedule (resets any cached tables).
    void set_schedule(std::vector<double> alphas);

private:
    DomainSpec(Mat2 Q, double capacity);
    Mat2 Q_;
    double capacity_;
    std::shared_ptr<StabilizationContext> ctx_; // lazy; shared by copies
};

struct InvariantReport {
    double window_a = 0, window_b = 0;
    GradedDims dims;
    bool exact = true;       // false: dims are rank upper bounds
    bool stabilized = true;  // false: cofinal limit not reached (bounds-mode)
    std::vector<std::string> provenance;
    std::vector<std::string> notes;
};

// HH of Sh_{U^c} over the window (a,b]: the stabilized generating-function
// homology with the identity degree dictionary (pinned by the low-window
// Borel-Moore identity).
InvariantReport hh_out_window(DomainSpec& U, double a, double b);

// HH of T(U) over a positive window (eps, L]: hh_out shifted by +1.
InvariantReport hh_in_window(DomainSpec& U, double eps, double L);

// HH of T(U) over (-inf, L]: long-exact-sequence assembly of the relative
// cohomology of the closure (degree {0:1}) with hh_in_window; exact when the
// connecting maps are forced to vanish by the degree pattern.
InvariantReport hh_full(DomainSpec& U, double L);

struct NineDiagramReport {
    // entries[row][col]: rows = windows (-d,e], (-d,L], (e,L];
    // cols = Sh_{U^c}, Gamma(M), T(U).
    InvariantReport entries[3][3];
    bool consistent = true;
    bool exact = true;
    std::vector<std::string> failures;
};

NineDiagramReport nine_diagram_check(DomainSpec& U, double eps, double L);

// k-th spectral jump of L -> hh_in_window(U, eps, L], located by presence
// bisection over off-spectrum probe windows, certified to +-1e-3.
double capacity(DomainSpec& U, int k);

} // namespace sbl
