#pragma once
#include "sbl/grading.hpp"
#include "sbl/morse_bott.hpp"
#include <memory>
#include <string>
#include <vector>

namespace sbl {

enum class GfBackend { Grid, Combinatorial };

struct WindowDims {
    GradedDims dims;
    bool exact = true; // false: dims are generator-count upper bounds
    std::vector<std::string> notes;
};

// G_*^{(a,b]}(phi^H) in normalized degrees (geometric degree - iota).
// Grid backend: N = 1 broken GF evaluated by the grid kernels, relative
// cubical sublevel pair, window clearance certified by a Lipschitz
// oscillation bound (resolution = nodes per axis).  Combinatorial backend:
// homology of morse_bott_complex.
WindowDims gf_homology_window(const HamiltonianSpec& H, double a, double b,
                              GfBackend backend, int resolution = 257);

// Ranks per degree of the continuation map for H >= K pointwise (window
// invariants of H map to those of K).  Grid: induced map of relative cubical
// homologies via sublevel inclusion.  Combinatorial: generator matching.
WindowDims continuation_map(const HamiltonianSpec& H, const HamiltonianSpec& K,
                            double a, double b, GfBackend backend,
                            int resolution = 257);

// Shared per-domain state for the stabilized limit: the cofinal profile
// sequence and lazily built orbit/index tables (reused across windows, which
// keeps capacity bisection affordable).
class StabilizationContext {
public:
    StabilizationContext(double capacity, std::vector<double> alphas);
    double capacity() const { return capacity_; }
    const std::vector<double>& alphas() const { return alphas_; }
    int size() const { return int(profiles_.size()); }
    RadialOrbitTable& table(int i);
    const RadialProfile& profile(int i) const { return profiles_[i]; }

private:
    double capacity_;
    std::vector<double> alphas_;
    std::vector<RadialProfile> profiles_;
    std::vector<std::unique_ptr<RadialOrbitTable>> tables_;
};

struct StabilizedResult {
    bool stabilized = false;
    bool exact = true;
    GradedDims dims;
    int tail_index = -1;              // schedule index where the tail starts
    std::vector<std::string> trace;   // one record per schedule member
};

// Runs the cofinal sequence until three consecutive terms agree and the
// continuation maps between them are isomorphisms in every degree.  Never
// truncates silently: on failure, stabilized = false and the full trace is
// returned.  Only the combinatorial backend supports the cofinal profiles.
StabilizedResult stabilized_gf(StabilizationContext& ctx, double a, double b,
                               GfBackend backend = GfBackend::Combinatorial);

} // namespace sbl
