#pragma once
#include "sbl/broken_gf.hpp"
#include "sbl/grading.hpp"
#include "sbl/hamiltonian.hpp"
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sbl {

// Window boundary coincides with a critical/orbit action value.
struct WindowError : std::runtime_error {
    double offending;
    explicit WindowError(const std::string& msg, double v)
        : std::runtime_error(msg), offending(v) {}
};

struct GfGenerator {
    int degree = 0;      // normalized degree (geometric index - iota)
    double t_action = 0;
    OrbitKind kind = OrbitKind::Constant;
    int winding = 0;     // |h'| at the family level; 0 for constants
    double level = 0;
};

// Filtered complex over a window (a,b].  Differential policy: an entry is
// forced to zero when the degrees do not differ by exactly one or when the
// filtration values agree (the differential strictly moves t_action); any
// entry that is not forced is never guessed -- the complex is flagged
// indeterminate and only generator counts (upper bounds) may be reported.
struct FilteredComplex {
    std::vector<GfGenerator> generators;
    bool indeterminate = false;
    std::vector<std::string> notes;

    GradedDims generator_counts() const;
    // Homology ranks; valid (and equal to generator counts) exactly when all
    // differential entries are forced to zero.  Throws if indeterminate.
    GradedDims homology() const;
};

// Cached per-profile orbit data: the broken GF scheme (odd N), its reference
// index iota, the orbit list, and lazily computed transverse Morse indices
// lambda of the circle families (negative eigenvalue count of the discrete
// Hessian minus the rotational zero mode).
class RadialOrbitTable {
public:
    explicit RadialOrbitTable(RadialProfile profile);

    const RadialProfile& profile() const { return profile_; }
    int steps() const { return N_; }
    int iota() const { return gf_->iota(); }
    const BrokenGF& gf() const { return *gf_; }
    const std::vector<OrbitDatum>& orbits() const { return orbits_; }
    int lambda_of(int orbit_index); // circle families only

private:
    RadialProfile profile_;
    int N_ = 1;
    std::optional<BrokenGF> gf_;
    std::vector<OrbitDatum> orbits_;
    std::map<int, int> lambda_;
};

// Combinatorial Morse-Bott complex of the window (a,b]: one degree-0
// generator for the plateau (flat-maximum rule), none for the exterior, and
// a split pair of degrees (lambda - iota, lambda + 1 - iota) per circle
// family.  Throws WindowError when a or b touches an orbit action (or 0).
FilteredComplex morse_bott_complex(RadialOrbitTable& table, double a, double b);
FilteredComplex morse_bott_complex(const HamiltonianSpec& H, double a, double b);

} // namespace sbl
