#pragma once
#include <cstddef>
#include <string>
#include <vector>

namespace sbl {

// Dense-coefficient polynomial in one variable, p(x) = sum c[i] x^i.
struct Poly {
    std::vector<double> c;

    double eval(double x) const {
        double v = 0;
        for (std::size_t i = c.size(); i-- > 0;) v = v * x + c[i];
        return v;
    }
    Poly deriv() const {
        Poly d;
        for (std::size_t i = 1; i < c.size(); ++i) d.c.push_back(c[i] * double(i));
        return d;
    }
    Poly antideriv() const { // vanishing at 0
        Poly a;
        a.c.push_back(0.0);
        for (std::size_t i = 0; i < c.size(); ++i) a.c.push_back(c[i] / double(i + 1));
        return a;
    }
    Poly negated() const {
        Poly n = *this;
        for (double& x : n.c) x = -x;
        return n;
    }
};

// Radial Hamiltonian profile h(s) of the level variable s = pi |z|^2,
// piecewise polynomial, h' of compact support, C^2.  For s >= support_end
// the profile is identically 0; h(0) = alpha (the plateau height).
class RadialProfile {
public:
    // pieces[i] is h on [breaks[i], breaks[i+1]] as a polynomial in
    // (s - breaks[i]); breaks.front() == 0.
    RadialProfile() = default;
    RadialProfile(std::vector<double> breaks, std::vector<Poly> pieces, double alpha);

    double h(double s) const;
    double dh(double s) const;
    double d2h(double s) const;
    double alpha() const { return alpha_; }
    double support_end() const { return breaks_.back(); }
    double max_slope() const; // max of -h' = m~
    const std::vector<double>& breaks() const { return breaks_; }
    const std::vector<Poly>& pieces() const { return pieces_; }

    // All solutions of -h'(s) = m on the open support, ascending, found by
    // per-piece monotone isolation + bisection.  Throws on degenerate pieces
    // (h' constant equal to -m on a whole piece).
    std::vector<double> slope_levels(double m) const;

    // C^2 continuity + shape validation; throws std::runtime_error on failure.
    void validate(bool require_cofinal_shape) const;

private:
    std::size_t piece_index(double s) const;
    std::vector<double> breaks_;
    std::vector<Poly> pieces_;    // h per piece (local coordinate)
    double alpha_ = 0;
};

// The paper-shaped cofinal sequence on a domain of capacity c: plateau alpha
// on [0,d]; C^1 rise of m~ = -h' to peak M; strictly decreasing fall to
// mu0 in (3,4); fast plunge to 0 at f = c(1-e).  e, eta shrink ~ alpha^-3
// so circle-family actions approach the Reeb spectrum {k c} quickly.
std::vector<RadialProfile> cofinal_profiles(double c, const std::vector<double>& alphas);

// A C^2, C^1-small profile: plateau alpha on [0, f/2], quintic-smoothstep
// descent to 0 at f.  max_slope = 3.75 alpha / f, so small alpha keeps the
// N = 1 broken generating function within the step-size threshold.
RadialProfile c1_small_profile(double f, double alpha);

// Default alpha schedule used by stabilized computations.
std::vector<double> default_alpha_schedule(double c);

} // namespace sbl
