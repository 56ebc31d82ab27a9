#include "sbl/profile.hpp"
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sbl {

namespace {
constexpr double kMu0 = 3.5;   // plunge shoulder value of m~ (non-integer in (3,4))
constexpr double kJoinTol = 1e-8;

// smoothstep 3x^2 - 2x^3 scaled to width w and height a, as a Poly in u.
Poly smoothstep_poly(double a, double w) {
    Poly p;
    p.c = {0.0, 0.0, 3.0 * a / (w * w), -2.0 * a / (w * w * w)};
    return p;
}
} // namespace

RadialProfile::RadialProfile(std::vector<double> breaks, std::vector<Poly> pieces,
                             double alpha)
    : breaks_(std::move(breaks)), pieces_(std::move(pieces)), alpha_(alpha) {
    if (breaks_.size() != pieces_.size() + 1 || breaks_.empty() || breaks_.front() != 0.0)
        throw std::invalid_argument("RadialProfile: malformed piece list");
    for (std::size_t i = 0; i + 1 < breaks_.size(); ++i)
        if (!(breaks_[i] < breaks_[i + 1]))
            throw std::invalid_argument("RadialProfile: breaks not increasing");
}

std::size_t RadialProfile::piece_index(double s) const {
    std::size_t i =
        std::upper_bound(breaks_.begin(), breaks_.end(), s) - breaks_.begin();
    return i == 0 ? 0 : i - 1;
}

double RadialProfile::h(double s) const {
    if (s >= support_end()) return 0.0;
    if (s < 0) throw std::invalid_argument("RadialProfile: s < 0");
    std::size_t i = piece_index(s);
    return pieces_[i].eval(s - breaks_[i]);
}

double RadialProfile::dh(double s) const {
    if (s >= support_end()) return 0.0;
    if (s < 0) throw std::invalid_argument("RadialProfile: s < 0");
    std::size_t i = piece_index(s);
    return pieces_[i].deriv().eval(s - breaks_[i]);
}

double RadialProfile::d2h(double s) const {
    if (s >= support_end()) return 0.0;
    if (s < 0) throw std::invalid_argument("RadialProfile: s < 0");
    std::size_t i = piece_index(s);
    return pieces_[i].deriv().deriv().eval(s - breaks_[i]);
}

double RadialProfile::max_slope() const {
    double m = 0;
    double f = support_end();
    for (int i = 0; i <= 4000; ++i)
        m = std::max(m, -dh(f * i / 4000.0));
    return m;
}

std::vector<double> RadialProfile::slope_levels(double m) const {
    std::vector<double> roots;
    for (std::size_t p = 0; p < pieces_.size(); ++p) {
        Poly md = pieces_[p].deriv().negated(); // m~ on this piece (local coord)
        double w = breaks_[p + 1] - breaks_[p];
        auto g = [&](double u) { return md.eval(u) - m; };
        constexpr int kSamples = 128;
        double maxabs = 0;
        for (int i = 0; i <= kSamples; ++i)
            maxabs = std::max(maxabs, std::abs(g(w * i / kSamples)));
        if (maxabs < 1e-12) {
            if (m != 0.0)
                throw std::runtime_error(
                    "RadialProfile: degenerate piece with h' constant at an integer");
            continue;
        }
        for (int i = 0; i < kSamples; ++i) {
            double u0 = w * i / kSamples, u1 = w * (i + 1) / kSamples;
            double g0 = g(u0), g1 = g(u1);
            if (g0 == 0.0 && i == 0) roots.push_back(breaks_[p] + u0);
            if (g0 * g1 >= 0 || g0 == 0.0) continue;
            for (int it = 0; it < 100; ++it) {
                double um = 0.5 * (u0 + u1);
                double gm = g(um);
                if (gm == 0.0) { u0 = u1 = um; break; }
                if ((gm > 0) == (g0 > 0)) { u0 = um; g0 = gm; }
                else u1 = um;
            }
            roots.push_back(breaks_[p] + 0.5 * (u0 + u1));
        }
    }
    // Deduplicate roots landing on piece junctions.
    std::sort(roots.begin(), roots.end());
    std::vector<double> out;
    for (double r : roots)
        if (out.empty() || r - out.back() > 1e-9) out.push_back(r);
    return out;
}

void RadialProfile::validate(bool require_cofinal_shape) const {
    for (std::size_t i = 0; i + 1 < pieces_.size(); ++i) {
        double w = breaks_[i + 1] - breaks_[i];
        double scale = std::max(1.0, std::abs(alpha_));
        if (std::abs(pieces_[i].eval(w) - pieces_[i + 1].eval(0)) > kJoinTol * scale)
            throw std::runtime_error("RadialProfile: h discontinuous at a break");
        if (std::abs(pieces_[i].deriv().eval(w) - pieces_[i + 1].deriv().eval(0)) >
            kJoinTol * scale)
            throw std::runtime_error("RadialProfile: h' discontinuous at a break");
        if (std::abs(pieces_[i].deriv().deriv().eval(w) -
                     pieces_[i + 1].deriv().deriv().eval(0)) > 1e-5 * scale)
            throw std::runtime_error("RadialProfile: h'' discontinuous at a break");
    }
    double f = support_end();
    if (std::abs(h(f - 1e-12 * f)) > 1e-6 * std::max(1.0, alpha_))
        throw std::runtime_error("RadialProfile: h does not vanish at support end");
    if (!require_cofinal_shape) return;
    if (std::abs(h(0.0) - alpha_) > 1e-9 * std::max(1.0, alpha_))
        throw std::runtime_error("RadialProfile: plateau height != alpha");
    for (int i = 1; i < 2000; ++i) {
        double s = f * i / 2000.0;
        if (dh(s) > 1e-9) throw std::runtime_error("RadialProfile: h' > 0 somewhere");
    }
}

std::vector<RadialProfile> cofinal_profiles(double c, const std::vector<double>& alphas) {
    if (c <= 0) throw std::invalid_argument("cofinal_profiles: capacity must be positive");
    for (std::size_t i = 0; i + 1 < alphas.size(); ++i)
        if (!(alphas[i] < alphas[i + 1]))
            throw std::invalid_argument("cofinal_profiles: alphas must increase");
    std::vector<RadialProfile> out;
    for (double alpha : alphas) {
        if (alpha <= 0) throw std::invalid_argument("cofinal_profiles: alpha <= 0");
        double d = 0.02 * c;
        // q controls both the support gap e*c and the plunge width eta;
        // shrinks ~ alpha^-3 so circle actions converge onto {k c}.
        double r = alpha / c;
        double q = 0.02 * c / (1.0 + r * r * r);
        double M = 0.0;
        for (int attempt = 0;; ++attempt) {
            double f = c - q;
            double eta = q;
            double L = f - eta - 2.0 * d;
            if (L <= 0.1 * c)
                throw std::runtime_error("cofinal_profiles: infeasible shape parameters");
            // alpha = M d/2 + L (M + mu0)/2 + eta mu0 / 2
            M = (2.0 * alpha - kMu0 * (L + eta)) / (d + L);
            if (M <= kMu0 + 0.5)
                throw std::runtime_error(
                    "cofinal_profiles: alpha too small for the plunge shape (need "
                    "alpha well above capacity)");
            if (std::abs(M - std::round(M)) > 1e-5) break;
            if (attempt > 20)
                throw std::runtime_error("cofinal_profiles: cannot avoid integer peak slope");
            q *= 1.001; // nudge off the degenerate integer-peak configuration
        }
        double f = c - q;
        double eta = q;
        double L = f - eta - 2.0 * d;
        // m~ = -h' per piece (local coordinates).
        Poly m0;                      // plateau: 0
        m0.c = {0.0};
        Poly m1 = smoothstep_poly(M, d);                         // rise 0 -> M
        Poly m2 = smoothstep_poly(-(M - kMu0), L);               // fall M -> mu0
        m2.c[0] += M;
        Poly m3 = smoothstep_poly(-kMu0, eta);                   // plunge mu0 -> 0
        m3.c[0] += kMu0;
        std::vector<double> breaks = {0.0, d, 2.0 * d, 2.0 * d + L, f};
        std::vector<Poly> mt = {m0, m1, m2, m3};
        // h(s) on piece i: h(s_{i+1}) + int_s^{s_{i+1}} m~ ; build from the right.
        std::vector<Poly> hp(4);
        double hend = 0.0;
        for (int i = 3; i >= 0; --i) {
            double w = breaks[i + 1] - breaks[i];
            Poly anti = mt[i].antideriv();
            Poly piece = anti.negated();
            piece.c[0] += hend + anti.eval(w);
            hp[i] = piece;
            hend = piece.eval(0.0);
        }
        RadialProfile prof(breaks, hp, alpha);
        prof.validate(true);
        out.push_back(std::move(prof));
    }
    // Pointwise monotonicity check (guaranteed by construction when the
    // q-sequence at least halves, but verified as the contract demands).
    for (std::size_t i = 0; i + 1 < out.size(); ++i) {
        double f = out[i + 1].support_end();
        for (int k = 0; k <= 2000; ++k) {
            double s = f * k / 2000.0;
            if (out[i].h(s) > out[i + 1].h(s) + 1e-9 * out[i + 1].alpha())
                throw std::runtime_error("cofinal_profiles: sequence not pointwise monotone");
        }
    }
    return out;
}

RadialProfile c1_small_profile(double f, double alpha) {
    if (f <= 0 || alpha <= 0)
        throw std::invalid_argument("c1_small_profile: f and alpha must be positive");
    // h = alpha on [0, f/2]; h = alpha (1 - S5(2(s - f/2)/f)) on [f/2, f],
    // with S5(x) = 10 x^3 - 15 x^4 + 6 x^5 (C^2 joins automatically).
    double r = 2.0 / f;
    Poly plateau{{alpha}};
    Poly descent{{alpha, 0.0, 0.0, -10.0 * alpha * r * r * r,
                  15.0 * alpha * r * r * r * r,
                  -6.0 * alpha * r * r * r * r * r}};
    RadialProfile prof({0.0, f / 2.0, f}, {plateau, descent}, alpha);
    prof.validate(false);
    return prof;
}

std::vector<double> default_alpha_schedule(double c) {
    // The plunge shape needs M > mu0 + 0.5, i.e. alpha above ~3.7 c; start
    // safely past that and grow geometrically so family actions converge.
    std::vector<double> a;
    double v = 4.0 * c;
    for (int i = 0; i < 7; ++i) {
        a.push_back(v);
        v *= 1.4;
    }
    return a;
}

} // namespace sbl
