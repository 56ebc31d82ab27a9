#pragma once
#include "sbl/bm.hpp"
#include "sbl/broken_gf.hpp"
#include "sbl/convolution.hpp"
#include "sbl/gf_engine.hpp"
#include "sbl/invariants.hpp"
#include "sbl/morse_bott.hpp"
#include "sbl/persistence.hpp"
#include "sbl/rs_index.hpp"
#include "sbl/trace_model.hpp"
#include "sbl/zigzag.hpp"
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace sbl {

// The acceptance gate: sixteen pass/fail verdicts with deterministic detail
// strings (wall-clock seconds are reported separately so that two runs from
// one seed serialize byte-identically).
struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0; // excluded from the canonical report
};

namespace acceptance_detail {

using Rng = std::mt19937_64;

inline Rat rnd_rat(Rng& rng, int lo = -40, int hi = 40) {
    std::uniform_int_distribution<int> num(lo, hi), den(1, 8);
    return Rat(num(rng), den(rng));
}

inline Rat rnd_pos_rat(Rng& rng) {
    std::uniform_int_distribution<int> num(1, 40), den(1, 8);
    return Rat(num(rng), den(rng));
}

inline SheafOnR rnd_sheaf(Rng& rng) {
    std::uniform_int_distribution<int> count(1, 4), kind(0, 3), shift(-2, 2);
    SheafOnR f;
    int n = count(rng);
    for (int i = 0; i < n; ++i) {
        Rat a = rnd_rat(rng);
        Rat b = a + rnd_pos_rat(rng);
        switch (kind(rng)) {
        case 0: f.summands.push_back(bar(ExtRat(a), ExtRat(b), shift(rng))); break;
        case 1: f.summands.push_back(half_line(ExtRat(a), shift(rng))); break;
        case 2: f.summands.push_back(point_sheaf(ExtRat(a), shift(rng))); break;
        default: f.summands.push_back(open_interval(ExtRat(a), ExtRat(b), shift(rng)));
        }
    }
    return normalize(f);
}

// Random object already in Tamarkin normal form: bars and closed half-lines.
inline SheafOnR rnd_tamarkin(Rng& rng) {
    std::uniform_int_distribution<int> count(1, 3), kind(0, 1), shift(-2, 2);
    SheafOnR f;
    int n = count(rng);
    for (int i = 0; i < n; ++i) {
        Rat a = rnd_rat(rng);
        if (kind(rng))
            f.summands.push_back(bar(ExtRat(a), ExtRat(a + rnd_pos_rat(rng)), shift(rng)));
        else
            f.summands.push_back(half_line(ExtRat(a), shift(rng)));
    }
    return normalize(f);
}

inline GradedDims graded_stalk(const SheafOnR& f, const ExtRat& t) {
    GradedDims out;
    for (const auto& s : f.summands) {
        bool left_ok = s.left_closed ? s.left <= t : s.left < t;
        bool right_ok = s.right_closed ? t <= s.right : t < s.right;
        if (left_ok && right_ok) out.add(-s.shift, s.mult);
    }
    return out;
}

inline Eigen::Matrix2d rotation(double a) {
    Eigen::Matrix2d r;
    r << std::cos(a), -std::sin(a), std::sin(a), std::cos(a);
    return r;
}

inline std::string fmt(double v, int prec = 6) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.*f", prec, v);
    return buf;
}

struct Check {
    bool pass = true;
    std::string detail;
    void fail(const std::string& why) {
        pass = false;
        if (detail.size() < 400) detail += (detail.empty() ? "" : "; ") + why;
    }
};

inline std::string rat_strq(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

// ---- criterion bodies -------------------------------------------------

inline CriterionResult crit1_convolution_formulas(Rng& rng) {
    Check ck;
    for (int i = 0; i < 100; ++i) {
        Rat a = rnd_pos_rat(rng), b = rnd_pos_rat(rng);
        SheafOnR lhs1 = convolve({open_interval(ExtRat(-a), ExtRat(a), 1)},
                                 {open_interval(ExtRat(-b), ExtRat(b), 1)});
        SheafOnR rhs1{open_interval(ExtRat(-(a + b)), ExtRat(a + b), 1)};
        if (!equal_normalized(lhs1, rhs1))
            ck.fail("open*open failed at a=" + rat_strq(a) + " b=" + rat_strq(b));
        SheafOnR lhs2 = convolve({closed_interval(ExtRat(-a), ExtRat(a))},
                                 {open_interval(ExtRat(-a), ExtRat(a), 1)});
        if (!equal_normalized(lhs2, SheafOnR{point_sheaf(ExtRat(0))}))
            ck.fail("closed*open failed at a=" + rat_strq(a));
        SheafOnR lhs3 = convolve({half_line(ExtRat(a))}, {half_line(ExtRat(b))});
        if (!equal_normalized(lhs3, SheafOnR{half_line(ExtRat(a + b))}))
            ck.fail("halfline sum failed");
    }
    return {1, "convolution formulas (100 random pairs, exact)", ck.pass,
            ck.pass ? "all identities exact" : ck.detail};
}

inline CriterionResult crit2_rule_vs_oracle(Rng& rng) {
    Check ck;
    for (int flags = 0; flags < 16; ++flags) {
        bool lc1 = flags & 1, rc1 = flags & 2, lc2 = flags & 4, rc2 = flags & 8;
        for (int inst = 0; inst < 20; ++inst) {
            Rat a = rnd_rat(rng), c = rnd_rat(rng);
            IntervalSummand s1{ExtRat(a), lc1, ExtRat(a + rnd_pos_rat(rng)), rc1, 0, 1};
            IntervalSummand s2{ExtRat(c), lc2, ExtRat(c + rnd_pos_rat(rng)), rc2, 0, 1};
            SheafOnR f{s1}, g{s2};
            SheafOnR conv = convolve(f, g);
            std::vector<ExtRat> pts;
            for (const ExtRat& u : {s1.left, s1.right})
                for (const ExtRat& v : {s2.left, s2.right}) {
                    pts.push_back(u + v);
                    pts.push_back(u + v + ExtRat(Rat(1, 16)));
                    pts.push_back(u + v - ExtRat(Rat(1, 16)));
                }
            while (pts.size() < 50) pts.push_back(ExtRat(rnd_rat(rng)));
            for (const ExtRat& t : pts)
                if (graded_stalk(conv, t) != convolve_stalk_oracle(f, g, t)) {
                    ck.fail("stalk mismatch flags=" + std::to_string(flags) + " at t=" +
                            t.str());
                    break;
                }
        }
    }
    return {2, "rule table vs stalk oracle (16 flag combos x 20 x 50 points)", ck.pass,
            ck.pass ? "exact graded-stalk agreement" : ck.detail};
}

inline CriterionResult crit3_unit_laws(Rng& rng) {
    Check ck;
    for (int i = 0; i < 100; ++i) {
        SheafOnR f = rnd_sheaf(rng);
        if (!equal_normalized(convolve({point_sheaf(ExtRat(0))}, f), f))
            ck.fail("unit law failed on " + f.str());
        SheafOnR p = tamarkin_project(f);
        if (!equal_normalized(tamarkin_project(p), p))
            ck.fail("projection not idempotent on " + f.str());
    }
    return {3, "unit law and projector idempotence (100 random sheaves)", ck.pass,
            ck.pass ? "exact" : ck.detail};
}

inline CriterionResult crit4_adjunction(Rng& rng) {
    Check ck;
    for (int i = 0; i < 50; ++i) {
        SheafOnR x = tamarkin_project(rnd_tamarkin(rng));
        SheafOnR g = tamarkin_project(rnd_tamarkin(rng));
        SheafOnR h = tamarkin_project(rnd_tamarkin(rng));
        GradedDims lhs = rhom_graded(convolve(x, g), h);
        GradedDims rhs = rhom_graded(x, shom_star(g, h));
        if (!(lhs == rhs))
            ck.fail("adjunction failed: " + lhs.str() + " vs " + rhs.str());
    }
    return {4, "convolution-hom adjunction (50 random triples)", ck.pass,
            ck.pass ? "exact" : ck.detail};
}

inline CriterionResult crit5_hom_filtration(Rng& rng) {
    Check ck;
    for (int i = 0; i < 50; ++i) {
        SheafOnR f = tamarkin_project(rnd_tamarkin(rng));
        SheafOnR g = tamarkin_project(rnd_tamarkin(rng));
        SheafOnR sh = shom_star(f, g);
        for (int j = 0; j < 10; ++j) {
            Rat c = rnd_rat(rng);
            GradedDims lhs = rhom_graded(f, translate(g, ExtRat(c)));
            GradedDims rhs = sample_gamma(sh, ExtRat(-c));
            if (!(lhs == rhs)) {
                ck.fail("hom filtration failed at c=" + rat_strq(c) + ": " + lhs.str() +
                        " vs " + rhs.str());
                break;
            }
        }
    }
    return {5, "hom-filtration identity (50 pairs x 10 translations)", ck.pass,
            ck.pass ? "exact" : ck.detail};
}

inline CriterionResult crit6_robbin_salamon(Rng& rng) {
    Check ck;
    for (double theta : {0.25, 0.75, 1.5, 2.5}) {
        auto path = [theta](double t) { return rotation(2 * M_PI * theta * t); };
        double got = rs_index(path);
        double want = 2 * std::floor(theta) + 1;
        if (std::abs(got - want) > 1e-9)
            ck.fail("rotation theta=" + fmt(theta, 2) + ": rs=" + fmt(got, 2) +
                    " want " + fmt(want, 2));
    }
    auto id_path = [](double) { return Eigen::Matrix2d::Identity().eval(); };
    if (std::abs(rs_index(id_path)) > 1e-9) ck.fail("identity path index nonzero");
    std::uniform_real_distribution<double> th(0.1, 2.9), ang(0, 2 * M_PI),
        str(0.5, 2.0);
    for (int i = 0; i < 20; ++i) {
        double theta = th(rng);
        if (std::abs(theta - std::round(theta)) < 0.05) theta += 0.07;
        Eigen::Matrix2d d = Eigen::Vector2d(str(rng), 0).asDiagonal();
        d(1, 1) = 1.0 / d(0, 0);
        Eigen::Matrix2d c = rotation(ang(rng)) * d * rotation(ang(rng));
        Eigen::Matrix2d cinv = c.inverse();
        auto path = [&, theta](double t) {
            return (c * rotation(2 * M_PI * theta * t) * cinv).eval();
        };
        double got = rs_index(path);
        double want = 2 * std::floor(theta) + 1;
        if (std::abs(got - want) > 1e-9) {
            ck.fail("conjugated rotation theta=" + fmt(theta) + ": rs=" + fmt(got, 2));
        }
    }
    return {6, "Robbin-Salamon index vs crossing-count oracle", ck.pass,
            ck.pass ? "exact half-integers" : ck.detail};
}

inline CriterionResult crit7_gf_critical_fidelity(Rng&) {
    Check ck;
    double c = M_PI;
    std::vector<double> alphas = default_alpha_schedule(c);
    alphas.resize(5);
    std::vector<RadialProfile> profs = cofinal_profiles(c, alphas);
    for (const RadialProfile& p : profs) {
        RadialOrbitTable table(p);
        std::vector<double> cvs = table.gf().interior_critical_values();
        std::vector<double> acts;
        for (const OrbitDatum& o : table.orbits()) acts.push_back(o.t_action);
        std::sort(acts.begin(), acts.end());
        if (cvs.size() != acts.size()) {
            ck.fail("count mismatch: " + std::to_string(cvs.size()) + " critical vs " +
                    std::to_string(acts.size()) + " orbits (alpha=" + fmt(p.alpha(), 2) +
                    ")");
            continue;
        }
        for (std::size_t i = 0; i < cvs.size(); ++i)
            if (std::abs(cvs[i] - acts[i]) > 1e-6) {
                ck.fail("value mismatch at alpha=" + fmt(p.alpha(), 2) + ": " +
                        fmt(cvs[i]) + " vs " + fmt(acts[i]));
                break;
            }
    }
    return {7, "GF critical values vs dynamics actions (5 cofinal profiles, 1e-6)",
            ck.pass, ck.pass ? "within 1e-6" : ck.detail};
}

inline CriterionResult crit8_quadratic_pair_law(Rng&) {
    Check ck;
    auto t0 = std::chrono::steady_clock::now();
    RadialProfile zero({0.0, 1.0}, {Poly{{0.0}}}, 0.0);
    HamiltonianSpec h = HamiltonianSpec::radial_ball(zero, M_PI);
    struct Case { double a, b; bool contains_zero; };
    for (int res : {257, 509}) {
        for (Case cse : {Case{-0.3, 0.7, true}, Case{0.2, 0.9, false},
                         Case{-0.9, -0.2, false}}) {
            WindowDims w = gf_homology_window(h, cse.a, cse.b, GfBackend::Grid, res);
            GradedDims want;
            if (cse.contains_zero) want.add(0, 1);
            if (!(w.dims == want))
                ck.fail("res=" + std::to_string(res) + " window (" + fmt(cse.a, 1) +
                        "," + fmt(cse.b, 1) + "]: " + w.dims.str() + " want " +
                        want.str());
        }
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                      .count();
    if (secs > 30) ck.fail("runtime exceeded 30 s");
    return {8, "quadratic pair law, H = 0, grid 257..509 nodes, < 30 s", ck.pass,
            ck.pass ? "G = {0:1} iff 0 in window" : ck.detail};
}

inline CriterionResult crit9_cross_backend(Rng& rng) {
    Check ck;
    std::uniform_real_distribution<double> fu(0.5, 2.0), ru(0.5, 1.0);
    for (int i = 0; i < 20 && ck.pass; ++i) {
        double f = fu(rng), alpha = 0.03 * f * ru(rng);
        RadialProfile prof = c1_small_profile(f, alpha);
        HamiltonianSpec h = HamiltonianSpec::radial_ball(prof, f);
        // critical t-values: 0 (exterior) and alpha (plateau); windows chosen
        // in and across the gaps
        struct W { double a, b; };
        // keep every window boundary at least 0.25 alpha away from the
        // critical values {0, alpha} so the oscillation certificate clears
        // at resolution 401
        std::uniform_real_distribution<double> jit(0.25, 0.45);
        double j1 = jit(rng) * alpha, j2 = (1 - jit(rng)) * alpha;
        for (W w : {W{-alpha, j1}, W{j1, 2 * alpha}, W{-alpha, 2 * alpha},
                    W{j1, j2}}) {
            WindowDims grid = gf_homology_window(h, w.a, w.b, GfBackend::Grid, 401);
            WindowDims comb =
                gf_homology_window(h, w.a, w.b, GfBackend::Combinatorial);
            if (!comb.exact) {
                ck.fail("combinatorial backend inexact on C1-small instance");
                break;
            }
            if (!(grid.dims == comb.dims)) {
                ck.fail("backend mismatch f=" + fmt(f) + " alpha=" + fmt(alpha) +
                        " window (" + fmt(w.a) + "," + fmt(w.b) + "]: grid " +
                        grid.dims.str() + " vs comb " + comb.dims.str());
                break;
            }
        }
    }
    return {9, "grid vs combinatorial backends (20 C1-small instances)", ck.pass,
            ck.pass ? "exact GradedDims equality" : ck.detail};
}

struct CapacityRun {
    bool ok = false;
    double values[3] = {0, 0, 0};
    std::string error;
};

inline CapacityRun run_ball_capacities(DomainSpec& u) {
    CapacityRun r;
    try {
        for (int k = 1; k <= 3; ++k) r.values[k - 1] = capacity(u, k);
        r.ok = true;
    } catch (const std::exception& e) {
        r.error = e.what();
    }
    return r;
}

inline CriterionResult crit10_ball_spectrum(DomainSpec& u, const CapacityRun& cap) {
    Check ck;
    auto t0 = std::chrono::steady_clock::now();
    if (!cap.ok) {
        ck.fail("capacity pipeline failed: " + cap.error);
    } else {
        for (int k = 1; k <= 3; ++k)
            if (std::abs(cap.values[k - 1] - k * M_PI) > 1e-3)
                ck.fail("jump " + std::to_string(k) + " at " + fmt(cap.values[k - 1]) +
                        ", want " + fmt(k * M_PI));
        // invariance inside a spectral gap: two windows with boundaries in the
        // same gaps give identical stabilized dims
        try {
            StabilizedResult w1 = stabilized_gf(u.context(), 0.4 * M_PI, 1.5 * M_PI);
            StabilizedResult w2 = stabilized_gf(u.context(), 0.6 * M_PI, 1.7 * M_PI);
            if (!w1.stabilized || !w2.stabilized || !(w1.dims == w2.dims))
                ck.fail("gap invariance failed: " + w1.dims.str() + " vs " +
                        w2.dims.str());
            StabilizedResult w3 = stabilized_gf(u.context(), 0.4 * M_PI, 2.5 * M_PI);
            if (!w3.stabilized || w3.dims == w1.dims)
                ck.fail("no change across spectral point 2pi");
        } catch (const std::exception& e) {
            ck.fail(std::string("gap windows: ") + e.what());
        }
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                      .count();
    (void)secs; // the bisection itself dominates; overall budget guarded by ctest
    return {10, "ball spectrum localization to +-1e-3 (combinatorial)", ck.pass,
            ck.pass ? "jumps at " + fmt(cap.values[0]) + ", " + fmt(cap.values[1]) +
                          ", " + fmt(cap.values[2])
                    : ck.detail};
}

inline CriterionResult crit11_low_window(DomainSpec& u) {
    Check ck;
    double d = u.min_period() / 2, eps = u.min_period() / 2;
    try {
        InvariantReport out = hh_out_window(u, -d, eps);
        GradedDims want_out = bm_invariant_degrees(PlanarRegion::ClosedComplement);
        if (!out.exact || !(out.dims == want_out))
            ck.fail("hh_out(-d,eps] = " + out.dims.str() + ", BM oracle " +
                    want_out.str());
        InvariantReport full = hh_full(u, eps);
        GradedDims want_full = bm_invariant_degrees(PlanarRegion::OpenDisk);
        if (!full.exact || !(full.dims == want_full))
            ck.fail("hh_full(eps) = " + full.dims.str() + ", BM oracle " +
                    want_full.str());
    } catch (const std::exception& e) {
        ck.fail(e.what());
    }
    return {11, "low-window Borel-Moore identity (exact)", ck.pass,
            ck.pass ? "hh_out = {} and hh_full = {0:1}, matching the PL oracle"
                    : ck.detail};
}

inline CriterionResult crit12_negative_vanishing(DomainSpec& u, Rng& rng) {
    Check ck;
    std::uniform_real_distribution<double> neg(-50.0, -0.01);
    for (int i = 0; i < 10; ++i) {
        double L = neg(rng);
        try {
            InvariantReport r = hh_full(u, L);
            if (!r.dims.empty() || !r.exact)
                ck.fail("hh_full(" + fmt(L) + ") nonzero: " + r.dims.str());
        } catch (const std::exception& e) {
            ck.fail(e.what());
        }
    }
    return {12, "negative-window vanishing (10 random L < 0, immediate)", ck.pass,
            ck.pass ? "all vanish without schedule iteration" : ck.detail};
}

inline CriterionResult crit13_nine_diagram(DomainSpec& u) {
    Check ck;
    try {
        NineDiagramReport r = nine_diagram_check(u, u.min_period() / 2, 1.5 * M_PI);
        if (!r.consistent)
            for (const std::string& f : r.failures) ck.fail(f);
        if (!r.exact) ck.fail("diagram has bounds-mode entries");
    } catch (const std::exception& e) {
        ck.fail(e.what());
    }
    return {13, "9-diagram rank consistency, ball, L in (pi, 2pi)", ck.pass,
            ck.pass ? "all six fiber sequences and the middle identity consistent"
                    : ck.detail};
}

inline CriterionResult crit14_capacity_table(DomainSpec& u, const CapacityRun& cap) {
    Check ck;
    if (!cap.ok) {
        ck.fail("capacity pipeline failed: " + cap.error);
    } else {
        for (int k = 1; k <= 3; ++k)
            if (std::abs(cap.values[k - 1] - k * M_PI) > 1e-3)
                ck.fail("capacity k=" + std::to_string(k) + " = " +
                        fmt(cap.values[k - 1]));
        // linear-symplectic image: an ellipse with the same area; the
        // pipeline operates on the normalized form, so the located k = 1
        // jump must agree exactly with the ball's
        Mat2 q;
        q << 4.0, 0.0, 0.0, 0.25; // det 1: same area pi as the unit-capacity ball
        DomainSpec ellipse = DomainSpec::quadratic(q);
        if (std::abs(ellipse.capacity() - M_PI) > 1e-12)
            ck.fail("ellipse capacity normalization failed");
        try {
            double e1 = capacity(ellipse, 1);
            if (e1 != cap.values[0])
                ck.fail("symplectic invariance: ellipse jump " + fmt(e1) +
                        " != ball jump " + fmt(cap.values[0]));
        } catch (const std::exception& e) {
            ck.fail(std::string("ellipse capacity: ") + e.what());
        }
    }
    return {14, "capacity table k = 1..3 and symplectic invariance", ck.pass,
            ck.pass ? "k pi within 1e-3; ellipse value identical" : ck.detail};
}

template <class K>
inline Matrix<K> rnd_matrix(Rng& rng, std::size_t r, std::size_t c, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    Matrix<K> m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = K(d(rng));
    return m;
}

template <class K>
inline bool one_trace_instance(Rng& rng) {
    std::uniform_int_distribution<int> nd(2, 6);
    std::size_t n = std::size_t(nd(rng));
    std::uniform_int_distribution<int> kd(0, int(n));
    std::size_t k = std::size_t(kd(rng));
    if (k == 0) {
        Matrix<K> e(n, n);
        auto rep = trace_retract_check(e);
        return rep.retract_rank == 0 && rep.trace_equals_rank && rep.trace_commutes;
    }
    // r * i must be invertible; over F2 with k = n a random pair succeeds
    // only ~8% of the time, so give the rejection loop a deep budget.
    for (int attempt = 0; attempt < 4000; ++attempt) {
        Matrix<K> i = rnd_matrix<K>(rng, n, k, -3, 3);
        Matrix<K> r = rnd_matrix<K>(rng, k, n, -3, 3);
        Matrix<K> ri = r * i;
        // invert ri by row reduction of the augmented system
        Matrix<K> aug(k, 2 * k);
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = 0; b < k; ++b) aug(a, b) = ri(a, b);
        for (std::size_t a = 0; a < k; ++a) aug(a, k + a) = field_one<K>();
        aug.rref();
        Matrix<K> inv(k, k);
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = 0; b < k; ++b) inv(a, b) = aug(a, k + b);
        // certify invertibility by the product (rref pivots can land in the
        // right half when ri is singular)
        if (!((inv * ri) - Matrix<K>::identity(k)).is_zero_matrix()) continue;
        Matrix<K> e = i * (inv * r);
        auto rep = trace_retract_check(e);
        if (rep.retract_rank != k) return false;
        return rep.trace_equals_rank && rep.trace_commutes &&
               trace_commutativity(i, r);
    }
    return false; // could not build an invertible instance (vanishingly unlikely)
}

inline CriterionResult crit15_trace_model(Rng& rng) {
    Check ck;
    for (int i = 0; i < 200; ++i) {
        if (!one_trace_instance<Rat>(rng)) ck.fail("rational instance failed");
        if (!one_trace_instance<F2>(rng)) ck.fail("F2 instance failed");
        if (!ck.pass) break;
    }
    return {15, "trace model: 200 split idempotents over Q and F2", ck.pass,
            ck.pass ? "Tr(e) = Tr(id_retract) exactly" : ck.detail};
}

} // namespace acceptance_detail

// Canonical machine-readable report: id, name, verdict, detail only (no
// timings), one line per criterion, fixed order.
inline std::string acceptance_report(const std::vector<CriterionResult>& rs) {
    std::ostringstream os;
    for (const auto& r : rs)
        os << r.id << "\t" << (r.pass ? "PASS" : "FAIL") << "\t" << r.name << "\t"
           << r.detail << "\n";
    return os.str();
}

// Criteria 1-15.  Criterion 16 (determinism) is layered on top by the
// callers: run the core twice from one seed and compare canonical reports.
inline std::vector<CriterionResult> run_acceptance_core(std::uint64_t seed) {
    using namespace acceptance_detail;
    std::vector<CriterionResult> out;
    // An escaped exception is an honest FAIL for that criterion (with a
    // deterministic detail string), never a crash of the whole gate.
    auto timed = [&out](int id, const std::string& name, auto&& fn) {
        auto t0 = std::chrono::steady_clock::now();
        CriterionResult r;
        try {
            r = fn();
        } catch (const std::exception& e) {
            r = {id, name, false, std::string("exception: ") + e.what(), 0};
        }
        r.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                .count();
        out.push_back(std::move(r));
    };
    Rng rng(seed);
    timed(1, "convolution formulas", [&] { return crit1_convolution_formulas(rng); });
    timed(2, "rule table vs stalk oracle", [&] { return crit2_rule_vs_oracle(rng); });
    timed(3, "unit laws", [&] { return crit3_unit_laws(rng); });
    timed(4, "adjunction", [&] { return crit4_adjunction(rng); });
    timed(5, "hom filtration", [&] { return crit5_hom_filtration(rng); });
    timed(6, "robbin-salamon", [&] { return crit6_robbin_salamon(rng); });
    timed(7, "gf critical fidelity", [&] { return crit7_gf_critical_fidelity(rng); });
    timed(8, "quadratic pair law", [&] { return crit8_quadratic_pair_law(rng); });
    timed(9, "cross-backend", [&] { return crit9_cross_backend(rng); });

    DomainSpec ball = DomainSpec::ball(M_PI);
    CapacityRun cap;
    timed(10, "ball spectrum localization", [&] {
        cap = run_ball_capacities(ball);
        return crit10_ball_spectrum(ball, cap);
    });
    timed(11, "low-window identities", [&] { return crit11_low_window(ball); });
    timed(12, "negative-window vanishing",
          [&] { return crit12_negative_vanishing(ball, rng); });
    timed(13, "nine-diagram consistency", [&] { return crit13_nine_diagram(ball); });
    timed(14, "capacity table", [&] { return crit14_capacity_table(ball, cap); });
    timed(15, "trace model", [&] { return crit15_trace_model(rng); });
    return out;
}

inline std::vector<CriterionResult> run_acceptance(std::uint64_t seed) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<CriterionResult> first = run_acceptance_core(seed);
    std::vector<CriterionResult> second = run_acceptance_core(seed);
    CriterionResult det;
    det.id = 16;
    det.name = "determinism: two runs from one seed, byte-identical reports";
    det.pass = acceptance_report(first) == acceptance_report(second);
    det.detail = det.pass ? "reports byte-identical" : "reports differ between runs";
    det.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    first.push_back(std::move(det));
    return first;
}

} // namespace sbl
