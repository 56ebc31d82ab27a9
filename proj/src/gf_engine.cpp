#include "sbl/gf_engine.hpp"
#include "sbl/cubical.hpp"
#include "sbl/grid_kernels.hpp"
#include <algorithm>
#include <cmath>

namespace sbl {

namespace {

std::vector<double> grid_values(const BrokenGF& gf, int resolution) {
    RadialKernelParams p = make_kernel_params(gf);
    double L = gf.box_half();
    std::vector<double> sigma(std::size_t(resolution) * resolution);
    for (int j = 0; j < resolution; ++j) {
        double y = -L + 2.0 * L * j / (resolution - 1);
        for (int i = 0; i < resolution; ++i) {
            double x = -L + 2.0 * L * i / (resolution - 1);
            sigma[std::size_t(j) * resolution + i] = M_PI * (x * x + y * y);
        }
    }
    std::vector<double> vals(sigma.size());
    eval_action(sigma.data(), vals.data(), sigma.size(), p);
    return vals;
}

// Certified Lipschitz bound of F(z) = w(pi |z|^2) on the box:
// |grad F| = 2 pi |w'(u)| sqrt(u/pi), sampled densely with a safety margin.
double lipschitz_bound(const BrokenGF& gf) {
    double L = gf.box_half();
    double umax = M_PI * 2.0 * L * L; // corner radius
    double best = 0;
    for (int i = 0; i <= 4000; ++i) {
        double u = umax * i / 4000.0;
        double g = 2.0 * M_PI * std::abs(gf.wprime_of_sigma(u)) * std::sqrt(u / M_PI);
        best = std::max(best, g);
    }
    return 1.25 * best;
}

void check_clearance(const BrokenGF& gf, double a, double b, double osc) {
    std::vector<double> cvs = gf.interior_critical_values();
    cvs.push_back(0.0);
    for (double cv : cvs)
        for (double t : {a, b}) {
            double d = std::abs(t - cv);
            if (d < 1e-12)
                throw WindowError("gf grid: window touches critical value " +
                                  std::to_string(cv), cv);
            if (d <= 2.0 * osc)
                throw WindowError(
                    "gf grid: resolution insufficient; window boundary " +
                    std::to_string(t) + " within oscillation bound of critical value " +
                    std::to_string(cv), cv);
        }
}

GradedDims shift_keys(const GradedDims& g, int shift) {
    return g.shifted(shift);
}

WindowDims grid_window(const HamiltonianSpec& H, double a, double b, int resolution) {
    if (H.type != HamiltonianSpec::Type::Radial)
        throw std::invalid_argument("gf grid backend: radial Hamiltonians only");
    if (resolution < 17 || resolution > 1025)
        throw std::invalid_argument("gf grid backend: resolution out of range");
    BrokenGF gf = gf_build(H, 1);
    double cell = 2.0 * gf.box_half() / (resolution - 1);
    double osc = lipschitz_bound(gf) * cell * std::sqrt(2.0);
    check_clearance(gf, a, b, osc);
    std::vector<double> vals = grid_values(gf, resolution);
    WindowDims w;
    w.dims = shift_keys(sublevel_pair_grid(vals, resolution, resolution, a, b),
                        -gf.iota());
    w.notes.push_back("grid backend, resolution " + std::to_string(resolution) +
                      ", oscillation bound " + std::to_string(osc));
    return w;
}

WindowDims combinatorial_window(RadialOrbitTable& table, double a, double b) {
    FilteredComplex fc = morse_bott_complex(table, a, b);
    WindowDims w;
    w.notes = fc.notes;
    if (fc.indeterminate) {
        w.exact = false;
        w.dims = fc.generator_counts();
        w.notes.push_back("INDETERMINATE: dims are generator-count upper bounds");
    } else {
        w.dims = fc.homology();
    }
    return w;
}

// Generator matching between two combinatorial window complexes (aligned
// cofinal profiles): plateau matches plateau, circle families match by
// winding and normalized degree.
GradedDims match_ranks(const FilteredComplex& src, const FilteredComplex& dst,
                       std::vector<std::string>& notes) {
    GradedDims r;
    auto count = [](const FilteredComplex& fc, auto pred) {
        int64_t n = 0;
        for (const auto& g : fc.generators)
            if (pred(g)) ++n;
        return n;
    };
    // plateau
    int64_t ps = count(src, [](const GfGenerator& g) {
        return g.kind == OrbitKind::Constant;
    });
    int64_t pd = count(dst, [](const GfGenerator& g) {
        return g.kind == OrbitKind::Constant;
    });
    if (ps && pd) r.add(0, std::min(ps, pd));
    // families, keyed by (winding, degree)
    std::map<std::pair<int, int>, std::pair<int64_t, int64_t>> fam;
    for (const auto& g : src.generators)
        if (g.kind == OrbitKind::CircleFamily) fam[{g.winding, g.degree}].first++;
    for (const auto& g : dst.generators)
        if (g.kind == OrbitKind::CircleFamily) fam[{g.winding, g.degree}].second++;
    for (const auto& [key, cnt] : fam) {
        int64_t m = std::min(cnt.first, cnt.second);
        if (m) r.add(key.second, m);
        if (cnt.first != cnt.second)
            notes.push_back("unmatched family generators at winding " +
                            std::to_string(key.first) + ", degree " +
                            std::to_string(key.second));
    }
    return r;
}

} // namespace

WindowDims gf_homology_window(const HamiltonianSpec& H, double a, double b,
                              GfBackend backend, int resolution) {
    if (!(a < b)) throw std::invalid_argument("gf_homology_window: need a < b");
    if (backend == GfBackend::Grid) return grid_window(H, a, b, resolution);
    if (H.type != HamiltonianSpec::Type::Radial)
        throw std::invalid_argument("gf combinatorial backend: radial only");
    RadialOrbitTable table(H.profile);
    return combinatorial_window(table, a, b);
}

WindowDims continuation_map(const HamiltonianSpec& H, const HamiltonianSpec& K,
                            double a, double b, GfBackend backend, int resolution) {
    if (H.type != HamiltonianSpec::Type::Radial ||
        K.type != HamiltonianSpec::Type::Radial)
        throw std::invalid_argument("continuation_map: radial only");
    // H >= K pointwise, certified on the profiles.
    double f = std::max(H.profile.support_end(), K.profile.support_end());
    for (int i = 0; i <= 2000; ++i) {
        double s = f * i / 2000.0;
        if (H.profile.h(s) < K.profile.h(s) - 1e-12)
            throw std::runtime_error("continuation_map: monotonicity certificate failed");
    }
    WindowDims w;
    if (backend == GfBackend::Grid) {
        BrokenGF gH = gf_build(H, 1), gK = gf_build(K, 1);
        double box = std::max(gH.box_half(), gK.box_half());
        RadialKernelParams pH = make_kernel_params(gH), pK = make_kernel_params(gK);
        std::vector<double> sigma(std::size_t(resolution) * resolution);
        for (int j = 0; j < resolution; ++j) {
            double y = -box + 2.0 * box * j / (resolution - 1);
            for (int i = 0; i < resolution; ++i) {
                double x = -box + 2.0 * box * i / (resolution - 1);
                sigma[std::size_t(j) * resolution + i] = M_PI * (x * x + y * y);
            }
        }
        std::vector<double> vH(sigma.size()), vK(sigma.size());
        eval_action(sigma.data(), vH.data(), sigma.size(), pH);
        eval_action(sigma.data(), vK.data(), sigma.size(), pK);
        double cell = 2.0 * box / (resolution - 1);
        double osc = std::max(lipschitz_bound(gH), lipschitz_bound(gK)) * cell *
                     std::sqrt(2.0);
        check_clearance(gH, a, b, osc);
        check_clearance(gK, a, b, osc);
        if (gH.iota() != gK.iota())
            throw std::runtime_error("continuation_map: scheme mismatch");
        w.dims = sublevel_pair_map_rank(vH, vK, resolution, resolution, a, b)
                     .shifted(-gH.iota());
        return w;
    }
    RadialOrbitTable tH(H.profile), tK(K.profile);
    FilteredComplex fH = morse_bott_complex(tH, a, b);
    FilteredComplex fK = morse_bott_complex(tK, a, b);
    if (fH.indeterminate || fK.indeterminate) {
        w.exact = false;
        w.notes.push_back("INDETERMINATE window; matching ranks are upper bounds");
    }
    w.dims = match_ranks(fH, fK, w.notes);
    return w;
}

StabilizationContext::StabilizationContext(double capacity, std::vector<double> alphas)
    : capacity_(capacity), alphas_(std::move(alphas)) {
    profiles_ = cofinal_profiles(capacity_, alphas_);
    tables_.resize(profiles_.size());
}

RadialOrbitTable& StabilizationContext::table(int i) {
    if (!tables_.at(i)) tables_[i] = std::make_unique<RadialOrbitTable>(profiles_[i]);
    return *tables_[i];
}

StabilizedResult stabilized_gf(StabilizationContext& ctx, double a, double b,
                               GfBackend backend) {
    if (backend != GfBackend::Combinatorial)
        throw std::invalid_argument(
            "stabilized_gf: the cofinal profiles require the combinatorial backend "
            "(grid backend is limited to N = 1)");
    if (!(a < b)) throw std::invalid_argument("stabilized_gf: need a < b");
    double c = ctx.capacity();
    for (int k = 1; k <= int(std::ceil(std::max(b, 0.0) / c)) + 1; ++k)
        for (double t : {a, b})
            if (std::abs(t - k * c) < 1e-9)
                throw WindowError("stabilized_gf: window boundary on the Reeb "
                                  "spectrum at " + std::to_string(k * c), k * c);

    StabilizedResult res;
    if (b <= 0.0) {
        // Every generator action is >= 0 (t = m s + h and the plateau/exterior
        // values), so all terms vanish identically.
        res.stabilized = true;
        res.dims = GradedDims{};
        res.tail_index = 0;
        res.trace.push_back("window below 0 in t: immediate vanishing");
        return res;
    }

    std::vector<int> valid;                 // schedule indices with a computed term
    std::vector<GradedDims> dims(ctx.size());
    std::vector<bool> exact(ctx.size(), true), skipped(ctx.size(), false);
    for (int i = 0; i < ctx.size(); ++i) {
        std::string rec = "alpha=" + std::to_string(ctx.alphas()[i]) + ": ";
        try {
            WindowDims w = combinatorial_window(ctx.table(i), a, b);
            dims[i] = w.dims;
            exact[i] = w.exact;
            rec += (w.exact ? "dims " : "bounds ") + w.dims.str();
        } catch (const WindowError& e) {
            skipped[i] = true;
            rec += std::string("skipped: ") + e.what();
            res.trace.push_back(rec);
            continue;
        }
        res.trace.push_back(rec);
        if (i >= 2 && !skipped[i] && !skipped[i - 1] && !skipped[i - 2] &&
            dims[i] == dims[i - 1] && dims[i] == dims[i - 2]) {
            bool iso = true;
            for (int j = i - 2; j < i && iso; ++j) {
                WindowDims cm = continuation_map(
                    HamiltonianSpec::radial_ball(ctx.profile(j + 1), c),
                    HamiltonianSpec::radial_ball(ctx.profile(j), c), a, b,
                    GfBackend::Combinatorial);
                if (!(cm.dims == dims[i])) iso = false;
            }
            if (iso) {
                res.stabilized = true;
                res.exact = exact[i] && exact[i - 1] && exact[i - 2];
                res.dims = dims[i];
                res.tail_index = i - 2;
                res.trace.push_back("stabilized at schedule index " +
                                    std::to_string(i - 2));
                return res;
            }
        }
    }
    res.stabilized = false;
    res.exact = false;
    for (int i = ctx.size() - 1; i >= 0; --i)
        if (!skipped[i]) { res.dims = dims[i]; res.tail_index = i; break; }
    res.trace.push_back("NO_STABILIZATION within schedule; last computed term "
                        "reported as bounds");
    return res;
}

} // namespace sbl
