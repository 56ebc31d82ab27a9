#include "sbl/morse_bott.hpp"
#include <algorithm>
#include <cmath>

namespace sbl {

GradedDims FilteredComplex::generator_counts() const {
    GradedDims g;
    for (const auto& x : generators) g.add(x.degree, 1);
    return g;
}

GradedDims FilteredComplex::homology() const {
    if (indeterminate)
        throw std::runtime_error(
            "FilteredComplex::homology: INDETERMINATE differential entries; "
            "only generator-count bounds are available");
    return generator_counts();
}

RadialOrbitTable::RadialOrbitTable(RadialProfile profile) : profile_(std::move(profile)) {
    N_ = recommended_steps(profile_);
    gf_.emplace(profile_, N_);
    orbits_ = fixed_points(HamiltonianSpec::radial_ball(
        profile_, std::max(profile_.support_end(), 1e-9)));
}

int RadialOrbitTable::lambda_of(int idx) {
    auto it = lambda_.find(idx);
    if (it != lambda_.end()) return it->second;
    const OrbitDatum& o = orbits_.at(idx);
    if (o.kind != OrbitKind::CircleFamily)
        throw std::logic_error("lambda_of: not a circle family");
    int lam = gf_->family_negative_index(o.level, -o.winding);
    lambda_[idx] = lam;
    return lam;
}

FilteredComplex morse_bott_complex(RadialOrbitTable& table, double a, double b) {
    if (!(a < b)) throw std::invalid_argument("morse_bott_complex: need a < b");
    const double clearance = 1e-9;
    for (const auto& o : table.orbits())
        for (double t : {o.t_action})
            if (std::abs(t - a) < clearance || std::abs(t - b) < clearance)
                throw WindowError("morse_bott_complex: window boundary touches orbit "
                                  "action " + std::to_string(t), t);

    FilteredComplex fc;
    int iota = table.iota();
    const auto& orbits = table.orbits();
    for (int i = 0; i < int(orbits.size()); ++i) {
        const OrbitDatum& o = orbits[i];
        if (!(o.t_action > a && o.t_action <= b)) continue;
        if (o.kind == OrbitKind::Constant) {
            if (o.note == "plateau") {
                // Flat transverse maximum times the (D^2, dD^2) factor:
                // geometric index iota, normalized degree 0.
                fc.generators.push_back({0, o.t_action, o.kind, 0, o.level});
            }
            // exterior constants carry no relative class
            continue;
        }
        if (!o.nondegenerate) {
            fc.indeterminate = true;
            fc.notes.push_back("degenerate circle family at level " +
                               std::to_string(o.level));
            continue;
        }
        int lam = table.lambda_of(i);
        fc.generators.push_back({lam - iota, o.t_action, o.kind, -o.winding, o.level});
        fc.generators.push_back({lam + 1 - iota, o.t_action, o.kind, -o.winding, o.level});
    }
    std::sort(fc.generators.begin(), fc.generators.end(),
              [](const GfGenerator& x, const GfGenerator& y) {
                  return std::tie(x.t_action, x.degree, x.winding) <
                         std::tie(y.t_action, y.degree, y.winding);
              });
    // Indeterminacy scan: adjacent degrees at distinct filtration values.
    for (std::size_t i = 0; i < fc.generators.size(); ++i)
        for (std::size_t j = 0; j < fc.generators.size(); ++j) {
            if (i == j) continue;
            const auto& x = fc.generators[i];
            const auto& y = fc.generators[j];
            if (std::abs(x.degree - y.degree) == 1 &&
                std::abs(x.t_action - y.t_action) > 1e-9) {
                fc.indeterminate = true;
                fc.notes.push_back(
                    "unforced differential entry between degrees " +
                    std::to_string(x.degree) + " and " + std::to_string(y.degree));
                i = fc.generators.size(); // one note suffices
                break;
            }
        }
    return fc;
}

FilteredComplex morse_bott_complex(const HamiltonianSpec& H, double a, double b) {
    if (H.type != HamiltonianSpec::Type::Radial)
        throw std::invalid_argument("morse_bott_complex: radial Hamiltonians only");
    RadialOrbitTable table(H.profile);
    return morse_bott_complex(table, a, b);
}

} // namespace sbl
