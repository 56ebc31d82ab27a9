#include "sbl/convolution.hpp"
#include <algorithm>
#include <optional>
#include <stdexcept>

namespace sbl {

namespace {

// An interval with flags, possibly empty; infinite ends are open by fiat.
struct FlaggedInterval {
    ExtRat lo, hi;
    bool lo_closed = false, hi_closed = false;
    bool empty = false;
};

// Gamma_c degree of a nonempty flagged interval: 0 for compact closed/closed,
// 1 for open/open (including rays and R), none for half-open.
std::optional<int> gamma_c_degree(const FlaggedInterval& k) {
    if (k.empty) return std::nullopt;
    if (k.lo == k.hi) return k.lo_closed && k.hi_closed ? std::optional<int>(0)
                                                       : std::nullopt;
    bool lc = k.lo_closed && k.lo.finite();
    bool rc = k.hi_closed && k.hi.finite();
    if (lc && rc) return 0;
    if (!lc && !rc) return 1;
    return std::nullopt;
}

// Fiber of the convolution at t for the summand pair (I, J):
// K_t = I cap (t - J) = {x : x in I, t - x in J}.
FlaggedInterval fiber_at(const IntervalSummand& I, const IntervalSummand& J,
                         const ExtRat& t) {
    FlaggedInterval k;
    // Lower end: max(I.left, t - J.right); open wins on ties only when both open.
    ExtRat cand = t - J.right; // -inf when J.right = +inf
    if (I.left > cand) {
        k.lo = I.left;
        k.lo_closed = I.left_closed && I.left.finite();
    } else if (cand > I.left) {
        k.lo = cand;
        k.lo_closed = J.right_closed && cand.finite();
    } else {
        k.lo = I.left;
        k.lo_closed = I.left_closed && J.right_closed && k.lo.finite();
    }
    // Upper end: min(I.right, t - J.left).
    cand = t - J.left; // +inf when J.left = -inf
    if (I.right < cand) {
        k.hi = I.right;
        k.hi_closed = I.right_closed && I.right.finite();
    } else if (cand < I.right) {
        k.hi = cand;
        k.hi_closed = J.left_closed && cand.finite();
    } else {
        k.hi = I.right;
        k.hi_closed = I.right_closed && J.left_closed && k.hi.finite();
    }
    if (k.lo > k.hi || (k.lo == k.hi && !(k.lo_closed && k.hi_closed)))
        k.empty = true;
    return k;
}

// Stalk degree (Gamma_c degree of the fiber) at t, or nullopt for zero stalk.
std::optional<int> stalk_degree(const IntervalSummand& I, const IntervalSummand& J,
                                const ExtRat& t) {
    return gamma_c_degree(fiber_at(I, J, t));
}

// Candidate breakpoints of the stalk-degree function: the four endpoint sums
// that are well defined and finite.
std::vector<ExtRat> breakpoints(const IntervalSummand& I, const IntervalSummand& J) {
    std::vector<ExtRat> bp;
    auto try_sum = [&bp](const ExtRat& a, const ExtRat& b) {
        if (a.finite() && b.finite()) bp.push_back(a + b);
    };
    try_sum(I.left, J.left);
    try_sum(I.left, J.right);
    try_sum(I.right, J.left);
    try_sum(I.right, J.right);
    std::sort(bp.begin(), bp.end());
    bp.erase(std::unique(bp.begin(), bp.end()), bp.end());
    return bp;
}

// Convolution of a single summand pair by run-gluing the stalk pattern on the
// stratification by breakpoints.
void convolve_pair(const IntervalSummand& I, const IntervalSummand& J,
                   std::vector<IntervalSummand>& out) {
    std::vector<ExtRat> bp = breakpoints(I, J);
    // Strata: open, point, open, ..., point, open (2k+1 of them); evaluate the
    // stalk degree at a representative of each.
    std::size_t n = 2 * bp.size() + 1;
    std::vector<std::optional<int>> deg(n);
    for (std::size_t i = 0; i < n; ++i) {
        ExtRat rep;
        if (i % 2 == 1) {
            rep = bp[i / 2];
        } else if (bp.empty()) {
            rep = ExtRat(0);
        } else if (i == 0) {
            rep = bp.front() - ExtRat(1);
        } else if (i == n - 1) {
            rep = bp.back() + ExtRat(1);
        } else {
            rep = ExtRat((bp[i / 2 - 1].value() + bp[i / 2].value()) / 2);
        }
        deg[i] = stalk_degree(I, J, rep);
    }
    // Glue maximal runs of equal degree into interval summands.
    std::size_t i = 0;
    while (i < n) {
        if (!deg[i]) { ++i; continue; }
        int e = *deg[i];
        std::size_t j = i;
        while (j + 1 < n && deg[j + 1] && *deg[j + 1] == e) ++j;
        IntervalSummand m;
        if (i % 2 == 1) { // run starts at a point stratum
            m.left = bp[i / 2];
            m.left_closed = true;
        } else {
            m.left = (i == 0) ? ExtRat::neg_inf() : bp[i / 2 - 1];
            m.left_closed = false;
        }
        if (j % 2 == 1) {
            m.right = bp[j / 2];
            m.right_closed = true;
        } else {
            m.right = (j == n - 1) ? ExtRat::pos_inf() : bp[j / 2];
            m.right_closed = false;
        }
        m.shift = I.shift + J.shift - e;
        m.mult = I.mult * J.mult;
        m.validate();
        out.push_back(m);
        i = j + 1;
    }
}

} // namespace

GradedDims gamma_c_interval(const IntervalSummand& s) {
    s.validate();
    FlaggedInterval k;
    k.lo = s.left;
    k.lo_closed = s.left_closed && s.left.finite();
    k.hi = s.right;
    k.hi_closed = s.right_closed && s.right.finite();
    k.empty = false;
    GradedDims out;
    if (auto d = gamma_c_degree(k)) out.add(*d - s.shift, s.mult);
    return out;
}

GradedDims convolve_stalk_oracle(const SheafOnR& f, const SheafOnR& g,
                                 const ExtRat& t) {
    GradedDims out;
    for (auto& a : f.summands) {
        a.validate();
        for (auto& b : g.summands) {
            b.validate();
            if (auto d = stalk_degree(a, b, t))
                out.add(*d - a.shift - b.shift, a.mult * b.mult);
        }
    }
    return out;
}

SheafOnR convolve(const SheafOnR& f, const SheafOnR& g) {
    SheafOnR out(f.field);
    for (auto& a : f.summands) {
        a.validate();
        for (auto& b : g.summands) {
            b.validate();
            convolve_pair(a, b, out.summands);
        }
    }
    return normalize(out);
}

SheafOnR tamarkin_project(const SheafOnR& f) {
    SheafOnR ray(f.field);
    ray.summands.push_back(half_line(ExtRat(0)));
    return convolve(f, ray);
}

SheafOnR shom_star(const SheafOnR& f, const SheafOnR& g) {
    if (!is_tamarkin_normal(f) || !is_tamarkin_normal(g))
        throw std::invalid_argument("shom_star: inputs must be in Tamarkin normal form");
    SheafOnR out(f.field);
    for (auto& s : f.summands) {
        for (auto& t : g.summands) {
            // Source 1_{[a,b)}[m], target 1_{[c,d)}[n]; b, d possibly +inf.
            const ExtRat &a = s.left, &b = s.right, &c = t.left, &d = t.right;
            int shift = t.shift - s.shift;
            std::int64_t mult = s.mult * t.mult;
            if (!b.finite()) {
                // Hom*(1_{[a,inf)}, G) = T_{-a} G.
                out.summands.push_back(bar(c - a, d.finite() ? d - a : d, shift, mult));
            } else if (!d.finite()) {
                // Cone(L_{c-b} -> L_{c-a}) over the canonical (nonzero) map.
                out.summands.push_back(bar(c - b, c - a, shift + 1, mult));
            } else {
                // Cone(B_{[c-b,d-b)} -> B_{[c-a,d-a)}); the canonical map is
                // nonzero exactly when b - a < d - c (source bar shorter).
                if (b - a < d - c) {
                    out.summands.push_back(bar(d - b, d - a, shift, mult));
                    out.summands.push_back(bar(c - b, c - a, shift + 1, mult));
                } else {
                    out.summands.push_back(bar(c - a, d - a, shift, mult));
                    out.summands.push_back(bar(c - b, d - b, shift + 1, mult));
                }
            }
        }
    }
    return normalize(out);
}

} // namespace sbl
