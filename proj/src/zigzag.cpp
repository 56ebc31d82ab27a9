#include "sbl/zigzag.hpp"
#include "sbl/matrix.hpp"
#include <algorithm>
#include <map>

namespace sbl {

namespace {

Stratification make_stratification(const std::vector<const IntervalSummand*>& ss,
                                   const std::vector<ExtRat>& extra) {
    std::vector<ExtRat> pts;
    for (auto* s : ss) {
        if (s->left.finite()) pts.push_back(s->left);
        if (s->right.finite()) pts.push_back(s->right);
    }
    for (auto& p : extra)
        if (p.finite()) pts.push_back(p);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return Stratification{std::move(pts)};
}

// Membership of a point in the interval.
bool contains_point(const IntervalSummand& s, const ExtRat& p) {
    if (p < s.left || (p == s.left && !s.left_closed)) return false;
    if (p > s.right || (p == s.right && !s.right_closed)) return false;
    return true;
}

} // namespace

bool stalk_nonzero(const IntervalSummand& s, const Stratification& st, std::size_t i) {
    if (st.is_point_stratum(i)) return contains_point(s, st.point(i));
    // Open stratum (u,v); the stratification refines the endpoints of s, so
    // containment is equivalent to s.left <= u and v <= s.right.
    return s.left <= st.open_left(i) && st.open_right(i) <= s.right;
}

ZigzagRep quiver_model(const SheafOnR& f, const std::vector<ExtRat>& extra_points) {
    std::vector<const IntervalSummand*> ptrs;
    for (auto& s : f.summands) {
        s.validate();
        ptrs.push_back(&s);
    }
    ZigzagRep rep;
    rep.strat = make_stratification(ptrs, extra_points);
    rep.stalks.resize(rep.strat.num_strata());
    rep.gen_ranks.resize(rep.strat.points.size());
    for (auto& s : f.summands) {
        for (std::size_t i = 0; i < rep.strat.num_strata(); ++i)
            if (stalk_nonzero(s, rep.strat, i))
                rep.stalks[i].add(-s.shift, s.mult);
        for (std::size_t p = 0; p < rep.strat.points.size(); ++p) {
            std::size_t pi = 2 * p + 1;
            if (!stalk_nonzero(s, rep.strat, pi)) continue;
            for (int side = 0; side < 2; ++side) {
                std::size_t oi = side == 0 ? pi - 1 : pi + 1;
                if (stalk_nonzero(s, rep.strat, oi))
                    rep.gen_ranks[p][side].add(-s.shift, s.mult);
            }
        }
    }
    return rep;
}

namespace {

// Two-term cellular Hom complex between single interval summands (shift and
// multiplicity handled by the caller).  C0 = sum over cells Hom(F_c, G_c),
// C1 = sum over incidences point->open Hom(F_p, G_O); H0/H1 = Hom/Ext.
// Ranks are field-independent here (the differential is a signed incidence
// matrix, totally unimodular), computed exactly over Q.
GradedDims rhom_pair(const IntervalSummand& a, const IntervalSummand& b,
                     const std::vector<ExtRat>& extra) {
    Stratification st = make_stratification({&a, &b}, extra);
    std::size_t n = st.num_strata();
    std::vector<bool> fa(n), fb(n);
    for (std::size_t i = 0; i < n; ++i) {
        fa[i] = stalk_nonzero(a, st, i);
        fb[i] = stalk_nonzero(b, st, i);
    }
    // Columns: cells with both stalks nonzero.
    std::map<std::size_t, std::size_t> col;
    for (std::size_t i = 0; i < n; ++i)
        if (fa[i] && fb[i]) col.emplace(i, col.size());
    // Rows: incidences (point p, adjacent open O) with F_p != 0, G_O != 0.
    struct Inc { std::size_t p, o; };
    std::vector<Inc> rows;
    for (std::size_t p = 1; p < n; p += 2) {
        if (!fa[p]) continue;
        for (std::size_t o : {p - 1, p + 1})
            if (fb[o]) rows.push_back({p, o});
    }
    Matrix<Rat> d(rows.size(), col.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        auto [p, o] = rows[r];
        // d(phi)_{p,o} = rho^G . phi_p - phi_O . rho^F
        if (fb[p] && col.count(p)) d(r, col[p]) += Rat(1); // rho^G nonzero: fb[p] && fb[o]
        if (fa[o] && col.count(o)) d(r, col[o]) -= Rat(1); // rho^F nonzero: fa[p] && fa[o]
    }
    std::size_t rk = rank(d);
    GradedDims out;
    int base = a.shift - b.shift;
    out.add(base, static_cast<std::int64_t>(col.size() - rk));
    out.add(base + 1, static_cast<std::int64_t>(rows.size() - rk));
    return out;
}

} // namespace

GradedDims rhom_graded(const SheafOnR& f, const SheafOnR& g,
                       const std::vector<ExtRat>& extra_points) {
    GradedDims out;
    for (auto& a : f.summands) {
        a.validate();
        for (auto& b : g.summands) {
            b.validate();
            GradedDims h = rhom_pair(a, b, extra_points);
            for (auto& [deg, r] : h.entries()) out.add(deg, r * a.mult * b.mult);
        }
    }
    return out;
}

} // namespace sbl
