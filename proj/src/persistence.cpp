#include "sbl/persistence.hpp"
#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sbl {

Barcode merge_bars(const Barcode& b) {
    Barcode out;
    out.field = b.field;
    out.bars = b.bars;
    for (auto& bar : out.bars) bar.validate();
    std::sort(out.bars.begin(), out.bars.end(),
              [](const GradedInterval& x, const GradedInterval& y) {
                  return x.key() < y.key();
              });
    std::vector<GradedInterval> merged;
    for (auto& bar : out.bars) {
        if (!merged.empty() && merged.back().key() == bar.key())
            merged.back().mult += bar.mult;
        else
            merged.push_back(bar);
    }
    out.bars = std::move(merged);
    return out;
}

Barcode to_barcode(const SheafOnR& f) {
    if (!is_tamarkin_normal(f))
        throw std::invalid_argument("to_barcode: input not in Tamarkin normal form");
    Barcode b;
    b.field = f.field;
    for (auto& s : f.summands)
        b.bars.push_back(GradedInterval{s.left, s.right, -s.shift, s.mult});
    return merge_bars(b);
}

SheafOnR from_barcode(const Barcode& b) {
    SheafOnR f(b.field);
    for (auto& x : b.bars) {
        x.validate();
        f.summands.push_back(bar(x.birth, x.death, -x.degree, x.mult));
    }
    return normalize(f);
}

GradedDims sample_gamma(const SheafOnR& f, const ExtRat& c) {
    SheafOnR probe(f.field);
    probe.summands.push_back(half_line(c));
    return rhom_graded(probe, f);
}

TorsionReport is_torsion(const Barcode& b) {
    TorsionReport rep;
    ExtRat c(1);
    for (auto& x : b.bars) {
        const ExtRat& extent = x.death.finite() ? x.death : x.birth;
        if (c <= extent) c = extent + ExtRat(1);
    }
    rep.sampled_at = c;
    rep.value_at_infinity = sample_gamma(from_barcode(b), c);
    rep.torsion = rep.value_at_infinity.empty();
    return rep;
}

IntervalSummand window_sheaf(const ExtRat& a, const ExtRat& b) {
    if (!(a < b)) throw std::invalid_argument("window: requires a < b");
    if (!b.finite()) throw std::invalid_argument("window: b must be finite");
    if (a.is_neg_inf()) return half_line(-b);
    return bar(-b, -a);
}

GradedDims window_dims(const SheafOnR& f, const ExtRat& a, const ExtRat& b) {
    SheafOnR probe(f.field);
    probe.summands.push_back(window_sheaf(a, b));
    return rhom_graded(probe, f);
}

GradedDims window_dims(const Barcode& f, const ExtRat& a, const ExtRat& b) {
    // Closed-form Hom(1_{[x,y)}, 1_{[u,v)}) rules, frozen from the zigzag
    // oracle (see generated conventions document):
    //   half-line -> half-line : deg 0 iff x <= u
    //   bar       -> half-line : deg 0 iff x <= u < y
    //   half-line -> bar       : deg 1 iff u < x <= v
    //   bar -> bar, y-x <  v-u : deg 0 iff x <= u < y ; deg 1 iff x <= v < y
    //   bar -> bar, y-x >= v-u : deg 0 iff u <  y <= v ; deg 1 iff u < x <= v
    // A bar of degree tag k contributes at deg + k.
    IntervalSummand w = window_sheaf(a, b);
    const ExtRat& x = w.left;
    const ExtRat& y = w.right; // +inf when a = -inf
    GradedDims out;
    for (auto& barx : f.bars) {
        barx.validate();
        const ExtRat& u = barx.birth;
        const ExtRat& v = barx.death;
        int k = barx.degree;
        bool src_bar = y.finite();
        bool tgt_bar = v.finite();
        if (!src_bar && !tgt_bar) {
            if (x <= u) out.add(k, barx.mult);
        } else if (src_bar && !tgt_bar) {
            if (x <= u && u < y) out.add(k, barx.mult);
        } else if (!src_bar && tgt_bar) {
            if (u < x && x <= v) out.add(k + 1, barx.mult);
        } else {
            bool short_src = (y - x) < (v - u);
            if (short_src) {
                if (x <= u && u < y) out.add(k, barx.mult);
                if (x <= v && v < y) out.add(k + 1, barx.mult);
            } else {
                if (u < y && y <= v) out.add(k, barx.mult);
                if (u < x && x <= v) out.add(k + 1, barx.mult);
            }
        }
    }
    return out;
}

LesReport window_les_check(const Barcode& f, const ExtRat& a, const ExtRat& b,
                           const ExtRat& c) {
    if (!(a < b && b < c))
        throw std::invalid_argument("window_les_check: requires a < b < c");
    GradedDims A = window_dims(f, a, b);
    GradedDims B = window_dims(f, a, c);
    GradedDims C = window_dims(f, b, c);
    LesReport rep;
    // ... -> A^d -> B^d -> C^d -> A^{d+1} -> ... ; solve connecting ranks
    // r_d = dim C^d - dim B^d + dim A^d - r_{d-1} upward from the bottom.
    int lo = 0, hi = 0;
    bool any = false;
    for (const GradedDims* g : {&A, &B, &C}) {
        for (auto& [d, r] : g->entries()) {
            if (!any) { lo = hi = d; any = true; }
            lo = std::min(lo, d);
            hi = std::max(hi, d);
        }
    }
    std::int64_t r_prev = 0;
    if (any) {
        for (int d = lo; d <= hi + 1; ++d) {
            std::int64_t r = C.at(d) - B.at(d) + A.at(d) - r_prev;
            std::int64_t exact_a = A.at(d) - r_prev; // rank A^d -> B^d
            if (r < 0 || exact_a < 0 || exact_a > std::min(A.at(d), B.at(d))) {
                rep.pass = false;
                rep.message = "no exact sequence: inconsistency at degree " +
                              std::to_string(d);
                return rep;
            }
            if (r != 0) rep.connecting_ranks[d] = r;
            r_prev = r;
        }
        if (r_prev != 0) {
            rep.pass = false;
            rep.message = "no exact sequence: nonzero connecting rank above support";
            return rep;
        }
    }
    rep.message = "exact";
    return rep;
}

std::string barcode_csv(const Barcode& b) {
    std::ostringstream os;
    os << "birth,death,degree,mult\n";
    for (auto& x : b.bars)
        os << x.birth.str() << ',' << x.death.str() << ',' << x.degree << ','
           << x.mult << '\n';
    return os.str();
}

} // namespace sbl
