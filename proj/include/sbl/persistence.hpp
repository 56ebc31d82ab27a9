#pragma once
#include <cstdint>
#include <map>
#include <string>
#include <vector>
#include "sbl/sheaf.hpp"
#include "sbl/zigzag.hpp"
#include "sbl/grading.hpp"

namespace sbl {

// One bar 1_{[a,b)}[-n] of a Tamarkin-normal object: birth a, death b
// (+inf allowed), degree tag n, multiplicity.
struct GradedInterval {
    ExtRat birth;
    ExtRat death; // finite or +inf
    int degree = 0;
    std::int64_t mult = 1;

    void validate() const {
        if (!birth.finite()) throw std::invalid_argument("GradedInterval: birth must be finite");
        if (!(birth < death)) throw std::invalid_argument("GradedInterval: birth >= death");
        if (mult <= 0) throw std::invalid_argument("GradedInterval: mult must be positive");
    }
    auto key() const { return std::make_tuple(birth, death, degree); }
};

struct Barcode {
    std::vector<GradedInterval> bars;
    FieldTag field = FieldTag::F2;
};

Barcode merge_bars(const Barcode& b);

// Bijective re-tagging between Tamarkin normal forms and barcodes:
// 1_{[a,b)}[n] <-> bar (a, b, degree -n).
Barcode to_barcode(const SheafOnR& f);
SheafOnR from_barcode(const Barcode& b);

// The Yoneda persistence-module sample c -> Hom(1_{[c,inf)}, F).
GradedDims sample_gamma(const SheafOnR& f, const ExtRat& c);

// Torsion predicate: Gamma sampling vanishes beyond every bar's extent.
struct TorsionReport {
    bool torsion = true;
    ExtRat sampled_at;
    GradedDims value_at_infinity; // nonzero => witness of non-torsion
};
TorsionReport is_torsion(const Barcode& b);

// Action-window dims: Hom(1_{[-b,-a)}, F) for the window (a,b], a possibly
// -inf (then the window sheaf is 1_{[-b,inf)}).  The SheafOnR overload runs
// the zigzag oracle; the Barcode overload is the closed-form fast path whose
// rules are frozen from the oracle (tested: two paths, one answer).
IntervalSummand window_sheaf(const ExtRat& a, const ExtRat& b);
GradedDims window_dims(const SheafOnR& f, const ExtRat& a, const ExtRat& b);
GradedDims window_dims(const Barcode& f, const ExtRat& a, const ExtRat& b);

// Long-exact-sequence consistency of the window triple (a,b], (a,c], (b,c]
// for a < b < c, with the per-degree connecting ranks solved from exactness.
struct LesReport {
    bool pass = true;
    std::map<int, std::int64_t> connecting_ranks; // (b,c]^d -> (a,b]^{d+1}
    std::string message;
};
LesReport window_les_check(const Barcode& f, const ExtRat& a, const ExtRat& b,
                           const ExtRat& c);

std::string barcode_csv(const Barcode& b);

} // namespace sbl
