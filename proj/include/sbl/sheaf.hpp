#pragma once
#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>
#include "sbl/extended_rat.hpp"
#include "sbl/grading.hpp"

namespace sbl {

// One shifted interval sheaf 1_I[n] with multiplicity.  Boundary flags use
// closed=true/false; infinite endpoints are always open.
struct IntervalSummand {
    ExtRat left;
    bool left_closed = true;
    ExtRat right;
    bool right_closed = false;
    int shift = 0;       // 1_I[shift]
    std::int64_t mult = 1;

    void validate() const {
        if (mult <= 0) throw std::invalid_argument("IntervalSummand: mult must be positive");
        if (left.is_neg_inf() && left_closed)
            throw std::invalid_argument("IntervalSummand: -inf endpoint must be open");
        if (right.is_pos_inf() && right_closed)
            throw std::invalid_argument("IntervalSummand: inf endpoint must be open");
        if (left > right)
            throw std::invalid_argument("IntervalSummand: left > right");
        if (left == right && !(left_closed && right_closed))
            throw std::invalid_argument(
                "IntervalSummand: degenerate interval must be a closed point");
    }

    bool is_point() const { return left == right; }

    // Key identifying the summand class (everything but multiplicity).
    auto key() const {
        return std::make_tuple(left, left_closed, right, right_closed, shift);
    }

    std::string str() const {
        std::string s = "1_";
        s += left_closed ? '[' : '(';
        s += left.str() + "," + right.str();
        s += right_closed ? ']' : ')';
        if (shift != 0) s += "[" + std::to_string(shift) + "]";
        if (mult != 1) s += "^" + std::to_string(mult);
        return s;
    }
};

inline IntervalSummand bar(ExtRat a, ExtRat b, int shift = 0, std::int64_t mult = 1) {
    return IntervalSummand{std::move(a), true, std::move(b), false, shift, mult};
}
inline IntervalSummand half_line(ExtRat a, int shift = 0, std::int64_t mult = 1) {
    return IntervalSummand{std::move(a), true, ExtRat::pos_inf(), false, shift, mult};
}
inline IntervalSummand point_sheaf(ExtRat c, int shift = 0, std::int64_t mult = 1) {
    return IntervalSummand{c, true, c, true, shift, mult};
}
inline IntervalSummand open_interval(ExtRat a, ExtRat b, int shift = 0,
                                     std::int64_t mult = 1) {
    return IntervalSummand{std::move(a), false, std::move(b), false, shift, mult};
}
inline IntervalSummand closed_interval(ExtRat a, ExtRat b, int shift = 0,
                                       std::int64_t mult = 1) {
    return IntervalSummand{std::move(a), true, std::move(b), true, shift, mult};
}

// Formal finite direct sum of shifted interval sheaves: the symbolic object
// of Sh(R) and, in normal form, of the Tamarkin category.
struct SheafOnR {
    std::vector<IntervalSummand> summands;
    FieldTag field = FieldTag::F2;

    SheafOnR() = default;
    explicit SheafOnR(FieldTag f) : field(f) {}
    SheafOnR(std::initializer_list<IntervalSummand> s, FieldTag f = FieldTag::F2)
        : summands(s), field(f) {}

    bool empty() const { return summands.empty(); }

    std::string str() const {
        if (summands.empty()) return "0";
        std::string s;
        for (std::size_t i = 0; i < summands.size(); ++i) {
            if (i) s += " + ";
            s += summands[i].str();
        }
        return s;
    }
};

inline SheafOnR normalize(const SheafOnR& f) {
    for (auto& s : f.summands) s.validate();
    std::vector<IntervalSummand> v = f.summands;
    std::sort(v.begin(), v.end(),
              [](const IntervalSummand& a, const IntervalSummand& b) {
                  return a.key() < b.key();
              });
    SheafOnR out(f.field);
    for (auto& s : v) {
        if (!out.summands.empty() && out.summands.back().key() == s.key())
            out.summands.back().mult += s.mult;
        else
            out.summands.push_back(s);
    }
    return out;
}

inline bool equal_normalized(const SheafOnR& a, const SheafOnR& b) {
    SheafOnR na = normalize(a), nb = normalize(b);
    if (na.summands.size() != nb.summands.size()) return false;
    for (std::size_t i = 0; i < na.summands.size(); ++i)
        if (na.summands[i].key() != nb.summands[i].key() ||
            na.summands[i].mult != nb.summands[i].mult)
            return false;
    return true;
}

inline SheafOnR translate(const SheafOnR& f, const ExtRat& c) {
    SheafOnR out = f;
    for (auto& s : out.summands) {
        if (s.left.finite()) s.left = s.left + c;
        if (s.right.finite()) s.right = s.right + c;
    }
    return out;
}

inline SheafOnR dshift(const SheafOnR& f, int n) {
    SheafOnR out = f;
    for (auto& s : out.summands) s.shift += n;
    return out;
}

inline SheafOnR direct_sum(const SheafOnR& a, const SheafOnR& b) {
    SheafOnR out = a;
    out.summands.insert(out.summands.end(), b.summands.begin(), b.summands.end());
    return normalize(out);
}

// Tamarkin normal form: only left-closed/right-open bars (finite or death at
// +infinity), i.e. 1_{[a,b)}[n] and 1_{[a,inf)}[n].
inline bool is_tamarkin_normal(const SheafOnR& f) {
    for (auto& s : f.summands) {
        if (!s.left.finite() || !s.left_closed || s.right_closed) return false;
    }
    return true;
}

} // namespace sbl
