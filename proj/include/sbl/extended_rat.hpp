#pragma once
#include <cmath>
#include <compare>
#include <limits>
#include <stdexcept>
#include <string>
#include <sstream>
#include "sbl/field.hpp"

namespace sbl {

// Extended rational: exact endpoint arithmetic for interval sheaves.
// Action values arriving as doubles convert exactly (doubles are rationals).
class ExtRat {
public:
    enum class Kind { NegInf, Finite, PosInf };

    ExtRat() : kind_(Kind::Finite), v_(0) {}
    ExtRat(Rat v) : kind_(Kind::Finite), v_(std::move(v)) {}
    ExtRat(int v) : kind_(Kind::Finite), v_(v) {}

    static ExtRat neg_inf() { return ExtRat(Kind::NegInf); }
    static ExtRat pos_inf() { return ExtRat(Kind::PosInf); }
    static ExtRat from_double(double d);

    bool finite() const { return kind_ == Kind::Finite; }
    bool is_neg_inf() const { return kind_ == Kind::NegInf; }
    bool is_pos_inf() const { return kind_ == Kind::PosInf; }
    const Rat& value() const {
        if (!finite()) throw std::domain_error("ExtRat: value of infinity");
        return v_;
    }
    double to_double() const;

    friend bool operator==(const ExtRat& a, const ExtRat& b) {
        return a.kind_ == b.kind_ && (a.kind_ != Kind::Finite || a.v_ == b.v_);
    }
    friend bool operator<(const ExtRat& a, const ExtRat& b) {
        if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) < static_cast<int>(b.kind_);
        return a.kind_ == Kind::Finite && a.v_ < b.v_;
    }
    friend bool operator<=(const ExtRat& a, const ExtRat& b) { return a < b || a == b; }
    friend bool operator>(const ExtRat& a, const ExtRat& b) { return b < a; }
    friend bool operator>=(const ExtRat& a, const ExtRat& b) { return b <= a; }

    // Addition with infinities; -inf + +inf is rejected (never needed:
    // Minkowski endpoint sums combine like-signed ends only).
    friend ExtRat operator+(const ExtRat& a, const ExtRat& b) {
        if (a.finite() && b.finite()) return ExtRat(a.v_ + b.v_);
        if (a.is_neg_inf() || b.is_neg_inf()) {
            if (a.is_pos_inf() || b.is_pos_inf())
                throw std::domain_error("ExtRat: -inf + +inf");
            return neg_inf();
        }
        return pos_inf();
    }
    friend ExtRat operator-(const ExtRat& a) {
        if (a.is_neg_inf()) return pos_inf();
        if (a.is_pos_inf()) return neg_inf();
        return ExtRat(-a.v_);
    }
    friend ExtRat operator-(const ExtRat& a, const ExtRat& b) { return a + (-b); }

    std::string str() const {
        if (is_neg_inf()) return "-inf";
        if (is_pos_inf()) return "inf";
        std::ostringstream os;
        os << v_;
        return os.str();
    }

private:
    explicit ExtRat(Kind k) : kind_(k), v_(0) {}
    Kind kind_;
    Rat v_;
};

inline ExtRat ExtRat::from_double(double d) {
    if (d != d) throw std::domain_error("ExtRat: NaN");
    if (d == std::numeric_limits<double>::infinity()) return pos_inf();
    if (d == -std::numeric_limits<double>::infinity()) return neg_inf();
    // Exact: every finite double is m * 2^e with integer m.
    int exp = 0;
    double mant = std::frexp(d, &exp); // d = mant * 2^exp, |mant| in [0.5,1)
    long long m = static_cast<long long>(std::ldexp(mant, 53));
    exp -= 53;
    Rat r(m);
    if (exp >= 0) {
        boost::multiprecision::cpp_int p = boost::multiprecision::cpp_int(1) << exp;
        r *= Rat(p);
    } else {
        boost::multiprecision::cpp_int p = boost::multiprecision::cpp_int(1) << (-exp);
        r /= Rat(p);
    }
    return ExtRat(r);
}

inline double ExtRat::to_double() const {
    if (is_neg_inf()) return -std::numeric_limits<double>::infinity();
    if (is_pos_inf()) return std::numeric_limits<double>::infinity();
    return v_.convert_to<double>();
}

} // namespace sbl
