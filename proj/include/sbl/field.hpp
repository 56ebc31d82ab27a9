#pragma once
#include <cstdint>
#include <stdexcept>
#include <string>
#include <boost/multiprecision/cpp_int.hpp>

namespace sbl {

// Exact coefficient fields: GF(p) for a compile-time prime, and Q.
// No floating point anywhere in this layer.

namespace detail {
constexpr bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}
} // namespace detail

template <std::uint32_t P>
class Fp {
    static_assert(detail::is_prime(P), "modulus must be prime");
public:
    constexpr Fp() : v_(0) {}
    constexpr Fp(std::int64_t x) : v_(static_cast<std::uint32_t>(((x % P) + P) % P)) {}

    constexpr std::uint32_t value() const { return v_; }
    constexpr bool is_zero() const { return v_ == 0; }

    friend constexpr Fp operator+(Fp a, Fp b) { return from_raw((a.v_ + b.v_) % P); }
    friend constexpr Fp operator-(Fp a, Fp b) { return from_raw((a.v_ + P - b.v_) % P); }
    friend constexpr Fp operator-(Fp a) { return from_raw(a.v_ == 0 ? 0 : P - a.v_); }
    friend constexpr Fp operator*(Fp a, Fp b) {
        return from_raw(static_cast<std::uint32_t>(
            (static_cast<std::uint64_t>(a.v_) * b.v_) % P));
    }
    Fp inv() const {
        if (v_ == 0) throw std::domain_error("Fp: inverse of zero");
        // Fermat: v^(P-2)
        std::uint64_t base = v_, acc = 1;
        std::uint32_t e = P - 2;
        while (e) {
            if (e & 1) acc = (acc * base) % P;
            base = (base * base) % P;
            e >>= 1;
        }
        return from_raw(static_cast<std::uint32_t>(acc));
    }
    friend Fp operator/(Fp a, Fp b) { return a * b.inv(); }
    Fp& operator+=(Fp o) { return *this = *this + o; }
    Fp& operator-=(Fp o) { return *this = *this - o; }
    Fp& operator*=(Fp o) { return *this = *this * o; }
    friend constexpr bool operator==(Fp, Fp) = default;

    std::string str() const { return std::to_string(v_); }

private:
    static constexpr Fp from_raw(std::uint32_t raw) {
        Fp f;
        f.v_ = raw;
        return f;
    }
    std::uint32_t v_;
};

using F2 = Fp<2>;
using Rat = boost::multiprecision::cpp_rational;

// Uniform helpers so templated linear algebra works over both field kinds.
template <std::uint32_t P> inline bool is_zero(const Fp<P>& x) { return x.is_zero(); }
inline bool is_zero(const Rat& x) { return x == 0; }

template <std::uint32_t P> inline Fp<P> field_inv(const Fp<P>& x) { return x.inv(); }
inline Rat field_inv(const Rat& x) {
    if (x == 0) throw std::domain_error("Rat: inverse of zero");
    return 1 / x;
}

template <class K> inline K field_one() { return K(1); }
template <class K> inline K field_zero() { return K(0); }

// Runtime field selection tag used by the symbolic sheaf layer and the CLI.
enum class FieldTag { F2, Q };

inline std::string field_name(FieldTag f) { return f == FieldTag::F2 ? "f2" : "q"; }

} // namespace sbl
