#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace esw {

// Arbitrary-precision signed integer. Values that must stay nonnegative
// (n, x, t, q, N) are kept so by the operations that produce them.
using Int = mpz_class;

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// floor(sqrt(m)) by integer Newton iteration. No floating point is involved,
// so the result is exact at any magnitude. Throws std::invalid_argument for
// negative input.
Int isqrt(const Int& m);

// r with r*r == m, or nullopt when m is not a perfect square.
// Negative inputs are never squares and yield nullopt.
std::optional<Int> perfect_square_root(const Int& m);

// Fixed-width variants used by the narrow search kernel. Same contracts,
// equivalence-tested against the arbitrary-precision versions.
u64 isqrt_u64(u64 m);
u64 isqrt_u128(u128 m);
std::optional<u64> perfect_square_root_u128(u128 m);

// Residue pre-filter: false means m is definitely not a perfect square.
// True only says the square test has to be done for real.
bool square_candidate_u128(u128 m);
bool square_candidate(const Int& m);

// Exact rational, always in canonical form: gcd(|num|, den) == 1, den > 0.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long num) : v_(num) {}
    Rat(const Int& num) : v_(num) {}
    Rat(const Int& num, const Int& den);

    // 1/k for k >= 1. Throws std::invalid_argument otherwise.
    static Rat unit(const Int& k);

    Int numerator() const { return v_.get_num(); }
    Int denominator() const { return v_.get_den(); }

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    bool is_zero() const { return sgn(v_) == 0; }

    // "num/den", or just "num" when den == 1.
    std::string str() const;

private:
    mpq_class v_;
};

// Nearest double (ties to even) of an exact rational. Magnitudes beyond the
// double range clamp to +/-inf and 0 respectively.
double to_double(const Rat& r);

// Shortest decimal string that round-trips, formatted the way Python's repr
// formats a float ("0.0", "0.25", "1e-05", ...). Used to reproduce reference
// printouts digit for digit.
std::string repr_double(double v);

}  // namespace esw
