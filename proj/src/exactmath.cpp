#include "esw/exactmath.hpp"

#include <array>
#include <cassert>
#include <charconv>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace esw {

namespace {

// Squares hit few residue classes; checking mod 64 and mod 63*65*11 = 45045
// rejects ~99% of non-squares with one division and four table lookups.
struct SquareTables {
    std::uint64_t mask64 = 0;
    std::array<bool, 63> t63{};
    std::array<bool, 65> t65{};
    std::array<bool, 11> t11{};

    SquareTables() {
        for (unsigned k = 0; k < 64; ++k) mask64 |= std::uint64_t{1} << ((k * k) & 63);
        for (unsigned k = 0; k < 63; ++k) t63[(k * k) % 63] = true;
        for (unsigned k = 0; k < 65; ++k) t65[(k * k) % 65] = true;
        for (unsigned k = 0; k < 11; ++k) t11[(k * k) % 11] = true;
    }
};

const SquareTables& tables() {
    static const SquareTables t;
    return t;
}

bool residues_ok(std::uint64_t low_bits, std::uint64_t mod45045) {
    const SquareTables& t = tables();
    if (!(t.mask64 >> (low_bits & 63) & 1)) return false;
    return t.t63[mod45045 % 63] && t.t65[mod45045 % 65] && t.t11[mod45045 % 11];
}

}  // namespace

Int isqrt(const Int& m) {
    if (sgn(m) < 0) throw std::invalid_argument("isqrt: negative input");
    if (m < 2) return m;
    // Start at 2^ceil(bits/2) >= sqrt(m); the Newton step
    // r <- (r + m/r) / 2 then decreases monotonically to floor(sqrt(m)).
    const std::size_t bits = mpz_sizeinbase(m.get_mpz_t(), 2);
    Int r = Int(1) << ((bits + 1) / 2);
    for (;;) {
        Int next = (r + m / r) >> 1;
        if (next >= r) return r;
        r = std::move(next);
    }
}

std::optional<Int> perfect_square_root(const Int& m) {
    if (sgn(m) < 0) return std::nullopt;
    if (!square_candidate(m)) return std::nullopt;
    Int r = isqrt(m);
    if (r * r == m) return r;
    return std::nullopt;
}

u64 isqrt_u64(u64 m) {
    if (m == 0) return 0;
    u64 r = static_cast<u64>(std::sqrt(static_cast<double>(m)));
    // sqrt(double) is within 1 of the truth here; clamp to the floor
    while (r > 0 && (u128)r * r > m) --r;
    while ((u128)(r + 1) * (r + 1) <= m) ++r;
    return r;
}

u64 isqrt_u128(u128 m) {
    if (m == 0) return 0;
    double s = std::sqrt(static_cast<double>(m));
    u64 r = s >= 18446744073709551614.0 ? std::numeric_limits<u64>::max()
                                        : static_cast<u64>(s);
    if (r == 0) r = 1;
    // One integer Newton step absorbs the double's truncation error
    u128 next = ((u128)r + m / r) >> 1;
    r = next > std::numeric_limits<u64>::max()
            ? std::numeric_limits<u64>::max()
            : static_cast<u64>(next);
    while (r > 0 && (u128)r * r > m) --r;
    while (r < std::numeric_limits<u64>::max() && (u128)(r + 1) * (r + 1) <= m) ++r;
    return r;
}

std::optional<u64> perfect_square_root_u128(u128 m) {
    if (!square_candidate_u128(m)) return std::nullopt;
    u64 r = isqrt_u128(m);
    if ((u128)r * r == m) return r;
    return std::nullopt;
}

bool square_candidate_u128(u128 m) {
    return residues_ok(static_cast<std::uint64_t>(m),
                       static_cast<std::uint64_t>(m % 45045));
}

bool square_candidate(const Int& m) {
    if (sgn(m) < 0) return false;
    const std::uint64_t low =
        mpz_size(m.get_mpz_t()) == 0 ? 0 : mpz_getlimbn(m.get_mpz_t(), 0);
    return residues_ok(low, mpz_fdiv_ui(m.get_mpz_t(), 45045));
}

Rat::Rat(const Int& num, const Int& den) {
    if (sgn(den) == 0) throw std::invalid_argument("Rat: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rat Rat::unit(const Int& k) {
    if (sgn(k) <= 0) throw std::invalid_argument("Rat::unit: k must be positive");
    return Rat(1, k);
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw std::invalid_argument("Rat: division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rat::str() const {
    std::string s = v_.get_num().get_str();
    if (v_.get_den() != 1) {
        s += '/';
        s += v_.get_den().get_str();
    }
    return s;
}

double to_double(const Rat& r) {
    Int num = r.numerator();
    if (sgn(num) == 0) return 0.0;
    const bool neg = sgn(num) < 0;
    Int a = abs(num);
    Int b = r.denominator();

    // Scale so the integer quotient carries 55 or 56 bits: 53 for the
    // mantissa plus room for the round and sticky decision.
    const long la = static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 2));
    const long lb = static_cast<long>(mpz_sizeinbase(b.get_mpz_t(), 2));
    const long k = 55 - (la - lb);
    if (k > 0) a <<= k; else b <<= -k;

    Int q, rem;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());

    const long qb = static_cast<long>(mpz_sizeinbase(q.get_mpz_t(), 2));
    long drop = qb - 53;  // 2 or 3 low bits beyond the mantissa
    assert(drop >= 1);
    std::uint64_t mant = mpz_get_ui(Int(q >> drop).get_mpz_t());
    const bool round_bit = mpz_tstbit(q.get_mpz_t(), drop - 1);
    bool sticky = sgn(rem) != 0;
    if (!sticky) {
        Int below = q & ((Int(1) << (drop - 1)) - 1);
        sticky = sgn(below) != 0;
    }
    if (round_bit && (sticky || (mant & 1))) {
        ++mant;
        if (mant == (std::uint64_t{1} << 53)) {
            mant >>= 1;
            ++drop;
        }
    }
    // Exponent big enough to overflow/underflow never occurs for the values
    // this artifact renders; std::ldexp saturates correctly anyway.
    double d = std::ldexp(static_cast<double>(mant), static_cast<int>(drop - k));
    return neg ? -d : d;
}

std::string repr_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v < 0 ? "-inf" : "inf";
    if (v == 0.0) return std::signbit(v) ? "-0.0" : "0.0";

    // Shortest round-trip digits in scientific form, then Python's placement
    // rule: positional for exponents in [-4, 16), scientific otherwise.
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::scientific);
    std::string sci(buf, res.ptr);

    std::string sign;
    std::size_t pos = 0;
    if (sci[0] == '-') { sign = "-"; pos = 1; }
    const std::size_t epos = sci.find('e', pos);
    std::string digits = sci.substr(pos, epos - pos);
    const std::size_t dot = digits.find('.');
    if (dot != std::string::npos) digits.erase(dot, 1);
    const int exp10 = std::stoi(sci.substr(epos + 1));

    if (exp10 < -4 || exp10 >= 16) {
        std::string mant(1, digits[0]);
        if (digits.size() > 1) mant += "." + digits.substr(1);
        char e[8];
        std::snprintf(e, sizeof e, "e%+03d", exp10);
        return sign + mant + e;
    }
    if (exp10 < 0) {
        return sign + "0." + std::string(-exp10 - 1, '0') + digits;
    }
    if (static_cast<std::size_t>(exp10) + 1 >= digits.size()) {
        return sign + digits + std::string(exp10 + 1 - digits.size(), '0') + ".0";
    }
    return sign + digits.substr(0, exp10 + 1) + "." + digits.substr(exp10 + 1);
}

}  // namespace esw
