#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace qsf {

using Rat = mpq_class;

/// An element of the cyclotomic field Q(z) with z a primitive 8th root of
/// unity, stored in the canonical basis {1, z, z^2, z^3} with z^4 = -1.
/// In particular i = z^2 and sqrt(2) = z - z^3.  All arithmetic is exact.
class Cyc {
public:
    Cyc() = default;
    Cyc(long v) { c_[0] = v; }
    Cyc(const Rat& v) { c_[0] = v; }
    Cyc(Rat c0, Rat c1, Rat c2, Rat c3)
        : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

    /// z^k for any integer k (reduced mod 8 with z^4 = -1).
    static Cyc zeta(long k);
    static Cyc i() { return zeta(2); }
    static Cyc sqrt2() { return zeta(1) - zeta(3); }
    static Cyc half() { return Cyc(Rat(1, 2)); }
    /// (-1)^k as a scalar.
    static Cyc sign(long k) { return Cyc(k % 2 == 0 ? 1 : -1); }
    /// i^k, k any integer.
    static Cyc ipow(long k) { return zeta(2 * k); }
    /// 2^k, k any integer (negative k gives 1/2^k).
    static Cyc pow2(long k);

    const Rat& coeff(int k) const { return c_[k]; }
    Rat& coeff(int k) { return c_[k]; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }

    Cyc operator-() const;
    Cyc& operator+=(const Cyc& o);
    Cyc& operator-=(const Cyc& o);
    Cyc operator+(const Cyc& o) const { Cyc r(*this); r += o; return r; }
    Cyc operator-(const Cyc& o) const { Cyc r(*this); r -= o; return r; }
    Cyc operator*(const Cyc& o) const;
    Cyc& operator*=(const Cyc& o) { *this = *this * o; return *this; }

    /// Multiplicative inverse, found by solving the 4x4 rational linear
    /// system (this * x = 1) over the power basis.  Throws on zero.
    Cyc inverse() const;
    Cyc operator/(const Cyc& o) const { return *this * o.inverse(); }

    bool operator==(const Cyc& o) const { return c_ == o.c_; }
    bool operator!=(const Cyc& o) const { return !(*this == o); }

    /// Power with integer exponent (negative allowed for nonzero values).
    Cyc pow(long k) const;

    std::string str() const;

private:
    std::array<Rat, 4> c_{};  // value-initialized to 0/1
};

Cyc operator*(const Rat& r, const Cyc& c);
std::ostream& operator<<(std::ostream& os, const Cyc& c);

}  // namespace qsf
