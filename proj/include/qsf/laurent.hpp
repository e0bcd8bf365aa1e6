#pragma once

#include <map>
#include <string>

#include "qsf/cyclotomic.hpp"

namespace qsf {

/// Finitely supported Laurent polynomial in a formal symbol pi with Cyc
/// coefficients.  Degree-0 part embeds Cyc.  No zero coefficients stored.
class Laurent {
public:
    Laurent() = default;
    Laurent(const Cyc& c) { if (!c.is_zero()) t_[0] = c; }
    Laurent(long v) : Laurent(Cyc(v)) {}

    /// c * pi^e.
    static Laurent term(const Cyc& c, int e);
    /// pi^e.
    static Laurent pi(int e = 1) { return term(Cyc(1), e); }

    bool is_zero() const { return t_.empty(); }
    const std::map<int, Cyc>& terms() const { return t_; }
    Cyc coeff(int e) const;

    /// A unit of the Laurent ring: a single term with nonzero coefficient.
    bool is_unit() const { return t_.size() == 1; }
    Laurent unit_inverse() const;

    Laurent operator-() const;
    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    Laurent operator+(const Laurent& o) const { Laurent r(*this); r += o; return r; }
    Laurent operator-(const Laurent& o) const { Laurent r(*this); r -= o; return r; }
    Laurent operator*(const Laurent& o) const;
    Laurent& operator*=(const Laurent& o) { *this = *this * o; return *this; }

    bool operator==(const Laurent& o) const { return t_ == o.t_; }
    bool operator!=(const Laurent& o) const { return !(*this == o); }

    std::string str() const;

private:
    std::map<int, Cyc> t_;
};

std::ostream& operator<<(std::ostream& os, const Laurent& p);

}  // namespace qsf
