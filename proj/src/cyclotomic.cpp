#include "qsf/cyclotomic.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qsf {

Cyc Cyc::zeta(long k) {
    k %= 8;
    if (k < 0) k += 8;
    Cyc r;
    if (k < 4)
        r.c_[k] = 1;
    else
        r.c_[k - 4] = -1;
    return r;
}

Cyc Cyc::pow2(long k) {
    Rat v(1);
    if (k >= 0)
        for (long j = 0; j < k; ++j) v *= 2;
    else
        for (long j = 0; j < -k; ++j) v /= 2;
    return Cyc(v);
}

bool Cyc::is_zero() const {
    return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
}

bool Cyc::is_one() const {
    return c_[0] == 1 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
}

Cyc Cyc::operator-() const {
    Cyc r;
    for (int k = 0; k < 4; ++k) r.c_[k] = -c_[k];
    return r;
}

Cyc& Cyc::operator+=(const Cyc& o) {
    for (int k = 0; k < 4; ++k) c_[k] += o.c_[k];
    return *this;
}

Cyc& Cyc::operator-=(const Cyc& o) {
    for (int k = 0; k < 4; ++k) c_[k] -= o.c_[k];
    return *this;
}

Cyc Cyc::operator*(const Cyc& o) const {
    // z^a * z^b = z^(a+b), reduced with z^4 = -1.
    Cyc r;
    for (int a = 0; a < 4; ++a) {
        if (c_[a] == 0) continue;
        for (int b = 0; b < 4; ++b) {
            if (o.c_[b] == 0) continue;
            int e = a + b;
            if (e < 4)
                r.c_[e] += c_[a] * o.c_[b];
            else
                r.c_[e - 4] -= c_[a] * o.c_[b];
        }
    }
    return r;
}

Cyc Cyc::inverse() const {
    if (is_zero()) throw std::domain_error("Cyc: division by zero");
    // Columns of the multiplication-by-*this* matrix in the basis z^0..z^3:
    // column b holds the coordinates of (*this) * z^b.
    Rat m[4][8];
    for (int b = 0; b < 4; ++b) {
        Cyc col = *this * zeta(b);
        for (int a = 0; a < 4; ++a) m[a][b] = col.coeff(a);
    }
    // Augment with the identity and run Gauss-Jordan; the system is always
    // solvable since Q(z) is a field.
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) m[a][4 + b] = (a == b) ? 1 : 0;
    for (int col = 0; col < 4; ++col) {
        int piv = -1;
        for (int r = col; r < 4; ++r)
            if (m[r][col] != 0) { piv = r; break; }
        if (piv < 0) throw std::logic_error("Cyc: singular multiplication matrix");
        if (piv != col)
            for (int j = 0; j < 8; ++j) std::swap(m[piv][j], m[col][j]);
        Rat d = m[col][col];
        for (int j = 0; j < 8; ++j) m[col][j] /= d;
        for (int r = 0; r < 4; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rat f = m[r][col];
            for (int j = 0; j < 8; ++j) m[r][j] -= f * m[col][j];
        }
    }
    // Solution of (*this) * x = 1 is the first column of the inverse matrix.
    return Cyc(m[0][4], m[1][4], m[2][4], m[3][4]);
}

Cyc Cyc::pow(long k) const {
    Cyc base = *this;
    if (k < 0) {
        base = base.inverse();
        k = -k;
    }
    Cyc r(1);
    while (k) {
        if (k & 1) r *= base;
        base *= base;
        k >>= 1;
    }
    return r;
}

std::string Cyc::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k < 4; ++k) {
        if (c_[k] == 0) continue;
        Rat v = c_[k];
        if (!first) {
            os << (v < 0 ? " - " : " + ");
            if (v < 0) v = -v;
        } else if (v < 0) {
            os << "-";
            v = -v;
        }
        first = false;
        if (k == 0 || v != 1) os << v.get_str();
        if (k > 0) {
            if (v != 1) os << "*";
            os << "z";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

Cyc operator*(const Rat& r, const Cyc& c) {
    return Cyc(r) * c;
}

std::ostream& operator<<(std::ostream& os, const Cyc& c) {
    return os << c.str();
}

}  // namespace qsf
