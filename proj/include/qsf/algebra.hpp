#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qsf/cyclotomic.hpp"

namespace qsf {

/// A normal-ordered basis monomial of Q(N), packed into an integer key.
/// Bits 2..(2N+1) hold the fermion mask: bit (2k-2) of the mask flags the
/// presence of f+_k, bit (2k-1) flags f-_k, with factors written in the
/// order f+_1 f-_1 f+_2 f-_2 ... f+_N f-_N.  Bits 0..1 hold the power of K,
/// written to the right of all fermions.  There are 4^(N+1) monomials.
using Mono = std::uint32_t;

constexpr Mono mono_make(std::uint32_t fmask, std::uint32_t kexp) {
    return (fmask << 2) | (kexp & 3u);
}
constexpr std::uint32_t mono_fmask(Mono m) { return m >> 2; }
constexpr std::uint32_t mono_kexp(Mono m) { return m & 3u; }
constexpr Mono mono_one() { return 0; }
constexpr Mono mono_K(std::uint32_t e = 1) { return mono_make(0, e); }
/// f+_i (sign +1) or f-_i (sign -1), i = 1..N.
constexpr Mono mono_f(int i, int sign) {
    return mono_make(1u << (2 * (i - 1) + (sign > 0 ? 0 : 1)), 0);
}

int mono_fcount(Mono m);
std::string mono_str(Mono m, int n);

/// Sparse element of Q(N): finitely supported map monomial -> Cyc.
/// Immutable-by-convention value type; no zero coefficients are stored.
class AlgElem {
public:
    AlgElem() = default;
    explicit AlgElem(int n) : n_(n) {}
    AlgElem(int n, Mono m, Cyc c = Cyc(1)) : n_(n) { add(m, c); }

    static AlgElem one(int n) { return AlgElem(n, mono_one()); }
    static AlgElem zero(int n) { return AlgElem(n); }

    int rank() const { return n_; }
    bool is_zero() const { return t_.empty(); }
    std::size_t size() const { return t_.size(); }
    const std::map<Mono, Cyc>& terms() const { return t_; }
    Cyc coeff(Mono m) const;

    void add(Mono m, const Cyc& c);

    AlgElem operator-() const;
    AlgElem& operator+=(const AlgElem& o);
    AlgElem& operator-=(const AlgElem& o);
    AlgElem operator+(const AlgElem& o) const { AlgElem r(*this); r += o; return r; }
    AlgElem operator-(const AlgElem& o) const { AlgElem r(*this); r -= o; return r; }
    AlgElem operator*(const AlgElem& o) const;
    AlgElem scaled(const Cyc& c) const;

    bool operator==(const AlgElem& o) const { return n_ == o.n_ && t_ == o.t_; }
    bool operator!=(const AlgElem& o) const { return !(*this == o); }

    std::string str() const;

private:
    int n_ = 0;
    std::map<Mono, Cyc> t_;
};

/// Normal-ordered product of two basis monomials, expanded over the
/// defining relations of Q(N): K f = -f K, distinct fermions anticommute,
/// f^2 = 0, f-_i f+_i = 1/2 (1 - K^2) - f+_i f-_i, K^4 = 1.
AlgElem mono_mul(int n, Mono a, Mono b);

/// Right-multiplication of a single monomial term by a fermion generator.
/// Exposed for the rewrite-engine unit tests.
AlgElem mono_rmul_f(int n, Mono m, int i, int sign);

/// Sparse element of the deg-fold tensor power of Q(N).  Keys pack one
/// monomial per 16-bit lane, slot s in bits 16s..16s+15.  Multiplication
/// is slotwise (plain vector-space tensor product, no parity signs).
class TensorElem {
public:
    TensorElem() = default;
    TensorElem(int n, int deg) : n_(n), deg_(deg) {}

    static std::uint64_t key(const std::vector<Mono>& slots);
    static Mono slot(std::uint64_t k, int s) {
        return static_cast<Mono>((k >> (16 * s)) & 0xffffu);
    }
    static std::uint64_t with_slot(std::uint64_t k, int s, Mono m) {
        k &= ~(0xffffull << (16 * s));
        return k | (static_cast<std::uint64_t>(m) << (16 * s));
    }

    static TensorElem one(int n, int deg);

    int rank() const { return n_; }
    int degree() const { return deg_; }
    bool is_zero() const { return t_.empty(); }
    std::size_t size() const { return t_.size(); }
    const std::map<std::uint64_t, Cyc>& terms() const { return t_; }

    void add(std::uint64_t k, const Cyc& c);

    TensorElem operator-() const;
    TensorElem& operator+=(const TensorElem& o);
    TensorElem& operator-=(const TensorElem& o);
    TensorElem operator+(const TensorElem& o) const { TensorElem r(*this); r += o; return r; }
    TensorElem operator-(const TensorElem& o) const { TensorElem r(*this); r -= o; return r; }
    TensorElem operator*(const TensorElem& o) const;
    TensorElem scaled(const Cyc& c) const;

    bool operator==(const TensorElem& o) const {
        return n_ == o.n_ && deg_ == o.deg_ && t_ == o.t_;
    }
    bool operator!=(const TensorElem& o) const { return !(*this == o); }

    std::string str() const;

private:
    int n_ = 0;
    int deg_ = 1;
    std::map<std::uint64_t, Cyc> t_;
};

/// a placed in the given slot of a deg-fold tensor, 1 elsewhere.
TensorElem embed(const AlgElem& a, int slot, int deg);
/// Tensor product of single-leg elements, in slot order.
TensorElem outer(const std::vector<AlgElem>& legs);
/// Leg permutation: factor s of x moves to slot perm[s].
TensorElem permute(const TensorElem& x, const std::vector<int>& perm);
/// Extract slot 0 of a degree-1 tensor.
AlgElem to_alg(const TensorElem& x);

/// Replace the monomial in one slot by its image under an arbitrary linear
/// map Q -> Q^(outdeg) given per monomial; the result has degree
/// deg - 1 + outdeg.  Slots keep their relative order.
TensorElem map_slot(const TensorElem& x, int slot, int outdeg,
                    const std::function<const TensorElem&(Mono)>& image);

}  // namespace qsf
