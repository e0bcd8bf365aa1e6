#pragma once

#include <memory>
#include <stdexcept>
#include <vector>

#include "qsf/algebra.hpp"

namespace qsf {

/// Configuration of the algebra Q(N, beta): the rank N >= 1, the exponent b
/// with beta = zeta_8^b (the constraint beta^4 = (-1)^N forces b = N mod 2),
/// and the sign nu normalizing the integral.
struct QConfig {
    int n = 1;
    int beta_exp = 1;
    int nu = 1;

    void validate() const {
        if (n < 1 || n > 3)
            throw std::invalid_argument("QConfig: rank must be 1, 2 or 3");
        if (((beta_exp % 2) + 2) % 2 != n % 2)
            throw std::invalid_argument(
                "QConfig: beta parity violates beta^4 = (-1)^N (need beta_exp = N mod 2)");
        if (nu != 1 && nu != -1)
            throw std::invalid_argument("QConfig: nu must be +1 or -1");
    }

    Cyc beta() const { return Cyc::zeta(beta_exp); }
    Cyc beta_pow(long k) const { return Cyc::zeta(beta_exp * k); }
    int dim() const { return 1 << (2 * n + 2); }

    /// All four admissible beta exponents for this rank.
    std::vector<int> all_beta_exps() const {
        int b0 = n % 2;
        return {b0, b0 + 2, b0 + 4, b0 + 6};
    }
};

/// Multiplicative coproduct given by generator images; extends to monomials
/// by the algebra-map property and memoizes per monomial.  Instantiated for
/// both coproducts carried by the underlying algebra.
class GenCoalgebra {
public:
    GenCoalgebra() = default;
    GenCoalgebra(int n, TensorElem delta_K, std::vector<TensorElem> delta_fp,
                 std::vector<TensorElem> delta_fm);

    int rank() const { return n_; }

    /// Coproduct of a basis monomial (cached).
    const TensorElem& delta(Mono m) const;
    TensorElem delta(const AlgElem& a) const;
    /// Apply the coproduct to one slot of a tensor (degree grows by one).
    TensorElem delta_slot(const TensorElem& x, int slot) const;

    static Cyc counit_mono(Mono m) { return mono_fmask(m) ? Cyc() : Cyc(1); }
    static Cyc counit(const AlgElem& a);
    /// Apply the counit to one slot of a tensor (degree drops by one).
    static TensorElem counit_slot(const TensorElem& x, int slot);

private:
    int n_ = 0;
    std::array<TensorElem, 4> delta_K_pow_;
    std::vector<TensorElem> dfp_, dfm_;
    mutable std::vector<std::unique_ptr<TensorElem>> cache_;
};

/// Anti-homomorphism given by generator images, memoized per monomial.
class GenAntipode {
public:
    GenAntipode() = default;
    GenAntipode(int n, AlgElem s_K, std::vector<AlgElem> s_fp, std::vector<AlgElem> s_fm);

    const AlgElem& operator()(Mono m) const;
    AlgElem operator()(const AlgElem& a) const;
    /// Apply to one slot of a tensor, termwise.
    TensorElem map_tensor_slot(const TensorElem& x, int slot) const;

private:
    int n_ = 0;
    std::array<AlgElem, 4> s_K_pow_;
    std::vector<AlgElem> sfp_, sfm_;
    mutable std::vector<std::unique_ptr<AlgElem>> cache_;
};

/// Every structure map and distinguished element of the ribbon quasi-Hopf
/// algebra Q(N, beta), built from the closed forms.  Immutable after build.
struct StructureSet {
    QConfig cfg;

    AlgElem one, e0, e1, omega_p, omega_m;
    AlgElem alpha, beta_elem;           // evaluation / coevaluation elements
    AlgElem v, v_inv;                   // ribbon element
    AlgElem u, u_inv, u_tilde;          // Drinfeld element and partner
    AlgElem g;                          // balancing element
    AlgElem c_integral;                 // two-sided integral
    AlgElem kappa;                      // trace modifier for characters
    AlgElem e1_plus, e1_minus;          // central idempotents in Q_1
    AlgElem e0_plus, e0_minus;          // primitive idempotents 1/2 (1 +- K) e0

    TensorElem Phi, PhiInv;             // coassociator
    TensorElem R, RInv;                 // R-matrix
    TensorElem fTwist;                  // Drinfeld twist
    TensorElem M, MInv;                 // monodromy R21 R and its inverse

    GenCoalgebra cop;
    GenAntipode S;

    Cyc counit(const AlgElem& a) const { return GenCoalgebra::counit(a); }

    /// Generators in the conventional order K, f+1, f-1, ..., f+N, f-N.
    std::vector<AlgElem> generators() const;
    std::vector<Mono> generator_monos() const;
};

StructureSet build_structures(const QConfig& cfg);

/// Monodromy matrix M = R21 R, recomputed from an R-matrix.
TensorElem monodromy(const TensorElem& R);

/// Closed form of M as a sector-by-sector product expansion; used to
/// cross-check the R21 R computation.
TensorElem monodromy_closed_form(const QConfig& cfg);

/// The two families f_I, g_I with M = sum_I g_I (x) f_I; each returned
/// element is a scalar multiple of a product of generators.
struct MonodromyBases {
    std::vector<AlgElem> f, g;
};
MonodromyBases monodromy_bases(const QConfig& cfg);

/// All basis monomials of Q(N) in key order.
std::vector<Mono> all_monomials(int n);

}  // namespace qsf
