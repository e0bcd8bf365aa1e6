#pragma once

#include "qsf/linalg.hpp"
#include "qsf/report.hpp"
#include "qsf/structures.hpp"

namespace qsf {

/// The Hopf algebra H(N) on generators k, f_1..f_N with k^2 = 1 and
/// anticommuting f's, its dual (H^op)*, and the Drinfeld double D(H).
/// Everything is small (dim H = 2^(N+1)), so elements are sparse vectors
/// over explicit basis indices:
///   H:     index (umask << 1) | v  for f_{u_1}..f_{u_m} k^v
///   H*:    same index set, canonical dual basis
///   D(H):  index (dual << 8) | h
class DoubleAlgebra {
public:
    explicit DoubleAlgebra(int n);

    int rank() const { return n_; }
    int hdim() const { return hdim_; }
    int ddim() const { return hdim_ * hdim_; }

    // --- H ---------------------------------------------------------------
    SparseVec h_one() const { return unit_vec(0); }
    SparseVec h_k() const { return unit_vec(1); }
    SparseVec h_f(int i) const { return unit_vec(2u << (i - 1)); }
    SparseVec h_mul(const SparseVec& a, const SparseVec& b) const;
    /// Coproduct into 16-bit double-index keys (a << 16) | b... packed as
    /// (a * hdim + b); helpers below unpack.
    SparseVec h_delta(const SparseVec& a) const;
    SparseVec h_delta2(std::uint64_t idx) const;  // (Delta x id) Delta on a basis vector
    Cyc h_counit(const SparseVec& a) const;
    SparseVec h_S(const SparseVec& a) const;
    SparseVec h_Sinv(const SparseVec& a) const;

    // --- (H^op)* ---------------------------------------------------------
    SparseVec dual_kappa() const;
    SparseVec dual_phi(int i) const;
    SparseVec dual_one() const;  // the counit of H
    SparseVec dual_mul(const SparseVec& p, const SparseVec& q) const;
    SparseVec dual_delta(const SparseVec& p) const;  // packed (a * hdim + b)
    Cyc dual_counit(const SparseVec& p) const;
    SparseVec dual_S(const SparseVec& p) const;
    /// Change of basis between the canonical dual basis and the
    /// phi-string basis (phi-key: (imask << 1) | u for phi-string kappa^u).
    SparseVec dual_to_phi(const SparseVec& p) const;
    SparseVec phi_to_dual(const SparseVec& p) const;

    // --- D(H) ------------------------------------------------------------
    static std::uint64_t dkey(std::uint64_t dual, std::uint64_t h) { return (dual << 8) | h; }
    static std::uint64_t dual_part(std::uint64_t k) { return k >> 8; }
    static std::uint64_t h_part(std::uint64_t k) { return k & 0xffu; }

    SparseVec d_embed_dual(const SparseVec& p) const;
    SparseVec d_embed_h(const SparseVec& a) const;
    SparseVec d_one() const;
    SparseVec d_mul(const SparseVec& x, const SparseVec& y) const;
    /// Coproduct of D(H) into packed pair keys (x * ddim-stride) below.
    std::map<std::pair<std::uint64_t, std::uint64_t>, Cyc> d_delta(const SparseVec& x) const;
    Cyc d_counit(const SparseVec& x) const;
    SparseVec d_S(const SparseVec& x) const;
    /// Canonical R-matrix sum b_i x b_i* as a pair-keyed tensor.
    std::map<std::pair<std::uint64_t, std::uint64_t>, Cyc> d_rmatrix() const;
    /// Closed form of the R-matrix for comparison.
    std::map<std::pair<std::uint64_t, std::uint64_t>, Cyc> d_rmatrix_closed_form() const;

private:
    SparseVec unit_vec(std::uint64_t idx) const;
    int n_, hdim_;
    std::vector<std::vector<SparseVec>> mul_;      // basis product table
    std::vector<SparseVec> delta_;                 // basis coproduct (packed pairs)
    std::vector<SparseVec> delta2_;                // basis triple coproduct (packed)
    std::vector<SparseVec> smat_, sinv_;           // antipode tables
};

/// Hopf axiom suites and the closed-form checks of the appendix.
std::vector<CheckResult> check_H_hopf(const DoubleAlgebra& D);
std::vector<CheckResult> check_dual_hopf(const DoubleAlgebra& D);
std::vector<CheckResult> check_double_relations(const DoubleAlgebra& D);
std::vector<CheckResult> check_double_quasitriangular(const DoubleAlgebra& D);

/// The algebra map Psi : D(H) -> Q and its compatibility levels.
AlgElem psi_on_basis(const StructureSet& s, const DoubleAlgebra& D, std::uint64_t dual,
                     std::uint64_t h);
AlgElem psi(const StructureSet& s, const DoubleAlgebra& D, const SparseVec& x);
std::vector<CheckResult> check_psi(const StructureSet& s, const DoubleAlgebra& D);

/// The embedding H(N) -> Q(N,1): k -> omega_-, f_i -> f-_i omega_-,
/// a Hopf-algebra map for even N.
std::vector<CheckResult> check_embedding(const StructureSet& s, const DoubleAlgebra& D);

}  // namespace qsf
