#pragma once

#include "qsf/report.hpp"
#include "qsf/structures.hpp"
#include "qsf/verify.hpp"

namespace qsf {

/// The second quasi-triangular quasi-bialgebra structure carried by the
/// same underlying algebra, together with the twist relating it to the
/// primary one.  Sector components are kept for the commutation checks.
struct QhatStructure {
    QConfig cfg;
    GenCoalgebra cop;              // the hat-coproduct
    TensorElem Phi, PhiInv;
    TensorElem R, RInv;
    TensorElem zeta, zetaInv;
    TensorElem rhoK;               // Cartan part of the hat-R-matrix

    std::vector<TensorElem> phi010k, phi101k, phi111k;   // per-index factors
    std::vector<TensorElem> zeta10k, zeta11k;
    std::vector<TensorElem> zeta10kInv, zeta11kInv;
};

QhatStructure build_qhat(const QConfig& cfg);

/// Basic consistency of the build: zeta and Phi-hat are invertible, the
/// counit laws for zeta hold, the Cartan part squares to the identity,
/// and the sector components do not collapse.
std::vector<CheckResult> check_qhat_build(const StructureSet& s, const QhatStructure& h);

/// Twisting by zeta recovers the primary structure: the coproduct on
/// generators, the R-matrix, and the coassociator (computed per sector).
std::vector<CheckResult> check_twist_equivalence(const StructureSet& s,
                                                 const QhatStructure& h,
                                                 const Budget& budget = Budget::none());

/// Quasi-bialgebra + quasi-triangularity suite on the hat structure.
std::vector<CheckResult> check_qhat_axioms(const QhatStructure& h,
                                           const Budget& budget = Budget::none());

/// The displayed commutator families between distinct per-index factors.
std::vector<CheckResult> spot_check_commutation_lemma(const StructureSet& s,
                                                      const QhatStructure& h);

}  // namespace qsf
