#pragma once

#include "qsf/center.hpp"
#include "qsf/linalg.hpp"
#include "qsf/modules.hpp"
#include "qsf/report.hpp"
#include "qsf/structures.hpp"

namespace qsf {

/// The coadjoint action h |> a = sum S(h') a h''.
AlgElem triangle(const StructureSet& s, const AlgElem& h, const AlgElem& a);

/// Dualized structure maps of the universal Hopf algebra on Q*.
TensorElem mu_hat(const StructureSet& s, const AlgElem& a);
AlgElem delta_hat(const StructureSet& s, const AlgElem& a, const AlgElem& b);
AlgElem s_hat(const StructureSet& s, const AlgElem& a);
TensorElem omega_hat(const StructureSet& s);

/// The integral on the coend: supported on the single top monomial with
/// value (-1)^N nu beta^2 2^(1-N).
Cyc lambda_hat(const StructureSet& s, const AlgElem& x);

/// Cointegral identity, normalization and two-sidedness of the integral.
std::vector<CheckResult> check_integral(const StructureSet& s);

/// Dual structure map sanity: counit laws for mu_hat, the reversal law for
/// delta_hat, bijectivity of s_hat, and non-degeneracy of omega_hat.
std::vector<CheckResult> check_coend_maps(const StructureSet& s, bool with_mu_hat);

/// S-transformation S_Z(z) = sum lambda_hat(M_1 z) S(M_2); input and
/// output centrality are asserted.
AlgElem s_transform(const StructureSet& s, const AlgElem& z);
/// T-transformation T_Z(z) = v^-1 z.
AlgElem t_transform(const StructureSet& s, const AlgElem& z);

/// Closed form of the S-transformation on a Z_Lambda basis word.
AlgElem s_closed_form_on_lambda(const StructureSet& s, std::uint32_t mask);

/// The assembled projective SL(2,Z)-action on the centre.
struct SL2ZAction {
    CenterBasis basis;
    DenseMat Smat, Tmat;      // full size 3 + 2^(2N-1)
    DenseMat S_P, T_P;        // upper 3x3 blocks
    DenseMat S_Lambda, T_Lambda;
    std::vector<CheckResult> checks;
    /// Jordan data of T on Z_Lambda: sizes of nilpotent blocks of T - id.
    std::vector<int> jordan_block_sizes;
};

SL2ZAction check_theorem_ST(const QConfig& cfg);

}  // namespace qsf
