#pragma once

#include "qsf/linalg.hpp"
#include "qsf/report.hpp"
#include "qsf/structures.hpp"

namespace qsf {

/// Distinguished basis of the centre Z(Q), ordered so the S/T block
/// matrices come out in the conventional block form: first the internal
/// characters of the projectives (phi_P0+, phi_X1+, phi_X1-), then the
/// even fermion words times e0 in graded-lexicographic mask order.
struct CenterBasis {
    QConfig cfg;
    std::vector<AlgElem> zP;        // the three projective characters
    std::vector<AlgElem> zLambda;   // even words * e0
    std::vector<std::uint32_t> zLambdaMasks;
    AlgElem e1_plus, e1_minus;
    std::vector<AlgElem> full;      // zP followed by zLambda

    int dim() const { return static_cast<int>(full.size()); }

    /// Exact coordinates of z in `full`; throws if z is not central.
    std::vector<Cyc> coordinates(const AlgElem& z) const;

    /// Index of a Z_Lambda mask within `full`.
    int lambda_index(std::uint32_t mask) const;

private:
    friend CenterBasis make_center_basis(const StructureSet&);
    mutable Echelon coords_;
};

CenterBasis make_center_basis(const StructureSet& s);

/// Output of the kernel solver together with the reconciliation against
/// the closed-form basis.
struct CenterData {
    CenterBasis basis;
    std::vector<AlgElem> kernel;                       // solver basis of Z(Q)
    std::vector<std::vector<Cyc>> kernel_coordinates;  // in `basis.full`
    std::vector<CheckResult> checks;
};

/// Solve [z, K] = 0, [z, f^pm_i] = 0 exactly over the monomial basis and
/// reconcile with the closed-form basis.  Dimension mismatch against
/// 3 + 2^(2N-1) is a hard failure.
CenterData compute_center(const QConfig& cfg);

/// The central idempotents e1^pm with their defining identities checked.
std::vector<CheckResult> special_idempotents(const StructureSet& s);

/// theta(a_1 x ... x a_N) = a_1 ... a_N on the per-index subalgebras
/// U_i = span{e0, f-_i e0, f+_i e0, f+_i f-_i e0}.  Elements of the tensor
/// product are sparse maps keyed by a base-4 code, two bits per index
/// (0: e0, 1: f-_i e0, 2: f+_i e0, 3: f+_i f-_i e0).
using UTensor = std::map<std::uint32_t, Cyc>;

AlgElem theta_map(int n, const UTensor& u);
/// Inverse of theta on Z_Lambda; rejects elements outside Z_Lambda.
UTensor theta_inverse(int n, const AlgElem& z);

/// Basis codes of U_+ (even total fermion count), graded-lex over masks.
std::vector<std::uint32_t> uplus_codes(int n);

}  // namespace qsf
