#pragma once

#include "qsf/report.hpp"
#include "qsf/structures.hpp"

namespace qsf {

/// The data of a quasi-triangular quasi-bialgebra on Q(N)'s underlying
/// algebra.  Both Q and the appendix variant carry one of these, so the
/// axiom suite below runs on either.
struct QuasiBialgebra {
    int n = 0;
    const GenCoalgebra* cop = nullptr;
    const TensorElem* Phi = nullptr;
    const TensorElem* PhiInv = nullptr;
    const TensorElem* R = nullptr;
    const TensorElem* RInv = nullptr;
    std::string tag;  // report prefix, e.g. "" or "qhat."
};

QuasiBialgebra as_quasi_bialgebra(const StructureSet& s);

/// x placed in two chosen legs of a degree-3 tensor.
TensorElem lift2to3(const TensorElem& x, int legA, int legB);

/// Coproduct applied to the defining relations, plus the counit and
/// antipode compatibility with the relations.
std::vector<CheckResult> check_relations_coproduct(const StructureSet& s,
                                                   const Budget& budget = Budget::none());

/// Quasi-coassociativity on the whole monomial basis, the pentagon (both
/// sides evaluated in two association orders), and the counit law for Phi.
std::vector<CheckResult> check_quasi_bialgebra(const QuasiBialgebra& q,
                                               const Budget& budget = Budget::none());

/// The two antipode sum identities on the whole basis and the two
/// evaluation/coevaluation identities against Phi.
std::vector<CheckResult> check_antipode_axioms(const StructureSet& s,
                                               const Budget& budget = Budget::none());

/// R-matrix checks: intertwiner property on generators, both hexagons
/// (with the convention prober), and invertibility.
std::vector<CheckResult> check_quasitriangular(const QuasiBialgebra& q,
                                               const Budget& budget = Budget::none());

/// Ribbon element checks: centrality, counit, S-invariance, the coproduct
/// law against the monodromy, commutation with u, the balancing element,
/// and the twist eigenvalues on e1^pm.
std::vector<CheckResult> check_ribbon(const StructureSet& s,
                                      const Budget& budget = Budget::none());

/// Drinfeld twist: the anti-coalgebra identity on generators,
/// invertibility, and the sector table.
std::vector<CheckResult> check_drinfeld_twist(const StructureSet& s,
                                              const Budget& budget = Budget::none());

/// Factorisability: rank of the flattened monodromy matrix and the
/// explicit dual bases certificate.
std::vector<CheckResult> check_factorisable(const StructureSet& s,
                                            const Budget& budget = Budget::none());

/// Run one of the named suites: all, bialgebra, antipode, rmatrix,
/// ribbon, factorisable.
std::vector<CheckResult> verify_suite(const StructureSet& s, const std::string& suite,
                                      const Budget& budget = Budget::none());

}  // namespace qsf
