#pragma once

#include <memory>

#include "qsf/linalg.hpp"
#include "qsf/report.hpp"
#include "qsf/structures.hpp"

namespace qsf {

/// A finite-dimensional Q-module given by exact generator matrices in the
/// stated basis.  Generator order: K, f+1, f-1, ..., f+N, f-N.
class ModuleRep {
public:
    ModuleRep() = default;

    const std::string& label() const { return label_; }
    int rank() const { return n_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<AlgElem>& basis() const { return basis_; }
    const DenseMat& gen(int gi) const { return gen_[gi]; }

    /// Matrix of an arbitrary element in this module.
    DenseMat act(const AlgElem& a) const;
    DenseMat act_mono(Mono m) const;

    /// Exact trace of the action of an element.
    Cyc trace(const AlgElem& a) const;

    /// Verify every defining relation on the generator matrices.
    long relation_violations() const;

private:
    friend ModuleRep build_module(const StructureSet&, const std::string&);
    std::string label_;
    int n_ = 0;
    std::vector<AlgElem> basis_;        // submodule vectors inside Q
    std::vector<DenseMat> gen_;
    mutable std::vector<std::unique_ptr<Cyc>> trace_table_;  // per monomial
};

/// Labels: X0+, X0-, X1+, X1-, P0+, P0-, regular.
ModuleRep build_module(const StructureSet& s, const std::string& label);

/// chi_V(a) = Tr_V(kappa a).
Cyc trace_char(const StructureSet& s, const ModuleRep& V, const AlgElem& a);

/// phi_V = sum_(c) c' chi_V(S(c'')) over the coproduct of the integral.
AlgElem phi_central(const StructureSet& s, const ModuleRep& V);

/// bchi_V = sum_(M) Tr_V(kappa S(M_2)) M_1.
AlgElem chi_central(const StructureSet& s, const ModuleRep& V);

/// Closed forms of phi_V / bchi_V for V in {X0+, X0-, X1+, X1-, P0+}.
AlgElem phi_closed_form(const StructureSet& s, const std::string& label);
AlgElem chi_closed_form(const StructureSet& s, const std::string& label);

/// Composition multiplicities of the projective covers, the regular
/// decomposition count, and dim End(G_Q) via exact commutants.
std::vector<CheckResult> cartan_and_basic_algebra(const StructureSet& s,
                                                  bool with_endomorphisms);

/// dim Hom_Q(V, W) by exact nullspace computation.
int hom_dimension(const ModuleRep& V, const ModuleRep& W);

/// Reproduction checks of the closed forms by the trace constructions.
std::vector<CheckResult> check_characters(const StructureSet& s);

}  // namespace qsf
