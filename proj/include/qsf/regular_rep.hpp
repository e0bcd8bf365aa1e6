#pragma once

#include <memory>

#include "qsf/algebra.hpp"
#include "qsf/linalg.hpp"

namespace qsf {

/// Dense regular-representation oracle for Q(N).  Generator matrices are
/// transcribed directly from the defining relations (no use of the sparse
/// rewrite engine); monomial matrices are assembled from them by dense
/// matrix products, giving an independent multiplication path.
class RegularRep {
public:
    explicit RegularRep(int n);

    int rank() const { return n_; }
    int dim() const { return dim_; }

    /// Matrix of left multiplication by a basis monomial.
    const DenseMat& matrix(Mono m) const;

    /// Coordinate vector of an element over the monomial basis (key order).
    std::vector<Cyc> coords(const AlgElem& a) const;
    AlgElem from_coords(const std::vector<Cyc>& v) const;

    /// Product computed with dense matrices only.
    AlgElem mul(const AlgElem& a, const AlgElem& b) const;

private:
    int n_, dim_;
    DenseMat gen_K_;
    std::vector<DenseMat> gen_fp_, gen_fm_;
    mutable std::vector<std::unique_ptr<DenseMat>> cache_;
};

}  // namespace qsf
