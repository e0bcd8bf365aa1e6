#pragma once

#include "qsf/center.hpp"
#include "qsf/coend.hpp"
#include "qsf/laurent.hpp"
#include "qsf/report.hpp"

namespace qsf {

/// Dense matrix over the Laurent ring Q(zeta_8)[pi^(+-1)].
class LaurentMat {
public:
    LaurentMat() = default;
    LaurentMat(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<std::size_t>(rows) * cols) {}
    static LaurentMat identity(int n);

    int rows() const { return r_; }
    int cols() const { return c_; }
    Laurent& at(int i, int j) { return a_[static_cast<std::size_t>(i) * c_ + j]; }
    const Laurent& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * c_ + j]; }

    LaurentMat operator*(const LaurentMat& o) const;
    LaurentMat operator-(const LaurentMat& o) const;
    bool is_zero() const;
    bool operator==(const LaurentMat& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

    /// Invertibility over the Laurent ring: elimination with unit pivots
    /// (single-term entries).  Returns false if no unit pivot is found.
    bool is_invertible() const;

private:
    int r_ = 0, c_ = 0;
    std::vector<Laurent> a_;
};

/// Abstract basis of the centre on the endomorphism side: three projective
/// vectors, then even alpha-monomial masks in graded-lex order (bit i-1 of
/// a mask flags alpha^i_0).
struct ZEBasisInfo {
    int n = 0;
    std::vector<std::uint32_t> lambdaMasks;
    int dim() const { return 3 + static_cast<int>(lambdaMasks.size()); }
    int lambda_index(std::uint32_t mask) const;
};

ZEBasisInfo make_ze_basis(int n);

/// Sparse vector over the ZE basis with Laurent coefficients.
using ZEVec = std::map<int, Laurent>;

/// Everything needed for the projective comparison of the two actions.
struct ComparisonData {
    QConfig cfg;
    ZEBasisInfo ze;
    CenterBasis center;
    LaurentMat Upsilon;
    LaurentMat SVoa, TVoaStripped;
    LaurentMat SmatL, TmatL;  // quasi-Hopf side, lifted to Laurent scalars
    std::vector<CheckResult> checks;
};

/// The linear map Upsilon on a central element, expressed over the ZE
/// basis.  Requires beta = zeta_8^N and nu = 1.
ZEVec upsilon_apply(const StructureSet& s, const ZEBasisInfo& ze, const AlgElem& z);

/// The matrix of Upsilon over the distinguished centre basis.
LaurentMat build_upsilon(const QConfig& cfg);

/// The S- and (phase-stripped) T-matrices of the pseudo-trace side.
std::pair<LaurentMat, LaurentMat> build_voa_matrices(const QConfig& cfg);

/// Full comparison: intertwining identities, the five character matches,
/// invertibility of Upsilon, and the per-index 4x4 transport identities.
ComparisonData check_comparison(const QConfig& cfg);

}  // namespace qsf
