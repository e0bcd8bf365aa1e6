#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "qsf/cyclotomic.hpp"

namespace qsf {

/// Sparse vector over Q(zeta_8), indexed by arbitrary 64-bit keys.
using SparseVec = std::map<std::uint64_t, Cyc>;

void sv_add(SparseVec& a, const SparseVec& b, const Cyc& scale);

/// Incremental exact row-echelon basis.  Rows are reduced against existing
/// pivots on insertion; the span and coordinate queries are exact.
class Echelon {
public:
    /// Reduce v against the basis; if a nonzero remainder survives, insert
    /// it as a new pivot row and return its index, else return nullopt.
    std::optional<int> insert(SparseVec v);

    /// Like insert, but also track the expression of each pivot row in
    /// terms of the original inserted vectors (for coordinates()).
    std::optional<int> insert_tracked(SparseVec v);

    /// Is v in the current span?
    bool contains(const SparseVec& v) const;

    /// Coordinates of v in terms of the original tracked insertions.
    /// Requires all insertions to have gone through insert_tracked.
    std::optional<std::vector<Cyc>> coordinates(const SparseVec& v) const;

    int rank() const { return static_cast<int>(rows_.size()); }

private:
    SparseVec reduce(SparseVec v, std::vector<Cyc>* combo) const;

    std::vector<SparseVec> rows_;             // echelonized, unit pivots
    std::map<std::uint64_t, int> pivot_of_;   // pivot key -> row index
    std::vector<std::vector<Cyc>> combos_;    // row i = sum combos_[i][j) * input j
    int tracked_inputs_ = 0;
};

/// Rank of a collection of sparse rows.
int sparse_rank(const std::vector<SparseVec>& rows);

/// Basis of the nullspace of the linear map sending the j-th unit vector to
/// columns[j] (all exact).  Returned vectors are indexed by column number.
std::vector<std::vector<Cyc>> sparse_kernel(const std::vector<SparseVec>& columns);

/// Dense exact matrix over Q(zeta_8).
class DenseMat {
public:
    DenseMat() = default;
    DenseMat(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<std::size_t>(rows) * cols) {}
    static DenseMat identity(int n);

    int rows() const { return r_; }
    int cols() const { return c_; }
    Cyc& at(int i, int j) { return a_[static_cast<std::size_t>(i) * c_ + j]; }
    const Cyc& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * c_ + j]; }

    DenseMat operator*(const DenseMat& o) const;
    DenseMat operator-(const DenseMat& o) const;
    DenseMat operator+(const DenseMat& o) const;
    bool operator==(const DenseMat& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
    bool is_zero() const;

    int rank() const;
    std::optional<DenseMat> inverse() const;
    DenseMat pow(int k) const;

private:
    int r_ = 0, c_ = 0;
    std::vector<Cyc> a_;
};

}  // namespace qsf
