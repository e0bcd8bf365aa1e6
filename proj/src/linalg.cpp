#include "qsf/linalg.hpp"

#include <stdexcept>

namespace qsf {

void sv_add(SparseVec& a, const SparseVec& b, const Cyc& scale) {
    if (scale.is_zero()) return;
    for (auto& [k, c] : b) {
        Cyc v = c * scale;
        auto [it, fresh] = a.try_emplace(k, v);
        if (!fresh) {
            it->second += v;
            if (it->second.is_zero()) a.erase(it);
        }
    }
}

SparseVec Echelon::reduce(SparseVec v, std::vector<Cyc>* combo) const {
    while (!v.empty()) {
        auto lead = v.begin();
        auto it = pivot_of_.find(lead->first);
        if (it == pivot_of_.end()) break;
        Cyc f = lead->second;  // pivot rows have unit leading coefficient
        int row = it->second;
        sv_add(v, rows_[row], -f);
        if (combo)
            for (int j = 0; j < static_cast<int>(combos_[row].size()); ++j) {
                if (combos_[row][j].is_zero()) continue;
                if (static_cast<int>(combo->size()) <= j) combo->resize(j + 1);
                (*combo)[j] -= f * combos_[row][j];
            }
    }
    return v;
}

std::optional<int> Echelon::insert(SparseVec v) {
    v = reduce(std::move(v), nullptr);
    if (v.empty()) return std::nullopt;
    Cyc inv = v.begin()->second.inverse();
    for (auto& [k, c] : v) c *= inv;
    int idx = static_cast<int>(rows_.size());
    pivot_of_[v.begin()->first] = idx;
    rows_.push_back(std::move(v));
    combos_.emplace_back();
    return idx;
}

std::optional<int> Echelon::insert_tracked(SparseVec v) {
    std::vector<Cyc> combo;
    int self = tracked_inputs_++;
    if (static_cast<int>(combo.size()) <= self) combo.resize(self + 1);
    combo[self] = Cyc(1);
    v = reduce(std::move(v), &combo);
    if (v.empty()) return std::nullopt;
    Cyc inv = v.begin()->second.inverse();
    for (auto& [k, c] : v) c *= inv;
    for (auto& c : combo) c *= inv;
    int idx = static_cast<int>(rows_.size());
    pivot_of_[v.begin()->first] = idx;
    rows_.push_back(std::move(v));
    combos_.push_back(std::move(combo));
    return idx;
}

bool Echelon::contains(const SparseVec& v) const {
    return reduce(v, nullptr).empty();
}

std::optional<std::vector<Cyc>> Echelon::coordinates(const SparseVec& v) const {
    std::vector<Cyc> combo;
    SparseVec rem = reduce(v, &combo);
    if (!rem.empty()) return std::nullopt;
    combo.resize(tracked_inputs_);
    for (auto& c : combo) c = -c;
    return combo;
}

int sparse_rank(const std::vector<SparseVec>& rows) {
    Echelon e;
    for (auto& r : rows) e.insert(r);
    return e.rank();
}

std::vector<std::vector<Cyc>> sparse_kernel(const std::vector<SparseVec>& columns) {
    // Reduce column j against previous columns; if it becomes zero, the
    // tracked combination is a kernel vector.
    Echelon e;
    std::vector<std::vector<Cyc>> kernel;
    int ncols = static_cast<int>(columns.size());
    for (int j = 0; j < ncols; ++j) {
        auto coords = e.coordinates(columns[j]);
        if (coords) {
            std::vector<Cyc> v(ncols);
            v[j] = Cyc(1);
            // coordinates are over previously *tracked* inputs, i.e. the
            // columns inserted so far in order.
            int seen = 0;
            for (int jj = 0; jj < j; ++jj) {
                if (static_cast<int>(coords->size()) > seen && !(*coords)[seen].is_zero())
                    v[jj] = -(*coords)[seen];
                ++seen;
            }
            kernel.push_back(std::move(v));
            e.insert_tracked(SparseVec{});  // keep input indexing aligned
        } else {
            e.insert_tracked(columns[j]);
        }
    }
    return kernel;
}

DenseMat DenseMat::identity(int n) {
    DenseMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Cyc(1);
    return m;
}

DenseMat DenseMat::operator*(const DenseMat& o) const {
    if (c_ != o.r_) throw std::invalid_argument("DenseMat: shape mismatch");
    DenseMat r(r_, o.c_);
    for (int i = 0; i < r_; ++i)
        for (int k = 0; k < c_; ++k) {
            const Cyc& v = at(i, k);
            if (v.is_zero()) continue;
            for (int j = 0; j < o.c_; ++j) {
                const Cyc& w = o.at(k, j);
                if (w.is_zero()) continue;
                r.at(i, j) += v * w;
            }
        }
    return r;
}

DenseMat DenseMat::operator-(const DenseMat& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("DenseMat: shape mismatch");
    DenseMat r(r_, c_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
    return r;
}

DenseMat DenseMat::operator+(const DenseMat& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("DenseMat: shape mismatch");
    DenseMat r(r_, c_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
    return r;
}

bool DenseMat::is_zero() const {
    for (auto& v : a_)
        if (!v.is_zero()) return false;
    return true;
}

int DenseMat::rank() const {
    std::vector<SparseVec> rows(r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j)
            if (!at(i, j).is_zero()) rows[i][static_cast<std::uint64_t>(j)] = at(i, j);
    return sparse_rank(rows);
}

std::optional<DenseMat> DenseMat::inverse() const {
    if (r_ != c_) return std::nullopt;
    DenseMat aug(r_, 2 * r_);
    for (int i = 0; i < r_; ++i) {
        for (int j = 0; j < r_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, r_ + i) = Cyc(1);
    }
    for (int col = 0; col < r_; ++col) {
        int piv = -1;
        for (int i = col; i < r_; ++i)
            if (!aug.at(i, col).is_zero()) { piv = i; break; }
        if (piv < 0) return std::nullopt;
        if (piv != col)
            for (int j = 0; j < 2 * r_; ++j) std::swap(aug.at(piv, j), aug.at(col, j));
        Cyc inv = aug.at(col, col).inverse();
        for (int j = 0; j < 2 * r_; ++j) aug.at(col, j) *= inv;
        for (int i = 0; i < r_; ++i) {
            if (i == col || aug.at(i, col).is_zero()) continue;
            Cyc f = aug.at(i, col);
            for (int j = 0; j < 2 * r_; ++j) aug.at(i, j) -= f * aug.at(col, j);
        }
    }
    DenseMat res(r_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < r_; ++j) res.at(i, j) = aug.at(i, r_ + j);
    return res;
}

DenseMat DenseMat::pow(int k) const {
    DenseMat r = identity(r_);
    DenseMat b = *this;
    while (k) {
        if (k & 1) r = r * b;
        b = b * b;
        k >>= 1;
    }
    return r;
}

}  // namespace qsf
