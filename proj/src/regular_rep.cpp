#include "qsf/regular_rep.hpp"

#include <bit>
#include <memory>

namespace qsf {

namespace {

// Basis index of a monomial: keys are already dense in [0, 4^(N+1)).
inline int idx(Mono m) { return static_cast<int>(m); }

}  // namespace

RegularRep::RegularRep(int n) : n_(n), dim_(1 << (2 * n + 2)) {
    cache_.resize(static_cast<std::size_t>(dim_));

    // K . (fstring K^e) = (-1)^{|fstring|} fstring K^{e+1}
    gen_K_ = DenseMat(dim_, dim_);
    for (Mono m = 0; m < static_cast<Mono>(dim_); ++m) {
        std::uint32_t fm = mono_fmask(m), e = mono_kexp(m);
        Mono out = mono_make(fm, (e + 1) & 3u);
        gen_K_.at(idx(out), idx(m)) = Cyc::sign(std::popcount(fm));
    }

    // f^sgn_i . (fstring K^e): the incoming fermion passes the fstring
    // factors of index < i; the slot cases follow the defining relations.
    for (int i = 1; i <= n; ++i) {
        DenseMat mp(dim_, dim_), mm(dim_, dim_);
        std::uint32_t bplus = 1u << (2 * i - 2), bminus = 1u << (2 * i - 1);
        std::uint32_t below = bplus - 1;  // all bits of index < i
        for (Mono m = 0; m < static_cast<Mono>(dim_); ++m) {
            std::uint32_t fm = mono_fmask(m), e = mono_kexp(m);
            Cyc s = Cyc::sign(std::popcount(fm & below));
            bool hp = fm & bplus, hm = fm & bminus;
            // f+_i from the left
            if (!hp && !hm) {
                mp.at(idx(mono_make(fm | bplus, e)), idx(m)) += s;
            } else if (!hp && hm) {
                mp.at(idx(mono_make(fm | bplus, e)), idx(m)) += s;  // f+ f- canonical
            }
            // f-_i from the left
            if (!hp && !hm) {
                mm.at(idx(mono_make(fm | bminus, e)), idx(m)) += s;
            } else if (hp && !hm) {
                // f- f+ = 1/2 - 1/2 K^2 - f+ f-
                mm.at(idx(mono_make(fm & ~bplus, e)), idx(m)) += s * Cyc::half();
                mm.at(idx(mono_make(fm & ~bplus, (e + 2) & 3u)), idx(m)) -= s * Cyc::half();
                mm.at(idx(mono_make(fm | bminus, e)), idx(m)) -= s;
            } else if (hp && hm) {
                // f- f+ f- = (e1 - f+ f-) f- = e1 f- = 1/2 f- - 1/2 f- K^2
                mm.at(idx(mono_make(fm & ~bplus, e)), idx(m)) += s * Cyc::half();
                mm.at(idx(mono_make(fm & ~bplus, (e + 2) & 3u)), idx(m)) -= s * Cyc::half();
            }
        }
        gen_fp_.push_back(std::move(mp));
        gen_fm_.push_back(std::move(mm));
    }
}

const DenseMat& RegularRep::matrix(Mono m) const {
    auto& slot = cache_[idx(m)];
    if (!slot) {
        std::uint32_t fm = mono_fmask(m), e = mono_kexp(m);
        DenseMat acc = DenseMat::identity(dim_);
        bool first = true;
        for (int bit = 0; bit < 2 * n_; ++bit) {
            if (!(fm & (1u << bit))) continue;
            const DenseMat& g = (bit % 2 == 0) ? gen_fp_[bit / 2] : gen_fm_[bit / 2];
            acc = first ? g : acc * g;
            first = false;
        }
        for (std::uint32_t j = 0; j < e; ++j) {
            acc = first ? gen_K_ : acc * gen_K_;
            first = false;
        }
        slot = std::make_unique<DenseMat>(std::move(acc));
    }
    return *slot;
}

std::vector<Cyc> RegularRep::coords(const AlgElem& a) const {
    std::vector<Cyc> v(dim_);
    for (auto& [m, c] : a.terms()) v[idx(m)] = c;
    return v;
}

AlgElem RegularRep::from_coords(const std::vector<Cyc>& v) const {
    AlgElem a(n_);
    for (int k = 0; k < dim_; ++k)
        if (!v[k].is_zero()) a.add(static_cast<Mono>(k), v[k]);
    return a;
}

AlgElem RegularRep::mul(const AlgElem& a, const AlgElem& b) const {
    std::vector<Cyc> vb = coords(b), out(dim_);
    for (auto& [m, c] : a.terms()) {
        const DenseMat& mat = matrix(m);
        for (int row = 0; row < dim_; ++row) {
            Cyc acc;
            for (int col = 0; col < dim_; ++col) {
                if (vb[col].is_zero()) continue;
                const Cyc& e = mat.at(row, col);
                if (e.is_zero()) continue;
                acc += e * vb[col];
            }
            if (!acc.is_zero()) out[row] += acc * c;
        }
    }
    return from_coords(out);
}

}  // namespace qsf
