#include "qsf/compare.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace qsf {

LaurentMat LaurentMat::identity(int n) {
    LaurentMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Laurent(1);
    return m;
}

LaurentMat LaurentMat::operator*(const LaurentMat& o) const {
    if (c_ != o.r_) throw std::invalid_argument("LaurentMat: shape mismatch");
    LaurentMat r(r_, o.c_);
    for (int i = 0; i < r_; ++i)
        for (int k = 0; k < c_; ++k) {
            const Laurent& v = at(i, k);
            if (v.is_zero()) continue;
            for (int j = 0; j < o.c_; ++j) {
                const Laurent& w = o.at(k, j);
                if (w.is_zero()) continue;
                r.at(i, j) += v * w;
            }
        }
    return r;
}

LaurentMat LaurentMat::operator-(const LaurentMat& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("LaurentMat: shape mismatch");
    LaurentMat r(r_, c_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
    return r;
}

bool LaurentMat::is_zero() const {
    for (auto& v : a_)
        if (!v.is_zero()) return false;
    return true;
}

bool LaurentMat::is_invertible() const {
    if (r_ != c_) return false;
    LaurentMat work = *this;
    std::vector<bool> used(r_, false);
    for (int col = 0; col < c_; ++col) {
        int piv = -1;
        for (int i = 0; i < r_; ++i)
            if (!used[i] && work.at(i, col).is_unit()) { piv = i; break; }
        if (piv < 0) return false;
        used[piv] = true;
        Laurent inv = work.at(piv, col).unit_inverse();
        for (int i = 0; i < r_; ++i) {
            if (i == piv || work.at(i, col).is_zero()) continue;
            Laurent f = work.at(i, col) * inv;
            for (int j = 0; j < c_; ++j) work.at(i, j) -= f * work.at(piv, j);
        }
    }
    return true;
}

namespace {

std::vector<std::uint32_t> even_masks_graded(int n) {
    std::vector<std::uint32_t> masks;
    for (std::uint32_t m = 0; m < (1u << (2 * n)); ++m)
        if (std::popcount(m) % 2 == 0) masks.push_back(m);
    std::stable_sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
        return std::popcount(a) != std::popcount(b) ? std::popcount(a) < std::popcount(b)
                                                    : a < b;
    });
    return masks;
}

void ze_accum(ZEVec& v, int idx, const Laurent& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = v.try_emplace(idx, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) v.erase(it);
    }
}

void require_comparison_config(const QConfig& cfg) {
    cfg.validate();
    if (((cfg.beta_exp - cfg.n) % 8 + 8) % 8 != 0 || cfg.nu != 1)
        throw std::invalid_argument(
            "comparison requires beta = zeta_8^N and nu = 1");
}

// Coordinates of central elements over the spanning set used by the
// explicit Upsilon values: e0-words (even masks), K e0 prod f+f-, e1^pm.
struct UpsilonDomain {
    std::vector<std::uint32_t> masks;
    Echelon ech;
    int top_index = 0;   // index of K e0 prod f+ f-
    int e1p_index = 0, e1m_index = 0;
};

UpsilonDomain make_domain(const StructureSet& s) {
    UpsilonDomain dom;
    const int n = s.cfg.n;
    dom.masks = even_masks_graded(n);
    auto insert = [&](const AlgElem& a) {
        SparseVec v;
        for (auto& [m, c] : a.terms()) v[m] = c;
        if (!dom.ech.insert_tracked(v))
            throw std::logic_error("upsilon domain: spanning set is dependent");
    };
    for (std::uint32_t m : dom.masks) insert(AlgElem(n, mono_make(m, 0)) * s.e0);
    dom.top_index = static_cast<int>(dom.masks.size());
    insert(AlgElem(n, mono_make((1u << (2 * n)) - 1, 1)) * s.e0);
    dom.e1p_index = dom.top_index + 1;
    dom.e1m_index = dom.top_index + 2;
    insert(s.e1_plus);
    insert(s.e1_minus);
    return dom;
}

}  // namespace

int ZEBasisInfo::lambda_index(std::uint32_t mask) const {
    for (std::size_t i = 0; i < lambdaMasks.size(); ++i)
        if (lambdaMasks[i] == mask) return 3 + static_cast<int>(i);
    throw std::invalid_argument("ZEBasisInfo: not an even mask");
}

ZEBasisInfo make_ze_basis(int n) {
    ZEBasisInfo ze;
    ze.n = n;
    ze.lambdaMasks = even_masks_graded(n);
    return ze;
}

ZEVec upsilon_apply(const StructureSet& s, const ZEBasisInfo& ze, const AlgElem& z) {
    require_comparison_config(s.cfg);
    const int n = s.cfg.n;
    static thread_local std::map<int, UpsilonDomain> domains;
    auto it = domains.find(n);
    if (it == domains.end()) it = domains.emplace(n, make_domain(s)).first;
    UpsilonDomain& dom = it->second;

    SparseVec v;
    for (auto& [m, c] : z.terms()) v[m] = c;
    auto coords = dom.ech.coordinates(v);
    if (!coords) throw std::invalid_argument("upsilon_apply: element is not central");

    ZEVec out;
    for (std::size_t j = 0; j < dom.masks.size(); ++j) {
        const Cyc& c = (*coords)[j];
        if (c.is_zero()) continue;
        std::uint32_t mask = dom.masks[j];
        int minus_count = 0;  // each f-_k contributes a factor (-pi i)
        for (int k = 0; k < n; ++k)
            if (mask & (1u << (2 * k + 1))) ++minus_count;
        Laurent coef = Laurent::term((-Cyc::i()).pow(minus_count) * c, minus_count);
        ze_accum(out, ze.lambda_index(mask), coef);
    }
    // K e0 prod f+f- -> (-pi i)^N (2 pi)^-N b0
    {
        const Cyc& c = (*coords)[dom.top_index];
        if (!c.is_zero()) {
            Cyc fac = (-Cyc::i()).pow(n) * Cyc::pow2(-n);
            ze_accum(out, 0, Laurent(fac * c));
        }
    }
    // e1^pm -> +- 2^(-N-1) b_{1,2}
    {
        const Cyc& cp = (*coords)[dom.e1p_index];
        if (!cp.is_zero()) ze_accum(out, 1, Laurent(Cyc::pow2(-n - 1) * cp));
        const Cyc& cm = (*coords)[dom.e1m_index];
        if (!cm.is_zero()) ze_accum(out, 2, Laurent(-(Cyc::pow2(-n - 1) * cm)));
    }
    return out;
}

LaurentMat build_upsilon(const QConfig& cfg) {
    require_comparison_config(cfg);
    auto s = build_structures(cfg);
    auto cb = make_center_basis(s);
    auto ze = make_ze_basis(cfg.n);
    LaurentMat U(ze.dim(), cb.dim());
    for (int j = 0; j < cb.dim(); ++j) {
        ZEVec col = upsilon_apply(s, ze, cb.full[j]);
        for (auto& [i, c] : col) U.at(i, j) = c;
    }
    return U;
}

std::pair<LaurentMat, LaurentMat> build_voa_matrices(const QConfig& cfg) {
    require_comparison_config(cfg);
    const int n = cfg.n;
    auto ze = make_ze_basis(n);
    const int d = ze.dim();
    LaurentMat S(d, d), T(d, d);

    // projective block
    S.at(0, 1) = Laurent(Cyc::pow2(n));
    S.at(0, 2) = Laurent(-Cyc::pow2(n));
    S.at(1, 0) = Laurent(Cyc::pow2(-n - 1));
    S.at(2, 0) = Laurent(-Cyc::pow2(-n - 1));
    S.at(1, 1) = S.at(1, 2) = S.at(2, 1) = S.at(2, 2) = Laurent(Cyc::half());
    T.at(0, 0) = Laurent(1);
    T.at(1, 1) = Laurent(Cyc::zeta(-n));       // e^(-pi i N/4)
    T.at(2, 2) = Laurent(-Cyc::zeta(-n));

    // Z_Lambda blocks via the per-index sigma and tau maps; the canonical
    // pair alpha^{2k-1} alpha^{2k} is minus the W_k basis vector, which
    // turns sigma's entries -2pi / (-2pi)^-1 into +2pi / (2pi)^-1 and
    // tau's 2pi i into -2pi i on canonical monomials.
    for (std::size_t j = 0; j < ze.lambdaMasks.size(); ++j) {
        std::uint32_t mask = ze.lambdaMasks[j];
        // sigma: pairs <-> empties, singles scale by -i
        std::uint32_t out_mask = 0;
        Laurent coef = Laurent(1);
        for (int k = 0; k < n; ++k) {
            bool a = mask & (1u << (2 * k)), b = mask & (1u << (2 * k + 1));
            if (a && b) {
                coef *= Laurent::term(Cyc::half(), -1);  // (2 pi)^-1
            } else if (!a && !b) {
                out_mask |= 3u << (2 * k);
                coef *= Laurent::term(Cyc(2), 1);        // 2 pi
            } else {
                out_mask |= (a ? 1u : 2u) << (2 * k);
                coef *= Laurent(-Cyc::i());
            }
        }
        S.at(ze.lambda_index(out_mask), ze.lambda_index(mask)) = coef;

        // tau: every empty pair position optionally becomes a pair with
        // factor -2 pi i
        std::map<std::uint32_t, Laurent> timg{{mask, Laurent(1)}};
        for (int k = 0; k < n; ++k) {
            bool a = mask & (1u << (2 * k)), b = mask & (1u << (2 * k + 1));
            if (a || b) continue;
            std::map<std::uint32_t, Laurent> next;
            for (auto& [mm, cc] : timg) {
                next[mm] += cc;
                next[mm | (3u << (2 * k))] += cc * Laurent::term(-(Cyc(2) * Cyc::i()), 1);
            }
            timg = std::move(next);
        }
        for (auto& [mm, cc] : timg)
            if (!cc.is_zero()) T.at(ze.lambda_index(mm), ze.lambda_index(mask)) = cc;
    }
    return {S, T};
}

ComparisonData check_comparison(const QConfig& cfg) {
    require_comparison_config(cfg);
    ComparisonData out;
    out.cfg = cfg;
    out.ze = make_ze_basis(cfg.n);
    const int n = cfg.n;

    auto s = build_structures(cfg);
    out.center = make_center_basis(s);
    const int d = out.center.dim();

    Stopwatch sw;
    out.Upsilon = build_upsilon(cfg);
    auto [SV, TV] = build_voa_matrices(cfg);
    out.SVoa = SV;
    out.TVoaStripped = TV;

    // quasi-Hopf side matrices, lifted to Laurent scalars
    out.SmatL = LaurentMat(d, d);
    out.TmatL = LaurentMat(d, d);
    for (int j = 0; j < d; ++j) {
        auto sc = out.center.coordinates(s_transform(s, out.center.full[j]));
        auto tc = out.center.coordinates(t_transform(s, out.center.full[j]));
        for (int i = 0; i < d; ++i) {
            if (!sc[i].is_zero()) out.SmatL.at(i, j) = Laurent(sc[i]);
            if (!tc[i].is_zero()) out.TmatL.at(i, j) = Laurent(tc[i]);
        }
    }
    out.checks.push_back(make_result("compare.assembled",
                                     "Upsilon and both matrix pairs assembled", 0, sw.ms()));

    {
        Stopwatch sw2;
        long bad = !(out.SVoa * out.Upsilon - out.Upsilon * out.SmatL).is_zero();
        out.checks.push_back(make_result("compare.s_intertwines",
                                         "S_VOA Upsilon = Upsilon S_Z exactly", bad, sw2.ms()));
    }
    {
        Stopwatch sw2;
        long bad = !(out.TVoaStripped * out.Upsilon - out.Upsilon * out.TmatL).is_zero();
        out.checks.push_back(make_result("compare.t_intertwines",
                                         "T_VOA (phase-stripped) Upsilon = Upsilon T_Z exactly",
                                         bad, sw2.ms()));
    }

    {
        Stopwatch sw2;
        long bad = 0;
        // the five character identities
        std::uint32_t top = (1u << (2 * n)) - 1;
        ZEVec b0{{0, Laurent(1)}};
        ZEVec b1{{1, Laurent(1)}};
        ZEVec b2{{2, Laurent(1)}};
        ZEVec top_l{{out.ze.lambda_index(top), Laurent::term(Cyc::pow2(n), n)}};  // (2 pi)^N

        auto plus = [](ZEVec a, const ZEVec& b) {
            for (auto& [k, c] : b) ze_accum(a, k, c);
            return a;
        };
        auto minus = [](ZEVec a, const ZEVec& b) {
            for (auto& [k, c] : b) ze_accum(a, k, -c);
            return a;
        };
        bad += (upsilon_apply(s, out.ze, phi_closed_form(s, "X0+")) != plus(b0, top_l));
        bad += (upsilon_apply(s, out.ze, phi_closed_form(s, "X0-")) != minus(b0, top_l));
        bad += (upsilon_apply(s, out.ze, phi_closed_form(s, "X1+")) != b1);
        bad += (upsilon_apply(s, out.ze, phi_closed_form(s, "X1-")) != b2);
        ZEVec p0{{0, Laurent(Cyc::pow2(2 * n))}};
        bad += (upsilon_apply(s, out.ze, phi_closed_form(s, "P0+")) != p0);
        out.checks.push_back(make_result("compare.characters",
                                         "Upsilon maps the internal characters to the "
                                         "pseudo-trace side characters",
                                         bad, sw2.ms()));
    }

    {
        Stopwatch sw2;
        long bad = !out.Upsilon.is_invertible();
        out.checks.push_back(make_result("compare.upsilon_invertible",
                                         "Upsilon is invertible over the Laurent ring",
                                         bad, sw2.ms()));
    }

    {
        Stopwatch sw2;
        // Per-index transport: the basis change C maps (e0, f-e0, f+e0,
        // f+f-e0) to (id, -pi i a^{2k}, a^{2k-1}, c * [a^{2k} a^{2k-1}]).
        // The scalar lambda with sigma_k C = C (lambda S^k) and the sign of
        // the fourth image are probed; exactly one combination holds as a
        // 4x4 identity.  (The remaining per-index sign ambiguity squares
        // away on the even subspace, which is why the global comparison
        // above is unambiguous.)
        LaurentMat sigma(4, 4), tau(4, 4);
        sigma.at(0, 3) = Laurent::term(-Cyc::half(), -1);
        sigma.at(1, 1) = sigma.at(2, 2) = Laurent(-Cyc::i());
        sigma.at(3, 0) = Laurent::term(Cyc(-2), 1);
        tau = LaurentMat::identity(4);
        tau.at(3, 0) = Laurent::term(Cyc(2) * Cyc::i(), 1);
        LaurentMat C(4, 4);
        C.at(0, 0) = Laurent(1);
        C.at(2, 1) = Laurent::term(-Cyc::i(), 1);
        C.at(1, 2) = Laurent(1);
        C.at(3, 3) = Laurent::term(Cyc::i(), 1);
        // i S^k twisted by the parity sign on the odd directions; the sign
        // is forced by the tau transport (which pins the fourth column of
        // C) and is invisible on U_+ where odd factors pair up.
        LaurentMat Si(4, 4), Ti(4, 4);
        Si.at(0, 3) = Laurent(-(Cyc::half() * Cyc::i()));
        Si.at(1, 1) = Si.at(2, 2) = Laurent(-Cyc::i());
        Si.at(3, 0) = Laurent(Cyc(2) * Cyc::i());
        Ti = LaurentMat::identity(4);
        Ti.at(3, 0) = Laurent(Cyc(2));
        long bad = !(sigma * C - C * Si).is_zero();
        bad += !(tau * C - C * Ti).is_zero();
        out.checks.push_back(make_result(
            "compare.per_index_transport",
            "the basis change transports i S^k (parity-twisted on odd directions) to "
            "sigma_k and T^k to tau_k",
            bad, sw2.ms(),
            "sigma C = C (i S^k diag(1,-1,-1,1)); tau C = C T^k"));
    }
    return out;
}

}  // namespace qsf
