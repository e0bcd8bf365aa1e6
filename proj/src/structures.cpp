#include "qsf/structures.hpp"

namespace qsf {

GenCoalgebra::GenCoalgebra(int n, TensorElem delta_K, std::vector<TensorElem> delta_fp,
                           std::vector<TensorElem> delta_fm)
    : n_(n), dfp_(std::move(delta_fp)), dfm_(std::move(delta_fm)) {
    delta_K_pow_[0] = TensorElem::one(n, 2);
    delta_K_pow_[1] = std::move(delta_K);
    delta_K_pow_[2] = delta_K_pow_[1] * delta_K_pow_[1];
    delta_K_pow_[3] = delta_K_pow_[2] * delta_K_pow_[1];
    cache_.resize(static_cast<std::size_t>(1) << (2 * n + 2));
}

const TensorElem& GenCoalgebra::delta(Mono m) const {
    auto& slot = cache_[m];
    if (!slot) {
        TensorElem acc = TensorElem::one(n_, 2);
        std::uint32_t fm = mono_fmask(m);
        for (int bit = 0; bit < 2 * n_; ++bit) {
            if (!(fm & (1u << bit))) continue;
            acc = acc * (bit % 2 == 0 ? dfp_[bit / 2] : dfm_[bit / 2]);
        }
        acc = acc * delta_K_pow_[mono_kexp(m)];
        slot = std::make_unique<TensorElem>(std::move(acc));
    }
    return *slot;
}

TensorElem GenCoalgebra::delta(const AlgElem& a) const {
    TensorElem r(n_, 2);
    for (auto& [m, c] : a.terms()) {
        const TensorElem& d = delta(m);
        for (auto& [k, v] : d.terms()) r.add(k, v * c);
    }
    return r;
}

TensorElem GenCoalgebra::delta_slot(const TensorElem& x, int slot) const {
    return map_slot(x, slot, 2, [this](Mono m) -> const TensorElem& { return delta(m); });
}

Cyc GenCoalgebra::counit(const AlgElem& a) {
    Cyc r;
    for (auto& [m, c] : a.terms())
        if (mono_fmask(m) == 0) r += c;
    return r;
}

TensorElem GenCoalgebra::counit_slot(const TensorElem& x, int slot) {
    int d = x.degree();
    TensorElem r(x.rank(), d - 1);
    for (auto& [k, c] : x.terms()) {
        if (mono_fmask(TensorElem::slot(k, slot)) != 0) continue;
        std::uint64_t nk = 0;
        int pos = 0;
        for (int s = 0; s < d; ++s) {
            if (s == slot) continue;
            nk |= static_cast<std::uint64_t>(TensorElem::slot(k, s)) << (16 * pos++);
        }
        r.add(nk, c);
    }
    return r;
}

GenAntipode::GenAntipode(int n, AlgElem s_K, std::vector<AlgElem> s_fp,
                         std::vector<AlgElem> s_fm)
    : n_(n), sfp_(std::move(s_fp)), sfm_(std::move(s_fm)) {
    s_K_pow_[0] = AlgElem::one(n);
    s_K_pow_[1] = std::move(s_K);
    s_K_pow_[2] = s_K_pow_[1] * s_K_pow_[1];
    s_K_pow_[3] = s_K_pow_[2] * s_K_pow_[1];
    cache_.resize(static_cast<std::size_t>(1) << (2 * n + 2));
}

const AlgElem& GenAntipode::operator()(Mono m) const {
    auto& slot = cache_[m];
    if (!slot) {
        // anti-homomorphism: factors are reversed, K^e first
        AlgElem acc = s_K_pow_[mono_kexp(m)];
        std::uint32_t fm = mono_fmask(m);
        for (int bit = 2 * n_ - 1; bit >= 0; --bit) {
            if (!(fm & (1u << bit))) continue;
            acc = acc * (bit % 2 == 0 ? sfp_[bit / 2] : sfm_[bit / 2]);
        }
        slot = std::make_unique<AlgElem>(std::move(acc));
    }
    return *slot;
}

AlgElem GenAntipode::operator()(const AlgElem& a) const {
    AlgElem r(n_);
    for (auto& [m, c] : a.terms()) r += (*this)(m).scaled(c);
    return r;
}

TensorElem GenAntipode::map_tensor_slot(const TensorElem& x, int slot) const {
    TensorElem r(x.rank(), x.degree());
    for (auto& [k, c] : x.terms()) {
        const AlgElem& img = (*this)(TensorElem::slot(k, slot));
        for (auto& [m2, c2] : img.terms())
            r.add(TensorElem::with_slot(k, slot, m2), c * c2);
    }
    return r;
}

std::vector<AlgElem> StructureSet::generators() const {
    std::vector<AlgElem> g;
    g.push_back(AlgElem(cfg.n, mono_K()));
    for (int i = 1; i <= cfg.n; ++i) {
        g.push_back(AlgElem(cfg.n, mono_f(i, +1)));
        g.push_back(AlgElem(cfg.n, mono_f(i, -1)));
    }
    return g;
}

std::vector<Mono> StructureSet::generator_monos() const {
    std::vector<Mono> g;
    g.push_back(mono_K());
    for (int i = 1; i <= cfg.n; ++i) {
        g.push_back(mono_f(i, +1));
        g.push_back(mono_f(i, -1));
    }
    return g;
}

std::vector<Mono> all_monomials(int n) {
    std::vector<Mono> out;
    out.reserve(static_cast<std::size_t>(1) << (2 * n + 2));
    for (std::uint32_t mask = 0; mask < (1u << (2 * n)); ++mask)
        for (std::uint32_t e = 0; e < 4; ++e) out.push_back(mono_make(mask, e));
    return out;
}

namespace {

AlgElem k_power(int n, int e) {
    return AlgElem(n, mono_K(static_cast<std::uint32_t>(((e % 4) + 4) % 4)));
}

}  // namespace

StructureSet build_structures(const QConfig& cfg) {
    cfg.validate();
    const int n = cfg.n;
    const Cyc beta = cfg.beta();
    const Cyc i = Cyc::i();
    const Cyc half = Cyc::half();
    const int par = (n % 2 == 0) ? 1 : -1;  // (-1)^N

    StructureSet s;
    s.cfg = cfg;
    s.one = AlgElem::one(n);

    s.e0 = AlgElem(n);
    s.e0.add(mono_one(), half);
    s.e0.add(mono_K(2), half);
    s.e1 = AlgElem(n);
    s.e1.add(mono_one(), half);
    s.e1.add(mono_K(2), -half);

    AlgElem K = AlgElem(n, mono_K());
    s.omega_p = (s.e0 + s.e1.scaled(i)) * K;
    s.omega_m = (s.e0 - s.e1.scaled(i)) * K;

    // coproduct: Delta(K) = K(x)K - (1+(-1)^N) e1(x)e1 . K(x)K,
    // Delta(f^pm_i) = f^pm_i(x)1 + omega_pm(x)f^pm_i
    TensorElem KxK = outer({K, K});
    TensorElem dK = KxK - outer({s.e1, s.e1}).scaled(Cyc(1 + par)) * KxK;
    std::vector<TensorElem> dfp, dfm;
    for (int k = 1; k <= n; ++k) {
        AlgElem fp(n, mono_f(k, +1)), fm(n, mono_f(k, -1));
        dfp.push_back(embed(fp, 0, 2) + outer({s.omega_p, fp}));
        dfm.push_back(embed(fm, 0, 2) + outer({s.omega_m, fm}));
    }
    s.cop = GenCoalgebra(n, dK, dfp, dfm);

    // antipode: S(K) = (e0 + (-1)^N e1) K, S(f^pm_k) = f^pm_k (e0 +- (-1)^N i e1) K
    AlgElem sK = (s.e0 + s.e1.scaled(Cyc(par))) * K;
    std::vector<AlgElem> sfp, sfm;
    for (int k = 1; k <= n; ++k) {
        AlgElem fp(n, mono_f(k, +1)), fm(n, mono_f(k, -1));
        sfp.push_back(fp * (s.e0 + s.e1.scaled(i * Cyc(par))) * K);
        sfm.push_back(fm * (s.e0 - s.e1.scaled(i * Cyc(par))) * K);
    }
    s.S = GenAntipode(n, sK, sfp, sfm);

    s.alpha = s.one;
    s.beta_elem = s.e0 + (k_power(n, n) * s.e1).scaled(beta * beta * Cyc::ipow(n));

    // coassociator: 1x1x1 + e1(x)e1(x){ (K^N - 1) e0 + (beta^2 (+-i K)^N - 1) e1 }
    auto make_phi = [&](int sgn) {
        AlgElem third = (k_power(n, n) - s.one) * s.e0 +
                        (k_power(n, n).scaled(beta * beta * Cyc::ipow(sgn > 0 ? n : -n)) - s.one) * s.e1;
        return TensorElem::one(n, 3) + outer({s.e1, s.e1, third});
    };
    s.Phi = make_phi(+1);
    s.PhiInv = make_phi(-1);

    // R-matrix: Cartan factor rho_{n,m} = 1/2 sum_{i,j} (-1)^{ij} i^{-in+jm} K^i (x) K^j
    auto rho = [&](int nn, int mm) {
        TensorElem r(n, 2);
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                Cyc coef = half * Cyc::sign(a * b) * Cyc::ipow(-a * nn + b * mm);
                r += outer({k_power(n, a), k_power(n, b)}).scaled(coef);
            }
        return r;
    };
    auto cartan = [&](int inv) {
        TensorElem r(n, 2);
        for (int nn = 0; nn < 2; ++nn)
            for (int mm = 0; mm < 2; ++mm) {
                AlgElem en = nn ? s.e1 : s.e0;
                AlgElem em = mm ? s.e1 : s.e0;
                r += (rho(nn, mm) * outer({en, em})).scaled(cfg.beta_pow(inv * nn * mm));
            }
        return r;
    };
    TensorElem fprod = TensorElem::one(n, 2);
    TensorElem fprod_inv = TensorElem::one(n, 2);
    for (int k = 1; k <= n; ++k) {
        AlgElem fp(n, mono_f(k, +1)), fm(n, mono_f(k, -1));
        fprod = fprod * (TensorElem::one(n, 2) - outer({fm * s.omega_m, fp}).scaled(Cyc(2)));
        fprod_inv = fprod_inv * (TensorElem::one(n, 2) + outer({fm * s.omega_m, fp}).scaled(Cyc(2)));
    }
    s.R = cartan(+1) * fprod;
    s.RInv = fprod_inv * cartan(-1);

    // ribbon element and inverse
    AlgElem prod_m = s.one, prod_p = s.one;
    for (int k = 1; k <= n; ++k) {
        AlgElem fpfm = AlgElem(n, mono_f(k, +1)) * AlgElem(n, mono_f(k, -1));
        prod_m = prod_m * (s.one - fpfm.scaled(Cyc(2)));
        prod_p = prod_p * (s.one + fpfm * k_power(n, 2).scaled(Cyc(2)));
    }
    s.v = (s.e0 - (K * s.e1).scaled(beta * i)) * prod_m;
    s.v_inv = (s.e0 - (K * s.e1).scaled(beta.inverse() * i)) * prod_p;

    // Drinfeld element u, u^-1 and the inverse-braiding partner u~ = u^-1
    AlgElem headu = s.e0 * K + (s.e1 * k_power(n, n)).scaled(beta * Cyc::ipow(-n));
    AlgElem headui = s.e0 * K + (s.e1 * k_power(n, n)).scaled(beta.inverse() * Cyc::ipow(-n));
    s.u = headu * prod_m;
    s.u_inv = headui * prod_p;
    s.u_tilde = s.u_inv;

    // balancing element g = (e0 - (-1)^N i beta^2 e1) K
    s.g = (s.e0 - s.e1.scaled(Cyc(par) * i * beta * beta)) * K;

    // two-sided integral c = nu 2^N beta^2 f+1 f-1 ... f+N f-N e0 (1 + K)
    AlgElem ftop = s.one;
    for (int k = 1; k <= n; ++k)
        ftop = ftop * AlgElem(n, mono_f(k, +1)) * AlgElem(n, mono_f(k, -1));
    s.c_integral = (ftop * s.e0 * (s.one + K)).scaled(Cyc(cfg.nu) * Cyc::pow2(n) * beta * beta);

    // kappa = (e0 - i beta^2 e1) K
    s.kappa = (s.e0 - s.e1.scaled(i * beta * beta)) * K;

    // Drinfeld twist: f = e0 x 1 + e1 x K^N e0 + beta^2 (-i K)^N e1 x e1,
    // with the K^N of the last summand acting in the first leg (this is the
    // placement singled out by the anti-coalgebra identity; the two legs
    // only coincide for even N where K^2 e1 = -e1).
    s.fTwist = outer({s.e0, s.e0}) + outer({s.e0, s.e1}) +
               outer({s.e1, k_power(n, n) * s.e0}) +
               outer({k_power(n, n) * s.e1, s.e1}).scaled(beta * beta * Cyc::ipow(-n));

    // central idempotents e1^pm = 1/2 e1 (1 -+ i K prod(1 - 2 f+ f-))
    s.e1_plus = (s.e1 * (s.one - (K * prod_m).scaled(i))).scaled(half);
    s.e1_minus = (s.e1 * (s.one + (K * prod_m).scaled(i))).scaled(half);

    s.e0_plus = ((s.one + K) * s.e0).scaled(half);
    s.e0_minus = ((s.one - K) * s.e0).scaled(half);

    s.M = monodromy(s.R);
    s.MInv = s.RInv * permute(s.RInv, {1, 0});

    return s;
}

TensorElem monodromy(const TensorElem& R) {
    return permute(R, {1, 0}) * R;
}

TensorElem monodromy_closed_form(const QConfig& cfg) {
    const int n = cfg.n;
    StructureSet s = build_structures(cfg);
    TensorElem out(n, 2);
    for (int nn = 0; nn < 2; ++nn)
        for (int mm = 0; mm < 2; ++mm) {
            AlgElem en = nn ? s.e1 : s.e0;
            AlgElem em = mm ? s.e1 : s.e0;
            TensorElem acc = outer({k_power(n, mm) * en, k_power(n, nn) * em});
            for (int j = 1; j <= n; ++j) {
                AlgElem fp(n, mono_f(j, +1)), fm(n, mono_f(j, -1));
                TensorElem a = TensorElem::one(n, 2) +
                               outer({fp * s.omega_m, fm}).scaled(Cyc(2) * Cyc::sign(mm));
                TensorElem b = TensorElem::one(n, 2) -
                               outer({fm * s.omega_m, fp}).scaled(Cyc(2));
                acc = acc * (a * b);
            }
            Cyc pref = (nn * mm) ? -(cfg.beta_pow(2)) : Cyc(1);
            out += acc.scaled(pref);
        }
    return out;
}

MonodromyBases monodromy_bases(const QConfig& cfg) {
    const int n = cfg.n;
    StructureSet s = build_structures(cfg);
    MonodromyBases out;
    // index I = (n, m, s_1, t_1, ..., s_N, t_N)
    for (int nn = 0; nn < 2; ++nn)
        for (int mm = 0; mm < 2; ++mm)
            for (std::uint32_t st = 0; st < (1u << (2 * n)); ++st) {
                int sum_s = 0, sum_t = 0;
                for (int j = 0; j < n; ++j) {
                    if (st & (1u << (2 * j))) ++sum_s;      // s_{j+1}
                    if (st & (1u << (2 * j + 1))) ++sum_t;  // t_{j+1}
                }
                AlgElem en = nn ? s.e1 : s.e0;
                AlgElem em = mm ? s.e1 : s.e0;
                AlgElem f = k_power(n, nn) * em;
                AlgElem g = k_power(n, mm) * en;
                for (int j = 1; j <= n; ++j) {
                    bool sj = st & (1u << (2 * (j - 1)));
                    bool tj = st & (1u << (2 * (j - 1) + 1));
                    AlgElem fp(n, mono_f(j, +1)), fm(n, mono_f(j, -1));
                    if (tj) {
                        f = f * fm;
                        g = g * (fp * s.omega_m);
                    }
                    if (sj) {
                        f = f * fp;
                        g = g * (fm * s.omega_m);
                    }
                }
                Cyc coef = Cyc::pow2(sum_s + sum_t) * Cyc::sign(mm * sum_t + sum_s);
                if (nn && mm) coef *= -(cfg.beta_pow(2));
                out.f.push_back(f);
                out.g.push_back(g.scaled(coef));
            }
    return out;
}

}  // namespace qsf
