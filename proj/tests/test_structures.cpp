#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsf/linalg.hpp"
#include "qsf/structures.hpp"

using namespace qsf;

namespace {

std::vector<QConfig> sample_configs() {
    return {{1, 1, 1}, {1, 3, 1}, {2, 0, 1}, {2, 2, 1}, {2, 0, -1}, {3, 1, 1}};
}

}  // namespace

TEST_CASE("beta_pow") {
    QConfig c20{2, 0, 1};
    CHECK(c20.beta_pow(1) == Cyc(1));
    QConfig c11{1, 1, 1};
    CHECK(c11.beta_pow(4) == Cyc(-1));
    QConfig c13{1, 3, 1};
    CHECK(c13.beta_pow(2) == -Cyc::zeta(2));  // z^6 = -z^2
}

TEST_CASE("config validation") {
    CHECK_THROWS_AS((QConfig{2, 5, 1}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((QConfig{1, 2, 1}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((QConfig{1, 1, 2}.validate()), std::invalid_argument);
    QConfig{1, 5, -1}.validate();
}

TEST_CASE("coproduct on generators") {
    for (auto cfg : sample_configs()) {
        auto s = build_structures(cfg);
        int n = cfg.n;
        CHECK(s.cop.delta(AlgElem::one(n)) == TensorElem::one(n, 2));
        AlgElem fp1(n, mono_f(1, +1));
        CHECK(s.cop.delta(fp1) == embed(fp1, 0, 2) + outer({s.omega_p, fp1}));
        if (n % 2 == 1) {
            AlgElem K(n, mono_K());
            CHECK(s.cop.delta(K) == outer({K, K}));
        }
    }
}

TEST_CASE("coproduct respects the defining relations") {
    for (auto cfg : sample_configs()) {
        auto s = build_structures(cfg);
        int n = cfg.n;
        AlgElem K(n, mono_K());
        TensorElem dK = s.cop.delta(K);
        CHECK(dK * dK * dK * dK == TensorElem::one(n, 2));
        for (int i = 1; i <= n; ++i)
            for (int si : {+1, -1}) {
                AlgElem f(n, mono_f(i, si));
                TensorElem df = s.cop.delta(f);
                CHECK((df * dK + dK * df).is_zero());
                for (int j = 1; j <= n; ++j)
                    for (int sj : {+1, -1}) {
                        AlgElem g(n, mono_f(j, sj));
                        TensorElem dg = s.cop.delta(g);
                        TensorElem anti = df * dg + dg * df;
                        if (i == j && si != sj)
                            CHECK(anti == s.cop.delta(s.e1));
                        else
                            CHECK(anti.is_zero());
                    }
            }
    }
}

TEST_CASE("coproduct is counital on the basis") {
    for (auto cfg : sample_configs()) {
        auto s = build_structures(cfg);
        int n = cfg.n;
        for (Mono m : all_monomials(n)) {
            const TensorElem& d = s.cop.delta(m);
            CHECK(to_alg(GenCoalgebra::counit_slot(d, 0)) == AlgElem(n, m));
            CHECK(to_alg(GenCoalgebra::counit_slot(d, 1)) == AlgElem(n, m));
        }
    }
}

TEST_CASE("Delta(e0) and Delta(e1) split over sectors") {
    for (auto cfg : sample_configs()) {
        auto s = build_structures(cfg);
        CHECK(s.cop.delta(s.e0) == outer({s.e0, s.e0}) + outer({s.e1, s.e1}));
        CHECK(s.cop.delta(s.e1) == outer({s.e0, s.e1}) + outer({s.e1, s.e0}));
    }
}

TEST_CASE("counit values") {
    int n = 2;
    QConfig cfg{2, 0, 1};
    auto s = build_structures(cfg);
    CHECK(s.counit(AlgElem(n, mono_K(3))) == Cyc(1));
    AlgElem f2K = AlgElem(n, mono_f(2, +1)) * AlgElem(n, mono_K());
    CHECK(s.counit(f2K) == Cyc(0));
    CHECK(s.counit(s.e0) == Cyc(1));
}

TEST_CASE("antipode basics") {
    for (auto cfg : sample_configs()) {
        auto s = build_structures(cfg);
        int n = cfg.n;
        CHECK(s.S(AlgElem::one(n)) == AlgElem::one(n));
        AlgElem K(n, mono_K());
        if (n % 2 == 0) CHECK(s.S(K) == K);
        else CHECK(s.S(K) == AlgElem(n, mono_K(3)));
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                AlgElem a(n, mono_f(i, +1)), b(n, mono_f(j, -1));
                CHECK(s.S(a * b) == s.S(b) * s.S(a));
            }
    }
}

TEST_CASE("antipode is bijective on the monomial basis") {
    for (auto cfg : sample_configs()) {
        auto s = build_structures(cfg);
        std::vector<SparseVec> rows;
        for (Mono m : all_monomials(cfg.n)) {
            SparseVec r;
            for (auto& [mm, c] : s.S(m).terms()) r[mm] = c;
            rows.push_back(std::move(r));
        }
        CHECK(sparse_rank(rows) == cfg.dim());
    }
}

TEST_CASE("coassociator closed form at N=1, beta=zeta8") {
    QConfig cfg{1, 1, 1};
    auto s = build_structures(cfg);
    int n = 1;
    AlgElem K(n, mono_K());
    AlgElem third = (K - s.one) * s.e0 +
                    ((K.scaled(Cyc::zeta(2) * Cyc::i())) - s.one) * s.e1;
    TensorElem want = TensorElem::one(n, 3) + outer({s.e1, s.e1, third});
    CHECK(s.Phi == want);
    CHECK(s.Phi * s.PhiInv == TensorElem::one(n, 3));
    CHECK(s.PhiInv * s.Phi == TensorElem::one(n, 3));
}

TEST_CASE("Phi trivial iff N even and beta^2 = 1") {
    auto s1 = build_structures({2, 0, 1});
    CHECK(s1.Phi == TensorElem::one(2, 3));
    CHECK(s1.beta_elem == s1.one);
    auto s2 = build_structures({2, 4, 1});  // beta = -1
    CHECK(s2.Phi == TensorElem::one(2, 3));
    auto s3 = build_structures({2, 2, 1});  // beta = i
    CHECK(s3.Phi != TensorElem::one(2, 3));
}

TEST_CASE("balancing element closed form and group-likeness") {
    for (auto cfg : sample_configs()) {
        auto s = build_structures(cfg);
        int n = cfg.n;
        AlgElem K(n, mono_K());
        int par = (n % 2 == 0) ? 1 : -1;
        AlgElem want = (s.e0 - s.e1.scaled(Cyc(par) * Cyc::i() * cfg.beta_pow(2))) * K;
        CHECK(s.g == want);
        CHECK(s.cop.delta(s.g) == outer({s.g, s.g}));
        CHECK(s.counit(s.g) == Cyc(1));
    }
}

TEST_CASE("integral is two-sided") {
    for (auto cfg : sample_configs()) {
        auto s = build_structures(cfg);
        int n = cfg.n;
        AlgElem K(n, mono_K());
        CHECK((s.c_integral * AlgElem(n, mono_f(1, +1))).is_zero());
        CHECK(K * s.c_integral == s.c_integral);
        CHECK(s.c_integral * K == s.c_integral);
        for (Mono m : all_monomials(n)) {
            AlgElem x(n, m);
            Cyc eps = s.counit(x);
            CHECK(s.c_integral * x == s.c_integral.scaled(eps));
            CHECK(x * s.c_integral == s.c_integral.scaled(eps));
        }
    }
}

TEST_CASE("ribbon and Drinfeld elements") {
    for (auto cfg : sample_configs()) {
        auto s = build_structures(cfg);
        int n = cfg.n;
        CHECK(s.v * s.v_inv == AlgElem::one(n));
        CHECK(s.u * s.u_inv == AlgElem::one(n));
        CHECK(s.u_tilde == s.S(s.u_inv));
        CHECK(s.g == s.beta_elem * s.S(s.alpha) * s.v_inv * s.u);
        CHECK(s.R * s.RInv == TensorElem::one(n, 2));
        CHECK(s.RInv * s.R == TensorElem::one(n, 2));
    }
}

TEST_CASE("distinct-index factors of R and v commute") {
    QConfig cfg{3, 1, 1};
    auto s = build_structures(cfg);
    int n = cfg.n;
    std::vector<TensorElem> rfac;
    std::vector<AlgElem> vfac;
    for (int k = 1; k <= n; ++k) {
        AlgElem fp(n, mono_f(k, +1)), fm(n, mono_f(k, -1));
        rfac.push_back(TensorElem::one(n, 2) - outer({fm * s.omega_m, fp}).scaled(Cyc(2)));
        vfac.push_back(s.one - (fp * fm).scaled(Cyc(2)));
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            CHECK(rfac[a] * rfac[b] == rfac[b] * rfac[a]);
            CHECK(vfac[a] * vfac[b] == vfac[b] * vfac[a]);
        }
}

TEST_CASE("monodromy closed form and inverse") {
    for (auto cfg : sample_configs()) {
        auto s = build_structures(cfg);
        int n = cfg.n;
        CHECK(s.M == monodromy_closed_form(cfg));
        CHECK(s.M * s.MInv == TensorElem::one(n, 2));
        CHECK(to_alg(GenCoalgebra::counit_slot(s.M, 0)) == AlgElem::one(n));
    }
}

TEST_CASE("monodromy bases recombine to M") {
    for (auto cfg : {QConfig{1, 1, 1}, QConfig{2, 0, 1}, QConfig{2, 2, -1}}) {
        auto s = build_structures(cfg);
        auto bases = monodromy_bases(cfg);
        TensorElem sum(cfg.n, 2);
        for (std::size_t i = 0; i < bases.f.size(); ++i)
            sum += outer({bases.g[i], bases.f[i]});
        CHECK(sum == s.M);
    }
}

TEST_CASE("special central idempotents") {
    for (auto cfg : sample_configs()) {
        auto s = build_structures(cfg);
        CHECK(s.e1_plus * s.e1_plus == s.e1_plus);
        CHECK(s.e1_minus * s.e1_minus == s.e1_minus);
        CHECK((s.e1_plus * s.e1_minus).is_zero());
        CHECK(s.e1_plus + s.e1_minus == s.e1);
        // v^-1 e1^pm = +- beta^-1 e1^pm
        Cyc binv = cfg.beta().inverse();
        CHECK(s.v_inv * s.e1_plus == s.e1_plus.scaled(binv));
        CHECK(s.v_inv * s.e1_minus == s.e1_minus.scaled(-binv));
    }
}
