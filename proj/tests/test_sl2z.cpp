#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsf/coend.hpp"

using namespace qsf;

TEST_CASE("integral checks for all ranks") {
    for (auto cfg : {QConfig{1, 1, 1}, QConfig{1, 1, -1}, QConfig{2, 0, 1}, QConfig{3, 1, 1}}) {
        auto s = build_structures(cfg);
        for (auto& r : check_integral(s)) {
            INFO(r.name, " residuals=", r.residual_count);
            CHECK(r.passed());
        }
    }
}

TEST_CASE("coend dual structure maps") {
    for (auto cfg : {QConfig{1, 1, 1}, QConfig{2, 0, 1}, QConfig{2, 2, 1}}) {
        auto s = build_structures(cfg);
        for (auto& r : check_coend_maps(s, cfg.n <= 2)) {
            INFO(r.name, " residuals=", r.residual_count, " ", r.note);
            CHECK(r.passed());
        }
    }
}

TEST_CASE("S-transform maps phi to chi") {
    auto s = build_structures({1, 1, 1});
    CHECK(s_transform(s, phi_closed_form(s, "X1+")) == chi_closed_form(s, "X1+"));
    CHECK(s_transform(s, phi_closed_form(s, "X1-")) == chi_closed_form(s, "X1-"));
    // S(phi_P0+) = nu 2^(N-1) (phi_X1+ - phi_X1-)
    AlgElem want = (phi_closed_form(s, "X1+") - phi_closed_form(s, "X1-"))
                       .scaled(Cyc(s.cfg.nu) * Cyc::pow2(s.cfg.n - 1));
    CHECK(s_transform(s, phi_closed_form(s, "P0+")) == want);
}

TEST_CASE("S-transform on e0 matches the closed form") {
    for (auto cfg : {QConfig{1, 1, 1}, QConfig{2, 0, 1}, QConfig{3, 1, 1}}) {
        auto s = build_structures(cfg);
        CHECK(s_transform(s, s.e0) == s_closed_form_on_lambda(s, 0));
    }
}

TEST_CASE("T-transform eigenvalues and unipotent part") {
    auto s = build_structures({2, 2, 1});
    Cyc binv = s.cfg.beta().inverse();
    CHECK(t_transform(s, phi_closed_form(s, "P0+")) == phi_closed_form(s, "P0+"));
    CHECK(t_transform(s, phi_closed_form(s, "X1+")) == phi_closed_form(s, "X1+").scaled(binv));
    CHECK(t_transform(s, phi_closed_form(s, "X1-")) == phi_closed_form(s, "X1-").scaled(-binv));
    // T(e0) = prod(1 + 2 f+ f-) e0
    AlgElem want = s.e0;
    for (int k = 1; k <= s.cfg.n; ++k) {
        AlgElem fpfm = AlgElem(s.cfg.n, mono_f(k, +1)) * AlgElem(s.cfg.n, mono_f(k, -1));
        want = (AlgElem::one(s.cfg.n) + fpfm.scaled(Cyc(2))) * want;
    }
    CHECK(t_transform(s, s.e0) == want);
}

TEST_CASE("non-central inputs are rejected") {
    auto s = build_structures({1, 1, 1});
    CHECK_THROWS_AS(s_transform(s, AlgElem(1, mono_f(1, +1))), std::invalid_argument);
    CHECK_THROWS_AS(t_transform(s, AlgElem(1, mono_K())), std::invalid_argument);
}

TEST_CASE("theorem: S and T block matrices at N=1") {
    auto act = check_theorem_ST({1, 1, 1});
    for (auto& r : act.checks) {
        INFO(r.name, " ", r.note);
        CHECK(r.passed());
    }
    REQUIRE(act.basis.dim() == 5);
    // S_ZP = nu [[0, 1/2, -1/2], [1, 1/2, 1/2], [-1, 1/2, 1/2]]
    CHECK(act.S_P.at(0, 0).is_zero());
    CHECK(act.S_P.at(0, 1) == Cyc::half());
    CHECK(act.S_P.at(0, 2) == -Cyc::half());
    CHECK(act.S_P.at(1, 0) == Cyc(1));
    CHECK(act.S_P.at(2, 0) == Cyc(-1));
    for (int i : {1, 2})
        for (int j : {1, 2}) CHECK(act.S_P.at(i, j) == Cyc::half());
}

TEST_CASE("theorem: all checks for N = 1, 2, 3 across beta and nu") {
    std::vector<QConfig> cfgs{{1, 3, 1}, {1, 5, -1}, {2, 0, 1}, {2, 6, 1}, {3, 1, 1}};
    for (auto cfg : cfgs) {
        auto act = check_theorem_ST(cfg);
        for (auto& r : act.checks) {
            INFO("N=", cfg.n, " b=", cfg.beta_exp, " ", r.name, " ", r.note);
            CHECK(r.passed());
        }
        // Jordan data: maximal block size is exactly N+1
        REQUIRE(!act.jordan_block_sizes.empty());
        CHECK(act.jordan_block_sizes.back() >= 1);
        CHECK(static_cast<int>(act.jordan_block_sizes.size()) == cfg.n + 1);
    }
}
