#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsf/compare.hpp"

using namespace qsf;

TEST_CASE("config gate") {
    CHECK_THROWS_AS(build_upsilon({1, 3, 1}), std::invalid_argument);
    CHECK_THROWS_AS(build_upsilon({1, 1, -1}), std::invalid_argument);
    CHECK_THROWS_AS(check_comparison({2, 0, 1}), std::invalid_argument);
}

TEST_CASE("upsilon on distinguished elements at N=1") {
    QConfig cfg{1, 1, 1};
    auto s = build_structures(cfg);
    auto ze = make_ze_basis(1);

    // e0 -> identity (empty alpha monomial)
    ZEVec img = upsilon_apply(s, ze, s.e0);
    REQUIRE(img.size() == 1);
    CHECK(img.begin()->first == ze.lambda_index(0));
    CHECK(img.begin()->second == Laurent(1));

    // e0 f+1 f-1 -> -pi i alpha^1 alpha^2
    AlgElem z = AlgElem(1, mono_make(3, 0)) * s.e0;
    ZEVec img2 = upsilon_apply(s, ze, z);
    REQUIRE(img2.size() == 1);
    CHECK(img2.begin()->first == ze.lambda_index(3));
    CHECK(img2.begin()->second == Laurent::term(-Cyc::i(), 1));

    // e1+ -> 2^(-N-1) b1
    ZEVec img3 = upsilon_apply(s, ze, s.e1_plus);
    REQUIRE(img3.size() == 1);
    CHECK(img3.begin()->first == 1);
    CHECK(img3.begin()->second == Laurent(Cyc::pow2(-2)));
}

TEST_CASE("voa matrices: S squares to the identity on the projective block") {
    for (int n : {1, 2, 3}) {
        QConfig cfg{n, n, 1};
        auto [S, T] = build_voa_matrices(cfg);
        // the 3x3 projective block of S^2 is the identity
        LaurentMat S2 = S * S;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                CHECK(S2.at(i, j) == (i == j ? Laurent(1) : Laurent()));
        // sigma_k(id) = -2 pi alpha^{2k} alpha^{2k-1} per index: the empty
        // word maps to (2 pi)^N times the all-pairs word in canonical order
        auto ze = make_ze_basis(n);
        std::uint32_t full = (1u << (2 * n)) - 1;
        CHECK(S.at(ze.lambda_index(full), ze.lambda_index(0)) ==
              Laurent::term(Cyc::pow2(n), n));
    }
}

TEST_CASE("full comparison for N = 1, 2, 3") {
    for (int n : {1, 2, 3}) {
        QConfig cfg{n, n, 1};
        auto data = check_comparison(cfg);
        for (auto& r : data.checks) {
            INFO("N=", n, " ", r.name, " residuals=", r.residual_count);
            CHECK(r.passed());
        }
        CHECK(data.Upsilon.rows() == 3 + (1 << (2 * n - 1)));
    }
}
