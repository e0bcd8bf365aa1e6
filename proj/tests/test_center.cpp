#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsf/center.hpp"

using namespace qsf;

TEST_CASE("centre dimensions 5, 11, 35") {
    CHECK(compute_center({1, 1, 1}).kernel.size() == 5);
    CHECK(compute_center({2, 0, 1}).kernel.size() == 11);
    CHECK(compute_center({3, 1, 1}).kernel.size() == 35);
}

TEST_CASE("kernel span equals closed-form span") {
    for (auto cfg : {QConfig{1, 3, 1}, QConfig{2, 2, 1}, QConfig{2, 0, -1}}) {
        auto data = compute_center(cfg);
        for (auto& r : data.checks) {
            INFO(r.name, " ", r.note);
            CHECK(r.passed());
        }
        CHECK(data.kernel_coordinates.size() == data.kernel.size());
        // coordinates reproduce the kernel vectors
        for (std::size_t i = 0; i < data.kernel.size(); ++i) {
            AlgElem rebuilt(cfg.n);
            for (std::size_t j = 0; j < data.basis.full.size(); ++j)
                rebuilt += data.basis.full[j].scaled(data.kernel_coordinates[i][j]);
            CHECK(rebuilt == data.kernel[i]);
        }
    }
}

TEST_CASE("special idempotents") {
    for (auto cfg : {QConfig{1, 1, 1}, QConfig{2, 0, 1}, QConfig{3, 1, 1}}) {
        auto s = build_structures(cfg);
        for (auto& r : special_idempotents(s)) {
            INFO(r.name, " residuals=", r.residual_count);
            CHECK(r.passed());
        }
    }
}

TEST_CASE("centre basis ordering") {
    auto s = build_structures({2, 0, 1});
    auto cb = make_center_basis(s);
    CHECK(cb.dim() == 11);
    CHECK(cb.zP.size() == 3);
    CHECK(cb.zLambda.size() == 8);
    // graded-lex: first mask is 0 (e0 itself)
    CHECK(cb.zLambdaMasks[0] == 0u);
    CHECK(cb.zLambda[0] == s.e0);
    // masks are graded by fermion count
    for (std::size_t i = 1; i < cb.zLambdaMasks.size(); ++i)
        CHECK(std::popcount(cb.zLambdaMasks[i - 1]) <= std::popcount(cb.zLambdaMasks[i]));
}

TEST_CASE("theta map and inverse") {
    for (int n : {1, 2, 3}) {
        auto s = build_structures({n, n % 2, 1});
        // theta(e0 x ... x e0) = e0
        UTensor u{{0u, Cyc(1)}};
        CHECK(theta_map(n, u) == s.e0);

        if (n >= 2) {
            // theta(f+_1 e0 x f-_2 e0 x e0 x ...) = f+_1 f-_2 e0
            std::uint32_t code = 2u | (1u << 2);
            UTensor v{{code, Cyc(1)}};
            AlgElem want = AlgElem(n, mono_make((1u << 0) | (1u << 3), 0)) * s.e0;
            CHECK(theta_map(n, v) == want);
        }

        // bijectivity on U_+
        for (std::uint32_t code : uplus_codes(n)) {
            UTensor w{{code, Cyc(1)}};
            AlgElem z = theta_map(n, w);
            UTensor back = theta_inverse(n, z);
            CHECK(back == w);
        }

        // rejection outside Z_Lambda
        CHECK_THROWS_AS(theta_inverse(n, s.e1), std::invalid_argument);
        CHECK_THROWS_AS(theta_inverse(n, AlgElem(n, mono_f(1, +1)) * s.e0),
                        std::invalid_argument);
    }
}

TEST_CASE("Z_Lambda is closed under multiplication and killed by e1^pm") {
    for (auto cfg : {QConfig{1, 1, 1}, QConfig{2, 0, 1}}) {
        auto s = build_structures(cfg);
        auto cb = make_center_basis(s);
        Echelon span;
        for (auto& z : cb.zLambda) {
            SparseVec v;
            for (auto& [m, c] : z.terms()) v[m] = c;
            span.insert(v);
        }
        for (auto& a : cb.zLambda)
            for (auto& b : cb.zLambda) {
                AlgElem p = a * b;
                SparseVec v;
                for (auto& [m, c] : p.terms()) v[m] = c;
                CHECK(span.contains(v));
                CHECK((s.e1_plus * p).is_zero());
                CHECK((s.e1_minus * p).is_zero());
            }
    }
}

TEST_CASE("phi_P0+ lies in the kernel span") {
    for (auto cfg : {QConfig{1, 1, 1}, QConfig{2, 2, 1}}) {
        auto data = compute_center(cfg);
        Echelon solved;
        for (auto& z : data.kernel) {
            SparseVec v;
            for (auto& [m, c] : z.terms()) v[m] = c;
            solved.insert(v);
        }
        SparseVec v;
        for (auto& [m, c] : data.basis.zP[0].terms()) v[m] = c;
        CHECK(solved.contains(v));
    }
}
