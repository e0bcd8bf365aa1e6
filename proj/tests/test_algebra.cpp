#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qsf/algebra.hpp"
#include "qsf/regular_rep.hpp"
#include "qsf/structures.hpp"

using namespace qsf;

namespace {

std::mt19937 rng(77031);

Mono random_mono(int n) {
    std::uniform_int_distribution<std::uint32_t> mask(0, (1u << (2 * n)) - 1);
    std::uniform_int_distribution<std::uint32_t> e(0, 3);
    return mono_make(mask(rng), e(rng));
}

AlgElem random_elem(int n, int nterms) {
    std::uniform_int_distribution<int> coef(-4, 4);
    AlgElem a(n);
    for (int t = 0; t < nterms; ++t) a.add(random_mono(n), Cyc(coef(rng)));
    return a;
}

AlgElem e0(int n) {
    AlgElem r(n);
    r.add(mono_one(), Cyc::half());
    r.add(mono_K(2), Cyc::half());
    return r;
}

AlgElem e1(int n) {
    AlgElem r(n);
    r.add(mono_one(), Cyc::half());
    r.add(mono_K(2), -Cyc::half());
    return r;
}

}  // namespace

TEST_CASE("defining relations in normal order") {
    int n = 2;
    // K f+1 = -f+1 K
    AlgElem lhs = mono_mul(n, mono_K(), mono_f(1, +1));
    AlgElem rhs(n);
    rhs.add(mono_make(1, 1), Cyc(-1));
    CHECK(lhs == rhs);

    // f-1 f+1 = 1/2 - 1/2 K^2 - f+1 f-1
    AlgElem r2 = mono_mul(n, mono_f(1, -1), mono_f(1, +1));
    AlgElem want(n);
    want.add(mono_one(), Cyc::half());
    want.add(mono_K(2), -Cyc::half());
    want.add(mono_make(3, 0), Cyc(-1));
    CHECK(r2 == want);

    // K^3 K = 1
    CHECK(mono_mul(n, mono_K(3), mono_K(1)) == AlgElem::one(n));

    // squares vanish
    CHECK(mono_mul(n, mono_f(2, +1), mono_f(2, +1)).is_zero());
    CHECK(mono_mul(n, mono_f(2, -1), mono_f(2, -1)).is_zero());

    // distinct labels anticommute
    AlgElem ab = mono_mul(n, mono_f(1, +1), mono_f(2, -1));
    AlgElem ba = mono_mul(n, mono_f(2, -1), mono_f(1, +1));
    CHECK(ab == -ba);
}

TEST_CASE("central idempotents") {
    for (int n = 1; n <= 3; ++n) {
        AlgElem z0 = e0(n), z1 = e1(n);
        CHECK(z0 * z0 == z0);
        CHECK(z1 * z1 == z1);
        CHECK((z0 * z1).is_zero());
        CHECK(z0 + z1 == AlgElem::one(n));
        for (Mono m : all_monomials(n)) {
            AlgElem x(n, m);
            CHECK(z0 * x == x * z0);
            CHECK(z1 * x == x * z1);
        }
    }
}

TEST_CASE("product inverse identity") {
    // prod(1 - 2 f+ f-) * prod(1 + 2 f+ f- K^2) = 1
    for (int n = 1; n <= 3; ++n) {
        AlgElem a = AlgElem::one(n), b = AlgElem::one(n);
        for (int k = 1; k <= n; ++k) {
            AlgElem fpfm = AlgElem(n, mono_f(k, +1)) * AlgElem(n, mono_f(k, -1));
            a = a * (AlgElem::one(n) - fpfm.scaled(Cyc(2)));
            b = b * (AlgElem::one(n) + (fpfm * AlgElem(n, mono_K(2))).scaled(Cyc(2)));
        }
        CHECK(a * b == AlgElem::one(n));
    }
}

TEST_CASE("associativity on random monomial triples") {
    for (int n = 1; n <= 3; ++n) {
        for (int t = 0; t < 500; ++t) {
            AlgElem a(n, random_mono(n)), b(n, random_mono(n)), c(n, random_mono(n));
            CHECK((a * b) * c == a * (b * c));
        }
    }
}

TEST_CASE("monomial count and closure") {
    for (int n = 1; n <= 3; ++n) {
        auto monos = all_monomials(n);
        CHECK(static_cast<int>(monos.size()) == (1 << (2 * n + 2)));
        // closure spot check: products of random monomials stay in the span
        for (int t = 0; t < 50; ++t) {
            AlgElem p = mono_mul(n, random_mono(n), random_mono(n));
            for (auto& [m, c] : p.terms()) CHECK(m < (1u << (2 * n + 2)));
        }
    }
}

TEST_CASE("rank mismatch rejected") {
    AlgElem a = AlgElem::one(1), b = AlgElem::one(2);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
    CHECK_THROWS_AS(a + b, std::invalid_argument);
}

TEST_CASE("tensor ops") {
    int n = 2;
    AlgElem K(n, mono_K()), one = AlgElem::one(n);
    AlgElem fp1(n, mono_f(1, +1));

    CHECK(outer({one, K}) * outer({K, one}) == outer({K, K}));
    CHECK(permute(outer({fp1, K}), {1, 0}) == outer({K, fp1}));
    CHECK((outer({e0(n), e1(n)}) * outer({e1(n), e0(n)})).is_zero());

    // degree mismatch rejected
    TensorElem t2 = TensorElem::one(n, 2), t3 = TensorElem::one(n, 3);
    CHECK_THROWS_AS(t2 * t3, std::invalid_argument);
}

TEST_CASE("regular representation oracle agrees with sparse multiplication") {
    for (int n = 1; n <= 2; ++n) {
        RegularRep rep(n);
        // K . f+1 -> -f+1 K
        AlgElem got = rep.mul(AlgElem(n, mono_K()), AlgElem(n, mono_f(1, +1)));
        AlgElem want(n);
        want.add(mono_make(1, 1), Cyc(-1));
        CHECK(got == want);

        // identity on random elements
        for (int t = 0; t < 100; ++t) {
            AlgElem x = random_elem(n, 5);
            CHECK(rep.mul(AlgElem::one(n), x) == x);
        }

        // oracle equivalence on >= 1000 random pairs
        for (int t = 0; t < 1000; ++t) {
            AlgElem a = random_elem(n, 3), b = random_elem(n, 3);
            CHECK(rep.mul(a, b) == a * b);
        }
    }
}
