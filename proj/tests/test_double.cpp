#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsf/drinfeld_double.hpp"

using namespace qsf;

namespace {

void expect_all_pass(const std::vector<CheckResult>& rs) {
    for (auto& r : rs) {
        INFO(r.name, ": ", r.status, " residuals=", r.residual_count, " ", r.note);
        CHECK(r.passed());
    }
}

}  // namespace

TEST_CASE("H is a Hopf algebra, N = 1, 2, 3") {
    for (int n : {1, 2, 3}) {
        DoubleAlgebra D(n);
        CHECK(D.hdim() == (1 << (n + 1)));
        expect_all_pass(check_H_hopf(D));
    }
}

TEST_CASE("dual Hopf algebra checks") {
    for (int n : {1, 2, 3}) {
        DoubleAlgebra D(n);
        expect_all_pass(check_dual_hopf(D));
    }
}

TEST_CASE("double relations and dimension") {
    for (int n : {1, 2, 3}) {
        DoubleAlgebra D(n);
        CHECK(D.ddim() == (1 << (2 * n + 2)));
        expect_all_pass(check_double_relations(D));
    }
}

TEST_CASE("double quasi-triangularity, N <= 2") {
    for (int n : {1, 2}) {
        DoubleAlgebra D(n);
        expect_all_pass(check_double_quasitriangular(D));
    }
}

TEST_CASE("f1 phi1 - phi1 f1 = kappa - k explicitly") {
    DoubleAlgebra D(2);
    SparseVec f1 = D.d_embed_h(D.h_f(1));
    SparseVec p1 = D.d_embed_dual(D.dual_phi(1));
    SparseVec comm = D.d_mul(f1, p1);
    for (auto& [k, c] : D.d_mul(p1, f1)) {
        auto [it, fresh] = comm.try_emplace(k, -c);
        if (!fresh) {
            it->second -= c;
            if (it->second.is_zero()) comm.erase(it);
        }
    }
    SparseVec want = D.d_embed_dual(D.dual_kappa());
    for (auto& [k, c] : D.d_embed_h(D.h_k())) {
        auto [it, fresh] = want.try_emplace(k, -c);
        if (!fresh) {
            it->second -= c;
            if (it->second.is_zero()) want.erase(it);
        }
    }
    CHECK(comm == want);
}

TEST_CASE("Psi for all beta and ranks") {
    for (int n : {1, 2, 3}) {
        DoubleAlgebra D(n);
        QConfig base{n, n % 2, 1};
        for (int b : base.all_beta_exps()) {
            auto s = build_structures({n, b, 1});
            expect_all_pass(check_psi(s, D));
        }
    }
}

TEST_CASE("embedding of H in Q for even N") {
    DoubleAlgebra D(2);
    auto s = build_structures({2, 0, 1});
    expect_all_pass(check_embedding(s, D));
}
