#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsf/verify.hpp"

using namespace qsf;

namespace {

void expect_all_pass(const std::vector<CheckResult>& rs) {
    for (auto& r : rs) {
        INFO(r.name, ": ", r.status, " residuals=", r.residual_count, " ", r.note);
        CHECK(r.passed());
    }
}

}  // namespace

TEST_CASE("relation images under Delta, eps, S") {
    for (int b : {1, 3}) expect_all_pass(check_relations_coproduct(build_structures({1, b, 1})));
    for (int b : {0, 2}) expect_all_pass(check_relations_coproduct(build_structures({2, b, 1})));
}

TEST_CASE("quasi-bialgebra axioms at N = 1, 2 for all beta") {
    for (int n : {1, 2}) {
        QConfig base{n, n % 2, 1};
        for (int b : base.all_beta_exps()) {
            auto s = build_structures({n, b, 1});
            expect_all_pass(check_quasi_bialgebra(as_quasi_bialgebra(s)));
        }
    }
}

TEST_CASE("quasi-coassociativity matches the two displayed expansions for f-") {
    // (Delta x id)Delta(f-) and (id x Delta)Delta(f-) differ exactly by the
    // sector-11 part that Phi conjugates away; both sides are produced here
    // from the closed forms and compared term by term.
    for (auto cfg : {QConfig{1, 1, 1}, QConfig{2, 0, 1}}) {
        auto s = build_structures(cfg);
        int n = cfg.n;
        int par = (n % 2 == 0) ? 1 : -1;
        AlgElem fm(n, mono_f(1, -1));
        AlgElem K(n, mono_K());
        const TensorElem& d = s.cop.delta(mono_f(1, -1));
        TensorElem left = s.cop.delta_slot(d, 0);
        TensorElem right = s.cop.delta_slot(d, 1);

        TensorElem common = embed(fm, 0, 3) +
                            lift2to3(outer({s.omega_m, fm}), 0, 1);
        TensorElem kk_head =
            outer({K * s.e0, K * s.e0}) - outer({K * s.e0, K * s.e1}).scaled(Cyc::i()) -
            outer({K * s.e1, K * s.e0}).scaled(Cyc::i());
        TensorElem lhs_want =
            common + (lift2to3(kk_head, 0, 1) -
                      lift2to3(outer({K * s.e1, K * s.e1}), 0, 1).scaled(Cyc(par))) *
                         embed(fm, 2, 3);
        TensorElem rhs_want =
            common + (lift2to3(kk_head, 0, 1) -
                      lift2to3(outer({K * s.e1, K * s.e1}), 0, 1)) *
                         embed(fm, 2, 3);
        CHECK(left == lhs_want);
        CHECK(right == rhs_want);
        CHECK(s.Phi * left == right * s.Phi);
    }
}

TEST_CASE("antipode axioms") {
    for (auto cfg : {QConfig{1, 1, 1}, QConfig{1, 5, 1}, QConfig{2, 0, 1}, QConfig{2, 6, 1}}) {
        auto s = build_structures(cfg);
        expect_all_pass(check_antipode_axioms(s));
    }
}

TEST_CASE("antipode sums on specific elements") {
    auto s = build_structures({2, 0, 1});
    int n = 2;
    // a = K: sum S(K')K'' = 1 = eps(K) alpha
    const TensorElem& dK = s.cop.delta(mono_K());
    AlgElem acc(n);
    for (auto& [k, c] : dK.terms())
        acc += (s.S(AlgElem(n, TensorElem::slot(k, 0))) * AlgElem(n, TensorElem::slot(k, 1))).scaled(c);
    CHECK(acc == s.one);
    // a = f+1: the sum vanishes
    const TensorElem& df = s.cop.delta(mono_f(1, +1));
    AlgElem accf(n);
    for (auto& [k, c] : df.terms())
        accf += (s.S(AlgElem(n, TensorElem::slot(k, 0))) * AlgElem(n, TensorElem::slot(k, 1))).scaled(c);
    CHECK(accf.is_zero());
}

TEST_CASE("quasi-triangularity with hexagon prober") {
    for (int n : {1, 2}) {
        QConfig base{n, n % 2, 1};
        for (int b : base.all_beta_exps()) {
            auto s = build_structures({n, b, 1});
            auto rs = check_quasitriangular(as_quasi_bialgebra(s));
            expect_all_pass(rs);
            // The coassociator acts in the direction opposite to the
            // textbook convention, so for N = 1 the prober settles on the
            // variant with reversed 3-cycles and Phi <-> Phi^-1.  For N = 2
            // the coassociator is leg-symmetric and involutive, the
            // variants coincide, and the first probe already holds.
            for (auto& r : rs)
                if (r.name == "hexagons") {
                    INFO(r.note);
                    if (n == 1)
                        CHECK(r.note.find("transposed-cycle+phi-inverted") != std::string::npos);
                    else
                        CHECK(r.note.find("variant: stated") != std::string::npos);
                }
        }
    }
}

TEST_CASE("Hopf degeneration at N even, beta^2 = 1") {
    auto s = build_structures({2, 4, 1});
    CHECK(s.Phi == TensorElem::one(2, 3));
    CHECK(s.alpha == s.one);
    CHECK(s.beta_elem == s.one);
    expect_all_pass(check_quasi_bialgebra(as_quasi_bialgebra(s)));
    expect_all_pass(check_quasitriangular(as_quasi_bialgebra(s)));
}

TEST_CASE("R conjugates Delta(K) to Delta-op(K)") {
    auto s = build_structures({2, 2, 1});
    TensorElem lhs = s.R * s.cop.delta(AlgElem(2, mono_K())) * s.RInv;
    TensorElem rhs = permute(s.cop.delta(AlgElem(2, mono_K())), {1, 0});
    CHECK(lhs == rhs);
}

TEST_CASE("ribbon checks") {
    for (auto cfg : {QConfig{1, 1, 1}, QConfig{1, 7, 1}, QConfig{2, 0, 1}, QConfig{2, 2, 1}}) {
        auto s = build_structures(cfg);
        expect_all_pass(check_ribbon(s));
    }
}

TEST_CASE("drinfeld twist checks") {
    for (auto cfg : {QConfig{1, 1, 1}, QConfig{2, 0, 1}, QConfig{2, 2, 1}, QConfig{3, 1, 1}}) {
        auto s = build_structures(cfg);
        expect_all_pass(check_drinfeld_twist(s));
    }
}

TEST_CASE("factorisability") {
    for (auto cfg : {QConfig{1, 1, 1}, QConfig{1, 3, 1}, QConfig{2, 0, 1}}) {
        auto s = build_structures(cfg);
        auto rs = check_factorisable(s);
        expect_all_pass(rs);
    }
}

TEST_CASE("budget aborts cleanly") {
    auto s = build_structures({2, 0, 1});
    Budget tiny = Budget::seconds(0.0);
    auto rs = check_quasi_bialgebra(as_quasi_bialgebra(s), tiny);
    bool saw_budget = false;
    for (auto& r : rs) saw_budget |= (r.status == "budget");
    CHECK(saw_budget);
}

TEST_CASE("full suite entry point") {
    auto s = build_structures({1, 1, 1});
    auto rs = verify_suite(s, "all");
    expect_all_pass(rs);
    CHECK_THROWS_AS(verify_suite(s, "nonsense"), std::invalid_argument);
}
