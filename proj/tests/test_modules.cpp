#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsf/modules.hpp"

using namespace qsf;

TEST_CASE("module dimensions and relations") {
    for (auto cfg : {QConfig{1, 1, 1}, QConfig{2, 0, 1}, QConfig{3, 1, 1}}) {
        auto s = build_structures(cfg);
        int n = cfg.n;
        for (const char* lbl : {"X0+", "X0-", "X1+", "X1-", "P0+", "P0-"}) {
            ModuleRep V = build_module(s, lbl);
            CHECK(V.relation_violations() == 0);
            std::string l(lbl);
            if (l[0] == 'X' && l[1] == '0') CHECK(V.dim() == 1);
            if (l[0] == 'X' && l[1] == '1') CHECK(V.dim() == (1 << n));
            if (l[0] == 'P') CHECK(V.dim() == (1 << (2 * n)));
        }
        ModuleRep reg = build_module(s, "regular");
        CHECK(reg.dim() == cfg.dim());
        CHECK(reg.relation_violations() == 0);
    }
    auto s = build_structures({1, 1, 1});
    CHECK_THROWS_AS(build_module(s, "bogus"), std::invalid_argument);
}

TEST_CASE("X1+ at N=1: K acts as diag(i, -i) in the stated basis") {
    auto s = build_structures({1, 1, 1});
    ModuleRep V = build_module(s, "X1+");
    REQUIRE(V.dim() == 2);
    const DenseMat& K = V.gen(0);
    CHECK(K.at(0, 0) == Cyc::i());
    CHECK(K.at(1, 1) == -Cyc::i());
    CHECK(K.at(0, 1).is_zero());
    CHECK(K.at(1, 0).is_zero());
}

TEST_CASE("highest-weight structure of X1pm") {
    for (auto cfg : {QConfig{1, 1, 1}, QConfig{2, 0, 1}}) {
        auto s = build_structures(cfg);
        int n = cfg.n;
        for (int sign : {+1, -1}) {
            ModuleRep V = build_module(s, sign > 0 ? "X1+" : "X1-");
            // K . v1 = pm i v1 and f-_i . v1 = 0 on the cyclic vector
            const DenseMat& K = V.gen(0);
            CHECK(K.at(0, 0) == (sign > 0 ? Cyc::i() : -Cyc::i()));
            for (int i = 1; i <= n; ++i) {
                const DenseMat& fm = V.gen(2 * i);
                for (int r = 0; r < V.dim(); ++r) CHECK(fm.at(r, 0).is_zero());
            }
        }
    }
}

TEST_CASE("trace character values") {
    auto s = build_structures({2, 0, 1});
    ModuleRep X0p = build_module(s, "X0+");
    CHECK(trace_char(s, X0p, AlgElem::one(2)) == Cyc(1));
    CHECK(trace_char(s, X0p, AlgElem(2, mono_K())) == Cyc(1));
}

TEST_CASE("character closed forms across configurations") {
    for (auto cfg : {QConfig{1, 1, 1}, QConfig{1, 5, 1}, QConfig{2, 0, 1}, QConfig{2, 2, 1},
                     QConfig{1, 3, -1}}) {
        auto s = build_structures(cfg);
        for (auto& r : check_characters(s)) {
            INFO(r.name, " residuals=", r.residual_count);
            CHECK(r.passed());
        }
    }
}

TEST_CASE("cartan data") {
    for (auto cfg : {QConfig{1, 1, 1}, QConfig{2, 0, 1}}) {
        auto s = build_structures(cfg);
        for (auto& r : cartan_and_basic_algebra(s, true)) {
            INFO(r.name, " ", r.note);
            CHECK(r.passed());
        }
    }
}

TEST_CASE("dim End(G_Q) = 10 at N=1") {
    auto s = build_structures({1, 1, 1});
    std::vector<ModuleRep> G;
    for (const char* lbl : {"P0+", "P0-", "X1+", "X1-"}) G.push_back(build_module(s, lbl));
    int dim_end = 0;
    for (auto& V : G)
        for (auto& W : G) dim_end += hom_dimension(V, W);
    CHECK(dim_end == 10);
}

TEST_CASE("hom dimensions between simples and projectives") {
    auto s = build_structures({1, 1, 1});
    ModuleRep X1p = build_module(s, "X1+"), X1m = build_module(s, "X1-");
    CHECK(hom_dimension(X1p, X1p) == 1);
    CHECK(hom_dimension(X1p, X1m) == 0);
    ModuleRep P0p = build_module(s, "P0+"), X0p = build_module(s, "X0+");
    CHECK(hom_dimension(X1p, P0p) == 0);
    // Hom(P0+, X0+) = C: project to the head
    CHECK(hom_dimension(P0p, X0p) == 1);
}
