#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qsf/cyclotomic.hpp"
#include "qsf/laurent.hpp"

using namespace qsf;

namespace {

std::mt19937 rng(20240817);

Rat random_rat() {
    std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
    Rat r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

Cyc random_cyc() {
    return Cyc(random_rat(), random_rat(), random_rat(), random_rat());
}

}  // namespace

TEST_CASE("zeta powers reduce canonically") {
    CHECK(Cyc::zeta(4) == Cyc(-1));
    CHECK(Cyc::zeta(8) == Cyc(1));
    CHECK(Cyc::zeta(-1) == -Cyc::zeta(3));
    // i^2 = -1 via z^2 * z^2 = z^4 = -1
    CHECK(Cyc::i() * Cyc::i() == Cyc(-1));
    // z * z^3 = -1
    CHECK(Cyc::zeta(1) * Cyc::zeta(3) == Cyc(-1));
}

TEST_CASE("zeta has multiplicative order exactly 8") {
    Cyc z = Cyc::zeta(1);
    Cyc p(1);
    for (int k = 1; k <= 7; ++k) {
        p *= z;
        CHECK(p != Cyc(1));
    }
    p *= z;
    CHECK(p == Cyc(1));
}

TEST_CASE("division by solving the 4x4 system") {
    // 1 / z = -z^3, cross-checked by z * (-z^3) = -z^4 = 1
    Cyc q = Cyc(1) / Cyc::zeta(1);
    CHECK(q == -Cyc::zeta(3));
    CHECK(Cyc::zeta(1) * (-Cyc::zeta(3)) == Cyc(1));
    CHECK_THROWS_AS(Cyc(1) / Cyc(0), std::domain_error);
}

TEST_CASE("field laws on random triples") {
    for (int t = 0; t < 1000; ++t) {
        Cyc a = random_cyc(), b = random_cyc(), c = random_cyc();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("(a/b)*b == a on random pairs") {
    int done = 0;
    while (done < 1000) {
        Cyc a = random_cyc(), b = random_cyc();
        if (b.is_zero()) continue;
        CHECK((a / b) * b == a);
        ++done;
    }
}

TEST_CASE("sqrt2 squares to 2") {
    CHECK(Cyc::sqrt2() * Cyc::sqrt2() == Cyc(2));
}

TEST_CASE("laurent ring arithmetic") {
    Laurent pi = Laurent::pi();
    CHECK(pi * Laurent::pi(-1) == Laurent(1));
    // (-pi*i)^2 = -pi^2
    Laurent mpi_i = Laurent::term(-Cyc::i(), 1);
    CHECK(mpi_i * mpi_i == Laurent::term(Cyc(-1), 2));
    // (2 pi z^2) * ((-2 pi)^{-1}) = -z^2
    Laurent a = Laurent::term(Cyc(2) * Cyc::i(), 1);
    Laurent b = Laurent::term(Cyc(Rat(-1, 2)), -1);
    CHECK(a * b == Laurent(-Cyc::i()));
}

TEST_CASE("laurent units and properties") {
    Laurent u = Laurent::term(Cyc::zeta(3), -2);
    CHECK(u.is_unit());
    CHECK(u * u.unit_inverse() == Laurent(1));
    Laurent s = Laurent::pi() + Laurent(1);
    CHECK(!s.is_unit());
    for (int t = 0; t < 200; ++t) {
        Laurent x = Laurent::term(random_cyc(), t % 5 - 2) + Laurent::term(random_cyc(), t % 3);
        Laurent y = Laurent::term(random_cyc(), -(t % 4)) + Laurent(random_cyc());
        Laurent z = Laurent::term(random_cyc(), t % 2);
        CHECK((x + y) * z == x * z + y * z);
        CHECK(x * y == y * x);
    }
}
