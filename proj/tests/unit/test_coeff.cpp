#include "doctest.h"
#include "fixtures.hpp"
#include "generators.hpp"

using namespace diagramalg;

TEST_SUITE("coeff") {

TEST_CASE("rationals") {
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(parse_rational("-3") == Rational(-3));
    CHECK(to_string(make_rational(4, 6)) == "2/3");
    CHECK(to_string(parse_rational("0/5")) == "0");
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("abc"), Error);
}

TEST_CASE("Laurent polynomial arithmetic") {
    LaurentPoly n = LaurentPoly::n();
    LaurentPoly inv = LaurentPoly::monomial(-1);
    LaurentPoly sum = n + inv;
    CHECK(sum.coeff(1) == 1);
    CHECK(sum.coeff(-1) == 1);
    CHECK(evaluate(sum, 2) == Rational(5, 2));
    CHECK((n * inv) == LaurentPoly(1));
    CHECK((n - n).is_zero());
    CHECK(LaurentPoly(Rational(2, 2)) == LaurentPoly(1));
    CHECK(to_string(n * n) == "n^2");
    CHECK(to_string(-inv) == "-n^-1");
    CHECK(to_string(LaurentPoly::monomial(1, 3) + LaurentPoly(2)) == "3*n + 2");
    CHECK(to_string(LaurentPoly()) == "0");
    CHECK_THROWS_AS(evaluate(inv, 0), Error);
    CHECK(evaluate(n * n, 0) == 0);
}

TEST_CASE("element addition and scaling") {
    Diagram d = identity(2);
    Element e(d, Family::Partition, LaurentPoly::n());
    CHECK((e + e.scaled(-1)).is_zero());
    Element f(generator(GeneratorKind::S, 1, 2), Family::Partition);
    CHECK((e + f).terms().size() == 2);
    Element g(d, Family::Partition, LaurentPoly::monomial(-1));
    CHECK((e + g).coeff(d) == LaurentPoly::n() + LaurentPoly::monomial(-1));
    Element other(d, Family::Brauer);
    CHECK_THROWS_AS(e + other, Error);
    CHECK_THROWS_AS(Element(generator(GeneratorKind::P, 1, 2), Family::Brauer), Error);
}

TEST_CASE("multiplication") {
    Element a(fixtures::mult_d1(), Family::Partition), b(fixtures::mult_d2(), Family::Partition);
    Element ab = a * b;
    REQUIRE(ab.terms().size() == 1);
    CHECK(ab.coeff(fixtures::mult_product()) == LaurentPoly::monomial(2));
    for (int i = 1; i <= 3; ++i) {
        Element p(generator(GeneratorKind::P, i, 3), Family::Rook);
        CHECK(p * p == p.scaled(LaurentPoly::n()));
    }
    gen::Rng rng(5);
    Element x = gen::element(rng, Family::Motzkin, 3);
    CHECK(Element(identity(3), Family::Motzkin) * x == x);
    CHECK(x * Element(identity(3), Family::Motzkin) == x);
}

TEST_CASE("evaluation") {
    Element e(identity(2), Family::Partition, LaurentPoly::monomial(2));
    auto v = evaluate(e, 3);
    CHECK(v.at(identity(2)) == 9);
}

TEST_CASE("property: ring axioms on every family") {
    gen::Rng rng(6);
    for (Family f : all_families()) {
        for (int trial = 0; trial < 8; ++trial) {
            int k = rng.uniform(1, 3);
            Element a = gen::element(rng, f, k), b = gen::element(rng, f, k), c = gen::element(rng, f, k);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a + b) * c == a * c + b * c);
            Element ab = a * b;
            for (const auto& [d, p] : ab.terms()) CHECK(in_family(d, f));
            // Evaluation is a ring homomorphism.
            Rational n0 = make_rational(rng.uniform(1, 7), rng.uniform(1, 3));
            auto lhs = evaluate(ab, n0);
            std::map<Diagram, Rational> rhs;
            auto ea = evaluate(a, n0), eb = evaluate(b, n0);
            for (const auto& [da, ca] : ea)
                for (const auto& [db, cb] : eb) {
                    auto r = concat(da, db);
                    Rational scale = 1;
                    for (int i = 0; i < r.deleted; ++i) scale *= n0;
                    rhs[r.product] += ca * cb * scale;
                }
            std::erase_if(rhs, [](const auto& kv) { return kv.second == 0; });
            CHECK(lhs == rhs);
        }
    }
}

}  // TEST_SUITE
