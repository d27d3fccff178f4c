#include <doctest.h>

#include "valcurve/field.hpp"

using namespace valcurve;

namespace {

QPoly q(std::initializer_list<long> ascending) {
    std::vector<Rational> c;
    for (long v : ascending) c.emplace_back(v);
    return QPoly(std::move(c));
}

} // namespace

TEST_CASE("field construction validates the minimal polynomial") {
    CHECK(NumberField::make(q({-2, 0, 1}))->degree() == 2);
    CHECK(NumberField::make(q({1, 0, 1}))->degree() == 2);
    CHECK(NumberField::make(q({1, 1, 1}))->degree() == 2);
    CHECK_THROWS_AS(NumberField::make(q({-1, 0, 1})), RedundantExtension);   // roots +-1
    CHECK_THROWS_AS(NumberField::make(q({-8, 0, 0, 1})), RedundantExtension); // root 2
    CHECK_THROWS_AS(NumberField::make(q({1, 2, 1})), NotSquareFree);
    CHECK_THROWS_AS(NumberField::make(q({3, 1})), RedundantExtension);
    // Non-monic input is normalized.
    CHECK(NumberField::make(q({-4, 0, 2}))->minpoly() == q({-2, 0, 1}));
}

TEST_CASE("arithmetic in a quadratic extension") {
    FieldPtr f = NumberField::make(q({-2, 0, 1}));
    FieldElement r = FieldElement::generator(f);  // sqrt(2)
    CHECK(r * r == FieldElement(2));
    CHECK((FieldElement(1) + r) * (FieldElement(1) - r) == FieldElement(-1));
    CHECK(r.inverse() * r == FieldElement(1));
    // 1/(1 + sqrt2) = sqrt2 - 1.
    FieldElement inv = (FieldElement(1) + r).inverse();
    CHECK(inv == r - FieldElement(1));
    CHECK(inv.to_string() == "t - 1");
    CHECK(!r.is_rational());
    CHECK((r * r).is_rational());
    CHECK((r * r).as_rational() == Rational(2));
    CHECK_THROWS_AS(r.as_rational(), Error);
    // Rationals mix freely; distinct extensions do not.
    FieldPtr g = NumberField::make(q({1, 0, 1}));
    CHECK_THROWS_AS(r + FieldElement::generator(g), Error);
    CHECK(FieldElement(Rational(1, 2)) + r == FieldElement(f, {Rational(1, 2), Rational(1)}));
}

TEST_CASE("reducible working polynomial surfaces as NonInvertible") {
    // (t^2+1)(t^2+2) is squarefree with no rational root, so construction
    // accepts it; inverting t^2+1 exposes the factorization.
    FieldPtr f = NumberField::make(q({2, 0, 3, 0, 1}));
    FieldElement r = FieldElement::generator(f);
    FieldElement z = r * r + FieldElement(1);
    CHECK(!is_zero(z));
    try {
        (void)z.inverse();
        FAIL("expected NonInvertible");
    } catch (const NonInvertible& e) {
        CHECK(e.factor() == "t^2 + 1");
    }
    CHECK_THROWS_AS(FieldElement(0).inverse(), NonInvertible);
}

TEST_CASE("rational root extraction is complete") {
    QPoly f = q({1, 0, 1}) * q({3, 1}) * QPoly(std::vector<Rational>{Rational(-1, 2), Rational(1)});
    auto roots = rational_roots(f);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == Rational(-3));
    CHECK(roots[1] == Rational(1, 2));

    CHECK(rational_roots(q({-2, 0, 1})).empty());
    CHECK(rational_roots(q({0, 0, 0, 1})) == std::vector<Rational>{Rational(0)});

    // Large prime root: no integer factorization involved.
    QPoly big = QPoly(std::vector<Rational>{Rational(-1000003), Rational(1)}) * q({7, 1});
    auto r2 = rational_roots(big);
    REQUIRE(r2.size() == 2);
    CHECK(r2[0] == Rational(-7));
    CHECK(r2[1] == Rational(1000003));

    // Non-monic: 6x^2 - 5x + 1.
    auto r3 = rational_roots(QPoly(std::vector<Rational>{Rational(1), Rational(-5), Rational(6)}));
    REQUIRE(r3.size() == 2);
    CHECK(r3[0] == Rational(1, 3));
    CHECK(r3[1] == Rational(1, 2));

    // Repeated roots are reported once.
    CHECK(rational_roots(q({-1, 1}) * q({-1, 1})).size() == 1);
}

TEST_CASE("roots in the base field with multiplicity") {
    FPoly f = lift_poly(q({-1, 1})) * lift_poly(q({-1, 1})) * lift_poly(q({-2, 1}));
    auto rr = roots_in_field(f, nullptr);
    REQUIRE(rr.roots.size() == 2);
    CHECK(rr.roots[0].value == FieldElement(1));
    CHECK(rr.roots[0].multiplicity == 2);
    CHECK(rr.roots[1].value == FieldElement(2));
    CHECK(rr.roots[1].multiplicity == 1);
    CHECK(rr.complete);
    CHECK(rr.residual.degree() == 0);

    auto none = roots_in_field(lift_poly(q({2, 0, 1})), nullptr);
    CHECK(none.roots.empty());
    CHECK(none.complete);
    CHECK(try_rational_poly(none.residual).value() == q({2, 0, 1}));
}

TEST_CASE("roots in a quadratic extension") {
    FieldPtr qi = NumberField::make(q({1, 0, 1}));
    FieldElement i = FieldElement::generator(qi);

    auto rr = roots_in_field(lift_poly(q({1, 0, 1})), qi);
    REQUIRE(rr.roots.size() == 2);
    CHECK(rr.roots[0].value == -i);
    CHECK(rr.roots[1].value == i);
    CHECK(rr.complete);

    // Mixed: (x^2+1)(x^2-3) over Q(i) has only +-i, residual x^2-3.
    auto mixed = roots_in_field(lift_poly(q({1, 0, 1}) * q({-3, 0, 1})), qi);
    CHECK(mixed.roots.size() == 2);
    CHECK(mixed.complete);
    CHECK(try_rational_poly(mixed.residual).value() == q({-3, 0, 1}));

    // Shifted roots with both coordinates: x^2 - 2x + 2 = (x-1)^2+1.
    auto sh = roots_in_field(lift_poly(q({2, -2, 1})), qi);
    REQUIRE(sh.roots.size() == 2);
    CHECK(sh.roots[0].value == FieldElement(1) - i);
    CHECK(sh.roots[1].value == FieldElement(1) + i);

    FieldPtr s2 = NumberField::make(q({-2, 0, 1}));
    auto sq = roots_in_field(lift_poly(q({-2, 0, 1})), s2);
    REQUIRE(sq.roots.size() == 2);
    CHECK(sq.roots[1].value == FieldElement::generator(s2));

    // Rational roots over an extension come from the coordinate gcd.
    auto mix2 = roots_in_field(lift_poly(q({-1, 1}) * q({1, 0, 1})), qi);
    CHECK(mix2.roots.size() == 3);
    CHECK(mix2.complete);
}

TEST_CASE("degree three extensions are honestly incomplete") {
    FieldPtr c2 = NumberField::make(q({-2, 0, 0, 1}));
    auto rr = roots_in_field(lift_poly(q({-2, 0, 0, 1})), c2);
    CHECK(rr.roots.empty());
    CHECK(!rr.complete);
    CHECK(rr.residual.degree() == 3);
    // Rational roots are still found.
    auto mixed = roots_in_field(lift_poly(q({-1, 1}) * q({5, 1})), c2);
    CHECK(mixed.roots.size() == 2);
    CHECK(mixed.complete);
}

TEST_CASE("linear algebra over the field") {
    FieldPtr qi = NumberField::make(q({1, 0, 1}));
    FieldElement i = FieldElement::generator(qi);
    // x + i*y = 1+i, x - y = 0 => x = y = (1+i)/(1+i) ... solve directly.
    std::vector<std::vector<FieldElement>> m{{FieldElement(1), i}, {FieldElement(1), FieldElement(-1)}};
    auto sol = solve_linear(m, {FieldElement(1) + i, FieldElement(0)});
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] == (*sol)[1]);
    CHECK((*sol)[0] * (FieldElement(1) + i) == (FieldElement(1) + i) * (*sol)[0]);
    CHECK((*sol)[0] + i * (*sol)[1] == FieldElement(1) + i);

    auto none = solve_linear({{FieldElement(1)}, {FieldElement(1)}}, {FieldElement(1), FieldElement(2)});
    CHECK(!none.has_value());

    auto ns = nullspace({{FieldElement(1), FieldElement(2), FieldElement(3)}}, 3);
    REQUIRE(ns.size() == 2);
    for (const auto& v : ns)
        CHECK(is_zero(v[0] * FieldElement(1) + v[1] * FieldElement(2) + v[2] * FieldElement(3)));
}
