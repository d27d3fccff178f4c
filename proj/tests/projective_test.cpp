#include "valcurve/projective.hpp"

#include "doctest.h"
#include "valcurve/errors.hpp"

using namespace valcurve;

namespace {

PuiseuxSeries eps_pow(int num, int den = 1) {
    return PuiseuxSeries::monomial(FieldElement(1), Rational(num, den));
}

PuiseuxSeries unknown_tail(int num, int den = 1) {
    // empty series truncated below its only term: order is uncertified
    return PuiseuxSeries::monomial(FieldElement(1), Rational(num, den) + 1)
        .truncated(Rational(num, den));
}

} // namespace

TEST_CASE("constant-field points canonicalize on construction") {
    ProjPointL p({FieldElement(2), FieldElement(4), FieldElement(6)});
    CHECK(p.coord(0) == FieldElement(1));
    CHECK(p.coord(1) == FieldElement(2));
    CHECK(p.coord(2) == FieldElement(3));
    CHECK(p.to_string() == "[1 : 2 : 3]");

    ProjPointL q({FieldElement(0), FieldElement(3), FieldElement(6)});
    CHECK(q.coord(0) == FieldElement(0));
    CHECK(q.coord(1) == FieldElement(1));
    CHECK(q.coord(2) == FieldElement(2));

    CHECK(ProjPointL({FieldElement(2), FieldElement(4), FieldElement(6)}) == p);
    CHECK(q != p);
    CHECK_THROWS_AS(ProjPointL({FieldElement(0), FieldElement(0)}), DegenerateCoordinates);
}

TEST_CASE("series points require a certified nonzero coordinate") {
    CHECK_THROWS_AS(ProjPointK({PuiseuxSeries(), PuiseuxSeries()}), DegenerateCoordinates);
    CHECK_THROWS_AS(ProjPointK({PuiseuxSeries(), unknown_tail(2)}), IndeterminateValuation);
    ProjPointK ok({PuiseuxSeries(1), unknown_tail(2)});
    CHECK(ok.dim() == 1);
}

TEST_CASE("projective equality over series via cross products") {
    // [eps : 1] and [eps^2 : eps] agree after scaling by eps
    ProjPointK a({eps_pow(1), PuiseuxSeries(1)});
    ProjPointK b({eps_pow(2), eps_pow(1)});
    CHECK(a.eq_test(b) == Ternary::True);

    ProjPointK c({PuiseuxSeries(1), eps_pow(1)});
    ProjPointK d({PuiseuxSeries(1), eps_pow(2)});
    CHECK(c.eq_test(d) == Ternary::False);

    // an uncertified coordinate leaves projective equality undecided
    ProjPointK e({PuiseuxSeries(1), unknown_tail(5)});
    ProjPointK f({PuiseuxSeries(1), PuiseuxSeries()});
    CHECK(e.eq_test(f) == Ternary::Unknown);
}

TEST_CASE("minimum coordinate order with honest failure") {
    ProjPointK p({eps_pow(2), PuiseuxSeries(1), eps_pow(1) * PuiseuxSeries(3)});
    CHECK(p.min_valuation() == Rational(0));

    ProjPointK q({eps_pow(1) * PuiseuxSeries(2), eps_pow(3)});
    CHECK(q.min_valuation() == Rational(1));

    // a tail truncated at 1/2 could hide a coordinate of order below 1
    ProjPointK r({unknown_tail(1, 2), eps_pow(1)});
    CHECK_THROWS_AS(r.min_valuation(), IndeterminateValuation);

    // truncation at or above the visible minimum is harmless
    ProjPointK s({unknown_tail(3), eps_pow(1)});
    CHECK(s.min_valuation() == Rational(1));
}

TEST_CASE("canonical series representative scales the pivot to one") {
    PuiseuxSeries t = eps_pow(1) + eps_pow(2);
    ProjPointK p({eps_pow(1), t});
    ProjPointK c = p.canonical();
    CHECK(c.coord(0).is_exact());
    CHECK(c.coord(0) == PuiseuxSeries(1));
    const auto& terms = c.coord(1).terms();
    REQUIRE(terms.size() >= 2);
    CHECK(terms[0].exp == Rational(0));
    CHECK(terms[0].coeff == FieldElement(1));
    CHECK(terms[1].exp == Rational(1));
    CHECK(terms[1].coeff == FieldElement(1));
    CHECK(c.eq_test(p) == Ternary::True);
}

TEST_CASE("reduction to the constant field") {
    ProjPointK p({eps_pow(2), PuiseuxSeries(1), eps_pow(1) * PuiseuxSeries(3)});
    CHECK(p.specialize() == ProjPointL({FieldElement(0), FieldElement(1), FieldElement(0)}));

    ProjPointK q({eps_pow(1) * PuiseuxSeries(2), eps_pow(3), PuiseuxSeries()});
    CHECK(q.specialize() ==
          ProjPointL({FieldElement(1), FieldElement(0), FieldElement(0)}));

    // series with visible constant terms reduce to those constants
    PuiseuxSeries one_plus = PuiseuxSeries(1) + eps_pow(1);
    PuiseuxSeries two_minus = PuiseuxSeries(2) - eps_pow(3);
    ProjPointK r({one_plus, two_minus});
    CHECK(r.specialize() == ProjPointL({FieldElement(1), FieldElement(2)}));

    // truncation exactly at the minimum order blocks the residue
    ProjPointK s({unknown_tail(1), eps_pow(1)});
    CHECK_THROWS_AS(s.specialize(), IndeterminateValuation);
}

TEST_CASE("reduction commutes with product and inclusion maps") {
    ProjPointK a({PuiseuxSeries(1) + eps_pow(1), eps_pow(2)});
    ProjPointK b({eps_pow(1), PuiseuxSeries(3)});

    ProjPointL lhs = segre(a, b).specialize();
    ProjPointL rhs = segre(a.specialize(), b.specialize());
    CHECK(lhs == rhs);

    CHECK(embed(a).specialize() == embed(a.specialize()));
    CHECK(embed(embed(b)).specialize() == embed(embed(b.specialize())));
}

TEST_CASE("sparse polynomial arithmetic and block degrees") {
    // f = x0*x2 - x1^2 on one copy of P^2
    MultiPoly x0 = MultiPoly::variable(3, 0);
    MultiPoly x1 = MultiPoly::variable(3, 1);
    MultiPoly x2 = MultiPoly::variable(3, 2);
    MultiPoly f = x0 * x2 - x1 * x1;
    CHECK(f.block_degree(0, 3) == 2);
    CHECK(f.terms().size() == 2);
    CHECK(f.to_string({"x", "y", "z"}) == "x*z - y^2");

    MultiPoly g = f - f;
    CHECK(g.is_zero());
    CHECK(g.block_degree(0, 3) == -1);

    MultiPoly bad = x0 + x0 * x1;
    CHECK_THROWS_AS(bad.block_degree(0, 3), NotHomogeneous);

    CHECK(f.eval({FieldElement(1), FieldElement(2), FieldElement(4)}) == FieldElement(0));
    CHECK(f.eval({FieldElement(1), FieldElement(2), FieldElement(5)}) == FieldElement(1));
}

TEST_CASE("polynomial evaluation lifts to series coordinates") {
    MultiPoly x0 = MultiPoly::variable(2, 0);
    MultiPoly x1 = MultiPoly::variable(2, 1);
    MultiPoly f = x0 * x0 - x1;
    PuiseuxSeries root = PuiseuxSeries(1) + eps_pow(1);
    PuiseuxSeries sq = root * root;
    CHECK(f.eval(std::vector<PuiseuxSeries>{root, sq}).zero_test() == Ternary::True);
    CHECK(f.eval(std::vector<PuiseuxSeries>{root, PuiseuxSeries(1)}).zero_test() ==
          Ternary::False);
}

TEST_CASE("variety membership on products of projective lines") {
    // diagonal of P^1 x P^1 cut out by x0*y1 - x1*y0
    MultiPoly eq = MultiPoly::variable(4, 0) * MultiPoly::variable(4, 3) -
                   MultiPoly::variable(4, 1) * MultiPoly::variable(4, 2);
    VarietyPredicate diag(2, 1, {eq});

    ProjPointL p({FieldElement(2), FieldElement(3)});
    ProjPointL q({FieldElement(4), FieldElement(6)});
    ProjPointL r({FieldElement(1), FieldElement(0)});
    CHECK(diag.holds({p, q}));
    CHECK(!diag.holds({p, r}));

    ProjPointK pk({PuiseuxSeries(1), eps_pow(1)});
    ProjPointK qk({eps_pow(1), eps_pow(2)});
    CHECK(diag.holds_k({pk, qk}) == Ternary::True);

    ProjPointK rk({PuiseuxSeries(1), unknown_tail(4)});
    ProjPointK sk({PuiseuxSeries(1), PuiseuxSeries()});
    CHECK(diag.holds_k({rk, sk}) == Ternary::Unknown);

    // mixed block degrees are rejected at construction
    MultiPoly lop = MultiPoly::variable(4, 0) * MultiPoly::variable(4, 1) -
                    MultiPoly::variable(4, 2) * MultiPoly::variable(4, 3);
    CHECK_THROWS_AS(VarietyPredicate(2, 1, {lop + eq * eq}), NotHomogeneous);
}
