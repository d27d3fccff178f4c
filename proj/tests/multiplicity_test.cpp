#include <doctest.h>

#include "valcurve/errors.hpp"
#include "valcurve/multiplicity.hpp"
#include "valcurve/parser.hpp"

using namespace valcurve;

namespace {

ProjPointL origin3() { return ProjPointL({FieldElement(0), FieldElement(0), FieldElement(1)}); }

void check_witnesses(const BranchCount& bc) {
    int covered = 0;
    for (const auto& w : bc.witnesses) {
        covered += w.orbit_size;
        // Branch coordinates vanish at eps = 0: strictly positive order.
        CHECK(Valuation(Rational(0)) < w.x.valuation_lower_bound());
        CHECK(Valuation(Rational(0)) < w.y.valuation_lower_bound());
        CHECK(ProjPointK({w.x, w.y, PuiseuxSeries::constant(FieldElement(1))}).specialize() ==
              origin3());
    }
    CHECK(covered <= bc.count);
}

} // namespace

TEST_CASE("transversal lines meet simply") {
    PlaneCurve x = PlaneCurve::parse("x");
    PlaneCurve y = PlaneCurve::parse("y");
    BranchCount bc = mult_nonstandard(x, y, origin3());
    CHECK(bc.count == 1);
    CHECK(mult_oracle(x, y, origin3()) == 1);
    check_witnesses(bc);
}

TEST_CASE("tangent line to a conic counts twice") {
    PlaneCurve y = PlaneCurve::parse("y");
    PlaneCurve conic = PlaneCurve::parse("y*z - x^2");
    BranchCount bc = mult_nonstandard(y, conic, origin3());
    CHECK(bc.count == 2);
    CHECK(mult_oracle(y, conic, origin3()) == 2);
    check_witnesses(bc);
}

TEST_CASE("cuspidal cubic against its tangent counts three times") {
    PlaneCurve y = PlaneCurve::parse("y");
    PlaneCurve cusp = PlaneCurve::parse("y^2*z - x^3");
    BranchCount bc = mult_nonstandard(y, cusp, origin3());
    CHECK(bc.count == 3);
    CHECK(mult_oracle(y, cusp, origin3()) == 3);
    check_witnesses(bc);
}

TEST_CASE("points off the intersection count zero") {
    PlaneCurve x = PlaneCurve::parse("x");
    PlaneCurve y = PlaneCurve::parse("y");
    ProjPointL p({FieldElement(1), FieldElement(1), FieldElement(1)});
    CHECK(mult_nonstandard(x, y, p).count == 0);
    CHECK(mult_oracle(x, y, p) == 0);
    // A point on one curve only.
    ProjPointL q({FieldElement(0), FieldElement(1), FieldElement(1)});
    CHECK(mult_nonstandard(x, y, q).count == 0);
    CHECK(mult_oracle(x, y, q) == 0);
}

TEST_CASE("oracle handles tangency over an extension field") {
    FieldPtr qi = NumberField::make(parse_minpoly("t^2 + 1"));
    FieldElement i = FieldElement::generator(qi);
    PlaneCurve c1 = PlaneCurve::parse("x^2 + y^2 - z^2", qi);
    PlaneCurve c2 = PlaneCurve::parse("x^2 + y^2 - 2*z^2", qi);
    ProjPointL p({FieldElement(1), i, FieldElement(0)});
    ProjPointL q({FieldElement(1), -i, FieldElement(0)});
    CHECK(mult_oracle(c1, c2, p) == 2);
    CHECK(mult_oracle(c1, c2, q) == 2);
    CHECK(mult_nonstandard(c1, c2, p).count == 2);
    CHECK(mult_nonstandard(c1, c2, q).count == 2);
}

TEST_CASE("threshold wrapper matches the count") {
    PlaneCurve y = PlaneCurve::parse("y");
    PlaneCurve conic = PlaneCurve::parse("y*z - x^2");
    CHECK(mult_geq(y, conic, origin3(), 2));
    CHECK_FALSE(mult_geq(y, conic, origin3(), 3));
    CHECK(mult_geq(y, conic, origin3(), 0));
    CHECK(mult_geq(y, conic, origin3(), -5));
    CHECK_FALSE(mult_geq(PlaneCurve::parse("x"), y, origin3(), 2));
}

TEST_CASE("count is symmetric and seed stable") {
    std::vector<std::pair<const char*, const char*>> pairs = {
        {"x", "y"},
        {"y", "y*z - x^2"},
        {"y", "y^2*z - x^3"},
    };
    MultConfig other;
    other.seeds = {5, 6, 7};
    for (const auto& [a, b] : pairs) {
        PlaneCurve c1 = PlaneCurve::parse(a);
        PlaneCurve c2 = PlaneCurve::parse(b);
        int lr = mult_nonstandard(c1, c2, origin3()).count;
        int rl = mult_nonstandard(c2, c1, origin3()).count;
        CHECK(lr == rl);
        CHECK(mult_nonstandard(c1, c2, origin3(), other).count == lr);
    }
}

TEST_CASE("configuration is validated") {
    PlaneCurve x = PlaneCurve::parse("x");
    PlaneCurve y = PlaneCurve::parse("y");
    MultConfig no_seeds;
    no_seeds.seeds.clear();
    CHECK_THROWS_AS(mult_nonstandard(x, y, origin3(), no_seeds), Error);
    MultConfig bad_bounds;
    bad_bounds.truncation_cap = Rational(8);
    CHECK_THROWS_AS(mult_nonstandard(x, y, origin3(), bad_bounds), Error);
    CHECK_THROWS_AS(mult_nonstandard(PlaneCurve::parse("x*y"), PlaneCurve::parse("y*z"), origin3()),
                    CommonComponent);
    CHECK_THROWS_AS(mult_oracle(PlaneCurve::parse("x*y"), PlaneCurve::parse("y*z"), origin3()),
                    CommonComponent);
}

TEST_CASE("bezout verdict for simple pairs") {
    BezoutReport lines = bezout_check(PlaneCurve::parse("x"), PlaneCurve::parse("y"));
    CHECK(lines.sum == 1);
    CHECK(lines.expected == 1);
    CHECK(lines.verdict);
    REQUIRE(lines.entries.size() == 1);
    CHECK(lines.entries[0].l == origin3());
    CHECK(lines.entries[0].agree);

    BezoutReport cusp = bezout_check(PlaneCurve::parse("y"), PlaneCurve::parse("y^2*z - x^3"));
    CHECK(cusp.sum == 3);
    CHECK(cusp.expected == 3);
    CHECK(cusp.verdict);
}

TEST_CASE("bezout verdict for tangent conics over the imaginary extension") {
    FieldPtr qi = NumberField::make(parse_minpoly("t^2 + 1"));
    PlaneCurve c1 = PlaneCurve::parse("x^2 + y^2 - z^2", qi);
    PlaneCurve c2 = PlaneCurve::parse("x^2 + y^2 - 2*z^2", qi);
    BezoutReport rep = bezout_check(c1, c2);
    CHECK(rep.expected == 4);
    CHECK(rep.sum == 4);
    CHECK(rep.verdict);
    REQUIRE(rep.entries.size() == 2);
    for (const auto& entry : rep.entries) {
        CHECK(entry.mult_nonstandard == 2);
        CHECK(entry.mult_oracle == 2);
        CHECK(entry.agree);
    }
}

TEST_CASE("bezout for a pair of reducible cubics") {
    PlaneCurve c1 = PlaneCurve::parse("x*(x - z)*(x + z)");
    PlaneCurve c2 = PlaneCurve::parse("y*(y - z)*(y + z)");
    BezoutReport rep = bezout_check(c1, c2);
    CHECK(rep.expected == 9);
    CHECK(rep.sum == 9);
    CHECK(rep.verdict);
    CHECK(rep.entries.size() == 9);
    for (const auto& entry : rep.entries) {
        CHECK(entry.mult_nonstandard == 1);
        CHECK(entry.agree);
    }
}
