#include <doctest.h>

#include <algorithm>

#include "valcurve/curves.hpp"
#include "valcurve/errors.hpp"
#include "valcurve/parser.hpp"

using namespace valcurve;

namespace {

ProjPointL pl(std::vector<FieldElement> c) { return ProjPointL(std::move(c)); }

bool holds_point(const std::vector<ProjPointL>& pts, const ProjPointL& p) {
    return std::any_of(pts.begin(), pts.end(), [&](const ProjPointL& q) { return q == p; });
}

} // namespace

TEST_CASE("frozen monomial order") {
    auto d1 = degree_monomials(1);
    REQUIRE(d1.size() == 3);
    CHECK(d1[0] == std::array<int, 3>{1, 0, 0});
    CHECK(d1[1] == std::array<int, 3>{0, 1, 0});
    CHECK(d1[2] == std::array<int, 3>{0, 0, 1});

    auto d2 = degree_monomials(2);
    REQUIRE(d2.size() == 6);
    CHECK(d2[0] == std::array<int, 3>{2, 0, 0});
    CHECK(d2[1] == std::array<int, 3>{1, 1, 0});
    CHECK(d2[2] == std::array<int, 3>{1, 0, 1});
    CHECK(d2[3] == std::array<int, 3>{0, 2, 0});
    CHECK(d2[4] == std::array<int, 3>{0, 1, 1});
    CHECK(d2[5] == std::array<int, 3>{0, 0, 2});
}

TEST_CASE("curve parsing, degree and parameter vector") {
    PlaneCurve line = PlaneCurve::parse("y");
    CHECK(line.degree() == 1);
    CHECK(line.params().size() == 3);
    CHECK(line.to_string() == "y");

    PlaneCurve conic = PlaneCurve::parse("y*z - x^2");
    CHECK(conic.degree() == 2);
    auto ps = conic.params();
    REQUIRE(ps.size() == 6);
    // Canonical scaling turns the leading -1 into 1.
    CHECK(ps[0] == FieldElement(1));
    CHECK(ps[4] == FieldElement(-1));
    CHECK(conic.to_string() == "x^2 - y*z");

    CHECK_THROWS_AS(PlaneCurve::parse("x + y^2"), NotHomogeneous);
    CHECK_THROWS_AS(PlaneCurve::parse("x + "), ParseError);
    CHECK_THROWS_AS(PlaneCurve::parse("5"), Error);
    CHECK_THROWS_AS(PlaneCurve::parse("0"), Error);
}

TEST_CASE("incidence over the constant field and over series") {
    PlaneCurve conic = PlaneCurve::parse("y*z - x^2");
    CHECK(conic.contains(pl({FieldElement(0), FieldElement(0), FieldElement(1)})));
    CHECK(conic.contains(pl({FieldElement(1), FieldElement(1), FieldElement(1)})));
    CHECK_FALSE(PlaneCurve::parse("y").contains(pl({FieldElement(1), FieldElement(1), FieldElement(1)})));

    PuiseuxSeries e = PuiseuxSeries::epsilon();
    PuiseuxSeries one = PuiseuxSeries::constant(FieldElement(1));
    CHECK(conic.contains(ProjPointK({e, e * e, one})));
    CHECK_FALSE(conic.contains(ProjPointK({e, e, one})));

    // A coordinate hidden below its truncation bound leaves incidence
    // on a line through it undecidable.
    PuiseuxSeries hidden = PuiseuxSeries::epsilon().truncated(Rational(1));
    CHECK_THROWS_AS(PlaneCurve::parse("x").contains(ProjPointK({hidden, one, one})),
                    IndeterminateValuation);
}

TEST_CASE("matrix utilities and coordinate changes") {
    SplitMix64 gen(91);
    Mat3 g = random_unimodular(gen);
    CHECK(mat3_det(g) == FieldElement(1));
    Mat3 gi = mat3_inverse(g);
    CHECK(mat3_mul(g, gi) == mat3_identity());

    Mat3 sing = mat3_identity();
    sing[2][2] = FieldElement(0);
    CHECK_THROWS_AS(mat3_inverse(sing), SingularMatrix);
    CHECK_THROWS_AS(coordinate_change(PlaneCurve::parse("x"), sing), SingularMatrix);

    PlaneCurve conic = PlaneCurve::parse("y*z - x^2");
    CHECK(coordinate_change(conic, mat3_identity()).form() == conic.form());

    Mat3 swap{};
    swap[0][1] = FieldElement(1);
    swap[1][0] = FieldElement(1);
    swap[2][2] = FieldElement(1);
    CHECK(coordinate_change(PlaneCurve::parse("y"), swap).form() == PlaneCurve::parse("x").form());

    // Transformed curves contain exactly the preimages of old points.
    ProjPointL p = pl({FieldElement(2), FieldElement(4), FieldElement(1)});
    PlaneCurve moved = coordinate_change(conic, g);
    CHECK(moved.contains(mat3_apply(gi, p)) == conic.contains(p));

    CHECK(coordinate_change(coordinate_change(conic, g), gi).form() == conic.form());
}

TEST_CASE("coordinate change is a group action") {
    PlaneCurve cubic = PlaneCurve::parse("y^2*z - x^3 + 2*x*z^2 - z^3");
    SplitMix64 gen(1234);
    for (int k = 0; k < 100; ++k) {
        Mat3 g = random_unimodular(gen);
        Mat3 h = random_unimodular(gen);
        PlaneCurve two_steps = coordinate_change(coordinate_change(cubic, h), g);
        PlaneCurve one_step = coordinate_change(cubic, mat3_mul(h, g));
        CHECK(two_steps.form() == one_step.form());
    }
}

TEST_CASE("perturbation is deterministic, bounded, and specializes back") {
    PlaneCurve conic = PlaneCurve::parse("y*z - x^2");
    PerturbedCurve a = perturb(conic, 7);
    PerturbedCurve b = perturb(conic, 7);
    PerturbedCurve c = perturb(conic, 8);
    CHECK(a.jitter() == b.jitter());
    CHECK(a.jitter() != c.jitter());
    CHECK(a.jitter().size() == 6);
    for (long r : a.jitter()) {
        CHECK(r >= -100);
        CHECK(r <= 100);
    }

    for (std::uint64_t seed : {1ULL, 2ULL, 7ULL, 99ULL}) {
        for (const char* text : {"y", "y*z - x^2", "x^3 + y^3 + z^3"}) {
            PlaneCurve base = PlaneCurve::parse(text);
            PerturbedCurve pc = perturb(base, seed);
            ProjPointK moved(pc.params());
            CHECK(moved.specialize() == ProjPointL(base.params()));
        }
    }
}

TEST_CASE("a perturbed curve evaluates the deformed form") {
    PlaneCurve line = PlaneCurve::parse("y");
    PerturbedCurve pc = perturb(line, 3);
    // F_eps = r0*eps*x + (1 + r1*eps)*y + r2*eps*z.
    const auto& r = pc.jitter();
    PuiseuxSeries at = pc.eval({PuiseuxSeries::constant(FieldElement(1)),
                                PuiseuxSeries::constant(FieldElement(0)),
                                PuiseuxSeries::constant(FieldElement(0))});
    CHECK(at == PuiseuxSeries::monomial(FieldElement(static_cast<int>(r[0])), Rational(1)));

    // The deformed curve generically misses the base point it deformed away from.
    PuiseuxSeries one = PuiseuxSeries::constant(FieldElement(1));
    PuiseuxSeries zero;
    if (r[2] != 0) CHECK_FALSE(pc.contains(ProjPointK({zero, zero, one})));
}

TEST_CASE("shared components are detected") {
    auto curve = [](const char* t) { return PlaneCurve::parse(t); };
    CHECK(share_component(curve("x^2"), curve("x*y")));
    CHECK(share_component(curve("y*z"), curve("z*x")));
    CHECK(share_component(curve("z^2"), curve("z*y")));
    CHECK(share_component(curve("(x+z)*x"), curve("(x+z)*y")));
    CHECK_FALSE(share_component(curve("x"), curve("y")));
    CHECK_FALSE(share_component(curve("x^2 + y^2"), curve("x*y")));
    CHECK_FALSE(share_component(curve("y*z - x^2"), curve("y")));
}

TEST_CASE("intersection points of lines and conics") {
    PlaneCurve x = PlaneCurve::parse("x");
    PlaneCurve y = PlaneCurve::parse("y");
    auto lines = common_points(x, y);
    REQUIRE(lines.size() == 1);
    CHECK(lines[0] == pl({FieldElement(0), FieldElement(0), FieldElement(1)}));

    auto tangent = common_points(y, PlaneCurve::parse("y*z - x^2"));
    REQUIRE(tangent.size() == 1);
    CHECK(tangent[0] == pl({FieldElement(0), FieldElement(0), FieldElement(1)}));

    // x = 0 meets the conic at the origin and at the infinite point of
    // the y-axis.
    auto two = common_points(x, PlaneCurve::parse("y*z - x^2"));
    REQUIRE(two.size() == 2);
    CHECK(holds_point(two, pl({FieldElement(0), FieldElement(0), FieldElement(1)})));
    CHECK(holds_point(two, pl({FieldElement(0), FieldElement(1), FieldElement(0)})));

    CHECK_THROWS_AS(common_points(PlaneCurve::parse("x*y"), PlaneCurve::parse("y*z")),
                    CommonComponent);
}

TEST_CASE("transversal conics meet in four rational points") {
    PlaneCurve c1 = PlaneCurve::parse("x^2 + y^2 - z^2");
    PlaneCurve c2 = PlaneCurve::parse("x^2 + x*y + y^2 - z^2");
    auto pts = common_points(c1, c2);
    REQUIRE(pts.size() == 4);
    CHECK(holds_point(pts, pl({FieldElement(1), FieldElement(0), FieldElement(1)})));
    CHECK(holds_point(pts, pl({FieldElement(-1), FieldElement(0), FieldElement(1)})));
    CHECK(holds_point(pts, pl({FieldElement(0), FieldElement(1), FieldElement(1)})));
    CHECK(holds_point(pts, pl({FieldElement(0), FieldElement(-1), FieldElement(1)})));
    for (const auto& p : pts) {
        CHECK(c1.contains(p));
        CHECK(c2.contains(p));
    }
}

TEST_CASE("concentric conics need the imaginary unit") {
    PlaneCurve c1 = PlaneCurve::parse("x^2 + y^2 - z^2");
    PlaneCurve c2 = PlaneCurve::parse("x^2 + y^2 - 2*z^2");
    try {
        common_points(c1, c2);
        FAIL("expected UnrepresentablePoint");
    } catch (const UnrepresentablePoint& e) {
        CHECK(e.factor() == "t^2 + 1");
    }

    FieldPtr qi = NumberField::make(parse_minpoly("t^2 + 1"));
    FieldElement i = FieldElement::generator(qi);
    PlaneCurve d1 = PlaneCurve::parse("x^2 + y^2 - z^2", qi);
    PlaneCurve d2 = PlaneCurve::parse("x^2 + y^2 - 2*z^2", qi);
    auto pts = common_points(d1, d2);
    REQUIRE(pts.size() == 2);
    CHECK(holds_point(pts, pl({FieldElement(1), i, FieldElement(0)})));
    CHECK(holds_point(pts, pl({FieldElement(1), -i, FieldElement(0)})));
    for (const auto& p : pts) {
        CHECK(d1.contains(p));
        CHECK(d2.contains(p));
    }
}

TEST_CASE("intersection points all satisfy incidence") {
    std::vector<std::pair<const char*, const char*>> pairs = {
        {"x", "y"},
        {"y", "y*z - x^2"},
        {"y", "y^2*z - x^3"},
        {"x^2 + y^2 - z^2", "x^2 + x*y + y^2 - z^2"},
        {"x*(x - z)", "y*(y - z)"},
    };
    for (const auto& [a, b] : pairs) {
        PlaneCurve c1 = PlaneCurve::parse(a);
        PlaneCurve c2 = PlaneCurve::parse(b);
        auto pts = common_points(c1, c2);
        CHECK(!pts.empty());
        for (const auto& p : pts) {
            CHECK(c1.contains(p));
            CHECK(c2.contains(p));
        }
        CHECK(std::is_sorted(pts.begin(), pts.end(), [](const ProjPointL& u, const ProjPointL& v) {
            return ProjPointL::compare(u, v) < 0;
        }));
    }
}
