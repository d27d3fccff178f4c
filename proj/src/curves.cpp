#include "valcurve/curves.hpp"

#include <algorithm>
#include <utility>

#include "valcurve/errors.hpp"
#include "valcurve/field.hpp"
#include "valcurve/multiplicity.hpp"
#include "valcurve/parser.hpp"

namespace valcurve {

Mat3 mat3_identity() {
    Mat3 m{};
    for (int i = 0; i < 3; ++i) m[i][i] = FieldElement(1);
    return m;
}

Mat3 mat3_mul(const Mat3& a, const Mat3& b) {
    Mat3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) r[i][j] = r[i][j] + a[i][k] * b[k][j];
    return r;
}

FieldElement mat3_det(const Mat3& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Mat3 mat3_inverse(const Mat3& m) {
    FieldElement det = mat3_det(m);
    if (is_zero(det)) throw SingularMatrix("matrix has determinant zero");
    FieldElement inv = det.inverse();
    auto cof = [&](int i, int j) {
        int r0 = (i + 1) % 3, r1 = (i + 2) % 3;
        int c0 = (j + 1) % 3, c1 = (j + 2) % 3;
        return m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
    };
    Mat3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r[i][j] = inv * cof(j, i);
    return r;
}

ProjPointL mat3_apply(const Mat3& m, const ProjPointL& p) {
    if (p.dim() != 2) throw Error("a 3x3 matrix acts on points of the plane");
    std::vector<FieldElement> y(3, FieldElement(0));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) y[static_cast<std::size_t>(i)] =
            y[static_cast<std::size_t>(i)] + m[i][j] * p.coord(static_cast<std::size_t>(j));
    return ProjPointL(std::move(y));
}

Mat3 random_unimodular(SplitMix64& gen) {
    auto entry = [&] { return FieldElement(static_cast<int>(gen.next_in(-3, 3))); };
    Mat3 lo = mat3_identity();
    lo[1][0] = entry();
    lo[2][0] = entry();
    lo[2][1] = entry();
    Mat3 up = mat3_identity();
    up[0][1] = entry();
    up[0][2] = entry();
    up[1][2] = entry();
    return mat3_mul(lo, up);
}

std::vector<std::array<int, 3>> degree_monomials(int d) {
    if (d < 0) throw Error("degree must be nonnegative");
    std::vector<std::array<int, 3>> out;
    out.reserve(static_cast<std::size_t>((d + 1) * (d + 2) / 2));
    for (int i = d; i >= 0; --i)
        for (int j = d - i; j >= 0; --j) out.push_back({i, j, d - i - j});
    return out;
}

PlaneCurve::PlaneCurve(const MultiPoly& form, FieldPtr field)
    : form_(form), field_(std::move(field)), d_(0) {
    if (form_.nvars() != 3) throw Error("a plane curve takes exactly the variables x, y, z");
    if (form_.is_zero()) throw Error("the zero form does not define a curve");
    d_ = form_.block_degree(0, 3);
    if (d_ < 1) throw Error("a plane curve needs degree at least 1");
    // Terms are kept in the same descending order as degree_monomials,
    // so the leading term carries the first parameter slot.
    const FieldElement lead = form_.terms().front().c;
    if (!(lead == FieldElement(1))) form_ = MultiPoly::constant(3, lead.inverse()) * form_;
    if (!field_)
        for (const auto& m : form_.terms())
            if (m.c.field()) {
                field_ = m.c.field();
                break;
            }
}

PlaneCurve PlaneCurve::parse(const std::string& text, const FieldPtr& field) {
    return PlaneCurve(parse_trivariate(text, field), field);
}

std::vector<FieldElement> PlaneCurve::params() const {
    auto slots = degree_monomials(d_);
    std::vector<FieldElement> out(slots.size(), FieldElement(0));
    std::size_t k = 0;
    for (const auto& m : form_.terms()) {
        std::array<int, 3> e{m.exps[0], m.exps[1], m.exps[2]};
        while (k < slots.size() && slots[k] != e) ++k;
        if (k == slots.size()) break;
        out[k] = m.c;
    }
    return out;
}

bool PlaneCurve::contains(const ProjPointL& p) const {
    if (p.dim() != 2) throw Error("incidence needs a point of the plane");
    return is_zero(form_.eval(p.coords()));
}

bool PlaneCurve::contains(const ProjPointK& p) const {
    if (p.dim() != 2) throw Error("incidence needs a point of the plane");
    switch (form_.eval(p.coords()).zero_test()) {
        case Ternary::True: return true;
        case Ternary::False: return false;
        default: throw IndeterminateValuation("incidence is hidden by truncation");
    }
}

std::string PlaneCurve::to_string() const { return form_.to_string({"x", "y", "z"}); }

PlaneCurve coordinate_change(const PlaneCurve& c, const Mat3& g) {
    if (is_zero(mat3_det(g))) throw SingularMatrix("coordinate change must be invertible");
    std::vector<MultiPoly> image;
    for (int i = 0; i < 3; ++i) {
        MultiPoly row(3);
        for (int j = 0; j < 3; ++j)
            if (!is_zero(g[i][j])) row = row + MultiPoly::constant(3, g[i][j]) * MultiPoly::variable(3, j);
        image.push_back(std::move(row));
    }
    MultiPoly out(3);
    for (const auto& m : c.form().terms()) {
        MultiPoly term = MultiPoly::constant(3, m.c);
        for (int v = 0; v < 3; ++v)
            for (int k = 0; k < m.exps[static_cast<std::size_t>(v)]; ++k) term = term * image[static_cast<std::size_t>(v)];
        out = out + term;
    }
    return PlaneCurve(out, c.field());
}

PerturbedCurve::PerturbedCurve(PlaneCurve base, std::uint64_t seed)
    : base_(std::move(base)), seed_(seed) {
    SplitMix64 gen(seed);
    std::size_t n = static_cast<std::size_t>((base_.degree() + 1) * (base_.degree() + 2) / 2);
    r_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) r_.push_back(gen.next_in(-100, 100));
}

std::vector<PuiseuxSeries> PerturbedCurve::params() const {
    auto base = base_.params();
    std::vector<PuiseuxSeries> out;
    out.reserve(base.size());
    for (std::size_t i = 0; i < base.size(); ++i)
        out.push_back(PuiseuxSeries::constant(base[i]) +
                      PuiseuxSeries::monomial(FieldElement(static_cast<int>(r_[i])), Rational(1)));
    return out;
}

PuiseuxSeries PerturbedCurve::eval(const std::vector<PuiseuxSeries>& xyz) const {
    if (xyz.size() != 3) throw Error("a plane curve takes exactly 3 coordinates");
    auto ps = params();
    auto slots = degree_monomials(base_.degree());
    PuiseuxSeries acc;
    for (std::size_t i = 0; i < slots.size(); ++i) {
        PuiseuxSeries term = ps[i];
        for (std::size_t v = 0; v < 3; ++v)
            if (slots[i][v] > 0) term = term * xyz[v].pow(slots[i][v]);
        acc = acc + term;
    }
    return acc;
}

bool PerturbedCurve::contains(const ProjPointK& p) const {
    if (p.dim() != 2) throw Error("incidence needs a point of the plane");
    switch (eval(p.coords()).zero_test()) {
        case Ternary::True: return true;
        case Ternary::False: return false;
        default: throw IndeterminateValuation("incidence is hidden by truncation");
    }
}

PerturbedCurve perturb(const PlaneCurve& c, std::uint64_t seed) { return PerturbedCurve(c, seed); }

Polynomial<FPoly> affine_sections(const PlaneCurve& c) {
    std::vector<FPoly> ycoeffs(static_cast<std::size_t>(c.degree()) + 1);
    for (const auto& m : c.form().terms()) {
        auto j = static_cast<std::size_t>(m.exps[1]);
        ycoeffs[j] = ycoeffs[j] + FPoly::monomial(m.c, static_cast<std::size_t>(m.exps[0]));
    }
    return Polynomial<FPoly>(std::move(ycoeffs));
}

FPoly infinity_section(const PlaneCurve& c) {
    FPoly out;
    for (const auto& m : c.form().terms())
        if (m.exps[2] == 0) out = out + FPoly::monomial(m.c, static_cast<std::size_t>(m.exps[0]));
    return out;
}

FPoly at_x(const Polynomial<FPoly>& f, const FieldElement& x0) {
    std::vector<FieldElement> cs;
    cs.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) cs.push_back(c.eval(x0));
    return FPoly(std::move(cs));
}

FieldElement form_coefficient(const MultiPoly& form, int a, int b, int c) {
    for (const auto& m : form.terms())
        if (m.exps[0] == a && m.exps[1] == b && m.exps[2] == c) return m.c;
    return FieldElement(0);
}

bool share_component(const PlaneCurve& a, const PlaneCurve& b) {
    // A common factor of two forms either involves only z (both forms
    // vanish identically on z = 0) or survives the z = 1 section.
    if (is_zero(infinity_section(a)) && is_zero(infinity_section(b))) return true;
    Polynomial<FPoly> g = primitive_gcd(affine_sections(a), affine_sections(b));
    if (g.degree() >= 1) return true;
    return g.degree() == 0 && g.coeff(0).degree() >= 1;
}

namespace {

FieldPtr joint_field(const PlaneCurve& a, const PlaneCurve& b) {
    return a.field() ? a.field() : b.field();
}

} // namespace

std::vector<ProjPointL> common_points(const PlaneCurve& c1, const PlaneCurve& c2) {
    if (share_component(c1, c2))
        throw CommonComponent("the curves share a component, so their intersection is infinite");
    FieldPtr field = joint_field(c1, c2);
    long expected = static_cast<long>(c1.degree()) * c2.degree();
    std::vector<ProjPointL> pts;
    std::vector<std::string> blocked;

    // Finite points: x-candidates from the y-resultant, then y by the
    // gcd of the two sections over each x-root. Spurious candidates
    // (leading-coefficient artifacts) die at the gcd step.
    auto f = affine_sections(c1);
    auto g = affine_sections(c2);
    FPoly res = resultant(f, g);
    if (res.degree() >= 1) {
        RootsResult rx = roots_in_field(squarefree_part(res), field);
        if (rx.residual.degree() >= 1) blocked.push_back(poly_to_string(rx.residual, "t"));
        for (const auto& root : rx.roots) {
            FPoly h = gcd(at_x(f, root.value), at_x(g, root.value));
            if (h.degree() < 1) continue;
            RootsResult ry = roots_in_field(h, field);
            if (ry.residual.degree() >= 1) blocked.push_back(poly_to_string(ry.residual, "t"));
            for (const auto& yr : ry.roots)
                pts.push_back(ProjPointL({root.value, yr.value, FieldElement(1)}));
        }
    }

    // Points on the line z = 0 with y != 0, then the lone remaining
    // candidate [1:0:0].
    FPoly h8 = gcd(infinity_section(c1), infinity_section(c2));
    if (h8.degree() >= 1) {
        RootsResult ru = roots_in_field(h8, field);
        if (ru.residual.degree() >= 1) blocked.push_back(poly_to_string(ru.residual, "t"));
        for (const auto& ur : ru.roots)
            pts.push_back(ProjPointL({ur.value, FieldElement(1), FieldElement(0)}));
    }
    if (is_zero(form_coefficient(c1.form(), c1.degree(), 0, 0)) &&
        is_zero(form_coefficient(c2.form(), c2.degree(), 0, 0)))
        pts.push_back(ProjPointL({FieldElement(1), FieldElement(0), FieldElement(0)}));

    std::sort(pts.begin(), pts.end(),
              [](const ProjPointL& a, const ProjPointL& b) { return ProjPointL::compare(a, b) < 0; });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    // Completeness certificate: the oracle multiplicities at the points
    // we can represent must carry the whole intersection mass.
    long sum = 0;
    for (const auto& p : pts) sum += mult_oracle(c1, c2, p);
    if (sum == expected) return pts;
    if (!blocked.empty())
        throw UnrepresentablePoint(
            "an intersection point lives outside the base field; blocking factor " + blocked.front(),
            blocked.front());
    throw DegenerateCoordinates("intersection mass is missing yet every factor has its roots");
}

} // namespace valcurve
