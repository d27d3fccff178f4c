#ifndef VALCURVE_CURVES_HPP
#define VALCURVE_CURVES_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "valcurve/projective.hpp"

namespace valcurve {

/// 3x3 matrix over the constant field, row major, acting on column
/// coordinate vectors.
using Mat3 = std::array<std::array<FieldElement, 3>, 3>;

Mat3 mat3_identity();
Mat3 mat3_mul(const Mat3& a, const Mat3& b);
FieldElement mat3_det(const Mat3& m);
/// Throws SingularMatrix.
Mat3 mat3_inverse(const Mat3& m);
ProjPointL mat3_apply(const Mat3& m, const ProjPointL& p);

/// Product of a lower and an upper triangular shear with integer
/// entries in [-3, 3]; determinant 1 by construction.
Mat3 random_unimodular(SplitMix64& gen);

/// Exponent triples (i, j, k) with i + j + k = d, ordered by descending
/// i, then descending j. Every coefficient vector of a degree-d curve
/// is read against this sequence; the order is frozen so parameter
/// points are portable.
std::vector<std::array<int, 3>> degree_monomials(int d);

/// Plane projective curve: a nonzero homogeneous trivariate form of
/// degree >= 1, scaled so its first nonzero coefficient in the
/// degree_monomials order is exactly 1. The coefficient vector is a
/// point of the projective parameter space of dimension d(d+3)/2.
class PlaneCurve {
public:
    PlaneCurve(const MultiPoly& form, FieldPtr field);
    /// Variables x, y, z; the extension generator t is allowed when a
    /// field is supplied. Throws ParseError, NotHomogeneous.
    static PlaneCurve parse(const std::string& text, const FieldPtr& field = nullptr);

    int degree() const { return d_; }
    const MultiPoly& form() const { return form_; }
    const FieldPtr& field() const { return field_; }

    /// Coefficient vector of length (d+1)(d+2)/2 in degree_monomials
    /// order, canonically scaled.
    std::vector<FieldElement> params() const;

    bool contains(const ProjPointL& p) const;
    /// Exact; throws IndeterminateValuation when truncation hides the
    /// answer.
    bool contains(const ProjPointK& p) const;

    std::string to_string() const;

private:
    MultiPoly form_;
    FieldPtr field_;
    int d_;
};

/// Substitutes x_i -> sum_j g[i][j] x_j into the defining form. Points
/// of the result are exactly the g-preimages of points of c. Throws
/// SingularMatrix.
PlaneCurve coordinate_change(const PlaneCurve& c, const Mat3& g);

/// A curve with every coefficient deformed to first order: slot i of
/// the parameter vector becomes c_i + eps * r_i with r_i an integer
/// drawn uniformly from [-100, 100] by a seeded generator. Setting eps
/// to 0 recovers the base curve, so the perturbed parameter point
/// specializes to the base parameter point by construction.
class PerturbedCurve {
public:
    PerturbedCurve(PlaneCurve base, std::uint64_t seed);

    const PlaneCurve& base() const { return base_; }
    std::uint64_t seed() const { return seed_; }
    const std::vector<long>& jitter() const { return r_; }

    /// Deformed coefficient vector in degree_monomials order.
    std::vector<PuiseuxSeries> params() const;

    /// Value of the deformed form at a point of the series plane.
    PuiseuxSeries eval(const std::vector<PuiseuxSeries>& xyz) const;

    /// Exact; throws IndeterminateValuation when truncation hides the
    /// answer.
    bool contains(const ProjPointK& p) const;

private:
    PlaneCurve base_;
    std::uint64_t seed_;
    std::vector<long> r_;
};

PerturbedCurve perturb(const PlaneCurve& c, std::uint64_t seed);

/// True when the two defining forms share a nonconstant factor.
bool share_component(const PlaneCurve& a, const PlaneCurve& b);

/// The defining form with z = 1, arranged as a polynomial in y whose
/// coefficients are polynomials in x.
Polynomial<FPoly> affine_sections(const PlaneCurve& c);

/// The defining form restricted to the line z = 0 and dehomogenized by
/// y = 1: a univariate polynomial in x. Zero iff z divides the form.
FPoly infinity_section(const PlaneCurve& c);

/// Specializes the inner variable: f with x = x0, leaving a univariate
/// polynomial in y.
FPoly at_x(const Polynomial<FPoly>& f, const FieldElement& x0);

/// Coefficient of x^a y^b z^c in the form; zero when absent.
FieldElement form_coefficient(const MultiPoly& form, int a, int b, int c);

/// All intersection points with coordinates in the base field, each
/// once, in canonical form, sorted. Complete: when multiplicity mass
/// over the algebraic closure is missing from the returned set, throws
/// UnrepresentablePoint naming a resultant factor with no root in the
/// field. Throws CommonComponent when the forms share a factor.
std::vector<ProjPointL> common_points(const PlaneCurve& c1, const PlaneCurve& c2);

} // namespace valcurve

#endif
