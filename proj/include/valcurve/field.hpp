#ifndef VALCURVE_FIELD_HPP
#define VALCURVE_FIELD_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "valcurve/errors.hpp"
#include "valcurve/polynomial.hpp"
#include "valcurve/rational.hpp"

namespace valcurve {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

/// A simple extension Q(t)/(m(t)). The minimal polynomial is monic,
/// squarefree, of degree >= 2 and has no rational root; irreducibility
/// is not certified up front. If a later inversion discovers a factor,
/// it surfaces as NonInvertible carrying that factor.
class NumberField {
public:
    /// Validates and normalizes m. Throws NotSquareFree when m has a
    /// repeated factor and RedundantExtension when m has a rational
    /// root (in particular when deg m <= 1).
    static FieldPtr make(Polynomial<Rational> m);

    long degree() const { return minpoly_.degree(); }
    const Polynomial<Rational>& minpoly() const { return minpoly_; }
    std::string to_string() const { return poly_to_string(minpoly_); }

    friend bool same_field(const FieldPtr& a, const FieldPtr& b) {
        if (a == b) return true;
        if (!a || !b) return false;
        return a->minpoly_ == b->minpoly_;
    }

private:
    explicit NumberField(Polynomial<Rational> m) : minpoly_(std::move(m)) {}
    Polynomial<Rational> minpoly_;
};

/// NonInvertible with the factor kept in structured form so callers
/// can restart over a corrected field without reparsing.
class NonInvertibleDetail : public NonInvertible {
public:
    NonInvertibleDetail(const std::string& what, QPoly factor)
        : NonInvertible(what, poly_to_string(factor)), factor_poly_(std::move(factor)) {}
    const QPoly& factor_poly() const { return factor_poly_; }

private:
    QPoly factor_poly_;
};

/// Element of Q or of a simple extension Q(t)/(m), stored as the
/// coordinate vector of its reduced representative in powers of t.
/// Arithmetic promotes rationals into the partner's field; combining
/// elements of two distinct extensions throws.
class FieldElement {
public:
    FieldElement() : c_(1, Rational(0)) {}
    FieldElement(int k) : c_(1, Rational(k)) {}
    FieldElement(Rational r) : c_(1, std::move(r)) {}
    FieldElement(FieldPtr field, std::vector<Rational> coords);

    static FieldElement generator(const FieldPtr& field);

    /// Null for plain rationals.
    const FieldPtr& field() const { return field_; }
    bool is_rational() const;

    /// Throws when the element does not lie in Q.
    Rational as_rational() const;

    /// Coordinate of t^k in the reduced representative.
    Rational coord(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
    const std::vector<Rational>& coords() const { return c_; }

    /// Rational embeds into any field; same field is a no-op.
    FieldElement promoted(const FieldPtr& field) const;

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    FieldElement operator-() const;
    friend bool operator==(const FieldElement& a, const FieldElement& b);
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

    /// Throws NonInvertible on zero; for a reducible working minimal
    /// polynomial the exception carries the discovered factor.
    FieldElement inverse() const;

    std::string to_string() const;

    /// Total order used only to make output and iteration deterministic.
    static int compare(const FieldElement& a, const FieldElement& b);

private:
    void reduce();

    FieldPtr field_;            // null: element of Q
    std::vector<Rational> c_;   // size 1, or field degree
};

inline bool is_zero(const FieldElement& a) {
    for (const auto& c : a.coords())
        if (sgn(c) != 0) return false;
    return true;
}

inline FieldElement exact_div(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }
inline FieldElement field_div(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }
inline FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }
inline std::string to_string(const FieldElement& a) { return a.to_string(); }

using FPoly = Polynomial<FieldElement>;

inline std::string poly_to_string(const FPoly& p, const std::string& var) {
    return poly_to_string(p, var, [](const FieldElement& c) { return c.to_string(); });
}

inline FPoly lift_poly(const QPoly& p) {
    std::vector<FieldElement> cs;
    cs.reserve(static_cast<std::size_t>(p.degree() + 1));
    for (long k = 0; k <= p.degree(); ++k) cs.emplace_back(p.coeff(static_cast<std::size_t>(k)));
    return FPoly(std::move(cs));
}

/// All rational roots of a nonzero polynomial over Q, without
/// multiplicity, in increasing order. Complete: uses exact real-root
/// isolation on a monicized integer model, so no root is ever missed.
std::vector<Rational> rational_roots(const QPoly& f);

struct FieldRoot {
    FieldElement value;
    int multiplicity;
};

struct RootsResult {
    std::vector<FieldRoot> roots;  // deterministic order
    FPoly residual;                // monic, squarefree; 1 when f splits over the field
    bool complete = true;          // true: residual certified root-free in the field
};

/// Roots of f lying in the coefficient field. Complete over Q and over
/// any degree-2 extension; over larger extensions only rational roots
/// are certain and `complete` is false when a nonconstant residual
/// remains.
RootsResult roots_in_field(const FPoly& f, const FieldPtr& field);

/// Converts a polynomial whose coefficients all lie in Q; nullopt
/// otherwise.
std::optional<QPoly> try_rational_poly(const FPoly& f);

/// Gaussian elimination over the field. Returns std::nullopt when the
/// system is inconsistent.
std::optional<std::vector<FieldElement>> solve_linear(std::vector<std::vector<FieldElement>> m,
                                                      std::vector<FieldElement> rhs);

/// Basis of the nullspace of m (rows = equations).
std::vector<std::vector<FieldElement>> nullspace(std::vector<std::vector<FieldElement>> m,
                                                 std::size_t cols);

} // namespace valcurve

#endif
