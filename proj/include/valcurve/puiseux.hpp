#ifndef VALCURVE_PUISEUX_HPP
#define VALCURVE_PUISEUX_HPP

#include <optional>
#include <string>
#include <vector>

#include "valcurve/field.hpp"

namespace valcurve {

enum class Ternary { False, True, Unknown };

/// Value of the order function: a rational or +infinity.
class Valuation {
public:
    static Valuation infinity() { return Valuation(true, Rational(0)); }
    explicit Valuation(Rational v) : inf_(false), v_(std::move(v)) {}

    bool is_infinite() const { return inf_; }
    const Rational& finite() const {
        if (inf_) throw Error("valuation is infinite");
        return v_;
    }

    friend bool operator==(const Valuation& a, const Valuation& b) {
        if (a.inf_ || b.inf_) return a.inf_ == b.inf_;
        return a.v_ == b.v_;
    }
    friend bool operator!=(const Valuation& a, const Valuation& b) { return !(a == b); }
    friend bool operator<(const Valuation& a, const Valuation& b) {
        if (a.inf_) return false;
        if (b.inf_) return true;
        return a.v_ < b.v_;
    }
    friend bool operator<=(const Valuation& a, const Valuation& b) { return a < b || a == b; }
    friend bool operator>(const Valuation& a, const Valuation& b) { return b < a; }
    friend bool operator>=(const Valuation& a, const Valuation& b) { return b <= a; }

    friend Valuation operator+(const Valuation& a, const Valuation& b) {
        if (a.inf_ || b.inf_) return infinity();
        return Valuation(a.v_ + b.v_);
    }
    friend Valuation min(const Valuation& a, const Valuation& b) { return a < b ? a : b; }

    std::string to_string() const { return inf_ ? "oo" : valcurve::to_string(v_); }

private:
    Valuation(bool inf, Rational v) : inf_(inf), v_(std::move(v)) {}
    bool inf_;
    Rational v_;
};

/// Finitely supported fractional-exponent series in eps over the
/// constant field, together with an optional truncation bound: terms at
/// or above the bound are unknown, not zero. A series without a bound
/// is exact. All invariants are maintained on construction: exponents
/// strictly increase, coefficients are nonzero, and every stored
/// exponent lies strictly below the bound.
class PuiseuxSeries {
public:
    struct Term {
        Rational exp;
        FieldElement coeff;
    };

    /// Exact zero.
    PuiseuxSeries() = default;
    /// Exact rational constant (ring-template hook).
    PuiseuxSeries(int k) {
        if (k != 0) t_.push_back({Rational(0), FieldElement(k)});
    }

    static PuiseuxSeries constant(FieldElement c);
    static PuiseuxSeries epsilon();
    static PuiseuxSeries monomial(FieldElement c, Rational exp);
    /// Lifts a polynomial in eps to an exact series.
    static PuiseuxSeries from_poly(const FPoly& p);

    const std::vector<Term>& terms() const { return t_; }
    const std::optional<Rational>& truncation() const { return trunc_; }
    bool is_exact() const { return !trunc_.has_value(); }

    /// True: identically zero. False: a nonzero term is visible.
    /// Unknown: no visible term but the series is truncated.
    Ternary zero_test() const;

    /// Exact order of the series; infinity for exact zero. Throws
    /// IndeterminateValuation when zero_test() is Unknown.
    Valuation valuation() const;

    /// Largest certified lower bound on the valuation; never throws.
    Valuation valuation_lower_bound() const;

    /// Coefficient of eps^0 for elements of nonnegative valuation.
    FieldElement residue() const;

    bool in_valuation_ring() const;  // v >= 0
    bool in_maximal_ideal() const;   // v > 0

    friend PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b);
    friend PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b);
    friend PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b);
    PuiseuxSeries operator-() const;
    friend bool operator==(const PuiseuxSeries& a, const PuiseuxSeries& b);
    friend bool operator!=(const PuiseuxSeries& a, const PuiseuxSeries& b) { return !(a == b); }

    /// Multiplicative inverse to absolute precision `target`; defaults
    /// to the input's own precision (or relative depth 32 when exact).
    PuiseuxSeries inverse(std::optional<Rational> target = std::nullopt) const;

    PuiseuxSeries pow(long k) const;

    /// Copy truncated at min(current bound, at).
    PuiseuxSeries truncated(const Rational& at) const;

    /// Three-valued equality: True when the difference is exactly zero,
    /// False when it has a visible term, Unknown otherwise.
    Ternary eq_test(const PuiseuxSeries& other) const;

    /// Lcm of the exponent denominators.
    Integer ramification() const;

    std::string to_string() const;

    /// Deterministic total order for sorting output.
    static int compare(const PuiseuxSeries& a, const PuiseuxSeries& b);

    static constexpr int kDefaultPrecision = 32;

private:
    std::vector<Term> t_;
    std::optional<Rational> trunc_;
    void drop_at_bound();
};

/// Ring-template hook: true only for the exact zero. Polynomials over
/// series must keep exact coefficients; a truncated empty series is not
/// "zero" and would corrupt degree bookkeeping.
inline bool is_zero(const PuiseuxSeries& s) { return s.zero_test() == Ternary::True; }

using SPoly = Polynomial<PuiseuxSeries>;

/// Lifts a polynomial in x whose coefficients are polynomials in eps to
/// a polynomial in x with exact series coefficients.
SPoly lift_series_poly(const Polynomial<FPoly>& p);

std::string poly_to_string(const SPoly& p, const std::string& var);

} // namespace valcurve

#endif
