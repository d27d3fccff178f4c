#ifndef VALCURVE_PROJECTIVE_HPP
#define VALCURVE_PROJECTIVE_HPP

#include <string>
#include <vector>

#include "valcurve/puiseux.hpp"

namespace valcurve {

/// Point of projective n-space over the constant field, kept in
/// canonical form: the first nonzero coordinate is exactly 1.
class ProjPointL {
public:
    explicit ProjPointL(std::vector<FieldElement> coords);

    std::size_t dim() const { return x_.size() - 1; }
    const std::vector<FieldElement>& coords() const { return x_; }
    const FieldElement& coord(std::size_t k) const { return x_[k]; }

    friend bool operator==(const ProjPointL& a, const ProjPointL& b) { return a.x_ == b.x_; }
    friend bool operator!=(const ProjPointL& a, const ProjPointL& b) { return !(a == b); }
    static int compare(const ProjPointL& a, const ProjPointL& b);

    std::string to_string() const;

private:
    std::vector<FieldElement> x_;
};

/// Point of projective n-space over the series field. At least one
/// coordinate must be visibly nonzero; coordinates are stored as given
/// (no scaling is forced on construction, since inversion would cost
/// precision). canonical() produces the scaled representative.
class ProjPointK {
public:
    explicit ProjPointK(std::vector<PuiseuxSeries> coords);

    std::size_t dim() const { return x_.size() - 1; }
    const std::vector<PuiseuxSeries>& coords() const { return x_; }
    const PuiseuxSeries& coord(std::size_t k) const { return x_[k]; }

    /// Equality in projective space by cross products, three-valued.
    Ternary eq_test(const ProjPointK& other) const;

    /// Minimum coordinate order; throws IndeterminateValuation when a
    /// truncated coordinate could fall below every visible one.
    Rational min_valuation() const;

    /// Scales so the first coordinate of minimal order becomes exactly 1.
    ProjPointK canonical() const;

    /// Componentwise residue after scaling by eps^(-min order).
    ProjPointL specialize() const;

    std::string to_string() const;

private:
    std::vector<PuiseuxSeries> x_;
};

/// Appends a zero coordinate: P^n -> P^(n+1).
ProjPointL embed(const ProjPointL& p);
ProjPointK embed(const ProjPointK& p);

/// Segre map P^n x P^n -> P^(n(n+2)); output coordinate (i,j) in row
/// order is x_i * y_j.
ProjPointL segre(const ProjPointL& a, const ProjPointL& b);
ProjPointK segre(const ProjPointK& a, const ProjPointK& b);

/// Sparse polynomial in a fixed number of variables over the constant
/// field. Terms are kept merged and sorted, so representation equality
/// is semantic equality.
class MultiPoly {
public:
    struct Mono {
        std::vector<int> exps;
        FieldElement c;
    };

    explicit MultiPoly(int nvars) : nvars_(nvars) {}
    static MultiPoly variable(int nvars, int k);
    static MultiPoly constant(int nvars, FieldElement c);

    int nvars() const { return nvars_; }
    const std::vector<Mono>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    void add_term(std::vector<int> exps, FieldElement c);

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly operator-() const;
    friend bool operator==(const MultiPoly& a, const MultiPoly& b);

    /// Total degree in the variable block [lo, hi) when every monomial
    /// agrees; throws NotHomogeneous otherwise. -1 for the zero poly.
    int block_degree(std::size_t lo, std::size_t hi) const;

    FieldElement eval(const std::vector<FieldElement>& v) const;
    PuiseuxSeries eval(const std::vector<PuiseuxSeries>& v) const;

    std::string to_string(const std::vector<std::string>& names) const;

private:
    void sort_merge();
    int nvars_;
    std::vector<Mono> t_;
};

/// Multi-homogeneous zero set on a product of m copies of P^n.
/// Construction validates that every equation is homogeneous in each
/// coordinate block.
class VarietyPredicate {
public:
    VarietyPredicate(int m, int n, std::vector<MultiPoly> equations);

    int copies() const { return m_; }
    int space_dim() const { return n_; }
    const std::vector<MultiPoly>& equations() const { return eqs_; }

    bool holds(const std::vector<ProjPointL>& pts) const;
    Ternary holds_k(const std::vector<ProjPointK>& pts) const;

private:
    int m_, n_;
    std::vector<MultiPoly> eqs_;
};

} // namespace valcurve

#endif
