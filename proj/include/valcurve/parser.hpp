#ifndef VALCURVE_PARSER_HPP
#define VALCURVE_PARSER_HPP

#include <string>
#include <vector>

#include "valcurve/projective.hpp"

namespace valcurve {

/// Shared expression grammar: variables x, y, z, t, eps; integer and
/// rational literals p/q; operators + - * ^ and parentheses.
/// Exponents are nonnegative integer literals, except on eps where any
/// rational is allowed (fractions parenthesized, as in eps^(3/2)).
/// A trailing + O(eps^(r)) marks a truncated series.

/// Series in eps, coefficients rational or in t over the given field.
PuiseuxSeries parse_puiseux(const std::string& text, const FieldPtr& field = nullptr);

/// Univariate polynomial in t with rational coefficients.
QPoly parse_minpoly(const std::string& text);

/// Polynomial in x, y, z over the field (t allowed as the generator);
/// eps is rejected. Returned with variable indices x=0, y=1, z=2.
MultiPoly parse_trivariate(const std::string& text, const FieldPtr& field = nullptr);

/// Polynomial in x whose coefficients are polynomials in eps, the
/// input shape of the branch expansion. Exponents on eps must be
/// nonnegative integers here; y and z are rejected.
Polynomial<FPoly> parse_bivariate(const std::string& text, const FieldPtr& field = nullptr);

/// Point literal `[a : b : c]`, coordinates in the series grammar.
std::vector<PuiseuxSeries> parse_point_coords(const std::string& text,
                                              const FieldPtr& field = nullptr);
ProjPointK parse_point_k(const std::string& text, const FieldPtr& field = nullptr);

/// Point with exact constant coordinates. ParseError when a coordinate
/// carries eps or a truncation.
ProjPointL parse_point_l(const std::string& text, const FieldPtr& field = nullptr);

} // namespace valcurve

#endif
