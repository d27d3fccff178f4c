#ifndef VALCURVE_NEWTON_PUISEUX_HPP
#define VALCURVE_NEWTON_PUISEUX_HPP

#include <optional>
#include <vector>

#include "valcurve/puiseux.hpp"

namespace valcurve {

struct ExpansionConfig {
    Rational target = Rational(PuiseuxSeries::kDefaultPrecision);
    bool positive_only = false;  // keep only branches of strictly positive valuation
    int depth_cap = 64;
    bool allow_extension = true; // materialize conjugate orbits over one local extension of Q
};

/// One Galois orbit of fractional-power roots sharing a leading
/// exponent. `size` counts the distinct roots in the orbit over the
/// algebraic closure; when representable, `representative` is one of
/// them refined until substitution leaves residual valuation >= target.
/// A missing lead_exp means the root is exactly zero (infinite order).
struct BranchCluster {
    int size = 1;
    std::optional<Rational> lead_exp;
    std::optional<PuiseuxSeries> representative;
    FieldPtr rep_field;                    // field of the representative's coefficients
    std::optional<QPoly> local_minpoly;    // set when a fresh extension of Q was introduced
    std::string char_factor_text;          // characteristic factor blocking/defining the orbit
};

/// Root orbits of f(x, eps), a squarefree polynomial in x over the
/// polynomial ring in eps. Counting is complete over the closure;
/// representatives are materialized whenever the base field (or a
/// single extension of Q, if allowed) carries them. Throws
/// NotSquareFree, TruncationInsufficient.
std::vector<BranchCluster> expand_clusters(const Polynomial<FPoly>& f, const FieldPtr& base,
                                           const ExpansionConfig& cfg);

/// All roots materialized over the base field itself. Throws
/// RequiresExtension (carrying the characteristic factor) when any
/// orbit does not split over the base.
std::vector<PuiseuxSeries> expand_roots(const Polynomial<FPoly>& f, const FieldPtr& base,
                                        const ExpansionConfig& cfg);

} // namespace valcurve

#endif
