#ifndef VALCURVE_DUALITY_HPP
#define VALCURVE_DUALITY_HPP

#include <functional>
#include <string>
#include <vector>

#include "valcurve/projective.hpp"

namespace valcurve {

/// A map k -> image of [k : 1] on the projective line over the
/// constant field. The honest one reduces coordinatewise; adversarial
/// ones exist only to be caught by roundtrip_check.
using SpecOracle = std::function<ProjPointL(const PuiseuxSeries&)>;

/// k -> [k : 1]
ProjPointK gamma(const PuiseuxSeries& k);

/// The reduction map built from the order valuation.
SpecOracle honest_oracle();

/// Membership in the ring of nonnegative-order elements, read off the
/// oracle: the image of [k : 1] must avoid [1 : 0].
bool in_valuation_ring(const SpecOracle& s, const PuiseuxSeries& k);

/// Membership in the ideal of positive-order elements: image is [0 : 1].
bool in_maximal_ideal(const SpecOracle& s, const PuiseuxSeries& k);

enum class ValCompare { LE, GT };

/// Order comparison recovered from ring membership of y/x.
ValCompare value_compare(const SpecOracle& s, const PuiseuxSeries& x, const PuiseuxSeries& y);

/// Rescales every exponent by a positive factor. The result has the
/// same coefficients, so ring membership answers are unchanged while
/// the order itself is rescaled.
PuiseuxSeries stretch_exponents(const PuiseuxSeries& k, const Rational& factor);

/// Checks both directions of the correspondence on a sample list:
/// ring membership read from the oracle must match the order
/// valuation, and the map rebuilt from the recovered ring data must
/// reproduce the oracle. Returns the number of samples checked and
/// throws CounterexampleFound with the offending element otherwise.
std::size_t roundtrip_check(const SpecOracle& s, const std::vector<PuiseuxSeries>& samples);

/// Product of three projective lines, coordinates ([u:v],[w:x],[y:z]),
/// cut out by u*w*z = y*v*x. Closed under the graph of multiplication:
/// it contains ([a:1],[b:1],[ab:1]).
VarietyPredicate multiplication_variety();

/// Same ambient space, cut out by u*x*z + w*v*z = y*v*x; contains
/// ([a:1],[b:1],[a+b:1]).
VarietyPredicate addition_variety();

/// Three copies of projective (n+1)-space, the two trilinear equations
/// x0*y1*z1 + y0*xn*z1 = z0*xn*y1 and the same with index n+1 in place
/// of 0. Contains ([0:...:1:k],[k:1:...:0],[k:1:...:1:k]) for n >= 2.
VarietyPredicate sum_variety(int n);

/// Three copies of projective (n+1)-space, the n+1 trilinear equations
/// xj*yn*zn + yj*xn*zn = zj*xn*yn for j != n.
VarietyPredicate sum_prime_variety(int n);

/// Single copy of projective (n+1)-space: x0 = ... = x_{n-1} = 0.
VarietyPredicate tail_line_variety(int n);

/// Single copy of projective (n+1)-space: x1 = ... = xn, x0 = x_{n+1}.
VarietyPredicate diagonal_arc_variety(int n);

} // namespace valcurve

#endif
