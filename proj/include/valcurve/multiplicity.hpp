#ifndef VALCURVE_MULTIPLICITY_HPP
#define VALCURVE_MULTIPLICITY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "valcurve/curves.hpp"

namespace valcurve {

/// Knobs for the deformation count. Working truncation doubles from
/// start to cap whenever precision hides an answer; every configured
/// seed must report the same count, and disagreement triggers up to
/// retry_limit rounds with rederived seeds.
struct MultConfig {
    Rational truncation_start = Rational(16);
    Rational truncation_cap = Rational(1024);
    std::vector<std::uint64_t> seeds{101, 202};
    int retry_limit = 5;
};

/// One deformation branch, in affine coordinates of the generic frame
/// translated so the target point sits at the origin. Substituting
/// (x, y) into both deformed forms leaves residuals that vanish to the
/// working truncation, and [x : y : 1] specializes to [0 : 0 : 1].
/// orbit_size counts the conjugates this branch represents.
struct BranchWitness {
    PuiseuxSeries x;
    PuiseuxSeries y;
    int orbit_size = 1;
};

struct BranchCount {
    int count = 0;
    std::vector<BranchWitness> witnesses;
    Rational truncation_used{0};
};

/// Number of branches of the infinitesimally deformed intersection
/// that land on the given point, counted over the algebraic closure.
/// Witnesses come from the first configured seed. Throws
/// CommonComponent, NondeterministicCount, TruncationInsufficient,
/// RequiresExtension.
BranchCount mult_nonstandard(const PlaneCurve& c1, const PlaneCurve& c2, const ProjPointL& l,
                             const MultConfig& cfg = MultConfig());

/// Classical count: the order of vanishing of the y-resultant at the
/// point's x-coordinate, in a coordinate frame certified generic
/// ([0:1:0] on neither curve, full resultant degree, no second
/// intersection point sharing the target's x). Throws CommonComponent,
/// DegenerateCoordinates.
int mult_oracle(const PlaneCurve& c1, const PlaneCurve& c2, const ProjPointL& l);

/// mult_nonstandard(c1, c2, l) >= n; true for every n <= 0 without
/// computing anything.
bool mult_geq(const PlaneCurve& c1, const PlaneCurve& c2, const ProjPointL& l, int n,
              const MultConfig& cfg = MultConfig());

struct MultReport {
    ProjPointL l;
    int mult_nonstandard = 0;
    int mult_oracle = 0;
    bool agree = false;
    std::vector<BranchWitness> witnesses;
    Rational truncation_used{0};
};

struct BezoutReport {
    std::vector<MultReport> entries;
    long sum = 0;
    long expected = 0;
    bool verdict = false;
    std::vector<std::uint64_t> seeds;
    Rational truncation_used{0};
};

/// Enumerates the intersection points, computes both counts at each,
/// and checks the total against degree(c1) * degree(c2). verdict is
/// true iff the sum matches and every per-point pair agrees.
BezoutReport bezout_check(const PlaneCurve& c1, const PlaneCurve& c2,
                          const MultConfig& cfg = MultConfig());

} // namespace valcurve

#endif
