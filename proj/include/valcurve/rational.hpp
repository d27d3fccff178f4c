#ifndef VALCURVE_RATIONAL_HPP
#define VALCURVE_RATIONAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "valcurve/errors.hpp"

namespace valcurve {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Rational& a) { return sgn(a) == 0; }

inline Rational exact_div(const Rational& a, const Rational& b) {
    if (sgn(b) == 0) throw InexactDivision("division of rational by zero");
    return a / b;
}

/// Reduced fraction from a raw pair. The two-argument mpq_class
/// constructor keeps the fraction unreduced, and comparisons on
/// unreduced values are unreliable, so route all computed num/den
/// pairs through here.
inline Rational make_rational(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Canonical text form: "p" when the denominator is 1, else "p/q".
std::string to_string(const Rational& a);
std::string to_string(const Integer& a);

/// Parses "p" or "p/q" with optional sign. Throws ParseError.
Rational parse_rational(const std::string& text);

/// a^k for integer k; negative k inverts (throws on zero base).
Rational pow_rational(const Rational& a, long k);

/// True when a is the square of a rational; if so *root is the
/// nonnegative square root.
bool rational_sqrt(const Rational& a, Rational* root);

/// floor(a) as an Integer.
Integer floor_rational(const Rational& a);

/// Deterministic 64-bit generator (splitmix64). Used everywhere a seed
/// appears in a contract so that runs are reproducible across platforms;
/// std::uniform_int_distribution is implementation-defined and must not
/// leak into observable output.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [lo, hi] by rejection; requires lo <= hi.
    long next_in(long lo, long hi);

    /// Derives an independent stream for subtask k of this seed.
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t k);

private:
    std::uint64_t state_;
};

} // namespace valcurve

#endif
