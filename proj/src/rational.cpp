#include "valcurve/rational.hpp"

#include <cctype>

namespace valcurve {

std::string to_string(const Rational& a) {
    if (a.get_den() == 1) return a.get_num().get_str();
    return a.get_num().get_str() + "/" + a.get_den().get_str();
}

std::string to_string(const Integer& a) { return a.get_str(); }

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational literal");
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        bool ok = std::isdigit(static_cast<unsigned char>(c)) || c == '/' ||
                  ((c == '-' || c == '+') && i == 0);
        if (!ok) throw ParseError("bad character in rational literal: " + text);
    }
    try {
        Rational r(text);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw ParseError("malformed rational literal: " + text);
    }
}

Rational pow_rational(const Rational& a, long k) {
    if (k == 0) return Rational(1);
    bool neg = k < 0;
    unsigned long e = neg ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), a.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), a.get_den_mpz_t(), e);
    r.canonicalize();
    if (neg) {
        if (sgn(r) == 0) throw InexactDivision("zero raised to a negative power");
        r = 1 / r;
    }
    return r;
}

bool rational_sqrt(const Rational& a, Rational* root) {
    if (sgn(a) < 0) return false;
    if (sgn(a) == 0) {
        if (root) *root = 0;
        return true;
    }
    if (mpz_perfect_square_p(a.get_num_mpz_t()) == 0) return false;
    if (mpz_perfect_square_p(a.get_den_mpz_t()) == 0) return false;
    Rational r;
    mpz_sqrt(r.get_num_mpz_t(), a.get_num_mpz_t());
    mpz_sqrt(r.get_den_mpz_t(), a.get_den_mpz_t());
    r.canonicalize();
    if (root) *root = r;
    return true;
}

Integer floor_rational(const Rational& a) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
    return q;
}

long SplitMix64::next_in(long lo, long hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do {
        x = next();
    } while (x >= limit);
    return lo + static_cast<long>(x % span);
}

std::uint64_t SplitMix64::derive(std::uint64_t seed, std::uint64_t k) {
    SplitMix64 g(seed ^ (0x5851f42d4c957f2dULL * (k + 1)));
    g.next();
    return g.next();
}

} // namespace valcurve
