#ifndef VALCURVE_POLYNOMIAL_HPP
#define VALCURVE_POLYNOMIAL_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "valcurve/errors.hpp"
#include "valcurve/rational.hpp"

namespace valcurve {

inline Rational field_div(const Rational& a, const Rational& b) {
    if (sgn(b) == 0) throw InexactDivision("division by zero");
    return a / b;
}

/// Dense univariate polynomial over a commutative ring R.
///
/// R must provide: construction from int, +, -, *, unary -, ==, and the
/// free functions is_zero(R) and exact_div(R, R). Coefficients are
/// stored in ascending degree with no trailing zeros, so degree() and
/// lc() are always meaningful.
template <class R>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(int k) {
        R c(k);
        if (!is_zero(c)) c_.push_back(std::move(c));
    }
    explicit Polynomial(R constant) {
        if (!is_zero(constant)) c_.push_back(std::move(constant));
    }
    explicit Polynomial(std::vector<R> ascending) : c_(std::move(ascending)) { normalize(); }

    static Polynomial variable() {
        Polynomial p;
        p.c_ = {R(0), R(1)};
        return p;
    }

    /// c * x^k
    static Polynomial monomial(R c, std::size_t k) {
        Polynomial p;
        if (!is_zero(c)) {
            p.c_.assign(k + 1, R(0));
            p.c_[k] = std::move(c);
        }
        return p;
    }

    bool is_zero_poly() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<R>& coeffs() const { return c_; }

    R coeff(std::size_t k) const { return k < c_.size() ? c_[k] : R(0); }

    const R& lc() const {
        if (c_.empty()) throw Error("leading coefficient of zero polynomial");
        return c_.back();
    }

    /// Largest k with x^k dividing the polynomial; 0 for the zero poly.
    std::size_t order_at_zero() const {
        for (std::size_t k = 0; k < c_.size(); ++k)
            if (!is_zero(c_[k])) return k;
        return 0;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        Polynomial r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), R(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i] = r.c_[i] + b.c_[i];
        r.normalize();
        return r;
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.c_.empty() || b.c_.empty()) return Polynomial();
        Polynomial r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, R(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
        }
        r.normalize();
        return r;
    }

    friend Polynomial operator*(const R& s, const Polynomial& p) {
        Polynomial r = p;
        for (auto& c : r.c_) c = s * c;
        r.normalize();
        return r;
    }

    /// Multiplication by x^k.
    Polynomial shifted(std::size_t k) const {
        if (c_.empty()) return Polynomial();
        Polynomial r;
        r.c_.assign(k, R(0));
        r.c_.insert(r.c_.end(), c_.begin(), c_.end());
        return r;
    }

    Polynomial derivative() const {
        Polynomial r;
        for (std::size_t i = 1; i < c_.size(); ++i) r.c_.push_back(R(static_cast<int>(i)) * c_[i]);
        r.normalize();
        return r;
    }

    template <class T, class Lift>
    T eval_mapped(const T& x, Lift&& lift) const {
        T acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + lift(c_[i]);
        return acc;
    }

    R eval(const R& x) const {
        return eval_mapped<R>(x, [](const R& c) { return c; });
    }

    Polynomial compose(const Polynomial& inner) const {
        return eval_mapped<Polynomial>(inner, [](const R& c) { return Polynomial(c); });
    }

private:
    void normalize() {
        while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
    }

    std::vector<R> c_;
};

template <class R>
bool is_zero(const Polynomial<R>& p) {
    return p.is_zero_poly();
}

/// Quotient and remainder over a field (coefficients support field_div).
template <class R>
std::pair<Polynomial<R>, Polynomial<R>> divmod(const Polynomial<R>& f, const Polynomial<R>& g) {
    if (is_zero(g)) throw InexactDivision("polynomial division by zero");
    std::vector<R> rem(f.coeffs());
    long dg = g.degree();
    long df = static_cast<long>(rem.size()) - 1;
    if (df < dg) return {Polynomial<R>(), f};
    std::vector<R> quo(static_cast<std::size_t>(df - dg + 1), R(0));
    for (long k = df; k >= dg; --k) {
        if (is_zero(rem[static_cast<std::size_t>(k)])) continue;
        R q = field_div(rem[static_cast<std::size_t>(k)], g.lc());
        quo[static_cast<std::size_t>(k - dg)] = q;
        for (long j = 0; j <= dg; ++j)
            rem[static_cast<std::size_t>(k - dg + j)] =
                rem[static_cast<std::size_t>(k - dg + j)] - q * g.coeff(static_cast<std::size_t>(j));
    }
    return {Polynomial<R>(std::move(quo)), Polynomial<R>(std::move(rem))};
}

/// Exact quotient in R[x] for an arbitrary ring with exact coefficient
/// division; throws InexactDivision when g does not divide f.
template <class R>
Polynomial<R> exact_div(const Polynomial<R>& f, const Polynomial<R>& g) {
    if (is_zero(g)) throw InexactDivision("polynomial division by zero");
    if (is_zero(f)) return Polynomial<R>();
    long dg = g.degree();
    long df = f.degree();
    if (df < dg) throw InexactDivision("quotient degree would be negative");
    std::vector<R> rem(f.coeffs());
    std::vector<R> quo(static_cast<std::size_t>(df - dg + 1), R(0));
    for (long k = df; k >= dg; --k) {
        const R& top = rem[static_cast<std::size_t>(k)];
        if (is_zero(top)) continue;
        R q = exact_div(top, g.lc());
        quo[static_cast<std::size_t>(k - dg)] = q;
        for (long j = 0; j <= dg; ++j)
            rem[static_cast<std::size_t>(k - dg + j)] =
                rem[static_cast<std::size_t>(k - dg + j)] - q * g.coeff(static_cast<std::size_t>(j));
    }
    for (const R& c : rem)
        if (!is_zero(c)) throw InexactDivision("inexact polynomial division");
    return Polynomial<R>(std::move(quo));
}

template <class R>
Polynomial<R> make_monic(const Polynomial<R>& f) {
    if (is_zero(f)) return f;
    R inv = field_div(R(1), f.lc());
    return inv * f;
}

/// Monic gcd over a field; gcd(0, 0) = 0.
template <class R>
Polynomial<R> gcd(const Polynomial<R>& f, const Polynomial<R>& g) {
    Polynomial<R> a = f, b = g;
    while (!is_zero(b)) {
        auto [q, r] = divmod(a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

/// Extended gcd over a field: returns (d, u, v) with u f + v g = d, d monic.
template <class R>
std::tuple<Polynomial<R>, Polynomial<R>, Polynomial<R>> extended_gcd(const Polynomial<R>& f,
                                                                     const Polynomial<R>& g) {
    Polynomial<R> a = f, b = g;
    Polynomial<R> ua(1), va(0), ub(0), vb(1);
    while (!is_zero(b)) {
        auto [q, r] = divmod(a, b);
        Polynomial<R> un = ua - q * ub;
        Polynomial<R> vn = va - q * vb;
        a = std::move(b);
        b = std::move(r);
        ua = std::move(ub);
        ub = std::move(un);
        va = std::move(vb);
        vb = std::move(vn);
    }
    if (is_zero(a)) return {a, ua, va};
    R inv = field_div(R(1), a.lc());
    return {inv * a, inv * ua, inv * va};
}

template <class R>
Polynomial<R> squarefree_part(const Polynomial<R>& f) {
    if (f.degree() <= 0) return make_monic(f);
    Polynomial<R> d = gcd(f, f.derivative());
    return make_monic(exact_div(f, d));
}

template <class R>
bool is_squarefree(const Polynomial<R>& f) {
    if (f.degree() <= 0) return !is_zero(f);
    return gcd(f, f.derivative()).degree() == 0;
}

/// Yun decomposition over a field of characteristic zero:
/// f = lc * prod factors[i].first ^ factors[i].second with the bases
/// squarefree, pairwise coprime and monic.
template <class R>
std::vector<std::pair<Polynomial<R>, int>> yun_decomposition(const Polynomial<R>& f) {
    std::vector<std::pair<Polynomial<R>, int>> out;
    if (f.degree() <= 0) return out;
    Polynomial<R> a = make_monic(f);
    Polynomial<R> g = gcd(a, a.derivative());
    Polynomial<R> w = exact_div(a, g);
    Polynomial<R> y = exact_div(a.derivative(), g);
    int k = 1;
    while (w.degree() > 0) {
        Polynomial<R> z = y - w.derivative();
        Polynomial<R> h = gcd(w, z);
        if (h.degree() > 0) out.emplace_back(h, k);
        w = exact_div(w, h);
        y = exact_div(z, h);
        ++k;
    }
    return out;
}

/// Pseudo-remainder: lc(g)^(deg f - deg g + 1) * f mod g, valid over any
/// integral domain. Requires deg f >= deg g >= 0.
template <class R>
Polynomial<R> pseudo_rem(const Polynomial<R>& f, const Polynomial<R>& g) {
    long df = f.degree(), dg = g.degree();
    if (dg < 0) throw InexactDivision("pseudo-division by zero");
    Polynomial<R> r = f;
    long steps = df - dg + 1;
    for (long i = 0; i < steps; ++i) {
        if (r.degree() < dg) {
            r = Polynomial<R>(g.lc()) * r;
            continue;
        }
        Polynomial<R> t = Polynomial<R>(r.lc()).shifted(static_cast<std::size_t>(r.degree() - dg));
        r = Polynomial<R>(g.lc()) * r - t * g;
    }
    return r;
}

/// Determinant by fraction-free elimination; entries live in an
/// integral domain with exact_div. Destroys its argument.
template <class R>
R bareiss_determinant(std::vector<std::vector<R>> m) {
    std::size_t n = m.size();
    if (n == 0) return R(1);
    R sign(1);
    R prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(m[k][k])) {
            std::size_t p = k + 1;
            while (p < n && is_zero(m[p][k])) ++p;
            if (p == n) return R(0);
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                R num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = exact_div(num, prev);
            }
            m[i][k] = R(0);
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

/// Sylvester matrix of f (degree m) and g (degree n) in the classical
/// layout: n rows of f's coefficients in descending order, then m rows
/// of g's. Convention pinned by resultant(y - x, y + x) = 2x.
template <class R>
std::vector<std::vector<R>> sylvester_matrix(const Polynomial<R>& f, const Polynomial<R>& g) {
    long m = f.degree(), n = g.degree();
    if (m < 0 || n < 0) throw Error("sylvester matrix of zero polynomial");
    std::size_t dim = static_cast<std::size_t>(m + n);
    std::vector<std::vector<R>> mat(dim, std::vector<R>(dim, R(0)));
    for (long r = 0; r < n; ++r)
        for (long j = 0; j <= m; ++j)
            mat[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + j)] =
                f.coeff(static_cast<std::size_t>(m - j));
    for (long r = 0; r < m; ++r)
        for (long j = 0; j <= n; ++j)
            mat[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + j)] =
                g.coeff(static_cast<std::size_t>(n - j));
    return mat;
}

/// Resultant with respect to the polynomial variable. For constant
/// inputs: res(c, g) = c^deg(g), res(f, c) = c^deg(f), res(c, d) = 1.
template <class R>
R resultant(const Polynomial<R>& f, const Polynomial<R>& g) {
    long m = f.degree(), n = g.degree();
    if (m < 0 || n < 0) return R(0);
    if (m == 0 && n == 0) return R(1);
    if (m == 0) {
        R r(1);
        for (long i = 0; i < n; ++i) r = r * f.coeff(0);
        return r;
    }
    if (n == 0) {
        R r(1);
        for (long i = 0; i < m; ++i) r = r * g.coeff(0);
        return r;
    }
    return bareiss_determinant(sylvester_matrix(f, g));
}

/// First subresultant of f, g as a degree <= 1 polynomial in the main
/// variable; both inputs must have degree >= 2. Used to express the
/// second coordinate of a near-root in terms of the first.
template <class R>
Polynomial<R> first_subresultant(const Polynomial<R>& f, const Polynomial<R>& g) {
    long m = f.degree(), n = g.degree();
    if (m < 2 || n < 2) throw Error("first_subresultant needs both degrees >= 2");
    std::size_t rows = static_cast<std::size_t>(m + n - 2);
    std::size_t cols = static_cast<std::size_t>(m + n - 1);
    std::vector<std::vector<R>> full(rows, std::vector<R>(cols, R(0)));
    // Row r < n-1 holds y^(n-2-r) * f; row n-1+r holds y^(m-2-r) * g.
    // Column j holds the coefficient of y^(m+n-2-j).
    for (long r = 0; r < n - 1; ++r)
        for (long j = 0; j <= m; ++j)
            full[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + j)] =
                f.coeff(static_cast<std::size_t>(m - j));
    for (long r = 0; r < m - 1; ++r)
        for (long j = 0; j <= n; ++j)
            full[static_cast<std::size_t>(n - 1 + r)][static_cast<std::size_t>(r + j)] =
                g.coeff(static_cast<std::size_t>(n - j));
    auto minor_with_last = [&](std::size_t special) {
        std::vector<std::vector<R>> sq(rows, std::vector<R>(rows, R(0)));
        for (std::size_t i = 0; i < rows; ++i) {
            for (std::size_t j = 0; j + 1 < rows; ++j) sq[i][j] = full[i][j];
            sq[i][rows - 1] = full[i][special];
        }
        return bareiss_determinant(std::move(sq));
    };
    R s1 = minor_with_last(cols - 2);
    R s0 = minor_with_last(cols - 1);
    return Polynomial<R>(std::vector<R>{std::move(s0), std::move(s1)});
}

/// Content of a polynomial whose coefficients are themselves
/// polynomials over a field: the monic gcd of the coefficients.
template <class F>
Polynomial<F> content(const Polynomial<Polynomial<F>>& f) {
    Polynomial<F> c;
    for (const auto& a : f.coeffs()) c = gcd(c, a);
    return c;
}

template <class F>
Polynomial<Polynomial<F>> primitive_part(const Polynomial<Polynomial<F>>& f) {
    if (is_zero(f)) return f;
    Polynomial<F> c = content(f);
    return exact_div(f, Polynomial<Polynomial<F>>(c));
}

/// Decides whether f has a repeated factor of positive outer degree
/// over the fraction field of the coefficient ring. Decided by
/// evaluating the inner variable at integer points: the outer
/// discriminant, the leading coefficient, and the content vanish at
/// finitely many inner values, bounded by their degrees, so one
/// coprime degree-preserving evaluation certifies square-freeness and
/// scanning past the combined bound refutes it. This sidesteps a
/// pseudo-remainder sequence, whose coefficient swell is prohibitive
/// already at moderate bidegrees.
template <class F>
bool squarefree_in_outer(const Polynomial<Polynomial<F>>& f) {
    if (f.degree() <= 0) return !is_zero(f);
    long inner = 1;
    for (const auto& c : f.coeffs()) inner = std::max(inner, c.degree());
    long trials = (2 * f.degree() + 1) * inner + 2;
    for (long r = 1; r <= trials; ++r) {
        F at(static_cast<int>(r));
        std::vector<F> cs;
        cs.reserve(f.coeffs().size());
        for (const auto& c : f.coeffs()) cs.push_back(c.eval(at));
        Polynomial<F> s(std::move(cs));
        if (s.degree() != f.degree()) continue;
        if (gcd(s, s.derivative()).degree() == 0) return true;
    }
    return false;
}

/// Gcd in F[inner][outer] by the primitive polynomial remainder
/// sequence. The result is primitive with monic content convention.
template <class F>
Polynomial<Polynomial<F>> primitive_gcd(const Polynomial<Polynomial<F>>& f,
                                        const Polynomial<Polynomial<F>>& g) {
    using Outer = Polynomial<Polynomial<F>>;
    if (is_zero(f)) return is_zero(g) ? g : primitive_part(g);
    if (is_zero(g)) return primitive_part(f);
    Polynomial<F> cont = gcd(content(f), content(g));
    Outer a = primitive_part(f), b = primitive_part(g);
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!is_zero(b)) {
        Outer r = pseudo_rem(a, b);
        a = std::move(b);
        b = is_zero(r) ? r : primitive_part(r);
    }
    if (a.degree() == 0) return Outer(cont);
    Outer result = Outer(cont) * a;
    // Normalize: make the leading inner coefficient monic.
    Polynomial<F> lead = result.lc();
    F inv = field_div(F(1), lead.lc());
    return Outer(Polynomial<F>(inv)) * result;
}

template <class R, class CoeffPrinter>
std::string poly_to_string(const Polynomial<R>& p, const std::string& var, CoeffPrinter&& print) {
    if (is_zero(p)) return "0";
    std::string out;
    for (long k = p.degree(); k >= 0; --k) {
        R c = p.coeff(static_cast<std::size_t>(k));
        if (is_zero(c)) continue;
        std::string cs = print(c);
        bool neg = cs.size() > 1 && cs[0] == '-' && cs.find_first_of("+-", 1) == std::string::npos &&
                   cs.find(' ') == std::string::npos;
        std::string mag = neg ? cs.substr(1) : cs;
        bool composite = mag.find_first_of("+-") != std::string::npos || mag.find(' ') != std::string::npos;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        std::string body;
        if (k == 0) {
            body = composite ? "(" + mag + ")" : mag;
        } else {
            std::string xs = var + (k == 1 ? "" : "^" + std::to_string(k));
            if (mag == "1")
                body = xs;
            else
                body = (composite ? "(" + mag + ")" : mag) + "*" + xs;
        }
        out += body;
    }
    return out;
}

using QPoly = Polynomial<Rational>;

inline std::string poly_to_string(const QPoly& p, const std::string& var = "t") {
    return poly_to_string(p, var, [](const Rational& c) { return to_string(c); });
}

} // namespace valcurve

#endif
