#include "valcurve/field.hpp"

#include <algorithm>
#include <cstdlib>

namespace valcurve {

namespace {

QPoly coords_as_poly(const std::vector<Rational>& c) {
    std::vector<Rational> v = c;
    return QPoly(std::move(v));
}

} // namespace

FieldPtr NumberField::make(Polynomial<Rational> m) {
    if (m.degree() < 1) throw RedundantExtension("minimal polynomial must have degree >= 2");
    if (!(m.lc() == Rational(1))) {
        Rational inv = 1 / m.lc();
        m = inv * m;
    }
    if (!is_squarefree(m))
        throw NotSquareFree("minimal polynomial has a repeated factor: " + poly_to_string(m));
    std::vector<Rational> rr = rational_roots(m);
    if (!rr.empty())
        throw RedundantExtension("minimal polynomial has rational root " +
                                 valcurve::to_string(rr.front()) + ": " + poly_to_string(m));
    return FieldPtr(new NumberField(std::move(m)));
}

FieldElement::FieldElement(FieldPtr field, std::vector<Rational> coords)
    : field_(std::move(field)), c_(std::move(coords)) {
    reduce();
}

void FieldElement::reduce() {
    if (!field_) {
        if (c_.empty()) c_.assign(1, Rational(0));
        if (c_.size() > 1) throw Error("rational element with extension coordinates");
        return;
    }
    std::size_t d = static_cast<std::size_t>(field_->degree());
    if (c_.size() > d) {
        QPoly rem = divmod(coords_as_poly(c_), field_->minpoly()).second;
        c_.assign(d, Rational(0));
        for (long k = 0; k <= rem.degree(); ++k) c_[static_cast<std::size_t>(k)] = rem.coeff(static_cast<std::size_t>(k));
    } else {
        c_.resize(d, Rational(0));
    }
}

FieldElement FieldElement::generator(const FieldPtr& field) {
    if (!field) throw Error("generator of the rational field requested");
    std::vector<Rational> c(static_cast<std::size_t>(field->degree()), Rational(0));
    c[1] = 1;
    return FieldElement(field, std::move(c));
}

bool FieldElement::is_rational() const {
    for (std::size_t k = 1; k < c_.size(); ++k)
        if (sgn(c_[k]) != 0) return false;
    return true;
}

Rational FieldElement::as_rational() const {
    if (!is_rational()) throw Error("element does not lie in Q: " + to_string());
    return c_[0];
}

FieldElement FieldElement::promoted(const FieldPtr& field) const {
    if (same_field(field_, field)) {
        FieldElement r = *this;
        r.field_ = field;
        return r;
    }
    if (!field_) {
        std::vector<Rational> c(static_cast<std::size_t>(field->degree()), Rational(0));
        c[0] = c_[0];
        return FieldElement(field, std::move(c));
    }
    throw Error("cannot move element between distinct extensions");
}

namespace {

std::pair<FieldElement, FieldElement> aligned(const FieldElement& a, const FieldElement& b) {
    if (same_field(a.field(), b.field())) return {a, b};
    if (!a.field()) return {a.promoted(b.field()), b};
    if (!b.field()) return {a, b.promoted(a.field())};
    throw Error("arithmetic between elements of distinct extensions");
}

} // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    auto [x, y] = aligned(a, b);
    std::vector<Rational> c(x.coords());
    for (std::size_t k = 0; k < c.size(); ++k) c[k] += y.coords()[k];
    return FieldElement(x.field(), std::move(c));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a + (-b); }

FieldElement FieldElement::operator-() const {
    FieldElement r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    auto [x, y] = aligned(a, b);
    if (!x.field()) return FieldElement(x.coords()[0] * y.coords()[0]);
    QPoly prod = coords_as_poly(x.coords()) * coords_as_poly(y.coords());
    std::vector<Rational> c;
    c.reserve(static_cast<std::size_t>(prod.degree() + 1));
    for (long k = 0; k <= prod.degree(); ++k) c.push_back(prod.coeff(static_cast<std::size_t>(k)));
    return FieldElement(x.field(), std::move(c));
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    if (is_zero(a) && is_zero(b)) return true;
    if (!same_field(a.field(), b.field())) {
        if (!a.field() || !b.field()) {
            auto [x, y] = aligned(a, b);
            return x == y;
        }
        return false;
    }
    return a.coords() == b.coords();
}

FieldElement FieldElement::inverse() const {
    if (!field_) {
        if (sgn(c_[0]) == 0) throw NonInvertible("inverse of zero", "");
        return FieldElement(1 / c_[0]);
    }
    if (valcurve::is_zero(*this)) throw NonInvertible("inverse of zero", "");
    auto [d, u, v] = extended_gcd(coords_as_poly(c_), field_->minpoly());
    (void)v;
    if (d.degree() == 0) {
        std::vector<Rational> c;
        c.reserve(static_cast<std::size_t>(u.degree() + 1));
        for (long k = 0; k <= u.degree(); ++k) c.push_back(u.coeff(static_cast<std::size_t>(k)));
        return FieldElement(field_, std::move(c));
    }
    throw NonInvertibleDetail("working minimal polynomial is reducible; found factor " + poly_to_string(d),
                              d);
}

std::string FieldElement::to_string() const {
    QPoly p = coords_as_poly(c_);
    if (valcurve::is_zero(p)) return "0";
    std::string s = poly_to_string(p);
    return s;
}

int FieldElement::compare(const FieldElement& a, const FieldElement& b) {
    std::size_t n = std::max(a.c_.size(), b.c_.size());
    for (std::size_t k = 0; k < n; ++k) {
        Rational x = a.coord(k), y = b.coord(k);
        int c = cmp(x, y);
        if (c != 0) return c;
    }
    return 0;
}

// ---------------------------------------------------------------------
// Rational root extraction by exact real-root isolation.

namespace {

int sign_at(const QPoly& p, const Rational& x) { return sgn(p.eval(x)); }

std::vector<QPoly> sturm_sequence(const QPoly& f) {
    std::vector<QPoly> seq;
    seq.push_back(f);
    seq.push_back(f.derivative());
    while (!is_zero(seq.back())) {
        const QPoly& a = seq[seq.size() - 2];
        const QPoly& b = seq.back();
        QPoly r = divmod(a, b).second;
        seq.push_back(-r);
    }
    seq.pop_back();
    return seq;
}

int sign_variations(const std::vector<QPoly>& seq, const Rational& x) {
    int var = 0, last = 0;
    for (const auto& p : seq) {
        int s = sign_at(p, x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++var;
        last = s;
    }
    return var;
}

/// Integer roots of a monic squarefree integer polynomial, found by
/// Sturm bisection. Rational roots of a monic integer polynomial are
/// integers, so every midpoint hit is collected directly.
void integer_roots_monic(QPoly m, std::vector<Rational>& out) {
restart:
    if (m.degree() < 1) return;
    if (m.degree() == 1) {
        Rational r = -m.coeff(0);
        if (r.get_den() == 1) out.push_back(r);
        return;
    }
    Rational bound(1);
    for (long k = 0; k < m.degree(); ++k) {
        Rational a = abs(m.coeff(static_cast<std::size_t>(k)));
        if (a > bound) bound = a;
    }
    bound += 2;
    std::vector<QPoly> seq = sturm_sequence(m);
    std::vector<std::pair<Rational, Rational>> work{{-bound, bound}};
    Rational half(1, 2);
    while (!work.empty()) {
        auto [lo, hi] = work.back();
        work.pop_back();
        int count = sign_variations(seq, lo) - sign_variations(seq, hi);
        if (count <= 0) continue;
        if (count == 1 && hi - lo <= half) {
            Rational k(floor_rational(hi));
            if (k > lo && sgn(m.eval(k)) == 0) out.push_back(k);
            continue;
        }
        Rational mid = (lo + hi) / 2;
        if (sgn(m.eval(mid)) == 0) {
            // A dyadic root of a monic integer polynomial is an integer.
            out.push_back(mid);
            m = exact_div(m, QPoly(std::vector<Rational>{-mid, Rational(1)}));
            goto restart;
        }
        work.emplace_back(lo, mid);
        work.emplace_back(mid, hi);
    }
}

} // namespace

std::vector<Rational> rational_roots(const QPoly& f) {
    if (is_zero(f)) throw Error("rational_roots of the zero polynomial");
    std::vector<Rational> out;
    if (f.degree() < 1) return out;
    QPoly s = squarefree_part(f);
    // Integer model: clear denominators, strip content.
    Integer den(1);
    for (long k = 0; k <= s.degree(); ++k) {
        Integer d = s.coeff(static_cast<std::size_t>(k)).get_den();
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
    }
    std::vector<Integer> ic(static_cast<std::size_t>(s.degree() + 1));
    Integer cont(0);
    for (long k = 0; k <= s.degree(); ++k) {
        Rational c = s.coeff(static_cast<std::size_t>(k)) * Rational(den);
        ic[static_cast<std::size_t>(k)] = c.get_num();
        mpz_gcd(cont.get_mpz_t(), cont.get_mpz_t(), ic[static_cast<std::size_t>(k)].get_mpz_t());
    }
    for (auto& c : ic) c /= cont;
    Integer a = ic.back();
    long n = s.degree();
    // Monicize: roots of M(y) are a * (roots of the integer model).
    std::vector<Rational> mc(static_cast<std::size_t>(n + 1));
    mc[static_cast<std::size_t>(n)] = 1;
    Integer apow(1);
    for (long k = n - 1; k >= 0; --k) {
        mc[static_cast<std::size_t>(k)] = Rational(ic[static_cast<std::size_t>(k)] * apow);
        apow *= a;
    }
    std::vector<Rational> yroots;
    integer_roots_monic(QPoly(std::move(mc)), yroots);
    out.reserve(yroots.size());
    for (const auto& y : yroots) {
        Rational r = y / Rational(a);
        r.canonicalize();
        out.push_back(r);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------
// Roots inside the coefficient field.

std::optional<QPoly> try_rational_poly(const FPoly& f) {
    std::vector<Rational> c;
    c.reserve(static_cast<std::size_t>(f.degree() + 1));
    for (long k = 0; k <= f.degree(); ++k) {
        const FieldElement e = f.coeff(static_cast<std::size_t>(k));
        if (!e.is_rational()) return std::nullopt;
        c.push_back(e.coord(0));
    }
    return QPoly(std::move(c));
}

namespace {

int root_multiplicity(const FPoly& f, const FieldElement& alpha) {
    FPoly lin(std::vector<FieldElement>{-alpha, FieldElement(1)});
    FPoly w = f;
    int m = 0;
    while (w.degree() >= 1) {
        auto [q, r] = divmod(w, lin);
        if (!is_zero(r)) break;
        w = q;
        ++m;
    }
    return m;
}

using BiQ = Polynomial<QPoly>; // outer variable b, inner variable a

struct Pair2 {
    BiQ p0, p1; // p0 + p1 * t
};

Pair2 mul_pair(const Pair2& x, const Pair2& y, const Rational& m0, const Rational& m1) {
    BiQ cross = x.p1 * y.p1;
    Pair2 r;
    r.p0 = x.p0 * y.p0 - BiQ(QPoly(m0)) * cross;
    r.p1 = x.p0 * y.p1 + x.p1 * y.p0 - BiQ(QPoly(m1)) * cross;
    return r;
}

/// Roots a + b*t with b != 0 over a degree-2 extension, by eliminating
/// b between the two t-coordinates of f(a + b*t).
std::vector<FieldElement> quadratic_field_roots(const FPoly& f, const FieldPtr& field) {
    Rational m0 = field->minpoly().coeff(0);
    Rational m1 = field->minpoly().coeff(1);
    Pair2 x{BiQ(QPoly::variable()), BiQ::variable()};
    Pair2 acc{BiQ(), BiQ()};
    for (long k = f.degree(); k >= 0; --k) {
        acc = mul_pair(acc, x, m0, m1);
        FieldElement c = f.coeff(static_cast<std::size_t>(k)).promoted(field);
        acc.p0 = acc.p0 + BiQ(QPoly(c.coord(0)));
        acc.p1 = acc.p1 + BiQ(QPoly(c.coord(1)));
    }
    std::vector<FieldElement> found;
    if (is_zero(acc.p0) || is_zero(acc.p1)) return found;
    QPoly elim = resultant(acc.p0, acc.p1);
    if (is_zero(elim)) return found;
    if (elim.degree() < 1) return found;
    for (const Rational& a0 : rational_roots(elim)) {
        // Fix a = a0; the remaining univariate conditions in b must agree.
        std::vector<Rational> c0, c1;
        for (long k = 0; k <= acc.p0.degree(); ++k) c0.push_back(acc.p0.coeff(static_cast<std::size_t>(k)).eval(a0));
        for (long k = 0; k <= acc.p1.degree(); ++k) c1.push_back(acc.p1.coeff(static_cast<std::size_t>(k)).eval(a0));
        QPoly u0(std::move(c0)), u1(std::move(c1));
        if (is_zero(u0) && is_zero(u1)) continue;
        QPoly g = is_zero(u0) ? u1 : (is_zero(u1) ? u0 : gcd(u0, u1));
        if (g.degree() < 1) continue;
        for (const Rational& b0 : rational_roots(g)) {
            if (sgn(b0) == 0) continue;
            FieldElement alpha(field, std::vector<Rational>{a0, b0});
            if (is_zero(f.eval(alpha))) found.push_back(alpha);
        }
    }
    return found;
}

} // namespace

RootsResult roots_in_field(const FPoly& f, const FieldPtr& field) {
    if (is_zero(f)) throw Error("roots_in_field of the zero polynomial");
    RootsResult out;
    std::vector<FieldElement> candidates;
    if (!field) {
        auto q = try_rational_poly(f);
        if (!q) throw Error("polynomial has extension coefficients but no field was given");
        for (const Rational& r : rational_roots(*q)) candidates.emplace_back(r);
        out.complete = true;
    } else {
        // Rational roots: common roots of the coordinate polynomials.
        QPoly g;
        for (std::size_t k = 0; k < static_cast<std::size_t>(field->degree()); ++k) {
            std::vector<Rational> ck;
            for (long i = 0; i <= f.degree(); ++i)
                ck.push_back(f.coeff(static_cast<std::size_t>(i)).promoted(field).coord(k));
            g = gcd(g, QPoly(std::move(ck)));
        }
        if (is_zero(g)) throw Error("roots_in_field of the zero polynomial");
        if (g.degree() >= 1)
            for (const Rational& r : rational_roots(g)) candidates.emplace_back(r);
        if (field->degree() == 2) {
            for (auto& alpha : quadratic_field_roots(f, field)) candidates.push_back(alpha);
            out.complete = true;
        } else {
            out.complete = false;
        }
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const FieldElement& a, const FieldElement& b) { return FieldElement::compare(a, b) < 0; });
    candidates.erase(std::unique(candidates.begin(), candidates.end(),
                                 [](const FieldElement& a, const FieldElement& b) {
                                     return FieldElement::compare(a, b) == 0;
                                 }),
                     candidates.end());
    FPoly rem = f;
    for (const auto& alpha : candidates) {
        if (!is_zero(f.eval(field ? alpha.promoted(field) : alpha))) continue;
        FieldElement a = field ? alpha.promoted(field) : alpha;
        int m = root_multiplicity(f, a);
        if (m == 0) continue;
        out.roots.push_back({a, m});
        FPoly lin(std::vector<FieldElement>{-a, FieldElement(1)});
        for (int i = 0; i < m; ++i) rem = divmod(rem, lin).first;
    }
    out.residual = rem.degree() >= 1 ? squarefree_part(rem) : FPoly(1);
    if (out.residual.degree() < 1) out.complete = true;
    return out;
}

// ---------------------------------------------------------------------
// Linear algebra over the field.

std::optional<std::vector<FieldElement>> solve_linear(std::vector<std::vector<FieldElement>> m,
                                                      std::vector<FieldElement> rhs) {
    std::size_t rows = m.size();
    std::size_t cols = rows == 0 ? 0 : m[0].size();
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && is_zero(m[p][c])) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        std::swap(rhs[p], rhs[r]);
        FieldElement inv = m[r][c].inverse();
        for (std::size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
        rhs[r] = rhs[r] * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || is_zero(m[i][c])) continue;
            FieldElement factor = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - factor * m[r][j];
            rhs[i] = rhs[i] - factor * rhs[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (!is_zero(rhs[i])) return std::nullopt;
    std::vector<FieldElement> x(cols, FieldElement(0));
    for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = rhs[i];
    return x;
}

std::vector<std::vector<FieldElement>> nullspace(std::vector<std::vector<FieldElement>> m,
                                                 std::size_t cols) {
    std::size_t rows = m.size();
    for (auto& row : m) row.resize(cols, FieldElement(0));
    std::vector<long> pivot_of_col(cols, -1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && is_zero(m[p][c])) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        FieldElement inv = m[r][c].inverse();
        for (std::size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || is_zero(m[i][c])) continue;
            FieldElement factor = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - factor * m[r][j];
        }
        pivot_of_col[c] = static_cast<long>(r);
        ++r;
    }
    std::vector<std::vector<FieldElement>> basis;
    for (std::size_t c = 0; c < cols; ++c) {
        if (pivot_of_col[c] >= 0) continue;
        std::vector<FieldElement> v(cols, FieldElement(0));
        v[c] = FieldElement(1);
        for (std::size_t j = 0; j < cols; ++j) {
            if (pivot_of_col[j] < 0) continue;
            v[j] = -m[static_cast<std::size_t>(pivot_of_col[j])][c];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace valcurve
