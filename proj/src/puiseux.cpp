#include "valcurve/puiseux.hpp"

#include <algorithm>
#include <map>

namespace valcurve {

PuiseuxSeries PuiseuxSeries::constant(FieldElement c) {
    PuiseuxSeries s;
    if (!valcurve::is_zero(c)) s.t_.push_back({Rational(0), std::move(c)});
    return s;
}

PuiseuxSeries PuiseuxSeries::epsilon() { return monomial(FieldElement(1), Rational(1)); }

PuiseuxSeries PuiseuxSeries::monomial(FieldElement c, Rational exp) {
    PuiseuxSeries s;
    exp.canonicalize();  // tolerate unreduced caller-built fractions
    if (!valcurve::is_zero(c)) s.t_.push_back({std::move(exp), std::move(c)});
    return s;
}

PuiseuxSeries PuiseuxSeries::from_poly(const FPoly& p) {
    PuiseuxSeries s;
    for (long k = 0; k <= p.degree(); ++k) {
        FieldElement c = p.coeff(static_cast<std::size_t>(k));
        if (!valcurve::is_zero(c)) s.t_.push_back({Rational(k), std::move(c)});
    }
    return s;
}

void PuiseuxSeries::drop_at_bound() {
    if (!trunc_) return;
    while (!t_.empty() && t_.back().exp >= *trunc_) t_.pop_back();
}

Ternary PuiseuxSeries::zero_test() const {
    if (!t_.empty()) return Ternary::False;
    return trunc_ ? Ternary::Unknown : Ternary::True;
}

Valuation PuiseuxSeries::valuation() const {
    if (!t_.empty()) return Valuation(t_.front().exp);
    if (!trunc_) return Valuation::infinity();
    throw IndeterminateValuation("series is zero up to its truncation O(eps^(" +
                                 valcurve::to_string(*trunc_) + "))");
}

Valuation PuiseuxSeries::valuation_lower_bound() const {
    if (!t_.empty()) return Valuation(t_.front().exp);
    if (!trunc_) return Valuation::infinity();
    return Valuation(*trunc_);
}

FieldElement PuiseuxSeries::residue() const {
    if (t_.empty()) {
        if (!trunc_ || sgn(*trunc_) > 0) return FieldElement(0);
        throw IndeterminateValuation("residue undecidable at truncation O(eps^(" +
                                     valcurve::to_string(*trunc_) + "))");
    }
    const Rational& e0 = t_.front().exp;
    if (sgn(e0) < 0)
        throw NotInValuationRing("series has negative valuation " + valcurve::to_string(e0));
    if (sgn(e0) == 0) return t_.front().coeff;
    return FieldElement(0);
}

bool PuiseuxSeries::in_valuation_ring() const {
    if (!t_.empty()) return sgn(t_.front().exp) >= 0;
    if (!trunc_) return true;
    if (sgn(*trunc_) >= 0) return true;
    throw IndeterminateValuation("membership in the valuation ring undecidable at O(eps^(" +
                                 valcurve::to_string(*trunc_) + "))");
}

bool PuiseuxSeries::in_maximal_ideal() const {
    if (!t_.empty()) return sgn(t_.front().exp) > 0;
    if (!trunc_) return true;
    if (sgn(*trunc_) > 0) return true;
    throw IndeterminateValuation("membership in the maximal ideal undecidable at O(eps^(" +
                                 valcurve::to_string(*trunc_) + "))");
}

PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    PuiseuxSeries r;
    if (a.trunc_ && b.trunc_)
        r.trunc_ = std::min(*a.trunc_, *b.trunc_);
    else if (a.trunc_)
        r.trunc_ = a.trunc_;
    else if (b.trunc_)
        r.trunc_ = b.trunc_;
    std::size_t i = 0, j = 0;
    while (i < a.t_.size() || j < b.t_.size()) {
        bool ta = i < a.t_.size();
        bool tb = j < b.t_.size();
        if (ta && tb && a.t_[i].exp == b.t_[j].exp) {
            FieldElement c = a.t_[i].coeff + b.t_[j].coeff;
            if (!is_zero(c)) r.t_.push_back({a.t_[i].exp, std::move(c)});
            ++i, ++j;
        } else if (tb && (!ta || b.t_[j].exp < a.t_[i].exp)) {
            r.t_.push_back(b.t_[j]);
            ++j;
        } else {
            r.t_.push_back(a.t_[i]);
            ++i;
        }
    }
    r.drop_at_bound();
    return r;
}

PuiseuxSeries PuiseuxSeries::operator-() const {
    PuiseuxSeries r = *this;
    for (auto& t : r.t_) t.coeff = -t.coeff;
    return r;
}

PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b) { return a + (-b); }

PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    // An exact zero annihilates even a truncated partner.
    if (a.zero_test() == Ternary::True || b.zero_test() == Ternary::True) return PuiseuxSeries();
    PuiseuxSeries r;
    std::optional<Rational> bound;
    auto tighten = [&bound](const Rational& candidate) {
        if (!bound || candidate < *bound) bound = candidate;
    };
    if (a.trunc_) {
        Valuation vb = b.valuation_lower_bound();
        if (!vb.is_infinite()) tighten(*a.trunc_ + vb.finite());
    }
    if (b.trunc_) {
        Valuation va = a.valuation_lower_bound();
        if (!va.is_infinite()) tighten(*b.trunc_ + va.finite());
    }
    r.trunc_ = bound;
    std::map<Rational, FieldElement> acc;
    for (const auto& ta : a.t_)
        for (const auto& tb : b.t_) {
            Rational e = ta.exp + tb.exp;
            if (bound && e >= *bound) continue;
            auto it = acc.find(e);
            if (it == acc.end())
                acc.emplace(std::move(e), ta.coeff * tb.coeff);
            else
                it->second = it->second + ta.coeff * tb.coeff;
        }
    for (auto& [e, c] : acc)
        if (!is_zero(c)) r.t_.push_back({e, std::move(c)});
    return r;
}

bool operator==(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    if (a.trunc_.has_value() != b.trunc_.has_value()) return false;
    if (a.trunc_ && !(*a.trunc_ == *b.trunc_)) return false;
    if (a.t_.size() != b.t_.size()) return false;
    for (std::size_t k = 0; k < a.t_.size(); ++k)
        if (!(a.t_[k].exp == b.t_[k].exp && a.t_[k].coeff == b.t_[k].coeff)) return false;
    return true;
}

PuiseuxSeries PuiseuxSeries::inverse(std::optional<Rational> target) const {
    Ternary z = zero_test();
    if (z == Ternary::True) throw NonInvertible("inverse of the zero series", "");
    if (z == Ternary::Unknown)
        throw IndeterminateValuation("inverse of a series with undecided valuation");
    const Rational mu = t_.front().exp;
    Rational bound;
    if (target)
        bound = *target;
    else if (trunc_)
        bound = *trunc_ - mu - mu;
    else
        bound = -mu + Rational(kDefaultPrecision);
    PuiseuxSeries lead_inv = monomial(t_.front().coeff.inverse(), -mu);
    PuiseuxSeries y;
    PuiseuxSeries r(1);  // 1 - x*y, exact while x is exact
    while (true) {
        if (r.t_.empty()) {
            // Residual certified zero to its bound; inherit what is known.
            if (!r.trunc_) return y;  // division terminated, inverse is exact
            break;
        }
        if (r.t_.front().exp - mu >= bound) break;
        PuiseuxSeries step = monomial(r.t_.front().coeff, r.t_.front().exp) * lead_inv;
        y = y + step;
        r = r - *this * step;
    }
    y.trunc_ = bound;
    if (r.trunc_) {
        Rational alt = *r.trunc_ - mu;
        if (alt < *y.trunc_) y.trunc_ = alt;
    }
    y.drop_at_bound();
    return y;
}

PuiseuxSeries PuiseuxSeries::pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    PuiseuxSeries r(1);
    PuiseuxSeries base = *this;
    while (k > 0) {
        if (k & 1) r = r * base;
        base = k > 1 ? base * base : base;
        k >>= 1;
    }
    return r;
}

PuiseuxSeries PuiseuxSeries::truncated(const Rational& at) const {
    PuiseuxSeries r = *this;
    Rational bound = at;
    bound.canonicalize();  // tolerate unreduced caller-built fractions
    if (!r.trunc_ || bound < *r.trunc_) r.trunc_ = bound;
    r.drop_at_bound();
    return r;
}

Ternary PuiseuxSeries::eq_test(const PuiseuxSeries& other) const {
    return (*this - other).zero_test();
}

Integer PuiseuxSeries::ramification() const {
    Integer r(1);
    for (const auto& t : t_) {
        Integer d = t.exp.get_den();
        mpz_lcm(r.get_mpz_t(), r.get_mpz_t(), d.get_mpz_t());
    }
    return r;
}

namespace {

std::string exp_string(const Rational& e) {
    if (e.get_den() == 1) {
        if (e == 1) return "eps";
        return "eps^" + to_string(e);
    }
    return "eps^(" + to_string(e) + ")";
}

} // namespace

std::string PuiseuxSeries::to_string() const {
    std::string out;
    for (const auto& t : t_) {
        std::string cs = t.coeff.to_string();
        bool neg = cs.size() > 1 && cs[0] == '-' && cs.find_first_of("+-", 1) == std::string::npos &&
                   cs.find(' ') == std::string::npos;
        std::string mag = neg ? cs.substr(1) : cs;
        bool composite = mag.find_first_of("+-") != std::string::npos || mag.find(' ') != std::string::npos;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        if (sgn(t.exp) == 0) {
            out += composite ? "(" + mag + ")" : mag;
        } else {
            std::string es = exp_string(t.exp);
            if (mag == "1")
                out += es;
            else
                out += (composite ? "(" + mag + ")" : mag) + "*" + es;
        }
    }
    if (trunc_) {
        std::string o = "O(eps^(" + valcurve::to_string(*trunc_) + "))";
        out += out.empty() ? o : " + " + o;
    }
    if (out.empty()) out = "0";
    return out;
}

int PuiseuxSeries::compare(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    std::size_t n = std::min(a.t_.size(), b.t_.size());
    for (std::size_t k = 0; k < n; ++k) {
        int c = cmp(a.t_[k].exp, b.t_[k].exp);
        if (c != 0) return c;
        c = FieldElement::compare(a.t_[k].coeff, b.t_[k].coeff);
        if (c != 0) return c;
    }
    if (a.t_.size() != b.t_.size()) return a.t_.size() < b.t_.size() ? -1 : 1;
    if (a.trunc_.has_value() != b.trunc_.has_value()) return a.trunc_.has_value() ? -1 : 1;
    if (a.trunc_) return cmp(*a.trunc_, *b.trunc_);
    return 0;
}

SPoly lift_series_poly(const Polynomial<FPoly>& p) {
    std::vector<PuiseuxSeries> c;
    c.reserve(static_cast<std::size_t>(p.degree() + 1));
    for (long k = 0; k <= p.degree(); ++k)
        c.push_back(PuiseuxSeries::from_poly(p.coeff(static_cast<std::size_t>(k))));
    return SPoly(std::move(c));
}

std::string poly_to_string(const SPoly& p, const std::string& var) {
    return poly_to_string(p, var, [](const PuiseuxSeries& c) { return c.to_string(); });
}

} // namespace valcurve
