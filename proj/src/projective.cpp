#include "valcurve/projective.hpp"

#include <algorithm>
#include <sstream>

#include "valcurve/errors.hpp"

namespace valcurve {

namespace {

// Shared term lifting for the two eval overloads.
FieldElement lift_coeff(const FieldElement& c, const FieldElement*) { return c; }
PuiseuxSeries lift_coeff(const FieldElement& c, const PuiseuxSeries*) {
    return PuiseuxSeries::constant(c);
}

template <class T>
T eval_impl(const std::vector<MultiPoly::Mono>& terms, int nvars, const std::vector<T>& v) {
    if (static_cast<int>(v.size()) != nvars)
        throw Error("evaluation point has wrong number of coordinates");
    T acc(0);
    for (const auto& m : terms) {
        T term = lift_coeff(m.c, static_cast<const T*>(nullptr));
        for (int k = 0; k < nvars; ++k)
            for (int r = 0; r < m.exps[k]; ++r) term = term * v[k];
        acc = acc + term;
    }
    return acc;
}

bool exps_less(const std::vector<int>& a, const std::vector<int>& b) {
    // descending lexicographic term order
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

} // namespace

ProjPointL::ProjPointL(std::vector<FieldElement> coords) : x_(std::move(coords)) {
    if (x_.empty()) throw Error("projective point needs at least one coordinate");
    std::size_t pivot = x_.size();
    for (std::size_t i = 0; i < x_.size(); ++i)
        if (!is_zero(x_[i])) { pivot = i; break; }
    if (pivot == x_.size())
        throw DegenerateCoordinates("all projective coordinates are zero");
    FieldElement inv = x_[pivot].inverse();
    for (auto& c : x_) c = c * inv;
    x_[pivot] = FieldElement(1);
}

int ProjPointL::compare(const ProjPointL& a, const ProjPointL& b) {
    if (a.x_.size() != b.x_.size()) return a.x_.size() < b.x_.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.x_.size(); ++i)
        if (int c = FieldElement::compare(a.x_[i], b.x_[i]); c != 0) return c;
    return 0;
}

std::string ProjPointL::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < x_.size(); ++i) {
        if (i) os << " : ";
        os << x_[i].to_string();
    }
    os << "]";
    return os.str();
}

ProjPointK::ProjPointK(std::vector<PuiseuxSeries> coords) : x_(std::move(coords)) {
    if (x_.empty()) throw Error("projective point needs at least one coordinate");
    bool any_nonzero = false, any_unknown = false;
    for (const auto& c : x_) {
        Ternary z = c.zero_test();
        if (z == Ternary::False) any_nonzero = true;
        if (z == Ternary::Unknown) any_unknown = true;
    }
    if (!any_nonzero) {
        if (any_unknown)
            throw IndeterminateValuation("no coordinate is certified nonzero");
        throw DegenerateCoordinates("all projective coordinates are zero");
    }
}

Ternary ProjPointK::eq_test(const ProjPointK& other) const {
    if (x_.size() != other.x_.size()) return Ternary::False;
    bool unknown = false;
    for (std::size_t i = 0; i < x_.size(); ++i)
        for (std::size_t j = i + 1; j < x_.size(); ++j) {
            PuiseuxSeries cross = x_[i] * other.x_[j] - x_[j] * other.x_[i];
            switch (cross.zero_test()) {
                case Ternary::False: return Ternary::False;
                case Ternary::Unknown: unknown = true; break;
                case Ternary::True: break;
            }
        }
    return unknown ? Ternary::Unknown : Ternary::True;
}

Rational ProjPointK::min_valuation() const {
    bool have = false;
    Rational mu;
    for (const auto& c : x_) {
        if (c.zero_test() != Ternary::False) continue;
        Rational v = c.terms().front().exp;
        if (!have || v < mu) { mu = v; have = true; }
    }
    // the constructor guarantees a certified nonzero coordinate
    for (const auto& c : x_) {
        if (c.zero_test() != Ternary::Unknown) continue;
        Valuation lb = c.valuation_lower_bound();
        if (!lb.is_infinite() && lb.finite() < mu)
            throw IndeterminateValuation(
                "a truncated coordinate may have order below the visible minimum");
    }
    return mu;
}

ProjPointK ProjPointK::canonical() const {
    Rational mu = min_valuation();
    std::size_t pivot = x_.size();
    for (std::size_t i = 0; i < x_.size(); ++i)
        if (x_[i].zero_test() == Ternary::False && x_[i].terms().front().exp == mu) {
            pivot = i;
            break;
        }
    PuiseuxSeries inv = x_[pivot].inverse();
    std::vector<PuiseuxSeries> out;
    out.reserve(x_.size());
    for (std::size_t i = 0; i < x_.size(); ++i)
        out.push_back(i == pivot ? PuiseuxSeries(1) : x_[i] * inv);
    return ProjPointK(std::move(out));
}

ProjPointL ProjPointK::specialize() const {
    Rational mu = min_valuation();
    PuiseuxSeries scale = PuiseuxSeries::monomial(FieldElement(1), -mu);
    std::vector<FieldElement> res;
    res.reserve(x_.size());
    for (const auto& c : x_) res.push_back((c * scale).residue());
    return ProjPointL(std::move(res));
}

std::string ProjPointK::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < x_.size(); ++i) {
        if (i) os << " : ";
        os << x_[i].to_string();
    }
    os << "]";
    return os.str();
}

ProjPointL embed(const ProjPointL& p) {
    std::vector<FieldElement> c = p.coords();
    c.push_back(FieldElement(0));
    return ProjPointL(std::move(c));
}

ProjPointK embed(const ProjPointK& p) {
    std::vector<PuiseuxSeries> c = p.coords();
    c.push_back(PuiseuxSeries());
    return ProjPointK(std::move(c));
}

ProjPointL segre(const ProjPointL& a, const ProjPointL& b) {
    std::vector<FieldElement> out;
    out.reserve(a.coords().size() * b.coords().size());
    for (const auto& x : a.coords())
        for (const auto& y : b.coords()) out.push_back(x * y);
    return ProjPointL(std::move(out));
}

ProjPointK segre(const ProjPointK& a, const ProjPointK& b) {
    std::vector<PuiseuxSeries> out;
    out.reserve(a.coords().size() * b.coords().size());
    for (const auto& x : a.coords())
        for (const auto& y : b.coords()) out.push_back(x * y);
    return ProjPointK(std::move(out));
}

MultiPoly MultiPoly::variable(int nvars, int k) {
    MultiPoly p(nvars);
    std::vector<int> e(nvars, 0);
    e[k] = 1;
    p.add_term(std::move(e), FieldElement(1));
    return p;
}

MultiPoly MultiPoly::constant(int nvars, FieldElement c) {
    MultiPoly p(nvars);
    p.add_term(std::vector<int>(nvars, 0), std::move(c));
    return p;
}

void MultiPoly::add_term(std::vector<int> exps, FieldElement c) {
    if (static_cast<int>(exps.size()) != nvars_)
        throw Error("monomial exponent vector has wrong length");
    t_.push_back(Mono{std::move(exps), std::move(c)});
    sort_merge();
}

void MultiPoly::sort_merge() {
    std::sort(t_.begin(), t_.end(),
              [](const Mono& a, const Mono& b) { return exps_less(a.exps, b.exps); });
    std::vector<Mono> merged;
    for (auto& m : t_) {
        if (!merged.empty() && merged.back().exps == m.exps)
            merged.back().c = merged.back().c + m.c;
        else
            merged.push_back(std::move(m));
    }
    t_.clear();
    for (auto& m : merged)
        if (!valcurve::is_zero(m.c)) t_.push_back(std::move(m));
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars_ != b.nvars_) throw Error("variable count mismatch");
    MultiPoly r(a.nvars_);
    r.t_ = a.t_;
    r.t_.insert(r.t_.end(), b.t_.begin(), b.t_.end());
    r.sort_merge();
    return r;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(nvars_);
    r.t_ = t_;
    for (auto& m : r.t_) m.c = -m.c;
    return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars_ != b.nvars_) throw Error("variable count mismatch");
    MultiPoly r(a.nvars_);
    for (const auto& ma : a.t_)
        for (const auto& mb : b.t_) {
            MultiPoly::Mono m;
            m.exps.resize(a.nvars_);
            for (int k = 0; k < a.nvars_; ++k) m.exps[k] = ma.exps[k] + mb.exps[k];
            m.c = ma.c * mb.c;
            r.t_.push_back(std::move(m));
        }
    r.sort_merge();
    return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars_ != b.nvars_ || a.t_.size() != b.t_.size()) return false;
    for (std::size_t i = 0; i < a.t_.size(); ++i)
        if (a.t_[i].exps != b.t_[i].exps || !(a.t_[i].c == b.t_[i].c)) return false;
    return true;
}

int MultiPoly::block_degree(std::size_t lo, std::size_t hi) const {
    if (t_.empty()) return -1;
    int deg = -1;
    for (const auto& m : t_) {
        int d = 0;
        for (std::size_t k = lo; k < hi && k < m.exps.size(); ++k) d += m.exps[k];
        if (deg == -1)
            deg = d;
        else if (deg != d)
            throw NotHomogeneous("mixed degrees in one coordinate block");
    }
    return deg;
}

FieldElement MultiPoly::eval(const std::vector<FieldElement>& v) const {
    return eval_impl(t_, nvars_, v);
}

PuiseuxSeries MultiPoly::eval(const std::vector<PuiseuxSeries>& v) const {
    return eval_impl(t_, nvars_, v);
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& m : t_) {
        std::string cs = m.c.to_string();
        bool neg = cs.size() > 1 && cs[0] == '-' && cs.find(' ') == std::string::npos;
        if (first) {
            if (neg) { os << "-"; cs = cs.substr(1); }
        } else if (neg) {
            os << " - ";
            cs = cs.substr(1);
        } else {
            os << " + ";
        }
        first = false;
        if (cs.find(' ') != std::string::npos) cs = "(" + cs + ")";
        bool any_var = false;
        std::ostringstream vars;
        for (int k = 0; k < nvars_; ++k) {
            if (m.exps[k] == 0) continue;
            if (any_var) vars << "*";
            any_var = true;
            vars << names[k];
            if (m.exps[k] > 1) vars << "^" << m.exps[k];
        }
        if (!any_var) {
            os << cs;
        } else if (cs == "1") {
            os << vars.str();
        } else {
            os << cs << "*" << vars.str();
        }
    }
    return os.str();
}

VarietyPredicate::VarietyPredicate(int m, int n, std::vector<MultiPoly> equations)
    : m_(m), n_(n), eqs_(std::move(equations)) {
    if (m_ < 1 || n_ < 0) throw Error("invalid product space shape");
    int nvars = m_ * (n_ + 1);
    for (const auto& eq : eqs_) {
        if (eq.nvars() != nvars)
            throw Error("equation variable count does not match the product space");
        for (int b = 0; b < m_; ++b)
            eq.block_degree(static_cast<std::size_t>(b) * (n_ + 1),
                            static_cast<std::size_t>(b + 1) * (n_ + 1));
    }
}

bool VarietyPredicate::holds(const std::vector<ProjPointL>& pts) const {
    if (static_cast<int>(pts.size()) != m_)
        throw Error("wrong number of points for the product space");
    std::vector<FieldElement> v;
    v.reserve(m_ * (n_ + 1));
    for (const auto& p : pts) {
        if (static_cast<int>(p.dim()) != n_)
            throw Error("point dimension does not match the product space");
        for (const auto& c : p.coords()) v.push_back(c);
    }
    for (const auto& eq : eqs_)
        if (!is_zero(eq.eval(v))) return false;
    return true;
}

Ternary VarietyPredicate::holds_k(const std::vector<ProjPointK>& pts) const {
    if (static_cast<int>(pts.size()) != m_)
        throw Error("wrong number of points for the product space");
    std::vector<PuiseuxSeries> v;
    v.reserve(m_ * (n_ + 1));
    for (const auto& p : pts) {
        if (static_cast<int>(p.dim()) != n_)
            throw Error("point dimension does not match the product space");
        for (const auto& c : p.coords()) v.push_back(c);
    }
    bool unknown = false;
    for (const auto& eq : eqs_) {
        switch (eq.eval(v).zero_test()) {
            case Ternary::False: return Ternary::False;
            case Ternary::Unknown: unknown = true; break;
            case Ternary::True: break;
        }
    }
    return unknown ? Ternary::Unknown : Ternary::True;
}

} // namespace valcurve
