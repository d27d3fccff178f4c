#include "valcurve/duality.hpp"

#include "valcurve/errors.hpp"

namespace valcurve {

namespace {

const ProjPointL& point_one_zero() {
    static const ProjPointL p({FieldElement(1), FieldElement(0)});
    return p;
}

const ProjPointL& point_zero_one() {
    static const ProjPointL p({FieldElement(0), FieldElement(1)});
    return p;
}

MultiPoly var3(int nvars, int a, int b, int c) {
    return MultiPoly::variable(nvars, a) * MultiPoly::variable(nvars, b) *
           MultiPoly::variable(nvars, c);
}

} // namespace

ProjPointK gamma(const PuiseuxSeries& k) { return ProjPointK({k, PuiseuxSeries(1)}); }

SpecOracle honest_oracle() {
    return [](const PuiseuxSeries& k) { return gamma(k).specialize(); };
}

bool in_valuation_ring(const SpecOracle& s, const PuiseuxSeries& k) {
    return !(s(k) == point_one_zero());
}

bool in_maximal_ideal(const SpecOracle& s, const PuiseuxSeries& k) {
    return s(k) == point_zero_one();
}

ValCompare value_compare(const SpecOracle& s, const PuiseuxSeries& x, const PuiseuxSeries& y) {
    if (x.zero_test() == Ternary::True) {
        // order of x is infinite: LE exactly when y vanishes too
        return y.zero_test() == Ternary::True ? ValCompare::LE : ValCompare::GT;
    }
    PuiseuxSeries q = y * x.inverse();
    return in_valuation_ring(s, q) ? ValCompare::LE : ValCompare::GT;
}

PuiseuxSeries stretch_exponents(const PuiseuxSeries& k, const Rational& factor) {
    if (factor <= 0) throw Error("exponent rescaling needs a positive factor");
    PuiseuxSeries out;
    for (const auto& t : k.terms())
        out = out + PuiseuxSeries::monomial(t.coeff, t.exp * factor);
    if (!k.is_exact()) out = out.truncated(*k.truncation() * factor);
    return out;
}

std::size_t roundtrip_check(const SpecOracle& s, const std::vector<PuiseuxSeries>& samples) {
    for (const auto& k : samples) {
        Valuation v = k.valuation();
        bool nonneg = v.is_infinite() || !(v.finite() < 0);
        bool pos = v.is_infinite() || v.finite() > 0;

        // ring data recovered through the oracle must match the order
        if (in_valuation_ring(s, k) != nonneg)
            throw CounterexampleFound("ring membership mismatch", k.to_string());
        if (in_maximal_ideal(s, k) != pos)
            throw CounterexampleFound("ideal membership mismatch", k.to_string());

        // the map rebuilt from the recovered ring data must agree with s
        if (!nonneg) {
            if (!(s(k) == point_one_zero()))
                throw CounterexampleFound("image off the line at infinity", k.to_string());
            continue;
        }
        FieldElement l = k.residue();
        if (!in_maximal_ideal(s, k - PuiseuxSeries::constant(l)))
            throw CounterexampleFound("constant part does not split off", k.to_string());
        if (!(s(k) == ProjPointL({l, FieldElement(1)})))
            throw CounterexampleFound("rebuilt image disagrees", k.to_string());
    }
    return samples.size();
}

VarietyPredicate multiplication_variety() {
    // coordinates ([u:v],[w:x],[y:z]) at indices (0,1),(2,3),(4,5)
    MultiPoly eq = var3(6, 0, 2, 5) - var3(6, 4, 1, 3);
    return VarietyPredicate(3, 1, {eq});
}

VarietyPredicate addition_variety() {
    MultiPoly eq = var3(6, 0, 3, 5) + var3(6, 2, 1, 5) - var3(6, 4, 1, 3);
    return VarietyPredicate(3, 1, {eq});
}

VarietyPredicate sum_variety(int n) {
    if (n < 1) throw Error("ambient index must be at least 1");
    int w = n + 2;          // coordinates per factor
    int N = 3 * w;
    auto X = [&](int j) { return j; };
    auto Y = [&](int j) { return w + j; };
    auto Z = [&](int j) { return 2 * w + j; };
    std::vector<MultiPoly> eqs;
    for (int j : {0, n + 1})
        eqs.push_back(var3(N, X(j), Y(1), Z(1)) + var3(N, Y(j), X(n), Z(1)) -
                      var3(N, Z(j), X(n), Y(1)));
    return VarietyPredicate(3, n + 1, std::move(eqs));
}

VarietyPredicate sum_prime_variety(int n) {
    if (n < 1) throw Error("ambient index must be at least 1");
    int w = n + 2;
    int N = 3 * w;
    auto X = [&](int j) { return j; };
    auto Y = [&](int j) { return w + j; };
    auto Z = [&](int j) { return 2 * w + j; };
    std::vector<MultiPoly> eqs;
    for (int j = 0; j <= n + 1; ++j) {
        if (j == n) continue;
        eqs.push_back(var3(N, X(j), Y(n), Z(n)) + var3(N, Y(j), X(n), Z(n)) -
                      var3(N, Z(j), X(n), Y(n)));
    }
    return VarietyPredicate(3, n + 1, std::move(eqs));
}

VarietyPredicate tail_line_variety(int n) {
    if (n < 1) throw Error("ambient index must be at least 1");
    int N = n + 2;
    std::vector<MultiPoly> eqs;
    for (int j = 0; j < n; ++j) eqs.push_back(MultiPoly::variable(N, j));
    return VarietyPredicate(1, n + 1, std::move(eqs));
}

VarietyPredicate diagonal_arc_variety(int n) {
    if (n < 1) throw Error("ambient index must be at least 1");
    int N = n + 2;
    std::vector<MultiPoly> eqs;
    for (int j = 1; j < n; ++j)
        eqs.push_back(MultiPoly::variable(N, j) - MultiPoly::variable(N, j + 1));
    eqs.push_back(MultiPoly::variable(N, 0) - MultiPoly::variable(N, n + 1));
    return VarietyPredicate(1, n + 1, std::move(eqs));
}

} // namespace valcurve
