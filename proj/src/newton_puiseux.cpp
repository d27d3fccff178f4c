#include "valcurve/newton_puiseux.hpp"

#include <algorithm>

namespace valcurve {

namespace {

struct Ctx {
    FieldPtr base;
    Rational target;
    int depth_cap;
    bool allow_extension;
};

/// Substitutes x = eps^mu * (c + x1) and strips the overall power of
/// eps. Returns the renormalized polynomial and the stripped order.
std::pair<SPoly, Rational> transform(const SPoly& g, const Rational& mu, const FieldElement& c) {
    long n = g.degree();
    std::vector<PuiseuxSeries> b(static_cast<std::size_t>(n + 1));
    // g(eps^mu (c + x1)): scale a_i by eps^(mu*i), then Taylor-shift by c:
    // b_j = sum_i C(i,j) a_i eps^(mu*i) c^(i-j).
    std::vector<FieldElement> cpow(static_cast<std::size_t>(n + 1), FieldElement(1));
    for (long k = 1; k <= n; ++k) cpow[static_cast<std::size_t>(k)] = cpow[static_cast<std::size_t>(k - 1)] * c;
    std::vector<PuiseuxSeries> scaled(static_cast<std::size_t>(n + 1));
    for (long i = 0; i <= n; ++i)
        scaled[static_cast<std::size_t>(i)] =
            g.coeff(static_cast<std::size_t>(i)) * PuiseuxSeries::monomial(FieldElement(1), mu * Rational(i));
    for (long j = 0; j <= n; ++j) {
        PuiseuxSeries acc;
        for (long i = j; i <= n; ++i) {
            Integer binom;
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(i), static_cast<unsigned long>(j));
            FieldElement scale = FieldElement(Rational(binom)) * cpow[static_cast<std::size_t>(i - j)];
            acc = acc + scaled[static_cast<std::size_t>(i)] * PuiseuxSeries::constant(scale);
        }
        b[static_cast<std::size_t>(j)] = acc;
    }
    std::optional<Rational> sigma;
    for (const auto& s : b) {
        if (s.zero_test() != Ternary::False) continue;
        Rational v = s.valuation().finite();
        if (!sigma || v < *sigma) sigma = v;
    }
    if (!sigma) throw Error("transform of the zero polynomial");
    for (auto& s : b) s = s * PuiseuxSeries::monomial(FieldElement(1), -*sigma);
    return {SPoly(std::move(b)), *sigma};
}

/// Unique positive-order root of g when the linear coefficient is a
/// unit, by Newton iteration from zero, refined until the residual
/// order certifiably reaches `need`.
PuiseuxSeries newton_simple(const SPoly& g, const Rational& need) {
    const PuiseuxSeries& b1 = g.coeff(1);
    if (b1.zero_test() != Ternary::False || sgn(b1.valuation().finite()) != 0)
        throw Error("newton_simple requires a unit linear coefficient");
    Rational w = need > Rational(1) ? need : Rational(1);
    SPoly dg = g.derivative();
    PuiseuxSeries x;  // exact zero start
    for (int iter = 0; iter < 200; ++iter) {
        PuiseuxSeries r = g.eval(x);
        if (r.valuation_lower_bound() >= Valuation(need)) return x;
        PuiseuxSeries d = dg.eval(x);
        x = (x - r * d.inverse(w)).truncated(w);
    }
    throw TruncationInsufficient("refinement did not reach residual order " + to_string(need));
}

struct Edge {
    long i0, i1;
    Rational mu;
};

std::vector<Edge> lower_hull_edges(const SPoly& g) {
    struct Pt {
        long i;
        Rational v;
    };
    std::vector<Pt> pts;
    for (long i = 0; i <= g.degree(); ++i) {
        const PuiseuxSeries& a = g.coeff(static_cast<std::size_t>(i));
        if (a.zero_test() == Ternary::False) pts.push_back({i, a.valuation().finite()});
    }
    std::vector<Pt> hull;  // lower convex hull, slopes strictly increasing
    for (const auto& p : pts) {
        while (hull.size() >= 2) {
            const Pt& a = hull[hull.size() - 2];
            const Pt& b = hull[hull.size() - 1];
            // Drop b when it lies on or above segment a-p.
            if ((b.v - a.v) * (p.i - a.i) >= (p.v - a.v) * (b.i - a.i))
                hull.pop_back();
            else
                break;
        }
        hull.push_back(p);
    }
    std::vector<Edge> edges;
    for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
        Rational slope = (hull[k + 1].v - hull[k].v) / Rational(hull[k + 1].i - hull[k].i);
        edges.push_back({hull[k].i, hull[k + 1].i, -slope});
    }
    return edges;
}

FieldElement coeff_on_line(const PuiseuxSeries& a, const Rational& e) {
    for (const auto& t : a.terms())
        if (t.exp == e) return t.coeff;
    return FieldElement(0);
}

void compose_onto(BranchCluster& cl, const Rational& mu, const FieldElement& c) {
    cl.lead_exp = mu;
    if (cl.representative) {
        PuiseuxSeries tail = *cl.representative;
        cl.representative = PuiseuxSeries::monomial(FieldElement(1), mu) *
                            (PuiseuxSeries::constant(c) + tail);
    }
}

void expand_node(const SPoly& g_in, const FieldPtr& fld, bool positive_only, int depth,
                 const Ctx& ctx, const Rational& need, std::vector<BranchCluster>& out);

/// Handles one root-free characteristic factor h of multiplicity mh on
/// an edge of exponent mu. Counts deg(h)*mh roots; materializes a
/// representative when a single extension of Q suffices.
void handle_orbit(const SPoly& g, const FieldPtr& fld, const QPoly& h, int mh, const Rational& mu,
                  int depth, const Ctx& ctx, const Rational& need, std::vector<BranchCluster>& out) {
    long dh = h.degree();
    auto count_only = [&] {
        BranchCluster cl;
        cl.size = static_cast<int>(dh) * mh;
        cl.lead_exp = mu;
        cl.char_factor_text = poly_to_string(h);
        out.push_back(std::move(cl));
    };
    bool extendable = ctx.allow_extension && fld == nullptr;
    if (!extendable || (mh >= 2 && dh > 2)) {
        count_only();
        return;
    }
    FieldPtr ext;
    try {
        ext = NumberField::make(h);
    } catch (const Error&) {
        count_only();
        return;
    }
    FieldElement cbar = FieldElement::generator(ext);
    try {
        auto [g1, sigma] = transform(g, mu, cbar);
        Rational need1 = need - sigma;
        if (mh == 1) {
            PuiseuxSeries tail = newton_simple(g1, need1);
            BranchCluster cl;
            cl.size = static_cast<int>(dh);
            cl.representative = tail;
            cl.rep_field = ext;
            cl.local_minpoly = h;
            cl.char_factor_text = poly_to_string(h);
            compose_onto(cl, mu, cbar);
            out.push_back(std::move(cl));
            return;
        }
        // mh >= 2 over an extension of degree <= 2: root finding stays
        // complete there, so the orbit splits by recursion.
        std::vector<BranchCluster> inner;
        expand_node(g1, ext, true, depth + 1, ctx, need1, inner);
        for (auto& cl : inner) {
            cl.size *= static_cast<int>(dh);
            cl.local_minpoly = h;
            if (cl.char_factor_text.empty()) cl.char_factor_text = poly_to_string(h);
            compose_onto(cl, mu, cbar);
            out.push_back(std::move(cl));
        }
    } catch (const NonInvertibleDetail& e) {
        // The working factor was reducible: split it and retry pieces.
        QPoly f1 = e.factor_poly();
        QPoly f2 = exact_div(h, f1);
        handle_orbit(g, fld, f1, mh, mu, depth, ctx, need, out);
        handle_orbit(g, fld, f2, mh, mu, depth, ctx, need, out);
    }
}

void expand_node(const SPoly& g_in, const FieldPtr& fld, bool positive_only, int depth,
                 const Ctx& ctx, const Rational& need, std::vector<BranchCluster>& out) {
    if (depth >= ctx.depth_cap)
        throw TruncationInsufficient("expansion exceeded the recursion depth cap");
    SPoly g = g_in;
    // Root exactly zero: admissible since its order is infinite.
    std::size_t ord = 0;
    while (static_cast<long>(ord) <= g.degree() &&
           g.coeff(ord).zero_test() == Ternary::True)
        ++ord;
    if (ord > 0) {
        if (ord > 1)
            throw NotSquareFree("repeated zero root during expansion");
        BranchCluster cl;
        cl.representative = PuiseuxSeries();
        cl.rep_field = fld;
        out.push_back(std::move(cl));
        std::vector<PuiseuxSeries> c(g.coeffs().begin() + static_cast<long>(ord), g.coeffs().end());
        g = SPoly(std::move(c));
    }
    if (g.degree() < 1) return;
    for (const Edge& e : lower_hull_edges(g)) {
        if (positive_only && sgn(e.mu) <= 0) continue;
        // Characteristic polynomial of the edge.
        Rational w0 = g.coeff(static_cast<std::size_t>(e.i0)).valuation().finite();
        std::vector<FieldElement> chi_c(static_cast<std::size_t>(e.i1 - e.i0 + 1), FieldElement(0));
        for (long i = e.i0; i <= e.i1; ++i) {
            Rational line = w0 - e.mu * Rational(i - e.i0);
            chi_c[static_cast<std::size_t>(i - e.i0)] =
                coeff_on_line(g.coeff(static_cast<std::size_t>(i)), line);
        }
        FPoly chi(std::move(chi_c));
        RootsResult rr = roots_in_field(chi, fld);
        FPoly rem = chi;
        for (const auto& root : rr.roots) {
            FPoly lin(std::vector<FieldElement>{-root.value, FieldElement(1)});
            for (int k = 0; k < root.multiplicity; ++k) rem = divmod(rem, lin).first;
            auto [g1, sigma] = transform(g, e.mu, root.value);
            Rational need1 = need - sigma;
            if (root.multiplicity == 1) {
                PuiseuxSeries tail = newton_simple(g1, need1);
                BranchCluster cl;
                cl.representative = tail;
                cl.rep_field = fld;
                compose_onto(cl, e.mu, root.value);
                out.push_back(std::move(cl));
            } else {
                std::vector<BranchCluster> inner;
                expand_node(g1, fld, true, depth + 1, ctx, need1, inner);
                for (auto& cl : inner) {
                    compose_onto(cl, e.mu, root.value);
                    out.push_back(std::move(cl));
                }
            }
        }
        if (rem.degree() >= 1) {
            // Conjugate orbits: there is no root in the node field, but
            // counting stays exact through the factor multiplicities.
            for (auto& [h, mh] : yun_decomposition(rem)) {
                auto hq = try_rational_poly(h);
                if (hq)
                    handle_orbit(g, fld, *hq, mh, e.mu, depth, ctx, need, out);
                else {
                    BranchCluster cl;
                    cl.size = static_cast<int>(h.degree()) * mh;
                    cl.lead_exp = e.mu;
                    cl.char_factor_text = poly_to_string(h, "t");
                    out.push_back(std::move(cl));
                }
            }
        }
    }
}

bool squarefree_in_x(const Polynomial<FPoly>& f) { return squarefree_in_outer(f); }

} // namespace

std::vector<BranchCluster> expand_clusters(const Polynomial<FPoly>& f, const FieldPtr& base,
                                           const ExpansionConfig& cfg) {
    if (is_zero(f)) throw Error("expansion of the zero polynomial");
    if (!squarefree_in_x(f))
        throw NotSquareFree("expansion input has a repeated factor: " +
                            poly_to_string(f, "x", [](const FPoly& c) { return poly_to_string(c, "eps"); }));
    std::vector<BranchCluster> out;
    if (f.degree() < 1) return out;
    SPoly lifted = lift_series_poly(f);
    // Nested compositions certify residual order pessimistically, so
    // re-run with a raised internal demand until every representative
    // carries a certificate at the requested target.
    Rational need = cfg.target;
    for (int attempt = 0;; ++attempt) {
        out.clear();
        Ctx ctx{base, need, cfg.depth_cap, cfg.allow_extension};
        expand_node(lifted, base, cfg.positive_only, 0, ctx, need, out);
        std::optional<Rational> worst;
        for (const auto& cl : out) {
            if (!cl.representative) continue;
            Valuation v = lifted.eval(*cl.representative).valuation_lower_bound();
            if (v >= Valuation(cfg.target)) continue;
            if (!worst || v.finite() < *worst) worst = v.finite();
        }
        if (!worst) break;
        if (attempt >= 8)
            throw TruncationInsufficient("residual certification stalled below target " +
                                         to_string(cfg.target));
        need += cfg.target - *worst + Rational(2);
    }
    std::sort(out.begin(), out.end(), [](const BranchCluster& a, const BranchCluster& b) {
        if (a.lead_exp.has_value() != b.lead_exp.has_value()) return a.lead_exp.has_value();
        if (a.lead_exp && b.lead_exp && !(*a.lead_exp == *b.lead_exp)) return *a.lead_exp < *b.lead_exp;
        if (a.representative.has_value() != b.representative.has_value())
            return a.representative.has_value();
        if (a.representative && b.representative) {
            int c = PuiseuxSeries::compare(*a.representative, *b.representative);
            if (c != 0) return c < 0;
        }
        if (a.size != b.size) return a.size < b.size;
        return a.char_factor_text < b.char_factor_text;
    });
    return out;
}

std::vector<PuiseuxSeries> expand_roots(const Polynomial<FPoly>& f, const FieldPtr& base,
                                        const ExpansionConfig& cfg) {
    ExpansionConfig strict = cfg;
    strict.allow_extension = false;
    std::vector<PuiseuxSeries> roots;
    for (auto& cl : expand_clusters(f, base, strict)) {
        if (cl.size != 1 || !cl.representative || !same_field(cl.rep_field, base))
            throw RequiresExtension("a root orbit does not split over the base field",
                                    cl.char_factor_text);
        roots.push_back(std::move(*cl.representative));
    }
    std::sort(roots.begin(), roots.end(),
              [](const PuiseuxSeries& a, const PuiseuxSeries& b) {
                  return PuiseuxSeries::compare(a, b) < 0;
              });
    return roots;
}

} // namespace valcurve
