// Command line front end. Subcommands cover intersection multiplicity
// at a point, the full Bezout audit of a curve pair, fractional-power
// root expansion of a bivariate input, specialization of a series
// point, and a self-test of the valuation/specialization duality.
//
// JSON is the machine interface and the single source of truth; the
// text rendering carries the same facts. Identical argument vectors
// produce byte-identical JSON.
//
// Exit codes: 0 success; 2 shared component; 3 a root lives outside
// the base field (message names the minimal polynomial to adjoin);
// 4 precision cap reached; 5 seeds disagreed; 6 malformed input or
// usage; 1 any other failure.

#include <cstdint>
#include <exception>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "valcurve/curves.hpp"
#include "valcurve/duality.hpp"
#include "valcurve/errors.hpp"
#include "valcurve/multiplicity.hpp"
#include "valcurve/newton_puiseux.hpp"
#include "valcurve/parser.hpp"

namespace vc = valcurve;
using Json = nlohmann::ordered_json;

namespace {

vc::Rational parse_rational_arg(const std::string& s) {
    try {
        auto slash = s.find('/');
        if (slash == std::string::npos) return vc::Rational(vc::Integer(s));
        vc::Integer num(s.substr(0, slash));
        vc::Integer den(s.substr(slash + 1));
        if (sgn(den) == 0) throw vc::ParseError("zero denominator in '" + s + "'");
        vc::Rational r(num);
        r /= vc::Rational(den);
        return r;
    } catch (const std::invalid_argument&) {
        throw vc::ParseError("'" + s + "' is not a rational number");
    }
}

vc::FieldPtr parse_field_arg(const std::string& s) {
    if (s.empty()) return nullptr;
    return vc::NumberField::make(vc::parse_minpoly(s));
}

std::string field_label(const vc::FieldPtr& f) { return f ? f->to_string() : "Q"; }

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

/// Typed errors map to documented exit codes; everything else is 1.
int exit_code_for(const vc::Error& e) {
    if (dynamic_cast<const vc::CommonComponent*>(&e)) return 2;
    if (dynamic_cast<const vc::RequiresExtension*>(&e)) return 3;
    if (dynamic_cast<const vc::UnrepresentablePoint*>(&e)) return 3;
    if (dynamic_cast<const vc::TruncationInsufficient*>(&e)) return 4;
    if (dynamic_cast<const vc::IndeterminateValuation*>(&e)) return 4;
    if (dynamic_cast<const vc::NondeterministicCount*>(&e)) return 5;
    if (dynamic_cast<const vc::ParseError*>(&e)) return 6;
    if (dynamic_cast<const vc::NotHomogeneous*>(&e)) return 6;
    if (dynamic_cast<const vc::NotSquareFree*>(&e)) return 6;
    if (dynamic_cast<const vc::RedundantExtension*>(&e)) return 6;
    return 1;
}

void describe(Json& j, const vc::Error& e) {
    j["error"] = e.what();
    if (auto* r = dynamic_cast<const vc::RequiresExtension*>(&e)) j["minpoly"] = r->minpoly();
    if (auto* u = dynamic_cast<const vc::UnrepresentablePoint*>(&e)) j["minpoly"] = u->factor();
    if (auto* c = dynamic_cast<const vc::CounterexampleFound*>(&e))
        j["counterexample"] = c->element();
}

template <class Fn>
int guarded(bool json, Fn&& fn) {
    try {
        return fn();
    } catch (const vc::Error& e) {
        int code = exit_code_for(e);
        if (json) {
            Json j;
            describe(j, e);
            j["exit"] = code;
            emit(j);
        }
        std::cerr << "error: " << e.what() << "\n";
        return code;
    } catch (const std::exception& e) {
        if (json) emit(Json{{"error", e.what()}, {"exit", 1}});
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

struct PairFlags {
    std::string c1, c2, point, field;
    std::string truncation = "16", cap = "1024";
    std::vector<std::uint64_t> seeds;
    int retries = 5;
    bool json = false;
};

void add_pair_flags(CLI::App* cmd, PairFlags& f, bool with_point) {
    cmd->add_option("--c1", f.c1, "first curve, a homogeneous form in x, y, z")->required();
    cmd->add_option("--c2", f.c2, "second curve")->required();
    if (with_point)
        cmd->add_option("--point", f.point, "target point, as [a:b:c]")->required();
    cmd->add_option("--field", f.field, "minimal polynomial in t of the base field extension");
    cmd->add_option("--truncation", f.truncation, "starting working precision (rational)");
    cmd->add_option("--cap", f.cap, "precision ceiling (rational)");
    cmd->add_option("--seeds", f.seeds, "deformation seeds; all must agree");
    cmd->add_option("--retries", f.retries, "re-seed rounds before giving up");
    cmd->add_flag("--json", f.json, "emit the JSON report");
}

vc::MultConfig make_config(const PairFlags& f) {
    vc::MultConfig cfg;
    cfg.truncation_start = parse_rational_arg(f.truncation);
    cfg.truncation_cap = parse_rational_arg(f.cap);
    if (!f.seeds.empty()) cfg.seeds = f.seeds;
    cfg.retry_limit = f.retries;
    return cfg;
}

Json witness_json(const vc::BranchWitness& w) {
    return Json{{"x", w.x.to_string()}, {"y", w.y.to_string()}, {"orbit_size", w.orbit_size}};
}

Json point_json(const vc::MultReport& r) {
    Json ws = Json::array();
    for (const auto& w : r.witnesses) ws.push_back(witness_json(w));
    return Json{{"l", r.l.to_string()},
                {"mult_nonstandard", r.mult_nonstandard},
                {"mult_oracle", r.mult_oracle},
                {"agree", r.agree},
                {"witnesses", std::move(ws)}};
}

Json report_json(const vc::PlaneCurve& c1, const vc::PlaneCurve& c2, const vc::FieldPtr& field,
                 const std::vector<vc::MultReport>& entries, long sum, long expected,
                 bool verdict, const std::vector<std::uint64_t>& seeds,
                 const vc::Rational& truncation_used) {
    Json pts = Json::array();
    for (const auto& r : entries) pts.push_back(point_json(r));
    return Json{{"curve1", c1.to_string()},   {"curve2", c2.to_string()},
                {"field", field_label(field)}, {"points", std::move(pts)},
                {"sum", sum},                  {"expected", expected},
                {"verdict", verdict},          {"seeds", seeds},
                {"truncation_used", vc::to_string(truncation_used)}};
}

void print_report_text(const Json& j) {
    std::cout << "curve1: " << j["curve1"].get<std::string>() << "\n";
    std::cout << "curve2: " << j["curve2"].get<std::string>() << "\n";
    std::cout << "field:  " << j["field"].get<std::string>() << "\n";
    for (const auto& p : j["points"]) {
        std::cout << p["l"].get<std::string>() << "  mult " << p["mult_nonstandard"]
                  << "  oracle " << p["mult_oracle"]
                  << (p["agree"].get<bool>() ? "  agree" : "  DISAGREE") << "\n";
        for (const auto& w : p["witnesses"])
            std::cout << "  branch x = " << w["x"].get<std::string>()
                      << ", y = " << w["y"].get<std::string>() << " (orbit "
                      << w["orbit_size"] << ")\n";
    }
    std::cout << "sum " << j["sum"] << ", expected " << j["expected"] << ", verdict "
              << (j["verdict"].get<bool>() ? "pass" : "fail") << "\n";
}

int run_mult(const PairFlags& f) {
    vc::FieldPtr field = parse_field_arg(f.field);
    vc::PlaneCurve c1 = vc::PlaneCurve::parse(f.c1, field);
    vc::PlaneCurve c2 = vc::PlaneCurve::parse(f.c2, field);
    vc::ProjPointL l = vc::parse_point_l(f.point, field);
    if (l.dim() != 2) throw vc::ParseError("the point must lie in the projective plane");
    vc::MultConfig cfg = make_config(f);
    vc::BranchCount bc = vc::mult_nonstandard(c1, c2, l, cfg);
    int oracle = vc::mult_oracle(c1, c2, l);
    vc::MultReport entry{l, bc.count, oracle, bc.count == oracle, bc.witnesses,
                         bc.truncation_used};
    Json j = report_json(c1, c2, field, {entry}, bc.count, oracle, entry.agree, cfg.seeds,
                         bc.truncation_used);
    if (f.json) emit(j);
    else print_report_text(j);
    return 0;
}

int run_bezout(const PairFlags& f) {
    vc::FieldPtr field = parse_field_arg(f.field);
    vc::PlaneCurve c1 = vc::PlaneCurve::parse(f.c1, field);
    vc::PlaneCurve c2 = vc::PlaneCurve::parse(f.c2, field);
    vc::BezoutReport rep = vc::bezout_check(c1, c2, make_config(f));
    Json j = report_json(c1, c2, field, rep.entries, rep.sum, rep.expected, rep.verdict,
                         rep.seeds, rep.truncation_used);
    if (f.json) emit(j);
    else print_report_text(j);
    return 0;
}

struct ExpandFlags {
    std::string poly, field;
    std::string target = "16";
    bool positive_only = false;
    bool no_extension = false;
    bool json = false;
};

int run_expand(const ExpandFlags& f) {
    vc::FieldPtr field = parse_field_arg(f.field);
    vc::Polynomial<vc::FPoly> p = vc::parse_bivariate(f.poly, field);
    vc::ExpansionConfig cfg;
    cfg.target = parse_rational_arg(f.target);
    cfg.positive_only = f.positive_only;
    cfg.allow_extension = !f.no_extension;
    std::vector<vc::BranchCluster> clusters = vc::expand_clusters(p, field, cfg);
    std::string echo = vc::poly_to_string(
        p, "x", [](const vc::FPoly& c) { return vc::poly_to_string(c, "eps"); });
    Json arr = Json::array();
    for (const auto& cl : clusters) {
        Json e{{"size", cl.size}};
        e["lead_exp"] = cl.lead_exp ? Json(vc::to_string(*cl.lead_exp)) : Json(nullptr);
        e["representative"] =
            cl.representative ? Json(cl.representative->to_string()) : Json(nullptr);
        e["extension"] = cl.local_minpoly ? Json(vc::poly_to_string(*cl.local_minpoly)) : Json(nullptr);
        e["char_factor"] = cl.char_factor_text;
        arr.push_back(std::move(e));
    }
    Json j{{"poly", echo},
           {"field", field_label(field)},
           {"target", vc::to_string(cfg.target)},
           {"clusters", std::move(arr)}};
    if (f.json) {
        emit(j);
        return 0;
    }
    std::cout << "poly: " << echo << "\n";
    for (const auto& e : j["clusters"]) {
        std::cout << "cluster of size " << e["size"];
        if (!e["lead_exp"].is_null())
            std::cout << ", leading exponent " << e["lead_exp"].get<std::string>();
        else
            std::cout << ", exact zero root";
        if (!e["representative"].is_null())
            std::cout << ": " << e["representative"].get<std::string>();
        std::cout << "\n";
    }
    return 0;
}

struct SpecializeFlags {
    std::string point, field;
    bool json = false;
};

int run_specialize(const SpecializeFlags& f) {
    vc::FieldPtr field = parse_field_arg(f.field);
    vc::ProjPointK p = vc::parse_point_k(f.point, field);
    vc::ProjPointL s = p.specialize();
    Json j{{"point", p.to_string()},
           {"field", field_label(field)},
           {"specialization", s.to_string()}};
    if (f.json) emit(j);
    else std::cout << s.to_string() << "\n";
    return 0;
}

struct DualityFlags {
    int samples = 200;
    std::uint64_t seed = 7;
    bool json = false;
};

/// Exact series with a few terms on a small exponent grid; the same
/// shape the property suites sample.
vc::PuiseuxSeries random_series(vc::SplitMix64& g) {
    int nterms = static_cast<int>(g.next_in(0, 4));
    long den = g.next_in(1, 3);
    vc::PuiseuxSeries s;
    for (int i = 0; i < nterms; ++i) {
        vc::Rational e = vc::make_rational(g.next_in(-6, 12), den);
        vc::Rational c = vc::make_rational(g.next_in(-9, 9), g.next_in(1, 4));
        if (sgn(c) == 0) c = vc::Rational(1);
        s = s + vc::PuiseuxSeries::monomial(vc::FieldElement(c), e);
    }
    return s;
}

int run_duality(const DualityFlags& f) {
    vc::SplitMix64 g(f.seed);
    std::vector<vc::PuiseuxSeries> samples;
    samples.reserve(static_cast<std::size_t>(f.samples));
    for (int i = 0; i < f.samples; ++i) samples.push_back(random_series(g));
    try {
        std::size_t checked = vc::roundtrip_check(vc::honest_oracle(), samples);
        Json j{{"samples", f.samples},
               {"seed", f.seed},
               {"checked", checked},
               {"verdict", true}};
        if (f.json) emit(j);
        else std::cout << "roundtrip on " << checked << " samples: pass\n";
        return 0;
    } catch (const vc::CounterexampleFound& e) {
        Json j{{"samples", f.samples}, {"seed", f.seed}, {"verdict", false},
               {"counterexample", e.element()}, {"error", e.what()}};
        if (f.json) emit(j);
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact intersection multiplicities of plane projective curves"};
    app.require_subcommand(1);

    PairFlags mf;
    CLI::App* mult = app.add_subcommand("mult", "multiplicity of a curve pair at a point");
    add_pair_flags(mult, mf, true);

    PairFlags bf;
    CLI::App* bezout =
        app.add_subcommand("bezout", "all intersection points and the degree-product audit");
    add_pair_flags(bezout, bf, false);

    ExpandFlags ef;
    CLI::App* expand =
        app.add_subcommand("expand", "fractional-power roots of a polynomial in x and eps");
    expand->add_option("--poly", ef.poly, "polynomial in x and eps")->required();
    expand->add_option("--field", ef.field, "minimal polynomial in t of the base field extension");
    expand->add_option("--target", ef.target, "requested residual order (rational)");
    expand->add_flag("--positive-only", ef.positive_only,
                     "keep only branches of positive order");
    expand->add_flag("--no-extension", ef.no_extension,
                     "never materialize representatives outside the base field");
    expand->add_flag("--json", ef.json, "emit the JSON report");

    SpecializeFlags sf;
    CLI::App* redu = app.add_subcommand("specialize", "reduce a series point to the constant field");
    redu->add_option("--point", sf.point, "point with series coordinates, as [a:b:...]")
        ->required();
    redu->add_option("--field", sf.field, "minimal polynomial in t of the base field extension");
    redu->add_flag("--json", sf.json, "emit the JSON report");

    DualityFlags df;
    CLI::App* dual = app.add_subcommand(
        "duality-selftest", "round-trip the valuation/specialization correspondence");
    dual->add_option("--samples", df.samples, "number of sampled series");
    dual->add_option("--seed", df.seed, "sample generator seed");
    dual->add_flag("--json", df.json, "emit the JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 6;
    }

    if (mult->parsed()) return guarded(mf.json, [&] { return run_mult(mf); });
    if (bezout->parsed()) return guarded(bf.json, [&] { return run_bezout(bf); });
    if (expand->parsed()) return guarded(ef.json, [&] { return run_expand(ef); });
    if (redu->parsed()) return guarded(sf.json, [&] { return run_specialize(sf); });
    if (dual->parsed()) return guarded(df.json, [&] { return run_duality(df); });
    return 6;
}
