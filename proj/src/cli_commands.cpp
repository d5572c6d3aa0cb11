#include "cli_commands.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>

#include "CLI11.hpp"
#include "monolap/errors.hpp"
#include "monolap/exactseq.hpp"
#include "monolap/kernels.hpp"
#include "monolap/monorules.hpp"
#include "monolap/report.hpp"
#include "monolap/results.hpp"
#include "monolap/specfun.hpp"

namespace monolap::cli {

namespace {

using report::json;
using quadrature::DecayClass;
using quadrature::KernelSpec;
using quadrature::QuadConfig;

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DomainError("cannot open output file: " + path);
    out << content;
}

double parse_rational_arg(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return std::stod(s);
    double num = std::stod(s.substr(0, slash));
    double den = std::stod(s.substr(slash + 1));
    if (den == 0.0) throw DomainError("zero denominator in rational argument");
    return num / den;
}

// ---- minimal kernel expression DSL: sum of [coef *] atom[' | ''] ----------

struct NamedKernel {
    std::function<double(double)> eval;
    DecayClass decay;
};

std::optional<NamedKernel> lookup_atom(const std::string& name) {
    using namespace monolap::specfun;
    if (name == "one") return NamedKernel{[](double) { return 1.0; }, DecayClass::bounded()};
    if (name == "t") return NamedKernel{[](double t) { return t; }, DecayClass::polynomial(1)};
    if (name == "t2")
        return NamedKernel{[](double t) { return t * t; }, DecayClass::polynomial(2)};
    if (name == "t3")
        return NamedKernel{[](double t) { return t * t * t; }, DecayClass::polynomial(3)};
    if (name == "q") return NamedKernel{[](double t) { return kernel_q(t); }, DecayClass::bounded()};
    if (name == "q''")
        return NamedKernel{[](double t) { return kernel_q2(t); }, DecayClass::bounded()};
    if (name == "p1")
        return NamedKernel{[](double t) { return kernel_p1(t); }, DecayClass::bounded()};
    if (name == "p1'")
        return NamedKernel{[](double t) { return kernel_p1_prime(t); }, DecayClass::bounded()};
    if (name == "p1''")
        return NamedKernel{[](double t) { return kernel_p1_second(t); }, DecayClass::bounded()};
    if (name == "p2")
        return NamedKernel{[](double t) { return kernel_p2(t); }, DecayClass::bounded()};
    if (name == "p2'")
        return NamedKernel{[](double t) { return kernel_p2_prime(t); }, DecayClass::bounded()};
    if (name == "p2''")
        return NamedKernel{[](double t) { return kernel_p2_second(t); }, DecayClass::bounded()};
    if (name == "p3")
        return NamedKernel{[](double t) { return kernel_p3(t); }, DecayClass::bounded()};
    if (name == "p3''")
        return NamedKernel{[](double t) { return kernel_p3_second(t); }, DecayClass::bounded()};
    return std::nullopt;
}

std::string strip(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    if (b == std::string::npos) return "";
    return s.substr(b, e - b + 1);
}

// "2*q + 3/4*p1'' - t" -> KernelSpec; throws DomainError on bad syntax/name
KernelSpec parse_kernel_expr(const std::string& expr) {
    struct Term {
        double coef;
        NamedKernel kernel;
    };
    std::vector<Term> terms;
    DecayClass decay = DecayClass::bounded();

    std::size_t pos = 0;
    double pending_sign = 1.0;
    while (pos < expr.size()) {
        std::size_t next = pos;
        // find the next top-level + or - (a '-' directly after '*' or at the
        // start of a term is a coefficient sign)
        bool at_term_start = true;
        for (next = pos; next < expr.size(); ++next) {
            char c = expr[next];
            if (c == ' ') continue;
            if ((c == '+' || c == '-') && !at_term_start) break;
            at_term_start = (c == '*');
        }
        std::string term_str = strip(expr.substr(pos, next - pos));
        if (term_str.empty()) throw DomainError("kernel expression: empty term");
        double coef = pending_sign;
        std::string atom = term_str;
        auto star = term_str.find('*');
        if (star != std::string::npos) {
            coef *= parse_rational_arg(strip(term_str.substr(0, star)));
            atom = strip(term_str.substr(star + 1));
        }
        auto named = lookup_atom(atom);
        if (!named) throw DomainError("kernel expression: unknown kernel '" + atom + "'");
        if (named->decay.kind == DecayClass::PolynomialGrowth &&
            (decay.kind != DecayClass::PolynomialGrowth || named->decay.param > decay.param))
            decay = named->decay;
        terms.push_back({coef, *named});
        if (next < expr.size()) pending_sign = expr[next] == '-' ? -1.0 : 1.0;
        pos = next + 1;
    }
    if (terms.empty()) throw DomainError("kernel expression: no terms");
    auto eval = [terms](double t) {
        double acc = 0.0;
        for (const auto& tm : terms) acc += tm.coef * tm.kernel.eval(t);
        return acc;
    };
    return KernelSpec{eval, 0.0, decay, expr};
}

// ---- built-in ratio pair registry -----------------------------------------

struct RegisteredPair {
    monorules::RatioPair pair;
    monorules::ShapeHint hint;
    std::string note;
};

RegisteredPair registry_pair(const std::string& id, std::optional<double> v) {
    using namespace monolap::specfun;
    using monorules::RatioPair;
    using monorules::ShapeHint;
    RegisteredPair out;
    if (id == "phi") {
        out.pair.f = spec_neg24_q2();
        out.pair.g = spec_q();
        out.hint = ShapeHint::UnimodalRatio;
        return out;
    }
    if (id == "alzer-a") {
        out.pair.f = spec_neg_p1_prime();
        out.pair.g = spec_p1();
        out.hint = ShapeHint::UnimodalRatio;
        out.note = "denominator kernel taken as p1 (the numerator uses p1')";
        return out;
    }
    if (id == "villarino-l") {
        out.pair.f = spec_l_numerator();
        out.pair.g = spec_p2();
        out.hint = ShapeHint::MonotoneRatio;
        return out;
    }
    if (id == "qi-q") {
        out.pair.f = spec_q_numerator();
        out.pair.g = spec_p3();
        out.hint = ShapeHint::MonotoneRatio;
        return out;
    }
    if (id == "identity") {
        out.pair.f = spec_one();
        out.pair.g = spec_one();
        out.hint = ShapeHint::MonotoneRatio;
        return out;
    }
    if (id == "lambda") {
        if (!v) throw DomainError("pair 'lambda' requires --v");
        double av = std::fabs(*v);
        out.pair.f = spec_bessel_f(av);
        out.pair.g = spec_bessel_g(av);
        out.pair.weight = weight_cosh_minus_one();
        bool unimodal = av > 0.0 && av < 1.0 && av != 0.5;
        out.hint = unimodal ? ShapeHint::UnimodalRatio : ShapeHint::MonotoneRatio;
        return out;
    }
    throw std::out_of_range("unknown pair id: " + id);
}

json quad_config_json(const QuadConfig& cfg) {
    return {{"rel_tol", cfg.rel_tol},
            {"abs_tol", cfg.abs_tol},
            {"max_panels", cfg.max_panels},
            {"truncation_tail_bound", cfg.truncation_tail_bound}};
}

// ---- subcommand implementations -------------------------------------------

int cmd_verify_sequences(const std::string& suite, long n_max, const std::string& v_str,
                         const std::string& output) {
    long n = n_max;
    exactseq::ExactSeqReport rep;
    json cfg;
    cfg["suite"] = suite;
    if (suite == "phi-dn") {
        if (n <= 0) n = 200;
        cfg["n_max"] = n;
        rep = exactseq::phi_dn_report(n);
    } else if (suite == "phi-bn") {
        if (n <= 0) n = 100;
        cfg["n_max"] = n;
        rep = exactseq::phi_bn_checks(n);
    } else if (suite == "phi-star") {
        if (n <= 0) n = 60;
        cfg["n_max"] = n;
        rep = exactseq::phi_star_checks(n);
    } else if (suite == "hv") {
        if (n <= 0) n = 50;
        BigRat v = BigRat::from_string(v_str);
        cfg["n_max"] = n;
        cfg["v"] = v.to_string();
        rep = exactseq::hv_sequences(v, n);
    } else {
        std::cerr << "verify-sequences: unknown suite '" << suite << "'\n";
        return kBadConfig;
    }
    json doc = report::base_document("verify-sequences", cfg);
    doc["results"] = report::to_json(rep);
    write_output(output, doc.dump(2) + "\n");
    return rep.all_ok() ? kOk : kClaimFailure;
}

int cmd_classify(const std::string& pair_id, const std::string& f_expr,
                 const std::string& g_expr, const std::string& hint_str,
                 const std::string& v_str, QuadConfig quad, const std::string& output) {
    RegisteredPair reg;
    json cfg;
    cfg["quad"] = quad_config_json(quad);
    if (!pair_id.empty()) {
        std::optional<double> v;
        if (!v_str.empty()) v = parse_rational_arg(v_str);
        try {
            reg = registry_pair(pair_id, v);
        } catch (const std::out_of_range& e) {
            std::cerr << "classify: " << e.what() << "\n";
            return kBadConfig;
        }
        cfg["pair"] = pair_id;
        if (v) cfg["v"] = *v;
    } else {
        if (f_expr.empty() || g_expr.empty()) {
            std::cerr << "classify: provide --pair or both --f and --g\n";
            return kUsage;
        }
        try {
            reg.pair.f = parse_kernel_expr(f_expr);
            reg.pair.g = parse_kernel_expr(g_expr);
        } catch (const DomainError& e) {
            std::cerr << "classify: " << e.what() << "\n";
            return kBadConfig;
        }
        reg.hint = hint_str == "unimodal" ? monorules::ShapeHint::UnimodalRatio
                                          : monorules::ShapeHint::MonotoneRatio;
        cfg["f"] = f_expr;
        cfg["g"] = g_expr;
        cfg["hint"] = hint_str;
    }
    monorules::MonotoneVerdict verdict;
    try {
        verdict = monorules::classify_ratio(reg.pair, reg.hint, quad);
    } catch (const ShapeHintError& e) {
        std::cerr << "classify: " << e.what() << "\n";
        return kBadConfig;
    }
    json doc = report::base_document("classify", cfg);
    doc["results"] = report::to_json(verdict);
    if (!reg.note.empty()) doc["results"]["pair_note"] = reg.note;
    write_output(output, doc.dump(2) + "\n");
    return verdict.kind == monorules::VerdictKind::Indeterminate ? kIndeterminate : kOk;
}

int cmd_bounds(const std::string& suite, const std::vector<double>& v_override,
               double x_min, double x_max, int x_points, std::optional<double> r1,
               std::optional<double> r2, QuadConfig quad, bool quad_given,
               const std::string& format, const std::string& output) {
    results::BoundConfig grid;
    grid.v_grid = v_override;
    grid.r1 = r1;
    grid.r2 = r2;
    if (x_points > 0) {
        if (x_points < 2 || !(x_min > 0.0) || !(x_max > x_min))
            throw DomainError("bounds: need --x-points >= 2 and 0 < x-min < x-max");
        grid.x_grid.resize(static_cast<std::size_t>(x_points));
        for (int i = 0; i < x_points; ++i)
            grid.x_grid[static_cast<std::size_t>(i)] =
                x_min * std::pow(x_max / x_min, double(i) / (x_points - 1));
    }
    QuadConfig effective = quad_given ? quad : results::bounds_quad_defaults();
    results::BoundSweepReport rep;
    try {
        rep = results::bound_suite(suite, grid, effective);
    } catch (const DomainError& e) {
        std::cerr << "bounds: " << e.what() << "\n";
        return kBadConfig;
    }
    if (format == "csv") {
        write_output(output, report::bound_csv(rep));
    } else {
        json cfg;
        cfg["suite"] = suite;
        if (!v_override.empty()) cfg["v"] = v_override;
        if (r1) cfg["r1"] = *r1;
        if (r2) cfg["r2"] = *r2;
        cfg["quad"] = quad_config_json(effective);
        json doc = report::base_document("bounds", cfg);
        doc["results"] = report::to_json(rep, false);
        write_output(output, doc.dump(2) + "\n");
    }
    return rep.pass ? kOk : kClaimFailure;
}

int cmd_emit(const std::string& fn, double x_min, double x_max, int points,
             const std::string& v_str, double v_min, double v_max,
             const std::string& output) {
    if (points < 2) {
        std::cerr << "emit: --points must be at least 2\n";
        return kUsage;
    }
    auto log_grid = [&](double lo, double hi) {
        std::vector<double> g(points);
        for (int i = 0; i < points; ++i)
            g[i] = lo * std::pow(hi / lo, double(i) / (points - 1));
        return g;
    };
    std::vector<std::vector<double>> rows;
    std::vector<std::string> header;
    if (fn == "phi" || fn == "alzer-a" || fn == "villarino-l" || fn == "qi-q") {
        header = {"x", "value"};
        double (*f)(double) = fn == "phi"          ? results::phi_fn
                              : fn == "alzer-a"    ? results::alzer_A
                              : fn == "villarino-l" ? results::villarino_L
                                                    : results::qi_Q;
        for (double x : log_grid(x_min, x_max)) rows.push_back({x, f(x)});
    } else if (fn == "lambda") {
        if (v_str.empty()) {
            std::cerr << "emit: --fn lambda requires --v\n";
            return kUsage;
        }
        double v = parse_rational_arg(v_str);
        header = {"x", "value"};
        for (double x : log_grid(x_min, x_max))
            rows.push_back({x, results::lambda_v(v, x, results::bounds_quad_defaults())});
    } else if (fn == "hv") {
        if (v_str.empty()) {
            std::cerr << "emit: --fn hv requires --v\n";
            return kUsage;
        }
        double v = parse_rational_arg(v_str);
        header = {"t", "value"};
        for (double t : log_grid(x_min, x_max))
            rows.push_back({t, specfun::kernel_hv(v, t)});
    } else if (fn == "theta-v") {
        header = {"v", "t_star", "theta"};
        for (int i = 0; i < points; ++i) {
            double v = v_min + (v_max - v_min) * double(i) / (points - 1);
            auto r = results::theta_v(v);
            rows.push_back({v, r.t_star, r.theta});
        }
    } else {
        std::cerr << "emit: unknown function '" << fn << "'\n";
        return kBadConfig;
    }
    write_output(output, report::grid_csv(header, rows));
    return kOk;
}

int cmd_report_all(const std::string& output) {
    json cfg;
    cfg["defaults"] = true;
    json doc = report::base_document("report-all", cfg);
    bool ok = true;

    json seq = json::array();
    {
        auto dn = exactseq::phi_dn_report(200);
        auto bn = exactseq::phi_bn_checks(100);
        auto star = exactseq::phi_star_checks(60);
        auto hv34 = exactseq::hv_sequences(BigRat::from_string("3/4"), 50);
        auto hv14 = exactseq::hv_sequences(BigRat::from_string("1/4"), 50);
        for (const auto* r : {&dn, &bn, &star, &hv34, &hv14}) {
            seq.push_back(report::to_json(*r));
            ok = ok && r->all_ok();
        }
    }
    doc["sequences"] = seq;

    json cls = json::array();
    struct Entry {
        const char* id;
        std::optional<double> v;
    };
    for (const Entry& e : std::initializer_list<Entry>{{"phi", {}},
                                                       {"alzer-a", {}},
                                                       {"villarino-l", {}},
                                                       {"qi-q", {}},
                                                       {"lambda", 0.0},
                                                       {"lambda", 0.25},
                                                       {"lambda", 0.75},
                                                       {"lambda", 1.0},
                                                       {"lambda", 2.0}}) {
        RegisteredPair reg = registry_pair(e.id, e.v);
        auto verdict = monorules::classify_ratio(reg.pair, reg.hint);
        json vj = report::to_json(verdict);
        vj["pair"] = e.id;
        if (e.v) vj["v"] = *e.v;
        vj.erase("evidence");  // keep the combined report compact
        cls.push_back(vj);
        ok = ok && verdict.kind != monorules::VerdictKind::Indeterminate;
    }
    doc["classifications"] = cls;

    json bounds = json::array();
    for (const char* suite : {"xdkk", "xdkk-improved", "turan", "kratio"}) {
        auto rep = results::bound_suite(suite);
        bounds.push_back(report::to_json(rep, false));
        ok = ok && rep.pass;
    }
    doc["bounds"] = bounds;
    doc["all_ok"] = ok;
    write_output(output, doc.dump(2) + "\n");
    return ok ? kOk : kClaimFailure;
}

} // namespace

int run(const std::vector<std::string>& args) {
    CLI::App app{"Monotonicity toolkit for ratios of Laplace transforms"};
    app.require_subcommand(1);

    // verify-sequences
    auto* vs = app.add_subcommand("verify-sequences",
                                  "Exact integer/rational sequence verification");
    std::string vs_suite, vs_v = "3/4", vs_output;
    long vs_nmax = 0;
    vs->add_option("--suite", vs_suite, "phi-dn | phi-bn | phi-star | hv")->required();
    vs->add_option("--n-max", vs_nmax, "verification cap (default per suite)");
    vs->add_option("--v", vs_v, "rational order for the hv suite, e.g. 3/4");
    vs->add_option("--output,-o", vs_output, "output path (default stdout)");

    // classify
    auto* cl = app.add_subcommand("classify", "Classify F/G monotonicity");
    std::string cl_pair, cl_f, cl_g, cl_hint = "monotone", cl_v, cl_output;
    QuadConfig cl_quad;
    cl->add_option("--pair", cl_pair,
                   "phi | alzer-a | villarino-l | qi-q | lambda | identity");
    cl->add_option("--f", cl_f, "numerator kernel expression");
    cl->add_option("--g", cl_g, "denominator kernel expression");
    cl->add_option("--hint", cl_hint, "monotone | unimodal (expression pairs)")
        ->check(CLI::IsMember({"monotone", "unimodal"}));
    cl->add_option("--v", cl_v, "order for the lambda pair (rational or decimal)");
    cl->add_option("--rel-tol", cl_quad.rel_tol, "quadrature relative tolerance");
    cl->add_option("--abs-tol", cl_quad.abs_tol, "quadrature absolute tolerance");
    cl->add_option("--output,-o", cl_output, "output path (default stdout)");

    // bounds
    auto* bd = app.add_subcommand("bounds", "Inequality sweep suites");
    std::string bd_suite, bd_format = "json", bd_output;
    std::vector<double> bd_v;
    double bd_r1 = std::numeric_limits<double>::quiet_NaN();
    double bd_r2 = std::numeric_limits<double>::quiet_NaN();
    QuadConfig bd_quad;
    bool bd_quad_given = false;
    double bd_xmin = 1e-2, bd_xmax = 1e2;
    int bd_xpoints = 0;  // 0 = suite default
    bd->add_option("--suite", bd_suite, "xdkk | xdkk-improved | turan | kratio")->required();
    bd->add_option("--v", bd_v, "restrict the v grid to these values");
    bd->add_option("--x-min", bd_xmin, "x grid start");
    bd->add_option("--x-max", bd_xmax, "x grid end");
    bd->add_option("--x-points", bd_xpoints, "x grid size (log-spaced)");
    bd->add_option("--r1", bd_r1, "kratio lower exponent override");
    bd->add_option("--r2", bd_r2, "kratio upper exponent override");
    bd->add_option("--format", bd_format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}));
    bd->add_option("--rel-tol", bd_quad.rel_tol, "quadrature relative tolerance")
        ->each([&](const std::string&) { bd_quad_given = true; });
    bd->add_option("--abs-tol", bd_quad.abs_tol, "quadrature absolute tolerance")
        ->each([&](const std::string&) { bd_quad_given = true; });
    bd->add_option("--output,-o", bd_output, "output path (default stdout)");

    // emit
    auto* em = app.add_subcommand("emit", "Evaluate a function on a grid (CSV)");
    std::string em_fn, em_v, em_output;
    double em_xmin = 0.01, em_xmax = 100.0, em_vmin = 0.55, em_vmax = 0.95;
    int em_points = 200;
    em->add_option("--fn", em_fn,
                   "phi | alzer-a | villarino-l | qi-q | lambda | hv | theta-v")
        ->required();
    em->add_option("--x-min", em_xmin, "grid start (x or t)");
    em->add_option("--x-max", em_xmax, "grid end (x or t)");
    em->add_option("--points", em_points, "number of rows");
    em->add_option("--v", em_v, "order for lambda/hv (rational or decimal)");
    em->add_option("--v-min", em_vmin, "theta-v grid start");
    em->add_option("--v-max", em_vmax, "theta-v grid end");
    em->add_option("--output,-o", em_output, "output path (default stdout)");

    // report-all
    auto* ra = app.add_subcommand("report-all", "Run every suite with defaults");
    std::string ra_output;
    ra->add_option("--output,-o", ra_output, "output path (default stdout)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    }

    try {
        if (vs->parsed())
            return cmd_verify_sequences(vs_suite, vs_nmax, vs_v, vs_output);
        if (cl->parsed())
            return cmd_classify(cl_pair, cl_f, cl_g, cl_hint, cl_v, cl_quad, cl_output);
        if (bd->parsed()) {
            std::optional<double> r1, r2;
            if (!std::isnan(bd_r1)) r1 = bd_r1;
            if (!std::isnan(bd_r2)) r2 = bd_r2;
            return cmd_bounds(bd_suite, bd_v, bd_xmin, bd_xmax, bd_xpoints, r1, r2, bd_quad,
                              bd_quad_given, bd_format, bd_output);
        }
        if (em->parsed())
            return cmd_emit(em_fn, em_xmin, em_xmax, em_points, em_v, em_vmin, em_vmax,
                            em_output);
        if (ra->parsed()) return cmd_report_all(ra_output);
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInternal;
    }
    return kUsage;
}

int run(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args);
}

} // namespace monolap::cli
