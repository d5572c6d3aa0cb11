#include "monolap/results.hpp"

#include <cmath>

#include "monolap/errors.hpp"
#include "monolap/kernels.hpp"
#include "monolap/parallel.hpp"
#include "monolap/specfun.hpp"

namespace monolap::results {

using monorules::CmMode;
using monorules::cm_check;
using monorules::MonotoneVerdict;
using monorules::VerdictKind;
using quadrature::integrate;
using quadrature::QuadConfig;
using quadrature::TransformSpec;
using quadrature::Weight;
using namespace monolap::specfun;

double phi_fn(double x) {
    if (!(x > 0.0)) throw DomainError("phi_fn: x > 0 required");
    return 1.0 / digamma_plus_half_minus_log(x) - 24.0 * x * x;
}

double alzer_A(double x) {
    if (!(x > 0.0)) throw DomainError("alzer_A: x > 0 required");
    return 0.5 / digamma_plus_one_minus_log(x) - x;
}

double villarino_L(double x) {
    if (!(x > 0.0)) throw DomainError("villarino_L: x > 0 required");
    return 2.0 / two_digamma_minus_log_product(x) - 6.0 * x * (x + 1.0);
}

double qi_Q(double x) {
    if (!(x > 0.0)) throw DomainError("qi_Q: x > 0 required");
    return 1.0 / log_plus_half_inv_minus_digamma(x) - 12.0 * x * x;
}

namespace {

double ratio_form(const quadrature::KernelSpec& num, const quadrature::KernelSpec& den,
                  double x, const QuadConfig& cfg) {
    TransformSpec ns{num, Weight::exp_weight(), 0.0,
                     std::numeric_limits<double>::infinity()};
    TransformSpec ds{den, Weight::exp_weight(), 0.0,
                     std::numeric_limits<double>::infinity()};
    return integrate(ns, x, cfg).value / integrate(ds, x, cfg).value;
}

} // namespace

double phi_ratio_form(double x, const QuadConfig& cfg) {
    return ratio_form(spec_neg24_q2(), spec_q(), x, cfg);
}

double alzer_A_ratio_form(double x, const QuadConfig& cfg) {
    return ratio_form(spec_neg_p1_prime(), spec_p1(), x, cfg);
}

double villarino_L_ratio_form(double x, const QuadConfig& cfg) {
    return ratio_form(spec_l_numerator(), spec_p2(), x, cfg);
}

double qi_Q_ratio_form(double x, const QuadConfig& cfg) {
    return ratio_form(spec_q_numerator(), spec_p3(), x, cfg);
}

double lambda_v(double v, double x, const QuadConfig& cfg) {
    if (!(v >= 0.0)) throw DomainError("lambda_v: v >= 0 required");
    return x + bessel_log_deriv(v, x, cfg);
}

ThetaResult theta_v(double v) {
    if (!(v > 0.0 && v < 1.0) || v == 0.5)
        throw DomainError("theta_v: v in (0,1) \\ {1/2} required");
    // bracket the sign change of h_v' on a log grid, then bisect
    const bool max_case = v > 0.5;  // h_v' goes + -> - for v in (1/2,1)
    double prev_t = 1e-3;
    double prev = kernel_hv_prime(v, prev_t);
    double lo = 0.0, hi = 0.0;
    for (int i = 1; i <= 400; ++i) {
        double t = 1e-3 * std::pow(80.0 / 1e-3, i / 400.0);
        double cur = kernel_hv_prime(v, t);
        if ((prev > 0.0) != (cur > 0.0)) {
            lo = prev_t;
            hi = t;
            break;
        }
        prev_t = t;
        prev = cur;
    }
    if (hi == 0.0) throw BracketError("theta_v: no sign change of h_v' found in (0, 80]");
    for (int it = 0; it < 200 && (hi - lo) > 1e-12 * std::max(1.0, lo); ++it) {
        double mid = 0.5 * (lo + hi);
        double fm = kernel_hv_prime(v, mid);
        if ((fm > 0.0) == max_case) lo = mid; else hi = mid;
    }
    double t_star = 0.5 * (lo + hi);
    return {t_star, kernel_hv(v, t_star)};
}

QuadConfig bounds_quad_defaults() {
    QuadConfig cfg;
    cfg.rel_tol = 5e-13;
    cfg.abs_tol = 1e-250;  // pure relative control; scaled integrands are O(1)
    return cfg;
}

namespace {

std::vector<double> default_v_grid() {
    return {0.0, 0.1, 0.25, 0.49, 0.51, 0.75, 1.0, 1.5, 2.0, 5.0};
}

std::vector<double> log_spaced(double lo, double hi, int n) {
    std::vector<double> g(n);
    for (int i = 0; i < n; ++i)
        g[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1));
    return g;
}

void finalize(BoundSweepReport& rep) {
    rep.min_margin = std::numeric_limits<double>::infinity();
    for (const auto& p : rep.grid) {
        rep.min_margin = std::min(rep.min_margin, p.margin);
        if (p.margin < -BoundSweepReport::kNoiseBand) rep.violations.push_back(p);
        else if (p.margin <= BoundSweepReport::kNoiseBand) ++rep.inconclusive;
    }
    rep.pass = rep.violations.empty();
}

} // namespace

BoundSweepReport bound_suite(const std::string& suite_id, const BoundConfig& grid,
                             const QuadConfig& cfg) {
    BoundSweepReport rep;
    rep.suite_id = suite_id;
    std::vector<double> vs = grid.v_grid.empty() ? default_v_grid() : grid.v_grid;
    std::vector<double> xs = grid.x_grid.empty() ? log_spaced(1e-2, 1e2, 33) : grid.x_grid;

    if (suite_id == "xdkk" || suite_id == "xdkk-improved" || suite_id == "turan") {
        const bool improved = suite_id == "xdkk-improved";
        const bool turan = suite_id == "turan";
        std::vector<std::pair<double, double>> pts;
        for (double v : vs) {
            if (std::fabs(std::fabs(v) - 0.5) < 1e-12) continue;  // equality case excluded
            for (double x : xs) pts.emplace_back(v, x);
        }
        std::vector<std::vector<BoundPoint>> rows(pts.size());
        parallel_for(pts.size(), [&](std::size_t i) {
            auto [v, x] = pts[i];
            double av = std::fabs(v);
            double mx = std::max(av, 0.5), mn = std::min(av, 0.5);
            if (turan) {
                double s = bessel_k_scaled(v, x, cfg);
                double sm = bessel_k_scaled(v - 1.0, x, cfg);
                double sp = bessel_k_scaled(v + 1.0, x, cfg);
                double diff = s * s - sm * sp;       // e^{2x}(K_v^2 - K_{v-1}K_{v+1})
                double bound = -s * s / x;           // e^{2x} (-K_v^2/x)
                BoundPoint p{v, x, 0.0, 0.0, 0.0, 0.0, ""};
                if (av > 0.5) {                      // diff > bound
                    p.lhs = bound; p.rhs = diff; p.side = "gt";
                } else {                             // diff < bound
                    p.lhs = diff; p.rhs = bound; p.side = "lt";
                }
                p.margin = p.rhs - p.lhs;
                rows[i] = {p};
            } else {
                double R = bessel_log_deriv(v, x, cfg);
                double lo_bound = improved ? -std::sqrt(x * x + x + mx * mx) : -x - mx;
                double hi_bound = improved ? -std::sqrt(x * x + x + mn * mn) : -x - mn;
                BoundPoint plo{v, x, 0.0, lo_bound, R, R - lo_bound, "lower"};
                BoundPoint phi{v, x, 0.0, R, hi_bound, hi_bound - R, "upper"};
                rows[i] = {plo, phi};
            }
        });
        for (auto& r : rows)
            for (auto& p : r) rep.grid.push_back(p);
        finalize(rep);
        return rep;
    }

    if (suite_id == "kratio") {
        std::vector<double> xg = grid.x_grid.empty() ? log_spaced(1e-2, 1e2, 9) : grid.x_grid;
        struct Item {
            double v, x, y;
        };
        std::vector<Item> pts;
        for (double v : vs) {
            if (std::fabs(std::fabs(v) - 0.5) < 1e-12) continue;
            for (std::size_t i = 0; i < xg.size(); ++i)
                for (std::size_t j = i + 1; j < xg.size(); ++j)
                    pts.push_back({v, xg[i], xg[j]});
        }
        std::vector<std::vector<BoundPoint>> rows(pts.size());
        parallel_for(pts.size(), [&](std::size_t i) {
            auto [v, x, y] = pts[i];
            double av = std::fabs(v);
            double r1 = grid.r1.value_or(std::min(av, 0.5));
            double r2 = grid.r2.value_or(std::max(av, 0.5));
            // K(x)/K(y) = e^{y-x} S(x)/S(y): compare S(x)/S(y) with (y/x)^r
            double ratio = bessel_k_scaled(v, x, cfg) / bessel_k_scaled(v, y, cfg);
            double lo_bound = std::pow(y / x, r1);
            double hi_bound = std::pow(y / x, r2);
            BoundPoint plo{v, x, y, lo_bound, ratio, ratio - lo_bound, "lower"};
            BoundPoint phi{v, x, y, ratio, hi_bound, hi_bound - ratio, "upper"};
            rows[i] = {plo, phi};
        });
        for (auto& r : rows)
            for (auto& p : r) rep.grid.push_back(p);
        finalize(rep);
        return rep;
    }

    throw DomainError("bound_suite: unknown suite id '" + suite_id + "'");
}

MonotoneVerdict xr_ex_kv_monotonicity(double v, double r, const std::vector<double>& x_grid,
                                      const QuadConfig& cfg) {
    if (!(v >= 0.0)) throw DomainError("xr_ex_kv_monotonicity: v >= 0 required");
    std::vector<double> xs = x_grid.empty() ? log_spaced(1e-2, 1e2, 33) : x_grid;
    // sign of d/dx [x^r e^x K_v] is the sign of phi(x) = r + Lambda(x)
    auto phi = [&](double x) { return r + lambda_v(v, x, cfg); };
    std::vector<double> vals(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) vals[i] = phi(xs[i]);

    MonotoneVerdict verdict;
    const double band = 1e-9;
    bool all_pos = true, all_neg = true;
    int flips = 0;
    for (std::size_t i = 0; i < vals.size(); ++i) {
        all_pos = all_pos && vals[i] > -band;
        all_neg = all_neg && vals[i] < band;
        if (i > 0 && (vals[i] > 0.0) != (vals[i - 1] > 0.0)) ++flips;
    }
    for (std::size_t i = 0; i < xs.size(); ++i)
        verdict.evidence.push_back({xs[i], vals[i], 0.0});
    if (all_pos) {
        verdict.kind = VerdictKind::Increasing;
        return verdict;
    }
    if (all_neg) {
        verdict.kind = VerdictKind::Decreasing;
        return verdict;
    }
    if (flips == 1) {
        std::size_t i = 1;
        while ((vals[i] > 0.0) == (vals[0] > 0.0)) ++i;
        double lo = xs[i - 1], hi = xs[i];
        bool lo_pos = vals[i - 1] > 0.0;
        for (int it = 0; it < 200 && (hi - lo) > 1e-9 * lo; ++it) {
            double mid = std::sqrt(lo * hi);
            if ((phi(mid) > 0.0) == lo_pos) lo = mid; else hi = mid;
        }
        verdict.x_star = std::sqrt(lo * hi);
        verdict.kind = vals[0] < 0.0 ? VerdictKind::UnimodalMin : VerdictKind::UnimodalMax;
        return verdict;
    }
    verdict.kind = VerdictKind::Indeterminate;
    verdict.note = "phi sign pattern has multiple changes on the grid";
    return verdict;
}

namespace {

PLambdaReport p_lambda_case(double v, double lambda, bool negated, const QuadConfig& cfg) {
    if (!(v >= 0.0)) throw DomainError("p_lambda_cm: v >= 0 required");
    PLambdaReport rep;
    rep.v = v;
    rep.lambda = lambda;

    // CM thresholds: sup h_v for +P, inf h_v for -P, split by the v regime
    double sup_h, inf_h;
    if (v >= 1.0) {
        sup_h = v;
        inf_h = 0.5;
        rep.regime = "v >= 1";
    } else if (v > 0.5) {
        sup_h = theta_v(v).theta;
        inf_h = 0.5;
        rep.regime = "v in (1/2, 1)";
    } else if (v == 0.5) {
        sup_h = 0.5;
        inf_h = 0.5;
        rep.regime = "v = 1/2 (h constant)";
    } else if (v > 0.0) {
        sup_h = 0.5;
        inf_h = theta_v(v).theta;
        rep.regime = "v in (0, 1/2)";
    } else {
        sup_h = 0.5;  // h_0 decreasing from 1/2 onto (0, 1/2)
        inf_h = 0.0;
        rep.regime = "v = 0";
    }
    rep.threshold = negated ? inf_h : sup_h;
    rep.expected_cm = negated ? (lambda <= inf_h) : (lambda >= sup_h);

    auto P = [v, lambda, negated, &cfg](double x) {
        double s = bessel_k_scaled(v, x, cfg);
        double sp = bessel_k_prime_scaled(v, x, cfg);
        double p = (x + lambda) * s + x * sp;
        return negated ? -p : p;
    };
    rep.measured = cm_check(P, 6, {0.5, 1.0, 2.0, 5.0});

    if (rep.expected_cm)
        rep.status = rep.measured.consistent ? PLambdaStatus::Confirmed
                                             : PLambdaStatus::Contradiction;
    else
        rep.status = rep.measured.consistent ? PLambdaStatus::InconclusiveNoWitness
                                             : PLambdaStatus::ViolationMatchesPrediction;
    return rep;
}

} // namespace

PLambdaReport p_lambda_cm(double v, double lambda, const QuadConfig& cfg) {
    return p_lambda_case(v, lambda, false, cfg);
}

PLambdaReport p_lambda_cm_negated(double v, double lambda, const QuadConfig& cfg) {
    return p_lambda_case(v, lambda, true, cfg);
}

} // namespace monolap::results
