#include "monolap/monorules.hpp"

#include <algorithm>
#include <cmath>

namespace monolap::monorules {

using quadrature::integrate;
using quadrature::QuadConfig;
using quadrature::transform_derivative;

namespace {

struct HParts {
    double F, G, Fp, Gp;
};

HParts h_parts(const RatioPair& pair, double x, const QuadConfig& cfg) {
    HParts p;
    p.F = integrate(pair.spec_f(), x, cfg).value;
    p.G = integrate(pair.spec_g(), x, cfg).value;
    p.Fp = transform_derivative(pair.spec_f(), x, 1, cfg).value;
    p.Gp = transform_derivative(pair.spec_g(), x, 1, cfg).value;
    return p;
}

std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> g(n);
    double llo = std::log(lo), lhi = std::log(hi);
    for (int i = 0; i < n; ++i)
        g[i] = std::exp(llo + (lhi - llo) * static_cast<double>(i) / (n - 1));
    return g;
}

} // namespace

double aux_H(const RatioPair& pair, double x, const QuadConfig& cfg) {
    HParts p = h_parts(pair, x, cfg);
    double guard = 1e-280 * (1.0 + std::fabs(p.G));
    if (std::fabs(p.Gp) < guard)
        throw DegenerateDivisionError("aux_H: |G'(x)| below machine guard at x = " +
                                      std::to_string(x));
    return (p.Fp / p.Gp) * p.G - p.F;
}

namespace {

struct LadderVerdict {
    HSign sign = HSign::Unresolved;
    std::optional<double> extrapolated;
    bool definitive = false;  // false: another ladder at smaller x may resolve it
};

// Classify one halving ladder h[k] = H(x0 2^{-k}), k = 0..8.
LadderVerdict classify_ladder(const double (&h)[9], double band,
                              std::vector<double>& diagonal_out) {
    constexpr int kLevels = 9;
    double t[kLevels][kLevels];
    for (int k = 0; k < kLevels; ++k) {
        t[k][0] = h[k];
        for (int j = 1; j <= k; ++j)
            t[k][j] = t[k][j - 1] + (t[k][j - 1] - t[k - 1][j - 1]) / (std::ldexp(1.0, j) - 1.0);
    }
    for (int k = 0; k < kLevels; ++k) diagonal_out.push_back(t[k][k]);
    double last = t[kLevels - 1][kLevels - 1];
    double prev = t[kLevels - 2][kLevels - 2];

    LadderVerdict out;
    auto sign_of = [&](double v) {
        if (std::fabs(v) <= band) return HSign::Zero;
        return v > 0.0 ? HSign::Positive : HSign::Negative;
    };

    // converged tableau: believe the extrapolant
    if (std::fabs(last - prev) <= std::max(band, 1e-3 * std::fabs(last))) {
        out.sign = sign_of(last);
        out.extrapolated = last;
        out.definitive = true;
        return out;
    }
    // contractive diagonal: append the geometric tail estimate; covers both a
    // slow approach to a nonzero limit and a power-law approach to 0
    {
        double d[3];
        for (int i = 0; i < 3; ++i)
            d[i] = t[kLevels - 3 + i][kLevels - 3 + i] - t[kLevels - 4 + i][kLevels - 4 + i];
        bool contractive = true;
        for (int i = 0; i < 2; ++i) {
            double num = std::fabs(d[i + 1]), den = std::fabs(d[i]);
            double ratio = den > 0.0 ? num / den : 2.0;
            if (!(ratio > 0.02 && ratio < 0.92)) contractive = false;
        }
        if (contractive) {
            double r = std::fabs(d[2]) / std::fabs(d[1]);
            double estimate = last + d[2] * r / (1.0 - r);
            out.extrapolated = estimate;
            out.sign = std::fabs(estimate) <= std::max(band, 0.3 * std::fabs(d[2]))
                           ? HSign::Zero
                           : (estimate > 0.0 ? HSign::Positive : HSign::Negative);
            out.definitive = true;
            return out;
        }
    }
    // raw values decaying geometrically: H ~ c x^alpha, the limit is 0
    {
        double rmin = 2.0, rmax = 0.0;
        bool decaying = true;
        for (int k = kLevels - 5; k < kLevels; ++k) {
            double den = std::fabs(h[k - 1]);
            double ratio = den > 0.0 ? std::fabs(h[k]) / den : 2.0;
            rmin = std::min(rmin, ratio);
            rmax = std::max(rmax, ratio);
            if (!(ratio > 0.02 && ratio < 0.93)) decaying = false;
        }
        if (decaying && rmax / rmin < 1.4) {
            out.sign = HSign::Zero;
            out.extrapolated = 0.0;
            out.definitive = true;
            return out;
        }
    }
    // constant sign: definitive only while |h| is not shrinking at the end
    // (a shrinking tail cannot distinguish a one-sided approach to 0 from a
    // small nonzero limit at this resolution)
    {
        bool all_pos = true, all_neg = true;
        for (int k = 0; k < kLevels; ++k) {
            all_pos = all_pos && h[k] > 0.0;
            all_neg = all_neg && h[k] < 0.0;
        }
        if (all_pos || all_neg) {
            out.sign = all_pos ? HSign::Positive : HSign::Negative;
            out.definitive = std::fabs(h[kLevels - 1]) >= std::fabs(h[kLevels - 3]);
            return out;
        }
    }
    out.sign = HSign::Unresolved;
    return out;
}

} // namespace

HZeroResult h_sign_at_zero(const RatioPair& pair, const QuadConfig& cfg) {
    // scale for the zero band, from the x0 = 1 transforms
    double scale = std::fabs(integrate(pair.spec_f(), 1.0, cfg).value) +
                   std::fabs(integrate(pair.spec_g(), 1.0, cfg).value);
    const double band = 1e-6 * scale;

    HZeroResult out;
    double h[9];
    for (int k = 0; k < 9; ++k) h[k] = aux_H(pair, std::ldexp(1.0, -k), cfg);
    LadderVerdict first = classify_ladder(h, band, out.diagonal);
    out.sign = first.sign;
    out.extrapolated = first.extrapolated;
    if (first.definitive) return out;

    // ambiguous at x0 = 1: refine on a second ladder x = 2^{-8} .. 2^{-16},
    // where slow power-law tails have settled into clean geometric decay
    double h2[9];
    h2[0] = h[8];
    for (int k = 1; k < 9; ++k) h2[k] = aux_H(pair, std::ldexp(1.0, -8 - k), cfg);
    LadderVerdict second = classify_ladder(h2, band, out.diagonal);
    if (second.definitive || second.sign != HSign::Unresolved) {
        out.sign = second.sign;
        out.extrapolated = second.extrapolated;
        return out;
    }
    out.sign = HSign::Unresolved;
    out.extrapolated.reset();
    return out;
}

Discretization discretize_ratio(const quadrature::KernelSpec& f,
                                const quadrature::KernelSpec& g, double a, double b, int n,
                                double x) {
    if (!(0.0 < a) || !(a < b) || !std::isfinite(b))
        throw DomainError("discretize_ratio: need 0 < a < b < inf");
    if (n < 2) throw DomainError("discretize_ratio: n >= 2 required");
    if (!(x > 0.0)) throw DomainError("discretize_ratio: x > 0 required");
    const double y = std::exp(-(b - a) * x / n);
    // Horner over i = n-1 .. 0 keeps evaluation order deterministic
    double fn = 0.0, gn = 0.0;
    for (int i = n - 1; i >= 0; --i) {
        double t = a + (b - a) * static_cast<double>(i) / n;
        double gv = g.eval(t);
        if (!(gv > 0.0)) throw DomainError("discretize_ratio: g must be positive on [a,b)");
        fn = fn * y + f.eval(t);
        gn = gn * y + gv;
    }
    return Discretization{fn / gn, y};
}

namespace {

struct ShapeScan {
    bool constant = false;
    bool monotone = false;
    bool increasing = false;   // valid when monotone
    bool unimodal = false;
    bool rises_first = false;  // valid when unimodal: true = increasing then decreasing
    std::size_t peak_index = 0;
};

// Tolerant direction scan of f/g samples: one inversion allowed per leg.
ShapeScan scan_ratio_shape(const std::vector<double>& r) {
    ShapeScan s;
    double lo = *std::min_element(r.begin(), r.end());
    double hi = *std::max_element(r.begin(), r.end());
    double tol = 1e-12 * std::max(1.0, std::max(std::fabs(lo), std::fabs(hi)));
    if (hi - lo <= tol) {
        s.constant = true;
        return s;
    }
    auto count_violations = [&](std::size_t from, std::size_t to, bool up) {
        int bad = 0;
        for (std::size_t i = from; i + 1 <= to; ++i) {
            double d = r[i + 1] - r[i];
            if (up ? d < -tol : d > tol) ++bad;
        }
        return bad;
    };
    std::size_t n = r.size();
    if (count_violations(0, n - 1, true) <= 1) {
        s.monotone = true;
        s.increasing = true;
        return s;
    }
    if (count_violations(0, n - 1, false) <= 1) {
        s.monotone = true;
        s.increasing = false;
        return s;
    }
    std::size_t imax = std::max_element(r.begin(), r.end()) - r.begin();
    if (imax > 0 && imax + 1 < n && count_violations(0, imax, true) <= 1 &&
        count_violations(imax, n - 1, false) <= 1) {
        s.unimodal = true;
        s.rises_first = true;
        s.peak_index = imax;
        return s;
    }
    std::size_t imin = std::min_element(r.begin(), r.end()) - r.begin();
    if (imin > 0 && imin + 1 < n && count_violations(0, imin, false) <= 1 &&
        count_violations(imin, n - 1, true) <= 1) {
        s.unimodal = true;
        s.rises_first = false;
        s.peak_index = imin;
        return s;
    }
    return s;
}

std::vector<double> sample_kernel_ratio(const RatioPair& pair, std::vector<double>& ts) {
    if (std::isfinite(pair.b)) {
        ts.resize(256);
        double w = pair.b - pair.a;
        for (int i = 0; i < 256; ++i)
            ts[i] = pair.a + w * (static_cast<double>(i) + 0.5) / 256.0;
    } else {
        ts = log_grid(1e-4, 1e4, 256);
        for (auto& t : ts) t += pair.a;
    }
    std::vector<double> r;
    r.reserve(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) {
        double gv = pair.g.eval(ts[i]);
        if (gv < 0.0) throw DomainError("classify_ratio: g must be positive");
        if (gv == 0.0) continue;  // far-tail underflow of a positive kernel
        double fv = pair.f.eval(ts[i]);
        if (!std::isfinite(fv) || !std::isfinite(fv / gv)) continue;
        r.push_back(fv / gv);
    }
    if (r.size() < 32)
        throw DomainError("classify_ratio: too few evaluable f/g sample points");
    return r;
}

double ratio_at(const RatioPair& pair, double x, const QuadConfig& cfg) {
    double F = integrate(pair.spec_f(), x, cfg).value;
    double G = integrate(pair.spec_g(), x, cfg).value;
    return F / G;
}

std::vector<EvidencePoint> gather_evidence(const RatioPair& pair, const QuadConfig& cfg) {
    std::vector<EvidencePoint> ev;
    for (double x : log_grid(1e-2, 1e2, 33)) {
        HParts p = h_parts(pair, x, cfg);
        double ratio = p.F / p.G;
        double rp = (p.Fp * p.G - p.F * p.Gp) / (p.G * p.G);
        ev.push_back({x, ratio, rp});
    }
    return ev;
}

// geometric bisection for the H sign change inside [lo, hi]
double bisect_h(const RatioPair& pair, double lo, double hi, const QuadConfig& cfg) {
    double flo = aux_H(pair, lo, cfg);
    for (int it = 0; it < 200 && (hi - lo) > 1e-6 * lo; ++it) {
        double mid = std::sqrt(lo * hi);
        double fm = aux_H(pair, mid, cfg);
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return std::sqrt(lo * hi);
}

} // namespace

MonotoneVerdict classify_ratio(const RatioPair& pair, ShapeHint hint, const QuadConfig& cfg) {
    std::vector<double> ts;
    std::vector<double> samples = sample_kernel_ratio(pair, ts);
    ShapeScan shape = scan_ratio_shape(samples);

    MonotoneVerdict verdict;
    if (shape.constant) {
        verdict.kind = VerdictKind::Indeterminate;
        verdict.note = "constant ratio: F/G is constant, no monotone direction";
        return verdict;
    }

    if (hint == ShapeHint::MonotoneRatio) {
        if (!shape.monotone)
            throw ShapeHintError("classify_ratio: sampled f/g is not monotone");
        // f/g increasing => F/G decreasing, and mirrored
        verdict.kind = shape.increasing ? VerdictKind::Decreasing : VerdictKind::Increasing;
        // confirm with a derivative sign scan: (F/G)' has sign -sign(H)
        int agree = 0, total = 0;
        for (double x : log_grid(1e-2, 1e2, 64)) {
            double h = aux_H(pair, x, cfg);
            double want = shape.increasing ? 1.0 : -1.0;  // required sign of H
            ++total;
            if (h * want >= 0.0) ++agree;
        }
        if (agree < total) {
            verdict.kind = VerdictKind::Indeterminate;
            verdict.note = "derivative sign scan contradicted the monotone rule";
        }
        verdict.evidence = gather_evidence(pair, cfg);
        return verdict;
    }

    if (!shape.unimodal) throw ShapeHintError("classify_ratio: sampled f/g is not unimodal");

    HZeroResult h0 = h_sign_at_zero(pair, cfg);
    verdict.h_zero_sign = h0.sign;
    if (h0.sign == HSign::Unresolved) {
        verdict.kind = VerdictKind::Indeterminate;
        verdict.note = "H(0+) sign unresolved";
        verdict.evidence = gather_evidence(pair, cfg);
        return verdict;
    }

    const bool rises_first = shape.rises_first;
    bool monotone_branch = rises_first ? (h0.sign != HSign::Negative)   // H(0+) >= 0
                                       : (h0.sign != HSign::Positive);  // H(0+) <= 0
    if (monotone_branch) {
        verdict.kind = rises_first ? VerdictKind::Decreasing : VerdictKind::Increasing;
    } else {
        // H(0+) strictly on the unimodal side: locate x* where H changes sign
        verdict.kind = rises_first ? VerdictKind::UnimodalMax : VerdictKind::UnimodalMin;
        std::vector<double> xs = log_grid(1e-4, 1e4, 65);
        double hprev = aux_H(pair, xs.front(), cfg);
        double x_star = 0.0;
        int flips = 0;
        for (std::size_t i = 1; i < xs.size(); ++i) {
            double hcur = aux_H(pair, xs[i], cfg);
            if ((hcur < 0.0) != (hprev < 0.0)) {
                ++flips;
                if (flips == 1) x_star = bisect_h(pair, xs[i - 1], xs[i], cfg);
            }
            hprev = hcur;
        }
        if (flips == 0) {
            verdict.kind = VerdictKind::Indeterminate;
            verdict.note = "H(0+) indicated a turning point but no H sign change was found";
        } else {
            verdict.x_star = x_star;
            verdict.multiple_sign_changes = flips > 1;
        }
    }
    verdict.evidence = gather_evidence(pair, cfg);
    if (verdict.x_star > 0.0) {
        // make the turning point visible in the evidence grid
        for (double x : {0.5 * verdict.x_star, verdict.x_star, 2.0 * verdict.x_star}) {
            HParts p = h_parts(pair, x, cfg);
            verdict.evidence.push_back(
                {x, p.F / p.G, (p.Fp * p.G - p.F * p.Gp) / (p.G * p.G)});
        }
        std::sort(verdict.evidence.begin(), verdict.evidence.end(),
                  [](const EvidencePoint& a, const EvidencePoint& b) { return a.x < b.x; });
    }
    return verdict;
}

RatioLimits ratio_limits(const RatioPair& pair, const QuadConfig& cfg) {
    RatioLimits out{};
    auto kernel_ratio = [&](double t) {
        double gv = pair.g.eval(t);
        if (gv == 0.0) throw LimitError("ratio_limits: g vanished at a sample point");
        return pair.f.eval(t) / gv;
    };
    auto detect_limit = [&](auto next_t) {
        double prev = kernel_ratio(next_t(0));
        for (int k = 1; k <= 24; ++k) {
            double cur = kernel_ratio(next_t(k));
            double scale = std::max({1.0, std::fabs(cur), std::fabs(prev)});
            if (std::fabs(cur - prev) <= 1e-7 * scale) return cur;
            prev = cur;
        }
        throw LimitError("ratio_limits: kernel-side limit did not settle");
    };

    if (std::isfinite(pair.b)) {
        // finite interval: lim_{x->0} F/G = int f / int g, lim_{x->inf} = f(a)/g(a)
        out.at_zero = ratio_at(pair, 1e-12, cfg);
        out.at_infinity = kernel_ratio(pair.a + 1e-12 * (pair.b - pair.a));
    } else {
        out.at_zero = detect_limit([&](int k) { return 8.0 * std::pow(2.0, k) + pair.a; });
        out.at_infinity =
            detect_limit([&](int k) { return pair.a + 1e-2 * std::pow(4.0, -k); });
    }
    out.probe_low = ratio_at(pair, 1e-3, cfg);
    out.probe_high = ratio_at(pair, 1e3, cfg);
    return out;
}

namespace {

BigRat poly_eval(const std::vector<BigRat>& c, const BigRat& t) {
    BigRat acc(0);
    for (std::size_t k = c.size(); k-- > 0;) acc = acc * t + c[k];
    return acc;
}

std::vector<BigRat> poly_derivative(const std::vector<BigRat>& c) {
    std::vector<BigRat> d;
    for (std::size_t k = 1; k < c.size(); ++k)
        d.push_back(c[k] * BigRat(static_cast<long long>(k)));
    if (d.empty()) d.push_back(BigRat(0));
    return d;
}

} // namespace

MonotoneVerdict poly_ratio_verdict(const std::vector<BigRat>& a_coeffs,
                                   const std::vector<BigRat>& b_coeffs, const BigRat& r) {
    if (a_coeffs.size() != b_coeffs.size() || a_coeffs.size() < 3)
        throw DomainError("poly_ratio_verdict: need equal degrees and at least 3 coefficients");
    if (!(r > BigRat(0))) throw DomainError("poly_ratio_verdict: r > 0 required");
    for (const auto& b : b_coeffs)
        if (!(b > BigRat(0))) throw DomainError("poly_ratio_verdict: all b_k must be positive");

    std::vector<BigRat> q;
    for (std::size_t k = 0; k < a_coeffs.size(); ++k) q.push_back(a_coeffs[k] / b_coeffs[k]);
    MonotoneVerdict verdict;
    bool all_equal = true;
    for (std::size_t k = 1; k < q.size(); ++k) all_equal = all_equal && q[k] == q[0];
    if (all_equal) {
        verdict.kind = VerdictKind::Indeterminate;
        verdict.note = "constant coefficient ratio: A/B is constant";
        return verdict;
    }
    std::vector<int> d;
    for (std::size_t k = 0; k + 1 < q.size(); ++k) d.push_back((q[k + 1] - q[k]).sign());
    auto block_pattern = [&](int first_sign) {
        bool seen_first = false, seen_second = false, switched = false;
        for (int s : d) {
            if (s == 0) continue;
            if (!switched && s == first_sign) {
                seen_first = true;
            } else if (s == -first_sign) {
                switched = true;
                seen_second = true;
            } else {
                return false;  // first block's direction reappeared after the switch
            }
        }
        return seen_first && seen_second;
    };
    bool up_down = block_pattern(+1);
    bool down_up = block_pattern(-1);
    if (!up_down && !down_up)
        throw PatternError("poly_ratio_verdict: a_k/b_k is not increasing-then-decreasing "
                           "or decreasing-then-increasing");

    auto ap = poly_derivative(a_coeffs);
    auto bp = poly_derivative(b_coeffs);
    auto H = [&](const BigRat& t) {
        // B' > 0 on (0, inf) since b_k > 0 and B is non-constant
        return (poly_eval(ap, t) / poly_eval(bp, t)) * poly_eval(b_coeffs, t) -
               poly_eval(a_coeffs, t);
    };
    int s = H(r).sign();

    if (up_down) {
        if (s >= 0) {
            verdict.kind = VerdictKind::Increasing;
            return verdict;
        }
        verdict.kind = VerdictKind::UnimodalMax;
    } else {
        if (s <= 0) {
            verdict.kind = VerdictKind::Decreasing;
            return verdict;
        }
        verdict.kind = VerdictKind::UnimodalMin;
    }

    // exact-sign bisection for the unique t0 with H(t0) = 0 in (0, r)
    BigRat lo(0), hi = r;
    int sign_hi = s;
    const BigRat half(BigInt(1), BigInt(2));
    for (int it = 0; it < 60; ++it) {
        BigRat mid = (lo + hi) * half;
        int sm = H(mid).sign();
        if (sm == 0) {
            lo = hi = mid;
            break;
        }
        if (sm == sign_hi) hi = mid; else lo = mid;
    }
    verdict.x_star = ((lo + hi) * half).to_double();
    return verdict;
}

SignChangeReport series_sign_change(const std::vector<double>& coeffs, double r) {
    if (coeffs.empty()) throw PatternError("series_sign_change: empty coefficient list");

    auto classify = [](const std::vector<double>& c) {
        // m = last index of the leading negative block if the pattern matches
        int first_nonzero = -1;
        for (std::size_t k = 0; k < c.size(); ++k)
            if (c[k] != 0.0) {
                first_nonzero = static_cast<int>(k);
                break;
            }
        if (first_nonzero < 0) return -1;
        if (c[first_nonzero] > 0.0) return -2;  // candidate for the mirrored pattern
        int m = -1;
        bool in_positive = false;
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (c[k] > 0.0) in_positive = true;
            if (c[k] < 0.0) {
                if (in_positive) return -1;  // negative after the positive block began
                m = static_cast<int>(k);
            }
        }
        if (!in_positive) return -1;  // the criterion needs a nonempty positive tail
        return m;
    };

    bool mirrored = false;
    std::vector<double> work = coeffs;
    int m = classify(work);
    if (m == -2) {
        mirrored = true;
        for (auto& c : work) c = -c;
        m = classify(work);
    }
    if (m < 0)
        throw PatternError("series_sign_change: coefficients do not match the "
                           "(-,...,-,+,...,+) pattern or its mirror");

    SignChangeReport rep;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (!rep.first_negative_index && coeffs[k] < 0.0)
            rep.first_negative_index = static_cast<int>(k);
        if (!rep.first_positive_index && coeffs[k] > 0.0)
            rep.first_positive_index = static_cast<int>(k);
    }

    auto S = [&](double t) {
        double acc = 0.0;
        for (std::size_t k = work.size(); k-- > 0;) acc = acc * t + work[k];
        return acc;
    };

    double s_at_r;
    double hi;
    if (std::isfinite(r)) {
        if (!(r > 0.0)) throw DomainError("series_sign_change: r > 0 required");
        hi = r;
        s_at_r = S(r * (1.0 - 1e-14));
    } else {
        // the positive tail always dominates eventually
        hi = 1.0;
        while (S(hi) <= 0.0 && hi < 1e12) hi *= 2.0;
        s_at_r = S(hi);
    }

    if (s_at_r <= 0.0) {
        rep.pattern = mirrored ? SignPattern::AllPositive : SignPattern::AllNegative;
        return rep;
    }
    double lo = hi;
    while (S(lo) > 0.0) {
        lo *= 0.5;
        if (lo < 1e-300)
            throw PatternError("series_sign_change: no negative region found near 0");
    }
    for (int it = 0; it < 200 && (hi - lo) > 1e-13 * hi; ++it) {
        double mid = 0.5 * (lo + hi);
        if (S(mid) > 0.0) hi = mid; else lo = mid;
    }
    rep.pattern = SignPattern::SingleCrossing;
    rep.t0 = 0.5 * (lo + hi);
    return rep;
}

CmReport cm_check(const std::function<double(double)>& F, int order,
                  const std::vector<double>& grid, double h, CmMode mode) {
    if (order < 0 || order > 8) throw DomainError("cm_check: order must be in [0, 8]");
    CmReport rep;
    rep.mode = mode;
    rep.max_order = order;
    for (double x : grid) {
        double step = h > 0.0 ? h : std::max(0.05 * x, 1e-3);
        std::vector<double> v(static_cast<std::size_t>(order) + 1);
        for (int j = 0; j <= order; ++j) v[j] = F(x + step * j);
        double band = 1e-9 * std::fabs(v[0]);
        if (v[0] < -band) rep.violations.push_back({x, 0, v[0]});  // F >= 0 in both modes
        double sign = 1.0;
        for (int n = 1; n <= order; ++n) {
            for (int j = 0; j + n <= order; ++j) v[j] = v[j + 1] - v[j];
            sign = -sign;
            double tested = sign * v[0];  // (-1)^n Delta^n F(x)
            if (mode == CmMode::CompletelyMonotonic) {
                if (tested < -band) rep.violations.push_back({x, n, tested});
            } else {
                if (tested > band) rep.violations.push_back({x, n, tested});
            }
        }
    }
    rep.consistent = rep.violations.empty();
    return rep;
}

} // namespace monolap::monorules
