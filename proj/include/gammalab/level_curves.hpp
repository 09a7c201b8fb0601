#pragma once

// Constant-modulus curves y_r(x) of |Gamma| in the upper-right quadrant:
// slope formula from the logarithmic derivative of the Weierstrass product,
// real-axis seeding on (alpha, inf), predictor-corrector tracing, and the
// growth-ratio report y'/log x, y/(x log x).

#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include "gammalab/errors.hpp"
#include "gammalab/gamma_core.hpp"

namespace gammalab {

struct LevelCurveSample {
    double x;
    double y;
    double slope;
    double residual;  // | |Gamma(x+iy)| - r | / r
};

struct LevelCurveTrace {
    double r = 0.0;
    std::vector<LevelCurveSample> samples;
    double x_start = 0.0;  // real-axis seed (y = 0 endpoint)
    double x_end = 0.0;
};

struct GrowthReport {
    double r = 0.0;
    std::vector<std::pair<double, double>> ratios_slope;  // (x, y'/log x)
    std::vector<std::pair<double, double>> ratios_value;  // (x, y/(x log x))
    double c_hat = 0.0;        // min observed ratio over both families
    double c_prime_hat = 0.0;  // max observed ratio
};

/// Slope y_r'(x) of the constant-modulus curve through (x, y), from the
/// series form of d/dx log|Gamma| and d/dy log|Gamma| with K explicit terms.
/// The tail beyond K is restored by the same integral comparison that bounds
/// it in closed form: the summand is monotone, so replacing the tail sum by
/// the integral from K+1/2 leaves an error below the summand's curvature,
/// O(x/K^3) here.
inline double level_slope(double x, double y, long K = 100000) {
    if (!(x > 0.0) || !(y > 0.0))
        throw domain_error("level_slope: requires x > 0 and y > 0");
    if (K < 10000) throw argument_error("level_slope: K must be >= 10^4");
    const double r2 = x * x + y * y;
    double num = -engine_traits<double>::euler() - x / r2;
    double den = y / r2;
    for (long n = 1; n <= K; ++n) {
        const double nx = static_cast<double>(n) + x;
        const double q = nx * nx + y * y;
        num += 1.0 / static_cast<double>(n) - nx / q;
        den += y / q;
    }
    const double a = static_cast<double>(K) + 0.5;
    const double ax = a + x;
    num += 0.5 * std::log((ax * ax + y * y) / (a * a));
    den += 1.570796326794896619231321691639751442 - std::atan(ax / y);
    return num / den;
}

/// Denominator of the slope formula alone (used by tests against the
/// integral lower bound pi/4 when y >= x).
inline double level_slope_denominator(double x, double y, long K = 100000) {
    if (!(x > 0.0) || !(y > 0.0))
        throw domain_error("level_slope_denominator: requires x > 0 and y > 0");
    const double r2 = x * x + y * y;
    double den = y / r2;
    for (long n = 1; n <= K; ++n) {
        const double nx = static_cast<double>(n) + x;
        den += y / (nx * nx + y * y);
    }
    const double a = static_cast<double>(K) + 0.5;
    den += 1.570796326794896619231321691639751442 - std::atan((a + x) / y);
    return den;
}

/// Abscissa x0 > alpha with Gamma(x0) = r, by bisection then Newton.
/// Gamma is strictly increasing on (alpha, inf), so the seed is unique.
inline double real_axis_seed(double r) {
    if (!(r > gamma_at_alpha()))
        throw no_seed_error("real_axis_seed: r <= Gamma(alpha), no seed on (alpha, inf)");
    const double log_r = std::log(r);
    double lo = constants().alpha_root;
    double hi = lo + 1.0;
    while (engine_d::log_gamma_real(hi) < log_r) hi += std::max(1.0, 0.5 * hi);
    for (int i = 0; i < 70; ++i) {
        const double mid = 0.5 * (lo + hi);
        (engine_d::log_gamma_real(mid) < log_r ? lo : hi) = mid;
    }
    double x = 0.5 * (lo + hi);
    for (int i = 0; i < 6; ++i) {
        const double f = engine_d::log_gamma_real(x) - log_r;
        x -= f / engine_d::digamma_real(x);
    }
    return x;
}

namespace detail {

inline double log_abs_gamma_xy(double x, double y) {
    using E = engine_d;
    if (y == 0.0) return E::log_gamma_real(x);
    return E::log_gamma(std::complex<double>(x, y)).real();
}

}  // namespace detail

/// Trace |Gamma(x + i y_r(x))| = r from the real-axis seed to x_end.
///
/// The curve leaves the axis vertically (conjugate symmetry), so the first
/// stretch is stepped in y with a Newton corrector in x; once the slope
/// drops below 4 the trace switches to the spec'd x-stepping with the
/// corrector in y. Step policy: start h = 0.05, halve on corrector failure,
/// double after 5 easy steps, cap at 0.5.
inline LevelCurveTrace trace_level_curve(double r, double x_end,
                                         const PrecisionConfig& cfg = {}) {
    using E = engine_d;
    const double x0 = real_axis_seed(r);
    if (!(x_end > x0))
        throw argument_error("trace_level_curve: x_end must exceed the real-axis seed");
    const long K = cfg.series_truncation_K;
    const double log_r = std::log(r);
    const double corrector_tol = 1e-12;

    LevelCurveTrace trace;
    trace.r = r;
    trace.x_start = x0;
    trace.x_end = x_end;
    trace.samples.push_back(
        {x0, 0.0, std::numeric_limits<double>::infinity(), 0.0});

    double x = x0, y = 0.0;
    double h = 0.05;
    int easy_streak = 0;

    auto emit = [&](double sx, double sy) {
        const double la = detail::log_abs_gamma_xy(sx, sy);
        const double residual = std::abs(std::exp(la - log_r) - 1.0);
        trace.samples.push_back({sx, sy, level_slope(sx, sy, K), residual});
    };

    // Phase 1: step in y while the curve is steep.
    bool steep = true;
    while (steep) {
        const std::complex<double> ps = E::digamma({x, y});
        if (y > 0.0 && ps.real() / ps.imag() <= 4.0) break;  // hand over to x-stepping
        const double y_new = y + h;
        double x_new = x;
        if (y > 0.0) x_new += h * ps.imag() / ps.real();  // predictor dx/dy
        bool ok = false;
        for (int it = 0; it <= 3; ++it) {
            const double f = detail::log_abs_gamma_xy(x_new, y_new) - log_r;
            if (std::abs(f) < corrector_tol) {
                ok = true;
                break;
            }
            if (it == 3) break;
            const double fx = E::digamma({x_new, y_new}).real();
            x_new -= f / fx;
        }
        if (!ok) {
            h *= 0.5;
            easy_streak = 0;
            if (h < 1e-8)
                throw trace_error("trace_level_curve: corrector diverged in the steep phase",
                                  x);
            continue;
        }
        x = x_new;
        y = y_new;
        emit(x, y);
        if (++easy_streak >= 5) {
            h = std::min(h * 2.0, 0.5);
            easy_streak = 0;
        }
        if (x >= x_end) {
            steep = false;  // unusual (x_end barely past the seed) but complete
            return trace;
        }
    }

    // Phase 2: step in x, Newton corrector in y.
    h = std::min(h, 0.05);
    easy_streak = 0;
    while (x < x_end) {
        const double hx = std::min(h, x_end - x);
        const double x_new = x + hx;
        double y_new = y + hx * level_slope(x, y, K);  // predictor via the slope series
        bool ok = false;
        for (int it = 0; it <= 3; ++it) {
            const double f = detail::log_abs_gamma_xy(x_new, y_new) - log_r;
            if (std::abs(f) < corrector_tol) {
                ok = true;
                break;
            }
            if (it == 3) break;
            const double fy = -E::digamma({x_new, y_new}).imag();  // d/dy log|Gamma|
            y_new -= f / fy;
        }
        if (!(ok && y_new > y)) {
            h *= 0.5;
            easy_streak = 0;
            if (h < 1e-8)
                throw trace_error("trace_level_curve: corrector diverged", x);
            continue;
        }
        x = x_new;
        y = y_new;
        emit(x, y);
        if (++easy_streak >= 5) {
            h = std::min(h * 2.0, 0.5);
            easy_streak = 0;
        }
    }
    return trace;
}

/// Samplewise growth ratios over x >= 10 and their observed envelope.
inline GrowthReport growth_ratio_report(const LevelCurveTrace& trace) {
    std::size_t usable = 0;
    for (const auto& s : trace.samples)
        if (s.x >= 10.0 && s.y > 0.0) ++usable;
    if (usable < 100)
        throw argument_error(
            "growth_ratio_report: need >= 100 samples with x >= 10");
    GrowthReport rep;
    rep.r = trace.r;
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (const auto& s : trace.samples) {
        if (s.x < 10.0 || s.y <= 0.0) continue;
        const double lx = std::log(s.x);
        const double rs = s.slope / lx;
        const double rv = s.y / (s.x * lx);
        rep.ratios_slope.emplace_back(s.x, rs);
        rep.ratios_value.emplace_back(s.x, rv);
        lo = std::min({lo, rs, rv});
        hi = std::max({hi, rs, rv});
    }
    rep.c_hat = lo;
    rep.c_prime_hat = hi;
    return rep;
}

}  // namespace gammalab
