#pragma once

// Enumeration and certification of the fibers Gamma(z) = c. All contour and
// Newton work happens on the entire function h(z) = 1/Gamma(z) - 1/c, whose
// zeros are exactly the fiber points. Counting is by the argument principle
// (continuous argument increments along sampled contours); the left-half-
// plane points near -n are located from the first-order Laurent seed
// (-1)^n/(n! c) and certified with winding count 1 on the circle of radius
// 2 pi |c| / Gamma(n) around -n, in 50-digit arithmetic when that radius is
// below double resolution.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <optional>
#include <vector>

#include "gammalab/errors.hpp"
#include "gammalab/gamma_core.hpp"

namespace gammalab {

struct Rectangle {
    double x_lo, x_hi, y_lo, y_hi;

    void validate() const {
        if (!(x_lo < x_hi && y_lo < y_hi))
            throw argument_error("Rectangle: requires x_lo < x_hi and y_lo < y_hi");
        // Contour must stay off the poles of Gamma. Zeros of 1/Gamma on the
        // contour are caught separately by the boundary-modulus check.
        auto near_nonpos_integer = [](double x) {
            const double r = std::round(x);
            return r <= 0.0 && std::abs(x - r) < 1e-6;
        };
        if (near_nonpos_integer(x_lo) || near_nonpos_integer(x_hi))
            throw argument_error("Rectangle: vertical side within 1e-6 of a non-positive integer");
        // A horizontal side passes a pole iff its y is within 1e-6 of 0 and
        // some non-positive integer lies in the side's x-span.
        const double k_max = std::min(0.0, std::floor(x_hi + 1e-6));
        const bool span_has_pole = k_max >= x_lo - 1e-6;
        if (span_has_pole && (std::abs(y_lo) < 1e-6 || std::abs(y_hi) < 1e-6))
            throw argument_error("Rectangle: horizontal side within 1e-6 of the pole row");
    }
    double width() const { return x_hi - x_lo; }
    double height() const { return y_hi - y_lo; }
};

/// A certified solution of Gamma(z) = c.
struct FiberPoint {
    std::complex<double> c;
    std::complex<double> z;
    double residual = 0.0;         // |Gamma(z) - c| / |c|, log-safe
    double cert_radius_log = 0.0;  // log of the certification radius
    int winding = 0;
    std::optional<long> nearest_pole;  // n >= 0 when |Re z + n| <= 1/2
    // z + nearest_pole to full working precision; for deep poles z itself
    // collapses to -n in double while the offset stays meaningful.
    std::complex<double> pole_offset{0.0, 0.0};
};

namespace detail {

inline double wrap_angle(double d) {
    return std::remainder(d, 6.283185307179586476925286766559005768);
}

/// Accumulate the continuous argument increment of h along the straight
/// segment [z0, z1], refining until each sub-step turns by less than pi/2.
template <class HFun>
void arc_refine(const HFun& h, std::complex<double> z0, std::complex<double> w0,
                std::complex<double> z1, std::complex<double> w1, int depth,
                double& total, double& min_abs) {
    const double a0 = std::arg(w0), a1 = std::arg(w1);
    const double d = wrap_angle(a1 - a0);
    if (std::abs(d) < 1.570796326794896619) {
        total += d;
        return;
    }
    if (depth > 45)
        throw contour_error("winding: argument increment did not resolve under refinement");
    const std::complex<double> zm = 0.5 * (z0 + z1);
    const std::complex<double> wm = h(zm);
    if (!std::isfinite(std::abs(wm)) || wm == std::complex<double>(0.0, 0.0))
        throw contour_error("winding: non-finite or vanishing boundary value");
    min_abs = std::min(min_abs, std::abs(wm));
    arc_refine(h, z0, w0, zm, wm, depth + 1, total, min_abs);
    arc_refine(h, zm, wm, z1, w1, depth + 1, total, min_abs);
}

template <class HFun>
int polyline_winding(const HFun& h, const std::vector<std::complex<double>>& pts,
                     double margin_abs) {
    std::vector<std::complex<double>> w(pts.size());
    double min_abs = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < pts.size(); ++i) {
        w[i] = h(pts[i]);
        const double a = std::abs(w[i]);
        if (!std::isfinite(a) || a == 0.0)
            throw contour_error("winding: non-finite or vanishing boundary value");
        min_abs = std::min(min_abs, a);
    }
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        arc_refine(h, pts[i], w[i], pts[i + 1], w[i + 1], 0, total, min_abs);
    if (min_abs < margin_abs)
        throw contour_error("winding: boundary modulus margin violated");
    const double turns = total / 6.283185307179586476925286766559005768;
    const double rounded = std::round(turns);
    if (std::abs(turns - rounded) > 0.05)
        throw contour_error("winding: non-integral winding number");
    return static_cast<int>(rounded);
}

inline std::complex<double> recip_gamma_d(std::complex<double> z) {
    return engine_d::reciprocal_gamma(z);
}

}  // namespace detail

/// Number of solutions of Gamma(z) = c inside rect (with multiplicity), as
/// the winding number of 1/Gamma(z) - 1/c along the boundary, sampled with m
/// points per side and refined adaptively.
inline int count_roots_rectangle(std::complex<double> c, const Rectangle& rect,
                                 int m = 1024) {
    if (c == std::complex<double>(0.0, 0.0))
        throw argument_error("count_roots_rectangle: c must be nonzero");
    if (m < 256) throw argument_error("count_roots_rectangle: m must be >= 256");
    rect.validate();
    const std::complex<double> inv_c = 1.0 / c;
    auto h = [inv_c](std::complex<double> z) {
        return detail::recip_gamma_d(z) - inv_c;
    };
    std::vector<std::complex<double>> pts;
    pts.reserve(4 * m + 1);
    auto push_side = [&](std::complex<double> a, std::complex<double> b) {
        for (int i = 0; i < m; ++i) {
            const double t = static_cast<double>(i) / m;
            pts.push_back(a + t * (b - a));
        }
    };
    const std::complex<double> bl(rect.x_lo, rect.y_lo), br(rect.x_hi, rect.y_lo);
    const std::complex<double> tr(rect.x_hi, rect.y_hi), tl(rect.x_lo, rect.y_hi);
    push_side(bl, br);
    push_side(br, tr);
    push_side(tr, tl);
    push_side(tl, bl);
    pts.push_back(bl);
    const double margin = 1e-10 * (1.0 + std::abs(inv_c));
    return detail::polyline_winding(h, pts, margin);
}

// --------------------------------------------------------------------------
//  Claim 3.4 constants
// --------------------------------------------------------------------------

/// Concrete admissible constant C in |Gamma(x+iy)| <= C exp(-pi |y| / 2) for
/// x < 1/2, |y| > M: C = sup_{x<1/2} 2 e sqrt(2 pi e) (e/(1-x))^{1/2-x}.
inline double im_bound_C() {
    static const double C = [] {
        // maximize g(t) = (t - 1/2)(1 - log t) over t = 1 - x > 1/2;
        // g' = -log t + 1/(2t) has a single root, so g is unimodal.
        auto g = [](double t) { return (t - 0.5) * (1.0 - std::log(t)); };
        double lo = 0.5, hi = 8.0;
        for (int i = 0; i < 200; ++i) {
            const double m1 = lo + (hi - lo) / 3, m2 = hi - (hi - lo) / 3;
            if (g(m1) < g(m2))
                lo = m1;
            else
                hi = m2;
        }
        const double t = 0.5 * (lo + hi);
        const double gmax = (t - 0.5) * (1.0 - std::log(t));
        const double e = 2.718281828459045235360287471352662498;
        return 2.0 * e * std::sqrt(2.0 * engine_traits<double>::pi() * e) * std::exp(gmax);
    }();
    return C;
}

/// M = max{M_{3pi/4}, (6/pi) log C}; the decay chain is spot-verified on a
/// 10^3-point sample with x < 1/2, |y| > M on first use.
inline double im_bound_constant() {
    static const double M = [] {
        const double C = im_bound_C();
        const double m = std::max(kSectorM, 6.0 / engine_traits<double>::pi() *
                                                std::log(C));
        // spot verification of |Gamma(x+iy)| <= C exp(-pi |y| / 2)
        const double log_C = std::log(C);
        int idx = 0;
        for (int i = 0; i < 40; ++i) {
            for (int j = 0; j < 25; ++j) {
                const double x = -19.7 + 20.0 * i / 40.0;  // x < 1/2
                const double y = m + 1e-3 + 28.0 * j / 25.0;
                const double la =
                    engine_d::log_gamma(std::complex<double>(x, y)).real();
                if (la > log_C - 1.570796326794896619 * y + 1e-9)
                    throw error("im_bound_constant: decay chain spot-check failed");
                ++idx;
            }
        }
        (void)idx;
        return m;
    }();
    return M;
}

/// Smallest admissible N_c from the Lemma 3.2 proof: N_c >= max{exp(3/2), N},
/// Gamma(N_c) > 4 pi |c|, with N = ceil(max{M, N0, -log|c|, log|c|}) and N0
/// the least integer with sqrt(pi)/(|1/2-1|...|1/2-N0|) < |c|.
inline long threshold_Nc(std::complex<double> c) {
    const double ac = std::abs(c);
    if (ac == 0.0) throw argument_error("threshold_Nc: c must be nonzero");
    const double log_ac = std::log(ac);
    double lhs = 0.5 * std::log(engine_traits<double>::pi());
    long N0 = 0;
    do {
        ++N0;
        lhs -= std::log(std::abs(0.5 - static_cast<double>(N0)));
        if (N0 > 100000)
            throw argument_error("threshold_Nc: |c| too small to resolve N0");
    } while (lhs >= log_ac);
    const double M = im_bound_constant();
    const double N =
        std::ceil(std::max({M, static_cast<double>(N0), -log_ac, log_ac}));
    long Nc = std::max<long>(5, static_cast<long>(N));  // exp(3/2) ~ 4.48
    const double target = std::log(4.0 * engine_traits<double>::pi()) + log_ac;
    while (engine_d::log_gamma_real(static_cast<double>(Nc)) <= target) ++Nc;
    return Nc;
}

// --------------------------------------------------------------------------
//  left_fiber: the certified point near -n
// --------------------------------------------------------------------------

namespace detail {

template <class Real>
FiberPoint left_fiber_impl(std::complex<double> c, long n, const PrecisionConfig& cfg) {
    using E = gamma_engine<Real>;
    using C = typename E::C;
    using std::abs;
    using std::cos;
    using std::exp;
    using std::log;
    using std::sin;

    const C cc(Real(c.real()), Real(c.imag()));
    const C inv_c = C(Real(1), Real(0)) / cc;
    const Real abs_c = abs(cc);
    const int terms = cfg.stirling_terms;

    Real factorial = 1;
    for (long i = 2; i <= n; ++i) factorial *= Real(i);
    const C seed = (n % 2 == 0 ? C(Real(1), Real(0)) : C(Real(-1), Real(0))) /
                   (factorial * cc);

    // Newton on g(u) = 1/Gamma(-n+u) - 1/c in the pole-offset coordinate.
    C u = seed;
    const Real tol = Real(std::is_same_v<Real, double> ? 1e-14 : 1e-44);
    for (int it = 0; it < 16; ++it) {
        const C recip = E::recip_gamma_pole_offset(n, u, terms);
        const C g = recip - inv_c;
        const C dlog = E::pi() * (cos(E::pi() * u) / sin(E::pi() * u)) -
                       E::digamma(C(Real(n + 1), Real(0)) - u, terms);
        const C step = g / (recip * dlog);
        u -= step;
        if (abs(step) <= tol * abs(u)) break;
    }
    const C recip_root = E::recip_gamma_pole_offset(n, u, terms);
    const Real residual = abs(C(Real(1), Real(0)) - cc * recip_root) / abs(cc * recip_root);

    // Certification radius eps = 2 pi |c| / Gamma(n), in log form.
    const Real log_eps = log(Real(2) * E::pi() * abs_c) - E::log_gamma_real(Real(n), terms);
    const Real eps = exp(log_eps);
    const std::complex<double> z_best(-static_cast<double>(n) + to_double(u.real()),
                                      to_double(u.imag()));

    if (!(abs(u) <= eps))
        throw uncertified_error("left_fiber: Newton point escaped the Lemma 3.2 radius",
                                z_best);

    // Winding and modulus margin on the circle |u| = eps (the proof's final
    // display needs |1/Gamma| > 1/|c| there).
    const int m = 1024;
    const Real two_pi = Real(2) * E::pi();
    std::vector<std::complex<double>> w(m + 1);
    Real min_recva(-1);
    auto eval_scaled = [&](Real theta) {
        const C uc(eps * cos(theta), eps * sin(theta));
        const C recip = E::recip_gamma_pole_offset(n, uc, terms);
        const Real ra = abs(recip);
        if (min_recva < Real(0) || ra < min_recva) min_recva = ra;
        const C ws = (recip - inv_c) * abs_c;  // O(1) scale for the double arg
        return std::complex<double>(to_double(ws.real()), to_double(ws.imag()));
    };
    for (int i = 0; i <= m; ++i) w[i] = eval_scaled(two_pi * Real(i) / Real(m));

    double total = 0.0;
    for (int i = 0; i < m; ++i) {
        // adaptive refinement in the angle parameter
        struct Frame {
            double t0, t1;
            std::complex<double> w0, w1;
            int depth;
        };
        std::vector<Frame> frames{{static_cast<double>(i) / m,
                                   static_cast<double>(i + 1) / m, w[i], w[i + 1], 0}};
        while (!frames.empty()) {
            Frame f = frames.back();
            frames.pop_back();
            const double d = wrap_angle(std::arg(f.w1) - std::arg(f.w0));
            if (std::abs(d) < 1.570796326794896619) {
                total += d;
                continue;
            }
            if (f.depth > 40)
                throw uncertified_error("left_fiber: winding refinement failed", z_best);
            const double tm = 0.5 * (f.t0 + f.t1);
            const std::complex<double> wm = eval_scaled(two_pi * Real(tm));
            frames.push_back({f.t0, tm, f.w0, wm, f.depth + 1});
            frames.push_back({tm, f.t1, wm, f.w1, f.depth + 1});
        }
    }
    const int winding = static_cast<int>(std::round(total / 6.283185307179586476925286766559));
    const bool margin_ok = min_recva * abs_c > Real(1);  // |1/Gamma| > 1/|c|
    if (winding != 1 || !margin_ok)
        throw uncertified_error(
            "left_fiber: certification failed (winding != 1 or margin violated)", z_best);

    FiberPoint fp;
    fp.c = c;
    fp.z = z_best;
    fp.pole_offset = {to_double(u.real()), to_double(u.imag())};
    fp.residual = to_double(residual);
    fp.cert_radius_log = to_double(log_eps);
    fp.winding = 1;
    fp.nearest_pole = n;
    return fp;
}

}  // namespace detail

/// The unique fiber point near -n (Lemma 3.2): Laurent-seeded Newton on
/// 1/Gamma - 1/c plus winding/margin certification. Switches to 50-digit
/// arithmetic once log Gamma(n) > 30, where the certification radius is
/// beyond double resolution.
inline FiberPoint left_fiber(std::complex<double> c, long n,
                             const PrecisionConfig& cfg = {}) {
    if (c == std::complex<double>(0.0, 0.0))
        throw argument_error("left_fiber: c must be nonzero (Gamma never vanishes)");
    if (n < 2) throw argument_error("left_fiber: n must be >= 2");
    const bool extended =
        cfg.extended() || engine_d::log_gamma_real(static_cast<double>(n)) > 30.0;
    return extended ? detail::left_fiber_impl<real50>(c, n, cfg)
                    : detail::left_fiber_impl<double>(c, n, cfg);
}

// --------------------------------------------------------------------------
//  fibers_in_strip: exhaustive enumeration in a vertical strip
// --------------------------------------------------------------------------

namespace detail {

inline double strip_im_bound(std::complex<double> c, double x_hi) {
    const double log_ac = std::log(std::abs(c));
    double Y = im_bound_constant();
    Y = std::max(Y, 2.0 / engine_traits<double>::pi() * (std::log(im_bound_C()) - log_ac));
    if (x_hi >= 0.5) {
        double y = std::max({Y, 10.0, x_hi});
        auto top_max = [&](double yy) {
            double mx = -std::numeric_limits<double>::infinity();
            for (int i = 0; i <= 64; ++i) {
                const double x = 0.5 + (x_hi - 0.5) * i / 64.0;
                const double la = 1.0 + 0.5 * engine_traits<double>::log_2pi() +
                                  (x - 0.5) * 0.5 * std::log(x * x + yy * yy) -
                                  yy * std::atan2(yy, x) - x;
                mx = std::max(mx, la);
            }
            return mx;
        };
        while (top_max(y) >= log_ac - 0.7) {
            y *= 1.25;
            if (y > 1000.0)
                throw argument_error("fibers_in_strip: imaginary bound exceeds 1000");
        }
        Y = std::max(Y, y);
    }
    if (Y > 400.0)
        throw argument_error("fibers_in_strip: imaginary bound too tall for double range");
    return Y + 0.37;
}

struct RefinedRoot {
    std::complex<double> z;
    std::optional<long> pole;           // set when the root hugs -pole
    std::complex<double> offset{0, 0};  // z + pole, full double precision
    std::complex<double> recip_at_root{0, 0};
};

struct StripSolver {
    std::complex<double> c;
    std::complex<double> inv_c;
    PrecisionConfig cfg;
    std::vector<RefinedRoot> found;
    long total_winding = 0;

    std::complex<double> h(std::complex<double> z) const {
        return engine_d::reciprocal_gamma(z) - inv_c;
    }
    std::complex<double> h_prime(std::complex<double> z) const {
        return -engine_d::digamma(z) * engine_d::reciprocal_gamma(z);
    }

    /// Newton refinement from a seed. Near a pole of Gamma the iteration is
    /// finished in the offset coordinate u = z + n, where the derivative
    /// scale n! would otherwise eat most of the double mantissa.
    std::optional<RefinedRoot> newton(std::complex<double> z0) const {
        std::complex<double> z = z0;
        for (int it = 0; it < 60; ++it) {
            const std::complex<double> g = h(z);
            const std::complex<double> gp = h_prime(z);
            if (!(std::abs(gp) > 0.0)) return std::nullopt;
            const std::complex<double> step = g / gp;
            z -= step;
            if (std::abs(step) < 1e-13 * (1.0 + std::abs(z))) break;
            if (it == 59) return std::nullopt;
        }
        using E = engine_d;
        RefinedRoot root;
        const long n = std::lround(-z.real());
        if (z.real() < 0.5 && n >= 0 && std::abs(z + static_cast<double>(n)) < 0.4) {
            std::complex<double> u = z + static_cast<double>(n);
            for (int it = 0; it < 40; ++it) {
                const std::complex<double> recip = E::recip_gamma_pole_offset(n, u);
                const std::complex<double> g = recip - inv_c;
                const std::complex<double> dlog =
                    engine_traits<double>::pi() * E::cot_pi(u) -
                    E::digamma(std::complex<double>(static_cast<double>(n + 1), 0.0) - u);
                const std::complex<double> step = g / (recip * dlog);
                u -= step;
                if (std::abs(step) <= 1e-15 * std::abs(u)) break;
            }
            root.pole = n;
            root.offset = u;
            root.z = std::complex<double>(-static_cast<double>(n), 0.0) + u;
            root.recip_at_root = E::recip_gamma_pole_offset(n, u);
        } else {
            root.z = z;
            root.recip_at_root = E::reciprocal_gamma(z);
            if (z.real() < 0.5 && n >= 0 && std::abs(z.real() + static_cast<double>(n)) <= 0.5) {
                root.pole = n;
                root.offset = z + static_cast<double>(n);
            }
        }
        const double scale = std::abs(inv_c) + std::abs(root.recip_at_root);
        if (!(std::abs(root.recip_at_root - inv_c) <= 1e-11 * scale)) return std::nullopt;
        return root;
    }

    /// Best seed inside the cell by a coarse |h| scan.
    std::complex<double> grid_seed(const Rectangle& r) const {
        double best = std::numeric_limits<double>::infinity();
        std::complex<double> zb{0.5 * (r.x_lo + r.x_hi), 0.5 * (r.y_lo + r.y_hi)};
        for (int i = 1; i < 12; ++i)
            for (int j = 1; j < 12; ++j) {
                const std::complex<double> z(r.x_lo + r.width() * i / 12.0,
                                             r.y_lo + r.height() * j / 12.0);
                const double a = std::abs(h(z));
                if (a < best) {
                    best = a;
                    zb = z;
                }
            }
        return zb;
    }

    static bool inside(const Rectangle& r, std::complex<double> z) {
        return z.real() >= r.x_lo && z.real() <= r.x_hi && z.imag() >= r.y_lo &&
               z.imag() <= r.y_hi;
    }

    int robust_count(const Rectangle& r, int m) const {
        return count_roots_rectangle(c, r, m);
    }

    void solve_cell(Rectangle r, int count, int depth) {
        if (count == 0) return;
        if (depth > 20)
            throw resolution_error("fibers_in_strip: cell subdivision exceeded depth 20");
        const double diam = std::max(r.width(), r.height());
        if (count == 1 && diam <= 0.6) {
            auto root = newton({0.5 * (r.x_lo + r.x_hi), 0.5 * (r.y_lo + r.y_hi)});
            if (!root || !inside(r, root->z)) root = newton(grid_seed(r));
            if (root && inside(r, root->z)) {
                found.push_back(*root);
                return;
            }
            // Newton refused to stay in the cell: split further.
        }
        split(r, count, depth);
    }

    void split(const Rectangle& r, int count, int depth) {
        const bool vertical = r.width() >= r.height();  // split the longer side
        static constexpr double fractions[] = {0.5, 0.53, 0.47, 0.561, 0.439};
        for (double f : fractions) {
            Rectangle a = r, b = r;
            if (vertical) {
                const double xm = r.x_lo + f * r.width();
                if (std::abs(xm - std::round(xm)) < 2e-6 && std::round(xm) <= 0.0)
                    continue;  // keep the shared side off the pole row
                a.x_hi = xm;
                b.x_lo = xm;
            } else {
                const double ym = r.y_lo + f * r.height();
                if (std::abs(ym) < 2e-6 && r.x_lo <= 0.0) continue;
                a.y_hi = ym;
                b.y_lo = ym;
            }
            try {
                const int ca = robust_count(a, 1024);
                const int cb = robust_count(b, 1024);
                if (ca + cb != count)
                    throw contour_error("fibers_in_strip: child counts disagree with parent");
                solve_cell(a, ca, depth + 1);
                solve_cell(b, cb, depth + 1);
                return;
            } catch (const contour_error&) {
                continue;  // jitter the split and try again
            }
        }
        throw contour_error("fibers_in_strip: could not place a clean split boundary");
    }

    FiberPoint make_point(const RefinedRoot& root) const {
        FiberPoint fp;
        fp.c = c;
        fp.z = root.z;
        fp.nearest_pole = root.pole;
        fp.pole_offset = root.offset;
        // log-safe relative residual |Gamma(z) - c| / |c| via 1/Gamma
        fp.residual =
            std::abs(1.0 - c * root.recip_at_root) / std::abs(c * root.recip_at_root);
        return fp;
    }
};

/// Winding-1 recertification of isolated points, each in its own square.
inline void certify_points(std::complex<double> c, std::vector<FiberPoint>& pts) {
    for (std::size_t i = 0; i < pts.size(); ++i) {
        double s = 0.05;
        for (std::size_t j = 0; j < pts.size(); ++j)
            if (j != i) s = std::min(s, 0.35 * std::abs(pts[i].z - pts[j].z));
        s = std::max(s, 1e-5);
        Rectangle cert{pts[i].z.real() - s, pts[i].z.real() + s, pts[i].z.imag() - s,
                       pts[i].z.imag() + s};
        int w = 0;
        try {
            w = count_roots_rectangle(c, cert, 256);
        } catch (const contour_error&) {
            // boundary through an awkward spot: shrink once and retry
            s *= 0.37;
            cert = Rectangle{pts[i].z.real() - s, pts[i].z.real() + s,
                             pts[i].z.imag() - s, pts[i].z.imag() + s};
            w = count_roots_rectangle(c, cert, 256);
        }
        if (w != 1)
            throw uncertified_error("fibers_in_strip: final certification winding != 1",
                                    pts[i].z);
        pts[i].winding = 1;
        pts[i].cert_radius_log = std::log(s);
    }
}

}  // namespace detail

/// All solutions of Gamma(z) = c with Re z in [x_lo, x_hi]: the imaginary
/// extent is capped by the Claim 3.4 decay bound (left) and the Stirling
/// inequality (right), then the box is subdivided by winding counts and each
/// isolated root is Newton-refined and recertified in its own cell.
inline std::vector<FiberPoint> fibers_in_strip(std::complex<double> c, double x_lo,
                                               double x_hi,
                                               const PrecisionConfig& cfg = {}) {
    if (c == std::complex<double>(0.0, 0.0))
        throw argument_error("fibers_in_strip: c must be nonzero (the fiber of 0 is empty)");
    if (!(x_hi > x_lo) || x_hi - x_lo > 100.0)
        throw argument_error("fibers_in_strip: require 0 < x_hi - x_lo <= 100");
    auto off_poles = [](double x) {
        const double r = std::round(x);
        return !(r <= 0.0 && std::abs(x - r) < 1e-6);
    };
    if (!off_poles(x_lo) || !off_poles(x_hi))
        throw argument_error("fibers_in_strip: strip boundaries must be off the poles");

    const double Y = detail::strip_im_bound(c, x_hi);
    detail::StripSolver solver;
    solver.c = c;
    solver.inv_c = 1.0 / c;
    solver.cfg = cfg;
    Rectangle full{x_lo, x_hi, -Y, Y};
    const int total = solver.robust_count(full, 1024);
    solver.total_winding = total;
    solver.solve_cell(full, total, 0);

    // dedupe (paranoia: disjoint cells should make this a no-op)
    std::vector<FiberPoint> pts;
    for (const auto& r : solver.found) pts.push_back(solver.make_point(r));
    std::sort(pts.begin(), pts.end(), [](const FiberPoint& a, const FiberPoint& b) {
        if (a.z.real() != b.z.real()) return a.z.real() < b.z.real();
        return a.z.imag() < b.z.imag();
    });
    std::vector<FiberPoint> out;
    for (const auto& p : pts)
        if (out.empty() || std::abs(out.back().z - p.z) > 1e-9) out.push_back(p);

    if (static_cast<long>(out.size()) != total)
        throw resolution_error(
            "fibers_in_strip: winding total and point count disagree (" +
            std::to_string(total) + " vs " + std::to_string(out.size()) + ")");

    detail::certify_points(c, out);
    std::sort(out.begin(), out.end(), [](const FiberPoint& a, const FiberPoint& b) {
        const long na = a.nearest_pole.value_or(std::numeric_limits<long>::max());
        const long nb = b.nearest_pole.value_or(std::numeric_limits<long>::max());
        if (na != nb) return na < nb;
        if (a.z.real() != b.z.real()) return a.z.real() < b.z.real();
        return a.z.imag() < b.z.imag();
    });
    return out;
}

}  // namespace gammalab
