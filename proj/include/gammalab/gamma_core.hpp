#pragma once

// Evaluation of Gamma and its companions (log Gamma, digamma, reciprocal
// Gamma, Pochhammer, Stirling remainder mu) on the complex plane minus the
// poles, in native double or 50-digit precision, with residual checks for
// the functional equations.
//
// Strategy: recurrence-shift the argument until the Stirling series with
// Bernoulli corrections is accurate, reflect for Re(z) < 1/2 when a direct
// value is wanted. The Weierstrass partial product is kept only as a slow
// independent cross-check. All products and ratios of Gamma values are
// combined as sums of log Gamma so nothing overflows before it has to.

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <complex>
#include <vector>

#include "gammalab/complex_sample.hpp"
#include "gammalab/errors.hpp"
#include "gammalab/precision.hpp"

namespace gammalab {

namespace detail {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Exact Bernoulli numbers B_0..B_max (B_1 = -1/2 convention).
inline const std::vector<Rational>& bernoulli_table(std::size_t max_index = 80) {
    static const std::vector<Rational> table = [] {
        const std::size_t n = 81;
        std::vector<Rational> b(n);
        std::vector<BigInt> binom(n + 2, 0);
        b[0] = 1;
        for (std::size_t m = 1; m < n; ++m) {
            // binomial row C(m+1, j)
            binom[0] = 1;
            for (std::size_t j = 1; j <= m + 1; ++j)
                binom[j] = binom[j - 1] * BigInt(m + 2 - j) / BigInt(j);
            Rational acc = 0;
            for (std::size_t j = 0; j < m; ++j) acc += Rational(binom[j]) * b[j];
            b[m] = -acc / Rational(binom[m]);
        }
        return b;
    }();
    (void)max_index;
    return table;
}

template <class Real>
const std::vector<Real>& stirling_mu_coeffs() {
    // c_j = B_{2j} / ((2j-1)(2j)), j = 1..max_terms
    static const std::vector<Real> coeffs = [] {
        const auto& b = bernoulli_table();
        std::vector<Real> c;
        const int terms = engine_traits<Real>::max_stirling_terms();
        for (int j = 1; j <= terms; ++j) {
            Rational r = b[2 * j] / Rational((2 * j - 1) * (2 * j));
            c.push_back(static_cast<Real>(r));
        }
        return c;
    }();
    return coeffs;
}

template <class Real>
const std::vector<Real>& digamma_coeffs() {
    // d_j = B_{2j} / (2j)
    static const std::vector<Real> coeffs = [] {
        const auto& b = bernoulli_table();
        std::vector<Real> c;
        const int terms = engine_traits<Real>::max_stirling_terms();
        for (int j = 1; j <= terms; ++j)
            c.push_back(static_cast<Real>(Rational(b[2 * j] / Rational(2 * j))));
        return c;
    }();
    return coeffs;
}

}  // namespace detail

/// Distance from z to the nearest non-positive integer; *pole receives n >= 0
/// such that -n is that integer.
inline double pole_distance(std::complex<double> z, long* pole = nullptr) {
    long n = std::lround(-z.real());
    if (n < 0) n = 0;
    if (pole) *pole = n;
    return std::abs(z + std::complex<double>(static_cast<double>(n), 0.0));
}

/// Core numeric engine, instantiated for double and for real50.
template <class Real>
struct gamma_engine {
    using traits = engine_traits<Real>;
    using C = typename traits::complex_t;

    static Real pi() { return Real(traits::pi()); }
    static Real log_2pi() { return Real(traits::log_2pi()); }
    static Real euler() { return Real(traits::euler()); }

    static int clamp_terms(int terms) {
        const int mx = traits::max_stirling_terms();
        if (terms < 4) return mx;  // unset or silly: use the full table
        return terms > mx ? mx : terms;
    }

    // --- Stirling series on the shifted domain -----------------------------

    /// mu(z) asymptotic series; valid once Re(z) >= shift_threshold().
    static C mu_series(C z, int terms) {
        const auto& c = detail::stirling_mu_coeffs<Real>();
        const int J = clamp_terms(terms);
        C w = Real(1) / (z * z);
        C s(Real(0), Real(0));
        for (int j = J - 1; j >= 0; --j) s = (s + C(c[j], Real(0))) * (j > 0 ? w : C(Real(1), Real(0)));
        // the loop above multiplies the innermost term by w (J-1) times; divide once by z
        return s / z;
    }

    static Real mu_series_real(Real x, int terms) {
        const auto& c = detail::stirling_mu_coeffs<Real>();
        const int J = clamp_terms(terms);
        Real w = Real(1) / (x * x);
        Real s = 0;
        for (int j = J - 1; j >= 0; --j) s = (s + c[j]) * (j > 0 ? w : Real(1));
        return s / x;
    }

    /// Relative truncation bound for the mu series at the shifted argument.
    static double mu_tail_bound(double abs_z, int terms) {
        const int J = clamp_terms(terms);
        const auto& b = detail::bernoulli_table();
        const double bj = std::abs(static_cast<double>(detail::Rational(
            b[2 * J] / detail::Rational((2 * J - 1) * (2 * J)))));
        // sector factor sec^(2J)(theta/2) <= 2^J for |arg z| <= pi/2 after shifting
        return bj * std::pow(abs_z, -(2.0 * J - 1.0)) * std::pow(2.0, J);
    }

    // --- log Gamma ----------------------------------------------------------

    /// Principal/continuous branch of log Gamma on C minus (-inf, 0]:
    /// recurrence shift, then Stirling. Continuity follows from
    /// log Gamma(z) = log Gamma(z+1) - Log z holding identically for the
    /// analytic branch, with principal Log.
    static C log_gamma(C z, int terms = -1) {
        const Real T = Real(traits::shift_threshold());
        int k = 0;
        if (z.real() < T) k = static_cast<int>(std::ceil(to_double(T - z.real())));
        C zs = z + C(Real(k), Real(0));
        C lz = log(zs);
        C lg = (zs - C(Real(1) / 2, Real(0))) * lz - zs + C(log_2pi() / 2, Real(0)) +
               mu_series(zs, terms);
        for (int i = 0; i < k; ++i) lg -= log(z + C(Real(i), Real(0)));
        return lg;
    }

    /// log Gamma(x) for real x > 0.
    static Real log_gamma_real(Real x, int terms = -1) {
        using std::log;
        const Real T = Real(traits::shift_threshold());
        int k = 0;
        if (x < T) k = static_cast<int>(std::ceil(to_double(T - x)));
        Real xs = x + Real(k);
        Real lg = (xs - Real(1) / 2) * log(xs) - xs + log_2pi() / 2 + mu_series_real(xs, terms);
        for (int i = 0; i < k; ++i) lg -= log(x + Real(i));
        return lg;
    }

    /// log |Gamma(x)| and sign of Gamma(x) for real x off the poles.
    static std::pair<Real, int> log_abs_gamma_signed(Real x, int terms = -1) {
        using std::abs;
        using std::log;
        if (x > 0) return {log_gamma_real(x, terms), +1};
        // reflection: |Gamma(x)| = pi / (|sin(pi x)| Gamma(1-x))
        Real lg = log(pi()) - log(abs(sin_pi_real(x))) - log_gamma_real(Real(1) - x, terms);
        long long fl = static_cast<long long>(std::floor(to_double(-x)));
        int sign = (fl % 2 == 0) ? -1 : +1;  // Gamma < 0 on (-1,0), (-3,-2), ...
        return {lg, sign};
    }

    // --- digamma ------------------------------------------------------------

    static C digamma(C z, int terms = -1) {
        const Real T = Real(traits::shift_threshold());
        int k = 0;
        if (z.real() < T) k = static_cast<int>(std::ceil(to_double(T - z.real())));
        C zs = z + C(Real(k), Real(0));
        const auto& d = detail::digamma_coeffs<Real>();
        const int J = clamp_terms(terms);
        C w = Real(1) / (zs * zs);
        C s(Real(0), Real(0));
        for (int j = J - 1; j >= 0; --j) s = (s + C(d[j], Real(0))) * w;
        C ps = log(zs) - Real(1) / (Real(2) * zs) - s;
        for (int i = 0; i < k; ++i) ps -= Real(1) / (z + C(Real(i), Real(0)));
        return ps;
    }

    static Real digamma_real(Real x, int terms = -1) {
        using std::log;
        const Real T = Real(traits::shift_threshold());
        int k = 0;
        if (x < T) k = static_cast<int>(std::ceil(to_double(T - x)));
        Real xs = x + Real(k);
        const auto& d = detail::digamma_coeffs<Real>();
        const int J = clamp_terms(terms);
        Real w = Real(1) / (xs * xs);
        Real s = 0;
        for (int j = J - 1; j >= 0; --j) s = (s + d[j]) * w;
        Real ps = log(xs) - Real(1) / (Real(2) * xs) - s;
        for (int i = 0; i < k; ++i) ps -= Real(1) / (x + Real(i));
        return ps;
    }

    // --- sine with exact integer argument reduction --------------------------

    static Real sin_pi_real(Real x) {
        using std::sin;
        long long n0 = static_cast<long long>(std::llround(to_double(x)));
        Real w = x - Real(n0);
        Real s = sin(pi() * w);
        return (n0 % 2 == 0) ? s : -s;
    }

    /// sin(pi z) with the integer part of Re(z) reduced exactly, so that
    /// accuracy survives next to the poles of Gamma.
    static C sin_pi(C z) {
        long long n0 = static_cast<long long>(std::llround(to_double(z.real())));
        C w = z - C(Real(n0), Real(0));
        C s = sin(pi() * w);
        return (n0 % 2 == 0) ? s : -s;
    }

    /// cot(pi z), pi-periodic so no sign bookkeeping is needed.
    static C cot_pi(C z) {
        long long n0 = static_cast<long long>(std::llround(to_double(z.real())));
        C w = z - C(Real(n0), Real(0));
        return cos(pi() * w) / sin(pi() * w);
    }

    /// A branch of log sin(pi z), continuous on each open half plane and
    /// overflow-free for large |Im z|. Only exp() of it is contract-relevant.
    static C log_sin_pi(C z) {
        using std::abs;
        using std::log;
        Real y = z.imag();
        if (abs(y) < Real(1)) return log(sin_pi(z));
        if (y > 0) {
            const C i_unit(Real(0), Real(1));
            C w = exp(Real(2) * pi() * i_unit * z);  // |w| = exp(-2 pi y) < 1
            return -i_unit * pi() * z + log(C(Real(1), Real(0)) - w) +
                   C(-log(Real(2)), pi() / 2);
        }
        C r = log_sin_pi(conj(z));
        return conj(r);
    }

    // --- reciprocal Gamma (entire) -------------------------------------------

    static C reciprocal_gamma(C z, int terms = -1) {
        if (z.real() >= Real(1) / 2) return exp(-log_gamma(z, terms));
        // 1/Gamma(z) = sin(pi z)/pi * Gamma(1 - z), entire in z
        return sin_pi(z) / pi() * exp(log_gamma(C(Real(1), Real(0)) - z, terms));
    }

    /// 1/Gamma(-n + u) evaluated without ever forming -n + u, so u may be far
    /// below the representable offset from -n.
    static C recip_gamma_pole_offset(long n, C u, int terms = -1) {
        C v = sin(pi() * u) / pi() * exp(log_gamma(C(Real(n + 1), Real(0)) - u, terms));
        return (n % 2 == 0) ? v : -v;
    }

    /// digamma(-n + u) via reflection, same offset convention.
    static C digamma_pole_offset(long n, C u, int terms = -1) {
        C w = cos(pi() * u) / sin(pi() * u);
        return digamma(C(Real(n + 1), Real(0)) - u, terms) - pi() * w;
    }
};

using engine_d = gamma_engine<double>;
using engine_mp = gamma_engine<real50>;

// --------------------------------------------------------------------------
//  Public API (double precision in, double precision out; the 50-digit
//  engine is selected through PrecisionConfig::working_digits).
// --------------------------------------------------------------------------

enum class GammaBackend { stirling_recurrence, weierstrass_partial, reflection };

inline const char* to_string(GammaBackend b) {
    switch (b) {
        case GammaBackend::stirling_recurrence: return "stirling_recurrence";
        case GammaBackend::weierstrass_partial: return "weierstrass_partial";
        case GammaBackend::reflection: return "reflection";
    }
    return "?";
}

struct GammaValue {
    ComplexSample value;
    double error_estimate = 0.0;  // bound on the relative error
    GammaBackend backend = GammaBackend::stirling_recurrence;
};

/// Module-wide constants. alpha_root is the unique zero of Gamma' on (0, inf).
struct Constants {
    double euler_gamma;
    double alpha_root;
    double pi;
};

inline double compute_alpha_root() {
    // bisection on digamma over [1.4, 1.5]; Gamma' = Gamma * digamma
    double lo = 1.4, hi = 1.5;
    for (int i = 0; i < 90; ++i) {
        double mid = 0.5 * (lo + hi);
        if (engine_d::digamma_real(mid) < 0)
            lo = mid;
        else
            hi = mid;
        if (hi - lo < 1e-16) break;
    }
    return 0.5 * (lo + hi);
}

inline const Constants& constants() {
    static const Constants c{engine_traits<double>::euler(), compute_alpha_root(),
                             engine_traits<double>::pi()};
    return c;
}

/// Gamma(alpha_root), the minimum of Gamma on (0, inf).
inline double gamma_at_alpha() {
    static const double v = std::exp(engine_d::log_gamma_real(constants().alpha_root));
    return v;
}

namespace detail {

constexpr double kPoleProximity = 1e-12;

template <class Real>
GammaValue eval_gamma_engine(std::complex<double> zin, const PrecisionConfig& cfg) {
    using E = gamma_engine<Real>;
    using C = typename E::C;
    long pole = 0;
    const double dist = pole_distance(zin, &pole);
    if (dist < kPoleProximity)
        throw pole_error("eval_gamma: input within 1e-12 of pole at -" + std::to_string(pole),
                         pole);

    const int terms = cfg.stirling_terms;
    GammaValue out;
    // Rounding budget: the double engine accumulates ~20 ulp through the
    // shift/series chain; the 50-digit engine is limited by the downcast.
    const double engine_err = std::is_same_v<Real, double> ? 20.0 * 2.2e-16 : 2.3e-16;

    if (zin.imag() == 0.0) {
        Real x(zin.real());
        if (zin.real() > 0.0) {
            Real lg = E::log_gamma_real(x, terms);
            out.value = ComplexSample::from_log(to_double(lg), 0.0);
            out.backend = GammaBackend::stirling_recurrence;
            out.error_estimate = engine_err;
            return out;
        }
        auto [lg, sign] = E::log_abs_gamma_signed(x, terms);
        out.value = ComplexSample::from_log(to_double(lg), sign > 0 ? 0.0 : 3.141592653589793238462643383279502884);
        out.backend = GammaBackend::reflection;
        out.error_estimate = engine_err * (2.0 + std::abs(zin.real()) / dist);
        return out;
    }

    C z(Real(zin.real()), Real(zin.imag()));
    if (zin.real() >= 0.5) {
        C lg = E::log_gamma(z, terms);
        out.value = ComplexSample::from_log(to_double(lg.real()), to_double(lg.imag()));
        out.backend = GammaBackend::stirling_recurrence;
        out.error_estimate =
            engine_err + E::mu_tail_bound(std::max(std::abs(zin), 20.0), terms);
        return out;
    }
    // reflection in log form: log Gamma(z) = log pi - log sin(pi z) - log Gamma(1-z)
    C ls = E::log_sin_pi(z);
    C lg1 = E::log_gamma(C(Real(1), Real(0)) - z, terms);
    Real log_abs = log(E::pi()) - ls.real() - lg1.real();
    Real argc = -ls.imag() - lg1.imag();
    out.value = ComplexSample::from_log(to_double(log_abs), to_double(argc));
    out.backend = GammaBackend::reflection;
    out.error_estimate = engine_err * (4.0 + std::abs(zin) / dist);
    return out;
}

template <class Real>
ComplexSample eval_log_gamma_engine(std::complex<double> zin, const PrecisionConfig& cfg) {
    using E = gamma_engine<Real>;
    using C = typename E::C;
    if (zin.imag() == 0.0) {
        if (zin.real() <= 0.0)
            throw domain_error("eval_log_gamma: branch cut (Re z <= 0, Im z = 0)");
        Real lg = E::log_gamma_real(Real(zin.real()), cfg.stirling_terms);
        return ComplexSample::from_log(to_double(lg), 0.0);
    }
    C z(Real(zin.real()), Real(zin.imag()));
    C lg = E::log_gamma(z, cfg.stirling_terms);
    return ComplexSample::from_log(to_double(lg.real()), to_double(lg.imag()));
}

}  // namespace detail

/// Gamma(z). Inputs closer than 1e-12 to a non-positive integer are rejected
/// (callers that need pole behavior use the fiber solver's residue seed).
inline GammaValue eval_gamma(std::complex<double> z, const PrecisionConfig& cfg = {}) {
    cfg.validate();
    if (cfg.extended()) return detail::eval_gamma_engine<real50>(z, cfg);
    return detail::eval_gamma_engine<double>(z, cfg);
}

/// log Gamma(z) on the cut plane, returned as a ComplexSample whose log form
/// (log_abs, arg_cont) is the analytic branch: log_abs = Re log Gamma,
/// arg_cont = Im log Gamma, continuous along any path avoiding (-inf, 0].
inline ComplexSample eval_log_gamma(std::complex<double> z, const PrecisionConfig& cfg = {}) {
    cfg.validate();
    if (cfg.extended()) return detail::eval_log_gamma_engine<real50>(z, cfg);
    return detail::eval_log_gamma_engine<double>(z, cfg);
}

/// Truncated Weierstrass product exp(-gamma z)/z prod_{k<=K} (1+z/k)^{-1} e^{z/k}.
/// Slow independent cross-check; relative deviation from Gamma(z) is O(|z|^2/K).
inline std::complex<double> weierstrass_partial(std::complex<double> z, long K) {
    if (K < 1) throw argument_error("weierstrass_partial: K must be >= 1");
    long pole = 0;
    if (pole_distance(z, &pole) < detail::kPoleProximity)
        throw pole_error("weierstrass_partial: pole input", pole);
    std::complex<double> acc(1.0, 0.0);
    double log_scale = 0.0;
    double harmonic = 0.0;
    for (long k = 1; k <= K; ++k) {
        const double dk = static_cast<double>(k);
        harmonic += 1.0 / dk;
        acc /= (1.0 + z / dk);
        if ((k & 0xfff) == 0) {
            const double m = std::abs(acc);
            if (m > 1e100 || m < 1e-100) {
                log_scale += std::log(m);
                acc /= m;
            }
        }
    }
    const std::complex<double> expo =
        z * (harmonic - engine_traits<double>::euler()) + log_scale;
    return std::exp(expo) * acc / z;
}

/// Pochhammer function m_k: m_0 = 1, m_k(z) = z(z+1)...(z+k-1) for k > 0,
/// m_k(z) = 1/((z-1)...(z-|k|)) for k < 0; Gamma(z+k) = m_k(z) Gamma(z).
inline std::complex<double> pochhammer(std::complex<double> z, long k) {
    if (k == 0) return {1.0, 0.0};
    if (k > 0) {
        std::complex<double> p(1.0, 0.0);
        for (long i = 0; i < k; ++i) p *= z + static_cast<double>(i);
        return p;
    }
    std::complex<double> p(1.0, 0.0);
    for (long i = 1; i <= -k; ++i) {
        std::complex<double> f = z - static_cast<double>(i);
        if (std::abs(f) < detail::kPoleProximity)
            throw pole_error("pochhammer: z hits a pole of m_k for k < 0", i);
        p *= f;
    }
    return 1.0 / p;
}

/// Relative residual of the reflection formula Gamma(z)Gamma(1-z) sin(pi z) = pi,
/// computed in log form to avoid overflow.
inline double reflection_residual(std::complex<double> z, const PrecisionConfig& cfg = {}) {
    if (std::abs(z.real() - std::round(z.real())) < detail::kPoleProximity &&
        std::abs(z.imag()) < detail::kPoleProximity)
        throw domain_error("reflection_residual: integer input");
    using E = engine_d;
    if (z.imag() == 0.0) {
        const double x = z.real();
        auto [la, sa] = E::log_abs_gamma_signed(x, cfg.stirling_terms);
        auto [lb, sb] = E::log_abs_gamma_signed(1.0 - x, cfg.stirling_terms);
        const double s = E::sin_pi_real(x);
        const double S = la + lb + std::log(std::abs(s));
        const double sgn = sa * sb * (s < 0 ? -1.0 : 1.0);
        return std::abs(sgn * std::exp(S) - engine_traits<double>::pi()) /
               engine_traits<double>::pi();
    }
    const std::complex<double> lg = [&] {
        auto s = eval_log_gamma(z, cfg);
        return std::complex<double>(s.log_abs, s.arg_cont);
    }();
    const std::complex<double> lg1 = [&] {
        auto s = eval_log_gamma(1.0 - z, cfg);
        return std::complex<double>(s.log_abs, s.arg_cont);
    }();
    const std::complex<double> ls = E::log_sin_pi(z);
    const std::complex<double> delta =
        lg + lg1 + ls - std::log(engine_traits<double>::pi());
    return std::abs(std::exp(delta) - 1.0);
}

/// Relative residual of the Gauss multiplication formula (log form).
inline double multiplication_residual(std::complex<double> z, int n,
                                      const PrecisionConfig& cfg = {}) {
    if (n < 2) throw argument_error("multiplication_residual: n must be >= 2");
    if (z.imag() == 0.0 && z.real() <= 0.0)
        throw domain_error("multiplication_residual: z on the closed negative real axis");
    std::complex<double> lhs(0.0, 0.0);
    for (int k = 0; k < n; ++k) {
        auto s = eval_log_gamma(z + static_cast<double>(k) / n, cfg);
        lhs += std::complex<double>(s.log_abs, s.arg_cont);
    }
    auto sn = eval_log_gamma(static_cast<double>(n) * z, cfg);
    const double ln_n = std::log(static_cast<double>(n));
    std::complex<double> rhs =
        0.5 * (n - 1) * engine_traits<double>::log_2pi() +
        (0.5 - static_cast<double>(n) * z) * ln_n +
        std::complex<double>(sn.log_abs, sn.arg_cont);
    return std::abs(std::exp(lhs - rhs) - 1.0);
}

/// Stirling remainder mu(z) = log Gamma(z) - (z - 1/2) log z + z - log(2 pi)/2.
inline std::complex<double> stirling_mu(std::complex<double> z,
                                        const PrecisionConfig& cfg = {}) {
    if (z.imag() == 0.0 && z.real() <= 0.0)
        throw domain_error("stirling_mu: branch cut");
    auto s = eval_log_gamma(z, cfg);
    const std::complex<double> lg(s.log_abs, s.arg_cont);
    return lg - (z - 0.5) * std::log(z) + z - 0.5 * engine_traits<double>::log_2pi();
}

/// Sector constant for theta = 3 pi / 4, shared with the fiber solver.
inline constexpr double kSectorM = 10.0;

/// Admissible |z| floor for the Stirling sector inequality at angle theta:
/// the classical Binet bound |mu(z)| <= sec^2(theta/2) / (12 |z|) gives
/// |mu| < 1 once |z| > sec^2(theta/2)/12; the module floor of 10 is kept.
inline double stirling_sector_floor(double theta) {
    const double c = std::cos(theta / 2);
    return std::max(kSectorM, 1.0 / (12.0 * c * c));
}

/// Log-form check of the two-sided Stirling inequality
/// sqrt(2 pi)/e |z|^{x-1/2} exp(-y arg z - x) <= |Gamma(z)| <= e sqrt(2 pi) ... .
inline bool stirling_bounds_check(std::complex<double> z, double theta,
                                  const PrecisionConfig& cfg = {}) {
    const double half_pi = 1.570796326794896619231321691639751442;
    if (!(theta > half_pi && theta < engine_traits<double>::pi()))
        throw argument_error("stirling_bounds_check: theta must lie in (pi/2, pi)");
    const double a = principal_arg(z);
    if (!(std::abs(a) < theta))
        throw argument_error("stirling_bounds_check: z outside the sector |arg z| < theta");
    if (!(std::abs(z) > stirling_sector_floor(theta)))
        throw argument_error("stirling_bounds_check: |z| below the sector floor M_theta");
    double log_abs_gamma;
    if (z.imag() == 0.0) {
        log_abs_gamma = engine_d::log_gamma_real(z.real(), cfg.stirling_terms);
    } else {
        auto s = eval_log_gamma(z, cfg);
        log_abs_gamma = s.log_abs;
    }
    const double center = 0.5 * engine_traits<double>::log_2pi() +
                          (z.real() - 0.5) * std::log(std::abs(z)) - z.imag() * a -
                          z.real();
    return (center - 1.0 <= log_abs_gamma) && (log_abs_gamma <= center + 1.0);
}

}  // namespace gammalab
