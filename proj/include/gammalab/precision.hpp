#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>
#include <complex>
#include <limits>

#include "gammalab/errors.hpp"

namespace gammalab {

/// Extended-precision scalar used for certification work (50 decimal digits).
using real50 = boost::multiprecision::cpp_bin_float_50;
using complex50 = boost::multiprecision::cpp_complex_50;

/// Evaluation configuration shared by all numeric operations.
struct PrecisionConfig {
    int working_digits = 15;        // significant decimal digits (>= 15)
    long series_truncation_K = 100000;  // Weierstrass / slope series length
    int stirling_terms = 14;        // Bernoulli correction terms in the Stirling series
    double tol_residual = 1e-10;

    void validate() const {
        if (working_digits < 15)
            throw argument_error("PrecisionConfig: working_digits must be >= 15");
        if (series_truncation_K < 100)
            throw argument_error("PrecisionConfig: series_truncation_K must be >= 100");
        if (!(tol_residual > 0))
            throw argument_error("PrecisionConfig: tol_residual must be > 0");
    }

    /// True when the configuration requires the 50-digit engine.
    bool extended() const { return working_digits > 17; }
};

/// Per-scalar numeric constants and policy for the gamma engine.
template <class Real>
struct engine_traits;

template <>
struct engine_traits<double> {
    using complex_t = std::complex<double>;
    static double pi() { return 3.141592653589793238462643383279502884; }
    static double log_2pi() { return 1.837877066409345483560659472811235279; }
    static double euler() { return 0.577215664901532860606512090082402431; }
    static double eps() { return std::numeric_limits<double>::epsilon(); }
    // Recurrence-shift target for the Stirling series.
    static double shift_threshold() { return 20.0; }
    static int max_stirling_terms() { return 20; }
};

template <>
struct engine_traits<real50> {
    using complex_t = complex50;
    static const real50& pi() {
        static const real50 v = boost::math::constants::pi<real50>();
        return v;
    }
    static const real50& log_2pi() {
        static const real50 v = log(2 * boost::math::constants::pi<real50>());
        return v;
    }
    static const real50& euler() {
        static const real50 v("0.57721566490153286060651209008240243104215933593992");
        return v;
    }
    static real50 eps() { return std::numeric_limits<real50>::epsilon(); }
    static real50 shift_threshold() { return 40.0; }
    static int max_stirling_terms() { return 40; }
};

inline std::complex<double> to_double(const complex50& z) {
    return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}
inline std::complex<double> to_double(const std::complex<double>& z) { return z; }
inline double to_double(const real50& x) { return static_cast<double>(x); }
inline double to_double(double x) { return x; }

}  // namespace gammalab
