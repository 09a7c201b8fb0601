#pragma once

#include <cmath>
#include <complex>

#include "gammalab/errors.hpp"

namespace gammalab {

/// Principal argument with range exactly (-pi, pi]: the negative real axis
/// maps to +pi, including inputs with a negative-zero imaginary part.
inline double principal_arg(double re, double im) {
    if (re == 0.0 && im == 0.0)
        throw domain_error("principal_arg: argument of 0 is undefined");
    if (im == 0.0) return re > 0.0 ? 0.0 : 3.141592653589793238462643383279502884;
    return std::atan2(im, re);
}

inline double principal_arg(std::complex<double> z) {
    return principal_arg(z.real(), z.imag());
}

/// A complex value carried in both direct form and log form
/// (log-magnitude + continuously tracked argument) so that products and
/// ratios of Gamma values survive overflow and underflow.
struct ComplexSample {
    double re = 0.0;
    double im = 0.0;
    double log_abs = 0.0;   // natural log of the modulus
    double arg_cont = 0.0;  // argument in radians; may leave (-pi, pi]

    static ComplexSample from_log(double log_abs, double arg_cont) {
        ComplexSample s;
        s.log_abs = log_abs;
        s.arg_cont = arg_cont;
        // Direct form overflows past exp(709); keep the IEEE inf/0 it produces.
        const double mag = std::exp(log_abs);
        s.re = mag * std::cos(arg_cont);
        s.im = mag * std::sin(arg_cont);
        return s;
    }

    static ComplexSample from_value(std::complex<double> z) {
        ComplexSample s;
        s.re = z.real();
        s.im = z.imag();
        s.log_abs = std::log(std::abs(z));
        s.arg_cont = principal_arg(z);
        return s;
    }

    std::complex<double> value() const { return {re, im}; }

    /// Argument reduced to the principal range (-pi, pi].
    double arg_principal() const {
        const double two_pi = 6.283185307179586476925286766559005768;
        double a = std::fmod(arg_cont, two_pi);
        if (a > 3.141592653589793238462643383279502884) a -= two_pi;
        if (a <= -3.141592653589793238462643383279502884) a += two_pi;
        return a;
    }
};

}  // namespace gammalab
