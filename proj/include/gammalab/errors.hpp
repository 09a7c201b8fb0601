#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace gammalab {

/// Base class for all errors raised by the library.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid argument / violated precondition.
class argument_error : public error {
public:
    explicit argument_error(const std::string& what) : error(what) {}
};

/// Input outside the mathematical domain of an operation (branch cut, zero, ...).
class domain_error : public error {
public:
    explicit domain_error(const std::string& what) : error(what) {}
};

/// Evaluation requested too close to a pole of Gamma.
class pole_error : public error {
public:
    pole_error(const std::string& what, long nearest)
        : error(what), nearest_pole(nearest) {}
    long nearest_pole;  // the non-positive integer -nearest_pole... stored as n >= 0, pole at -n
};

/// No real-axis seed exists for the requested level r.
class no_seed_error : public error {
public:
    explicit no_seed_error(const std::string& what) : error(what) {}
};

/// Level-curve corrector failed to converge; carries the last good abscissa.
class trace_error : public error {
public:
    trace_error(const std::string& what, double last_good)
        : error(what), last_good_x(last_good) {}
    double last_good_x;
};

/// A winding-number contour could not be evaluated reliably (root too close
/// to the boundary, modulus margin violated, or aliasing unresolved).
class contour_error : public error {
public:
    explicit contour_error(const std::string& what) : error(what) {}
};

/// Adaptive cell subdivision exceeded its depth limit.
class resolution_error : public error {
public:
    explicit resolution_error(const std::string& what) : error(what) {}
};

/// Newton converged but the certification step (winding count or modulus
/// margin) failed; carries the best iterate found.
class uncertified_error : public error {
public:
    uncertified_error(const std::string& what, std::complex<double> best)
        : error(what), best_iterate(best) {}
    std::complex<double> best_iterate;
};

/// Sampling region is entirely excluded (pole neighborhoods).
class sampling_error : public error {
public:
    explicit sampling_error(const std::string& what) : error(what) {}
};

/// Feature matrix conditioning too poor for a trustworthy rank estimate.
class conditioning_error : public error {
public:
    explicit conditioning_error(const std::string& what) : error(what) {}
};

/// Report output could not be written.
class io_error : public error {
public:
    explicit io_error(const std::string& what) : error(what) {}
};

}  // namespace gammalab
