#ifndef OSCTAIL_ERRORS_HPP
#define OSCTAIL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace osctail {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on the arguments was violated (a >= b, omega <= 0, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// The integrand returned a non-finite value.
class EvaluationError : public Error {
public:
    EvaluationError(const std::string& what, double x) : Error(what), x_(x) {}
    double x() const noexcept { return x_; }

private:
    double x_;
};

/// An iterative procedure stopped before reaching its tolerance.
/// Carries the best estimate available at that point.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, double best_estimate, double lower = 0.0,
                     double upper = 0.0)
        : Error(what), best_(best_estimate), lower_(lower), upper_(upper) {}
    double best_estimate() const noexcept { return best_; }
    double bracket_lower() const noexcept { return lower_; }
    double bracket_upper() const noexcept { return upper_; }

private:
    double best_;
    double lower_;
    double upper_;
};

/// Requested behaviour cannot be honoured with what the caller supplied,
/// e.g. an analytic derivative was required but not registered.
class ConfigurationError : public Error {
public:
    using Error::Error;
};

/// Floating point breakdown (finite-difference step lost against the abscissa).
class NumericError : public Error {
public:
    using Error::Error;
};

/// Result would overflow the representable range.
class RangeError : public Error {
public:
    using Error::Error;
};

} // namespace osctail

#endif // OSCTAIL_ERRORS_HPP
