#ifndef PERIODLAB_CORE_HPP
#define PERIODLAB_CORE_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace periodlab {

using Complex = std::complex<double>;

constexpr double kPi = 3.14159265358979323846264338327950288;

/// Thrown when an evaluation lands on (or too near) a pole of the formula.
class PoleError : public std::domain_error {
public:
    explicit PoleError(const std::string& what) : std::domain_error(what) {}
};

/// Thrown for arguments outside an operation's domain (cuts, half-planes, sign constraints).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Thrown when a series evaluation cannot meet its accuracy contract.
class TruncationError : public std::runtime_error {
public:
    explicit TruncationError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when the Euler-Maclaurin continuation tail fails to drop below tolerance.
class ContinuationError : public std::runtime_error {
public:
    explicit ContinuationError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when an iterative solver (eigen, root refinement, limit sequence) stalls.
class ConvergenceError : public std::runtime_error {
public:
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

inline bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Principal-branch power z^a with arg z in (-pi, pi].  The single branch
/// convention used throughout; no other branch appears in this library.
Complex cpow(Complex z, Complex a);

/// True if z is within dist of the cut (-inf, 0].
inline bool near_negative_cut(Complex z, double dist = 1e-8) {
    return std::abs(z.imag()) <= dist && z.real() <= dist;
}

/// True if z is within dist of the real axis.
inline bool near_real_axis(Complex z, double dist = 1e-8) {
    return std::abs(z.imag()) <= dist;
}

/// Distance from x to the nearest integer.
inline double dist_to_integer(double x) {
    return std::abs(x - std::round(x));
}

/// True if nu is numerically an odd integer (the excluded set 1+2Z).
inline bool is_odd_integer(Complex nu, double tol = 1e-9) {
    if (std::abs(nu.imag()) > tol) return false;
    double r = std::round(nu.real());
    return std::abs(nu.real() - r) <= tol && std::abs(std::fmod(r, 2.0)) == 1.0;
}

/// True if nu is numerically an integer.
inline bool is_integer(Complex nu, double tol = 1e-9) {
    return std::abs(nu.imag()) <= tol && dist_to_integer(nu.real()) <= tol;
}

} // namespace periodlab

#endif
