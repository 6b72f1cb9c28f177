#ifndef PERIODLAB_SPECFUN_HPP
#define PERIODLAB_SPECFUN_HPP

#include <cstdint>

#include "periodlab/core.hpp"

namespace periodlab {

/// Euler-Maclaurin knobs shared by the zeta-type sums.  The defaults are
/// validated by the two-resolution checks in the test suite.
struct ZetaConfig {
    int cutoff = 40;           // number of directly summed terms
    int bernoulli_order = 20;  // number of B_{2j} correction terms (j = 1..order)
};

/// Gamma(z) by Lanczos approximation, reflection for Re z < 1/2.
/// Relative error <= 1e-12 for |z| <= 50, |Im z| <= 50.
/// Throws PoleError at z in {0, -1, -2, ...}.
Complex complex_gamma(Complex z);

/// Riemann zeta by Euler-Maclaurin.  Throws PoleError at u = 1.
Complex riemann_zeta(Complex u, const ZetaConfig& cfg = {});

/// Hurwitz zeta  zeta_H(a, x) = sum_{k>=0} (x+k)^{-a}, continued in a by
/// Euler-Maclaurin.  x may be complex; every shifted point x+k must stay off
/// the cut (-inf, 0].  Throws PoleError at a = 1, DomainError for x on the cut.
Complex hurwitz_zeta(Complex a, Complex x, const ZetaConfig& cfg = {});

/// Completed zeta  Lambda(u) = pi^{-u/2} Gamma(u/2) zeta(u).
/// Throws PoleError at u in {0, 1} and at nonpositive even integers
/// (the Gamma/zeta cancellation there is not implemented).
Complex completed_zeta(Complex u);

/// Modified Bessel K_mu(x) for complex order, real x > 0.
/// Series through I_{+-mu} below the crossover (shifted upward with |Im mu|,
/// where the series stays well conditioned), panel quadrature of
/// int_0^infty exp(-x cosh t) cosh(mu t) dt  above it and for orders too
/// close to an integer for the series.  Underflows to 0 for x beyond the
/// exponential floor.
Complex bessel_k(Complex mu, double x, double crossover = 4.5);

/// Whittaker W_{0,mu}(y) = sqrt(y/pi) K_mu(y/2),  y > 0.
Complex whittaker_w0(Complex mu, double y);

/// Divisor sum sigma_w(m) = sum_{d | m} d^w by exact enumeration.
Complex divisor_sum(Complex w, std::int64_t m);

/// Generalized binomial coefficient binom(a, k) = prod_{j<k} (a-j) / k!,
/// computed as a running product.
Complex binomial_complex(Complex a, int k);

} // namespace periodlab

#endif
