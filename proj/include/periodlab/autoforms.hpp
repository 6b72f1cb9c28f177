#ifndef PERIODLAB_AUTOFORMS_HPP
#define PERIODLAB_AUTOFORMS_HPP

#include <functional>
#include <map>
#include <vector>

#include "periodlab/core.hpp"
#include "periodlab/specfun.hpp"

namespace periodlab {

/// Spectral parameter pair (s, nu) with nu = 2s - 1 and Laplace eigenvalue
/// s(1-s).  Construct from either member.
struct SpectralParam {
    Complex s;
    Complex nu;

    static SpectralParam from_s(Complex s) { return {s, 2.0 * s - Complex(1.0, 0.0)}; }
    static SpectralParam from_nu(Complex nu) { return {(nu + Complex(1.0, 0.0)) / 2.0, nu}; }
};

enum class Parity { even, odd, none };

enum class EisensteinNormalization { star, family };

/// Fourier data {A_n (n != 0), A_0, B_0, C_0} of an automorphic hyperfunction
/// at parameter nu.  The index window 1 <= |n| <= n_max is gap-free; zeros are
/// stored explicitly.  Immutable after construction.
class CoefficientSet {
public:
    CoefficientSet(SpectralParam param, std::vector<Complex> plus, std::vector<Complex> minus,
                   Complex a0, Complex b0, Complex c0, Parity parity);

    const SpectralParam& param() const { return param_; }
    int n_max() const { return static_cast<int>(plus_.size()); }
    Parity parity() const { return parity_; }
    Complex a0() const { return a0_; }
    Complex b0() const { return b0_; }
    Complex c0() const { return c0_; }

    /// A_n for n != 0; zero outside the stored window.
    Complex a(long n) const;

    const std::vector<Complex>& plus_coeffs() const { return plus_; }
    const std::vector<Complex>& minus_coeffs() const { return minus_; }

private:
    SpectralParam param_;
    std::vector<Complex> plus_;   // A_n, n = 1..n_max
    std::vector<Complex> minus_;  // A_{-n}, n = 1..n_max
    Complex a0_, b0_, c0_;
    Parity parity_;
};

/// Point z = x + iy in the upper half plane.
struct EvalPoint {
    Complex z;
    explicit EvalPoint(Complex zz) : z(zz) {
        if (!(zz.imag() > 0.0)) throw DomainError("EvalPoint: requires Im z > 0");
    }
    double x() const { return z.real(); }
    double y() const { return z.imag(); }
};

/// Value of a truncated series together with a bound on the discarded tail.
struct SeriesValue {
    Complex value;
    double tail_bound;
};

/// Per-sample residual magnitudes plus their maximum.
struct ResidualTable {
    std::vector<double> residuals;
    double max_residual = 0.0;
};

/// Eisenstein coefficient set at spectral parameter s (the set itself lives at
/// hyperfunction parameter nu = 1 - 2s).  star:  A_n = 2 pi^{1-s} Gamma(s)
/// sigma_{1-2s}(|n|), A_0 = 2 sqrt(pi) Gamma(s) Gamma(s-1/2)^{-1} Lambda(2s-1),
/// B_0 = 2 Lambda(2s).  family multiplies everything by Gamma(s-1)^{-1}/2.
CoefficientSet eisenstein_coefficients(Complex s, int n_max,
                                       EisensteinNormalization norm);

/// Maass coefficient set: A_n = (pi |n|)^s Gamma(1-s) a_n, constant data zero.
CoefficientSet maass_coefficients(const std::map<long, Complex>& a, Complex s, Parity parity,
                                  int n_max = 0);

/// Holomorphic cusp form of weight 2k: A_n = (-1)^k 4^{-k} c_n for n >= 1,
/// one-sided, nu = 2k - 1.
CoefficientSet holomorphic_coefficients(const std::map<long, Complex>& c, int k,
                                        int n_max = 0);

/// Maass-form evaluation  u(z) = sum a_n W_{0,s-1/2}(4 pi |n| y) e(nx)
/// over the window of `a`, with an exponential-decay tail bound.
SeriesValue eval_maass(const CoefficientSet& coeffs, EvalPoint z,
                       const std::map<long, Complex>& a);

/// Eisenstein series from its Fourier expansion
/// G(s;z) = 2 Lambda(2s) y^s + 2 Lambda(2s-1) y^{1-s} + Bessel series.
SeriesValue eval_eisenstein_fourier(Complex s, EvalPoint z, int n_max = 30);

/// Eisenstein series from the lattice sum (Gamma(s)/pi^s) sum' y^s/|qz+p|^{2s},
/// Re s > 1.  Inner p-sums are accelerated through Hurwitz zeta; rows with
/// q > q_max are replaced by their integral approximation, whose error is
/// exponentially small in q_max * y and enters the reported tail bound.
SeriesValue eval_eisenstein_lattice(Complex s, EvalPoint z, int q_max = 12);

/// The intertwining map iota(nu) on Fourier data; returns the set at -nu.
CoefficientSet iota_map(const CoefficientSet& c);

/// Max and per-sample |u(-1/z) - u(z)| for an arbitrary evaluator.
ResidualTable modular_invariance_residual(const std::function<Complex(Complex)>& u,
                                          const std::vector<Complex>& z_samples);

/// Componentwise residual of the Eisenstein family functional equation
/// relating epsilon_{1-s} to iota applied to epsilon_s, relative to the
/// larger side.  (The constant is fixed by the closed-form coefficient
/// algebra; see the library tests.)
double eisenstein_family_fe_residual(Complex s, int n_max = 20);

} // namespace periodlab

#endif
