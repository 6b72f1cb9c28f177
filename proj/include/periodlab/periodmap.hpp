#ifndef PERIODLAB_PERIODMAP_HPP
#define PERIODLAB_PERIODMAP_HPP

#include <functional>
#include <memory>
#include <vector>

#include "periodlab/autoforms.hpp"

namespace periodlab {

/// The 1-periodic function f on C \ R determined by Fourier data:
///   f(tau) =  A_0/2 + sum_{n>=1} A_n e(n tau)        on the upper half plane,
///   f(tau) = -A_0/2 - sum_{n>=1} A_{-n} e(-n tau)    on the lower half plane.
/// Periodicity and f(i inf) + f(-i inf) = 0 hold by construction.
struct PeriodicF {
    SpectralParam param;
    Complex a0;
    std::vector<Complex> plus;   // A_n, n >= 1
    std::vector<Complex> minus;  // A_{-n}, n >= 1
    double im_floor = 0.05;      // below this the tail bound is reported, not enforced
};

/// Copies A_0 and the two one-sided lists; B_0 and C_0 do not enter f.
PeriodicF f_from_coefficients(const CoefficientSet& c);

struct FValue {
    Complex value;
    double tail_bound;
    bool below_floor;  // |Im tau| under the configured floor
};

/// Evaluate the one-sided series on the correct half plane.
FValue eval_f(const PeriodicF& f, Complex tau);

/// psi(tau) = f(tau) - tau^{-1-nu} f(-1/tau)  (principal branch).
Complex psi_from_f(const PeriodicF& f, Complex tau);

enum class PsiKind { from_f, eisenstein_direct, eisenstein_continued, taylor_polynomial, custom };
enum class PsiDomain { off_real_axis, off_negative_cut, taylor_disk };

/// A period-function evaluator: closed-form Eisenstein (direct or continued),
/// derived from a PeriodicF, a Taylor polynomial from a transfer eigenvector,
/// or a custom callable.  Evaluation is domain-checked with a 1e-8 margin
/// around the excluded set.
class PsiEvaluator {
public:
    PsiEvaluator(PsiKind kind, PsiDomain domain, SpectralParam param,
                 std::function<Complex(Complex)> fn);

    Complex operator()(Complex z) const;
    bool in_domain(Complex z) const;

    PsiKind kind() const { return kind_; }
    PsiDomain domain() const { return domain_; }
    const SpectralParam& param() const { return param_; }

    // Taylor-kind metadata (center, radius, coefficients); empty otherwise.
    Complex taylor_center{2.0, 0.0};
    double taylor_radius = 0.0;
    std::vector<Complex> taylor_coeffs;

private:
    PsiKind kind_;
    PsiDomain domain_;
    SpectralParam param_;
    std::function<Complex(Complex)> fn_;
};

/// Eisenstein period function, Re s > 1, z off (-inf, 0]:
///   psi(z) = pi^{-s}(s-1) [ zeta(2s)(1+z^{-2s})/2 + sum_{p,q>=1}(qz+p)^{-2s} ],
/// inner p-sums as Hurwitz zeta, q-tail resummed through its asymptotic
/// expansion (a pure acceleration; every term is a convergent rearrangement).
Complex eisenstein_psi_direct(Complex s, Complex z, int q_max = 24);

/// Meromorphic continuation of the same function to Re s > 0, s != 1, 1/2:
/// subtract the first `correction_order` asymptotic terms of
/// zeta_H(2s, 1+qz) in powers of (qz)^{1-2s-j} and resum them through
/// zeta(2s-1+j) z^{1-2s-j}.
Complex eisenstein_psi_continued(Complex s, Complex z, int correction_order = 6);

PsiEvaluator make_psi_from_f(PeriodicF f);
PsiEvaluator make_eisenstein_psi_direct(Complex s, int q_max = 24);
PsiEvaluator make_eisenstein_psi_continued(Complex s, int correction_order = 6);
PsiEvaluator make_taylor_psi(SpectralParam param, std::vector<Complex> coeffs,
                             Complex center = Complex(2.0, 0.0), double radius = 1.35);
PsiEvaluator make_custom_psi(SpectralParam param, PsiDomain domain,
                             std::function<Complex(Complex)> fn);

/// f(tau) = (psi(tau) + tau^{-1-nu} psi(-1/tau)) / (1 + e^{-+ pi i nu}),
/// sign chosen by the half plane of tau.  Requires nu off 1+2Z.
Complex f_from_psi(const PsiEvaluator& psi, Complex tau);

/// psi(z) - psi(z+1) - (z+1)^{-nu-1} psi(z/(z+1))
Complex three_term_residual(const PsiEvaluator& psi, Complex z);

/// psi(z) - sign z^{-2s} psi(1/z)
Complex parity_residual(const PsiEvaluator& psi, Complex s, Complex z, int sign);

struct LimitReport {
    Complex residual;        // sum of the two limits at the largest height
    double convergence_gap;  // |change| between the last two heights
    std::vector<Complex> partials;
};

/// lim_{Im->+inf} (psi(tau) + tau^{-1-nu} psi(-1/tau)) plus the same limit from
/// below, approximated on the given heights.  Throws ConvergenceError if the
/// sequence fails to stabilize.
LimitReport limit_condition_residual(const PsiEvaluator& psi,
                                     const std::vector<double>& heights = {20.0, 40.0, 80.0},
                                     double tol = 1e-6);

/// The boundary-integral Fourier series F_alpha(z) attached to a coefficient
/// set: on H^{+-},
///   F(z) = +- 2i e^{+- pi i nu/2} (2 pi)^{-nu} Gamma(1-nu)^{-1}
///              sum_{m>=1} m^{-nu} A_{+-m} e(+- m z)
///          +- i e^{+- pi i nu/2} sin(pi nu/2) B_0   (+- i A_0 when nu = 0).
Complex capF_from_coefficients(const CoefficientSet& c, Complex z);

/// Residual of the identity  F_alpha = 2 i sqrt(pi) e^{+- pi i nu/2}
/// Gamma((1+nu)/2)^{-1} Gamma(1-nu/2)^{-1} f_{iota(nu) alpha}  over samples;
/// exercises Gamma duplication end to end.
double psiiotaalpha_identity_residual(const CoefficientSet& c,
                                      const std::vector<Complex>& z_samples);

} // namespace periodlab

#endif
