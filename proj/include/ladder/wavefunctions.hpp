#pragma once
// Exact N-particle eigenfunctions by iterated creation integrals:
//   psi_1(x) = exp(i k_1 x),
//   psi_{n+1}(x) = (C_n/sqrt(n+1)) * int_{interlace(x)} a+_{k_{n+1}}(x; x')
//                  psi_n(x') d^n x',
// together with the closed-form normalization constants C_n, two-particle
// closed forms and scattering matrices for the hyperbolic and inverse-cosh
// families, Hamiltonian/momentum residual checks, periodic-state
// orthogonality, and the coincidence-exponent probe.

#include <vector>

#include "ladder/jack.hpp"
#include "ladder/kernels.hpp"
#include "ladder/potentials.hpp"
#include "ladder/quadrature.hpp"
#include "ladder/types.hpp"

namespace ladder::wavefunctions {

// Two normalization conventions for the creation constants:
//  * Tabulated: the closed-form product constants as tabulated per family
//    (signum factors on the quasimomentum differences where they appear).
//  * RecursionMatched: the variant that makes the iterated-integral
//    recursion reproduce the reference closed forms exactly.  It differs
//    from Tabulated only for the periodic family (signed Beta arguments
//    instead of signum factors and an extra sqrt(N+1)) and for the contact
//    family (prod i(k_i - k_{N+1}), the Slater-matching sign).
enum class NormalizationVariant { Tabulated, RecursionMatched };

// Constant C_N for adding particle N+1: ks = (k_1, ..., k_{N+1}), the last
// entry being the new quasimomentum.  Returns 1 for a single k.  Throws
// ValidationError on coinciding quasimomenta where the constant is singular.
ComplexVal normalization_C(const potentials::PotentialSpec& spec,
                           const std::vector<double>& ks,
                           NormalizationVariant variant);

// An eigenstate request: which family, which quasimomenta (in recursion
// order: particle n+1 adds ks[n]), and whether to include the
// C_n/sqrt(n+1) prefactors (normalized=false keeps the raw iterated
// integrals for kernel-level debugging).
struct WaveState {
  potentials::PotentialSpec spec;
  std::vector<double> ks;
  bool normalized = true;
};

// Free-fermion Slater determinant det[exp(i k_m x_n)]/sqrt(N!), defined for
// coordinates in any order (antisymmetric by construction).
ComplexVal slater(const std::vector<double>& ks, const std::vector<double>& x);

// The constructed eigenfunction at an arbitrary real configuration
// (fermionic extension: evaluate on the sorted-decreasing configuration and
// multiply by the permutation sign; exact coincidences return 0).
// Family dispatch: the periodic family evaluates through the closed
// trigonometric form (quasimomenta must sit on the shifted lattice); all
// other families run the iterated quadrature recursion with the family's
// endpoint-weight rule (Gauss-Jacobi alpha=beta=lambda for power-law
// endpoint factors, Gauss-Legendre otherwise).
ComplexVal construct_psi(const WaveState& state, const std::vector<double>& x,
                         const quadrature::QuadratureSpec& q);

// The quadrature recursion path for any family (used to cross-check the
// periodic closed form against the recursion that defines it).
ComplexVal construct_psi_recursive(const WaveState& state,
                                   const std::vector<double>& x,
                                   const quadrature::QuadratureSpec& q);

// Two-particle closed form for the hyperbolic (III) and inverse-cosh (IV)
// families: with z_i = exp(2 a x_i), kp = (k_1 - k_2)/(2a),
//   psi_2 = (C_1/sqrt(2)) exp(i k_2 (x_1 + x_2)) (2a)^{-1} 2^{-lambda}
//           (z_1 -+ z_2)^{-lambda}
//           int_{z_2}^{z_1} w^{i kp - lambda - 1} (z_1 -+ w)^lambda
//                           (w -+ z_2)^lambda dw
// (upper signs III, lower signs IV), evaluated in log space.  x must obey
// x_1 > x_2 (fermionic extension as in construct_psi).
ComplexVal two_particle_closed_form(const potentials::PotentialSpec& spec,
                                    const std::vector<double>& ks,
                                    const std::vector<double>& x,
                                    const quadrature::QuadratureSpec& q);

// Integer-coupling cross-check of the same chord integral by exact binomial
// expansion into power antiderivatives; ValidationError unless lambda is a
// nonnegative integer.
ComplexVal two_particle_series(const potentials::PotentialSpec& spec,
                               const std::vector<double>& ks,
                               const std::vector<double>& x);

// Two-body scattering matrix S(kp) in the relative coordinate, defined as
// the ratio coeff(exp(i(k_2 x_1 + k_1 x_2)))/coeff(exp(i(k_1 x_1 + k_2 x_2)))
// of the asymptotic expansion at x_1 - x_2 -> +inf, kp = (k_1 - k_2)/(2a):
//   III: -Gamma(1-i kp) Gamma(lam+1+i kp)/(Gamma(1+i kp) Gamma(lam+1-i kp))
//   IV:  S_III(kp) * (sin(pi(lam+1)) + i sinh(pi kp))/sin(pi(lam+1-i kp))
//   V:   -1  (kp ignored; contact pairs are invisible to fermions)
ComplexVal smatrix(const potentials::PotentialSpec& spec, double kprime);

// Numeric extraction of the same ratio from the constructed psi_2: fit the
// two-exponential form at separations ln(ratio)/(2a) and a quarter relative
// period beyond, return coeff_2/coeff_1.
ComplexVal extract_smatrix_numeric(const potentials::PotentialSpec& spec,
                                   const std::vector<double>& ks, double ratio,
                                   const quadrature::QuadratureSpec& q);

// | (-sum_n d^2/dx_n^2 + sum_{i != j} V(x_i - x_j)) psi - E psi | / |psi|
// with E = sum k_i^2, via second central differences of step h.
double eigen_residual(const WaveState& state, const std::vector<double>& x,
                      double h, const quadrature::QuadratureSpec& q);

// | -i sum_n d psi/dx_n - (sum_i k_i) psi | / |psi| via first central
// differences of step h.
double momentum_residual(const WaveState& state, const std::vector<double>& x,
                         double h, const quadrature::QuadratureSpec& q);

// Raw torus overlap int_{[0,L)^N} conj(psi_b) psi_a d^N x of two periodic
// states labeled by partitions, via the N-fold trapezoid rule with
// grid^N points (spectrally exact here: the integrand is a trigonometric
// polynomial for integer coupling).  States are the closed trigonometric
// forms under the fermionic extension.  N <= 3, grid <= 256.
ComplexVal orthogonality_check_pbc(const potentials::PotentialSpec& spec,
                                   int N, const jack::Partition& na,
                                   const jack::Partition& nb, int grid);

// Fitted power of |psi| under pair coincidence: evaluates the two-particle
// state at (center + d/2, center - d/2) for d = d1, d2 and returns
// (ln|psi(d1)| - ln|psi(d2)|)/(ln d1 - ln d2).
double coincidence_exponent(const WaveState& state, double center, double d1,
                            double d2, const quadrature::QuadratureSpec& q);

}  // namespace ladder::wavefunctions
