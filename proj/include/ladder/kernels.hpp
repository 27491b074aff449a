#pragma once
// The symmetric creation/annihilation integral kernels, the interlacing
// probability measure, sign-matrix statistical functions, and the
// finite-difference verification of the kernel eigen-equation.

#include "ladder/potentials.hpp"
#include "ladder/quadrature.hpp"
#include "ladder/types.hpp"

namespace ladder::kernels {

using potentials::PotentialSpec;

struct KernelValue {
  ComplexVal value;
  int n_from = 0;  // particle number acted on
  int n_to = 0;    // particle number produced (n_from +- 1)
  double k = 0.0;
};

// Interlacing measure on x' given x (N+1 strictly decreasing coordinates):
//   Delta_N(x') / Delta_{N+1}(x)^(2*lambda+1)
//     * prod_{1<=i<=j<=N} (x_i - x'_j)^lambda
//     * prod_{1<=j<i<=N+1} (x'_j - x_i)^lambda,
// positive on the open interlacing domain.  Its integral over that domain
// equals Gamma(lambda+1)^(N+1) / Gamma((N+1)(lambda+1)) independently of x.
// Throws InterlacingError if x' does not strictly interlace x.
double mu_lambda(const Configuration& x, const Configuration& xp,
                 double lambda);

// Both kernels share one shape.  With alpha the first argument set (n_to
// coordinates) and beta the second (n_from under creation's convention; see
// below):
//   exp[ -sum_{n<m} F(a_n - a_m) + sum_{n,m} F(a_n - b_m)
//        - sum_{n<m} F(b_n - b_m) + i k (sum a - sum b) ].
// creation_function:      a = x (N+1 coords), b = xp (N coords).
// annihilation_function:  a = x (N-1 coords), b = xp (N coords).
// The pair satisfies conj(annihilation(x', x)) = creation(x, x') pointwise.
// Values are computed in log space and exponentiated once.
ComplexVal creation_function(const PotentialSpec& spec, double k,
                             const Configuration& x, const Configuration& xp);
ComplexVal annihilation_function(const PotentialSpec& spec, double k,
                                 const Configuration& x,
                                 const Configuration& xp);

// Raw symmetric kernel on arbitrary coordinate lists (used by the
// permutation-invariance tests; no ordering is assumed or enforced).
ComplexVal kernel_raw(const PotentialSpec& spec, double k,
                      const std::vector<double>& a,
                      const std::vector<double>& b);

// Statistical function of the creation side: for x with N+1 entries and x'
// with N entries (arbitrary reals, no ordering assumed),
//   2^-(N+1)/(N+1)! * det M,   M row n = [sgn(x_n - x'_1..N), 1].
// Under PBC the sign function is applied to the sawtooth representative
// [d] = d - L*round(d/L).  Antisymmetric in each argument set; constant
// (value 2^-(N+1)/(N+1)! * det of the interlacing sign pattern) on the
// interlacing cell and zero when x' leaves the envelope of x.
double statistical_function_dagger(const std::vector<double>& x,
                                   const std::vector<double>& xp,
                                   const BoundaryCondition& bc);

// Statistical function of the annihilation side: x with N-1 entries, x'
// with N entries:
//   2^-N/N! * det M,  M rows n = 1..N-1: [sgn(x'_m - x_n)], last row all 1.
double statistical_function(const std::vector<double>& x,
                            const std::vector<double>& xp,
                            const BoundaryCondition& bc);

// Finite-difference residual of the kernel eigen-equation.  For sizes
// |x| = |xp| + 1 (creation) it checks
//   [H_{N+1}(x) - H_N(x')] a_k^dagger = +k^2 a_k^dagger,
// and for |x| = |xp| - 1 (annihilation) the same with -k^2.  H uses the
// ordered pair sum: H = -sum_n d^2/dx_n^2 + sum_{i != j} V(x_i - x_j).
// Second derivatives use the O(h^2) central stencil; the result is
// |residual| / |kernel value| at the base point.
double kernel_pde_residual(const PotentialSpec& spec, double k,
                           const Configuration& x, const Configuration& xp,
                           double h);

// Sum over ordered pairs of the pair potential: sum_{i != j} V(x_i - x_j)
// (each unordered pair twice).  Kind V contributes zero away from contact.
double pair_potential_sum(const PotentialSpec& spec,
                          const std::vector<double>& coords);

}  // namespace ladder::kernels
