#pragma once
// Numerical integration over the nested interlacing domains with integrable
// endpoint singularities (x-a)^alpha (b-x)^beta, plus the epsilon-regularized
// improper integrals needed under scattering boundary conditions.

#include <functional>
#include <vector>

#include "ladder/types.hpp"

namespace ladder::quadrature {

enum class Scheme { GaussJacobi, TanhSinh };

struct QuadratureSpec {
  Scheme scheme = Scheme::GaussJacobi;
  int nodes_per_dim = 24;     // starting count; escalates x2 up to max_nodes
  double jacobi_alpha = 0.0;  // endpoint exponent at the upper limit
  double jacobi_beta = 0.0;   // endpoint exponent at the lower limit
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;     // escalation floor: integrals with true value
                              // near zero (nodal points of an inner state)
                              // can never satisfy a purely relative test
  int max_nodes = 192;        // escalation cap before ToleranceNotMet

  void check() const {
    if (nodes_per_dim < 2) throw ValidationError("nodes_per_dim >= 2 required");
    if (!(jacobi_alpha > -1.0 && jacobi_beta > -1.0))
      throw ValidationError("jacobi exponents must be > -1");
    if (!(rel_tol > 0.0)) throw ValidationError("rel_tol must be > 0");
    if (!(abs_tol >= 0.0)) throw ValidationError("abs_tol must be >= 0");
  }

  static QuadratureSpec gauss_jacobi(double lambda, int nodes = 24,
                                     double rel_tol = 1e-10) {
    QuadratureSpec q;
    q.scheme = Scheme::GaussJacobi;
    q.nodes_per_dim = nodes;
    q.jacobi_alpha = q.jacobi_beta = lambda;
    q.rel_tol = rel_tol;
    return q;
  }
};

using Integrand = std::function<ComplexVal(const std::vector<double>&)>;

// Nodes t_i in (-1,1) and weights w_i of the n-point Gauss-Jacobi rule for
// weight (1-t)^alpha (1+t)^beta, computed by the Golub-Welsch symmetric
// tridiagonal eigenproblem.  Exact (to roundoff) for polynomials of degree
// <= 2n-1 against the weight.
void gauss_jacobi_rule(int n, double alpha, double beta,
                       std::vector<double>& nodes, std::vector<double>& weights);

// Gauss-Legendre shorthand (alpha = beta = 0).
void gauss_legendre_rule(int n, std::vector<double>& nodes,
                         std::vector<double>& weights);

// One-dimensional integral over [lo, hi] of
//     g(x) = (hi-x)^alpha (x-lo)^beta * s(x)
// where the caller supplies the FULL integrand g; the declared endpoint
// powers are divided out at the interior nodes and absorbed by the rule.
// (With alpha = beta = 0 this is plain Gauss-Legendre / tanh-sinh.)
ComplexVal integrate_1d(const std::function<ComplexVal(double)>& g, double lo,
                        double hi, const QuadratureSpec& spec);

// Nested integral over the inner interlacing domain attached to x (N+1
// coordinates):  int_{x2}^{x1} dx'1 ... int_{x(N+1)}^{xN} dx'N  f(x').
// Each dimension d absorbs endpoint behavior (x_d - x'_d)^alpha *
// (x'_d - x_{d+1})^beta via the declared jacobi exponents.  Escalates the
// node count (doubling, up to spec.max_nodes) until two successive results
// agree to rel_tol; throws ToleranceNotMet otherwise.
ComplexVal integrate_in(const Integrand& f, const Configuration& x,
                        const QuadratureSpec& spec);

// Nested integral over the outer domain, periodic case:
//   int_{x1}^{L} dx'1  int_{x2}^{x1} dx'2 ... int_{0}^{x(N-1)} dx'N  f(x')
// (x has N-1 coordinates inside (0, L); N = x.size() + 1 primed variables).
// Interior edges absorb the declared jacobi exponents; the box edges at L
// and 0 use exponent 0 (no singularity there).
ComplexVal integrate_out_pbc(const Integrand& f, const Configuration& x,
                             double L, const QuadratureSpec& spec);

// Result of an epsilon-regularized scattering-tail integral.  If the value
// grows like 1/eps (an on-shell delta contribution), on_shell is set and
// residue_estimate holds eps * value; otherwise value holds the integral at
// the given eps (callers extrapolate over an eps sequence).
struct RegularizedResult {
  ComplexVal value{0.0, 0.0};
  bool on_shell = false;
  ComplexVal residue_estimate{0.0, 0.0};
};

// Outer-domain integral under scattering boundary conditions with the two
// unbounded tails damped by exp(-eps * |distance into the tail|):
//   int_{x1}^{+inf} dx'1 ... int_{-inf}^{x(N-1)} dx'N  f(x') * damping.
// For x empty (N = 1) the domain is the whole line with damping
// exp(-eps*|x'|).  Tails are truncated where the damping falls below
// tail_cut; panels use composite Gauss-Legendre.  The 1/eps growth test is
// performed internally by comparing against eps/2 when detect_on_shell.
RegularizedResult integrate_out_sbc_regularized(const Integrand& f,
                                                const Configuration& x,
                                                double eps,
                                                const QuadratureSpec& spec,
                                                bool detect_on_shell = false);

// Richardson extrapolation of a linear-in-eps family: given values v(eps_i)
// on a halving sequence {e, e/2, e/4}, returns the eps -> 0 limit estimate.
ComplexVal richardson_eps_limit(const std::vector<ComplexVal>& values);

}  // namespace ladder::quadrature
