#include "ladder/kernels.hpp"

#include <cmath>

namespace ladder::kernels {

using potentials::Kind;
using potentials::eval_F;
using potentials::eval_V;

double mu_lambda(const Configuration& x, const Configuration& xp,
                 double lambda) {
  if (!(lambda > -1.0)) throw ValidationError("mu_lambda: lambda must be > -1");
  const std::size_t N = xp.size();
  if (x.size() != N + 1)
    throw ValidationError("mu_lambda: need |x| = |x'| + 1");
  if (!x.interlaces(xp))
    throw InterlacingError("mu_lambda: x' does not strictly interlace x");

  // log Delta_N(x') - (2 lambda + 1) log Delta_{N+1}(x) + lambda * (cross
  // terms); every factor is positive inside the open interlacing domain.
  double lg = 0.0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j)
      lg += std::log(xp[i] - xp[j]);
  for (std::size_t i = 0; i < N + 1; ++i)
    for (std::size_t j = i + 1; j < N + 1; ++j)
      lg -= (2.0 * lambda + 1.0) * std::log(x[i] - x[j]);
  if (lambda != 0.0) {
    for (std::size_t i = 0; i < N; ++i)        // 1-based i <= j <= N
      for (std::size_t j = i; j < N; ++j)
        lg += lambda * std::log(x[i] - xp[j]);
    for (std::size_t j = 0; j < N; ++j)        // 1-based j < i <= N+1
      for (std::size_t i = j + 1; i < N + 1; ++i)
        lg += lambda * std::log(xp[j] - x[i]);
  }
  return std::exp(lg);
}

ComplexVal kernel_raw(const PotentialSpec& spec, double k,
                      const std::vector<double>& a,
                      const std::vector<double>& b) {
  double logmag = 0.0;
  for (std::size_t n = 0; n < a.size(); ++n)
    for (std::size_t m = n + 1; m < a.size(); ++m)
      logmag -= eval_F(spec, a[n] - a[m]);
  for (std::size_t n = 0; n < a.size(); ++n)
    for (std::size_t m = 0; m < b.size(); ++m)
      logmag += eval_F(spec, a[n] - b[m]);
  for (std::size_t n = 0; n < b.size(); ++n)
    for (std::size_t m = n + 1; m < b.size(); ++m)
      logmag -= eval_F(spec, b[n] - b[m]);
  double phase = k * (sum(a) - sum(b));
  return std::exp(ComplexVal(logmag, phase));
}

ComplexVal creation_function(const PotentialSpec& spec, double k,
                             const Configuration& x, const Configuration& xp) {
  if (x.size() != xp.size() + 1)
    throw ValidationError("creation_function: need |x| = |x'| + 1");
  return kernel_raw(spec, k, x.coords, xp.coords);
}

ComplexVal annihilation_function(const PotentialSpec& spec, double k,
                                 const Configuration& x,
                                 const Configuration& xp) {
  if (x.size() + 1 != xp.size())
    throw ValidationError("annihilation_function: need |x| = |x'| - 1");
  return kernel_raw(spec, k, x.coords, xp.coords);
}

namespace {

double sign_of(double d, const BoundaryCondition& bc) {
  if (bc.kind == BoundaryCondition::PBC) {
    // Sawtooth representative in [-L/2, L/2).
    d -= bc.L * std::round(d / bc.L);
  }
  return d > 0 ? 1.0 : (d < 0 ? -1.0 : 0.0);
}

// Determinant by Gaussian elimination with partial pivoting; matrices here
// are tiny (<= 6x6) and filled with -1/0/+1 entries, so this is exact
// enough by a wide margin.
double det(std::vector<std::vector<double>> m) {
  const std::size_t n = m.size();
  double d = 1.0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(m[r][c]) > std::abs(m[piv][c])) piv = r;
    if (m[piv][c] == 0.0) return 0.0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      d = -d;
    }
    d *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      double fac = m[r][c] / m[c][c];
      for (std::size_t cc = c; cc < n; ++cc) m[r][cc] -= fac * m[c][cc];
    }
  }
  return d;
}

double factorial(std::size_t n) {
  double f = 1.0;
  for (std::size_t i = 2; i <= n; ++i) f *= double(i);
  return f;
}

}  // namespace

double statistical_function_dagger(const std::vector<double>& x,
                                   const std::vector<double>& xp,
                                   const BoundaryCondition& bc) {
  const std::size_t rows = x.size();  // N+1
  if (xp.size() + 1 != rows)
    throw ValidationError("statistical_function_dagger: need |x| = |x'| + 1");
  std::vector<std::vector<double>> m(rows, std::vector<double>(rows));
  for (std::size_t n = 0; n < rows; ++n) {
    for (std::size_t c = 0; c < xp.size(); ++c)
      m[n][c] = sign_of(x[n] - xp[c], bc);
    m[n][rows - 1] = 1.0;
  }
  return det(std::move(m)) / (std::pow(2.0, double(rows)) * factorial(rows));
}

double statistical_function(const std::vector<double>& x,
                            const std::vector<double>& xp,
                            const BoundaryCondition& bc) {
  const std::size_t N = xp.size();
  if (x.size() + 1 != N)
    throw ValidationError("statistical_function: need |x| = |x'| - 1");
  std::vector<std::vector<double>> m(N, std::vector<double>(N));
  for (std::size_t n = 0; n + 1 < N; ++n)
    for (std::size_t c = 0; c < N; ++c)
      m[n][c] = sign_of(xp[c] - x[n], bc);
  for (std::size_t c = 0; c < N; ++c) m[N - 1][c] = 1.0;
  return det(std::move(m)) / (std::pow(2.0, double(N)) * factorial(N));
}

double pair_potential_sum(const PotentialSpec& spec,
                          const std::vector<double>& coords) {
  if (spec.kind == Kind::Delta) return 0.0;  // no pointwise part off contact
  double s = 0.0;
  for (std::size_t i = 0; i < coords.size(); ++i)
    for (std::size_t j = i + 1; j < coords.size(); ++j)
      s += 2.0 * eval_V(spec, coords[i] - coords[j]);  // ordered pairs
  return s;
}

double kernel_pde_residual(const PotentialSpec& spec, double k,
                           const Configuration& x, const Configuration& xp,
                           double h) {
  if (!(h > 0)) throw ValidationError("kernel_pde_residual: h > 0 required");
  const bool creation = (x.size() == xp.size() + 1);
  if (!creation && x.size() + 1 != xp.size())
    throw ValidationError("kernel_pde_residual: sizes must differ by one");

  auto value = [&](const std::vector<double>& a,
                   const std::vector<double>& b) {
    return kernel_raw(spec, k, a, b);
  };
  const std::vector<double>& a0 = x.coords;
  const std::vector<double>& b0 = xp.coords;
  ComplexVal base = value(a0, b0);
  if (std::abs(base) == 0.0)
    throw SingularityError("kernel_pde_residual: kernel vanished at base");

  // Second derivatives in every coordinate of both sets.
  ComplexVal lap_a{0.0, 0.0}, lap_b{0.0, 0.0};
  for (std::size_t i = 0; i < a0.size(); ++i) {
    std::vector<double> ap = a0, am = a0;
    ap[i] += h;
    am[i] -= h;
    lap_a += (value(ap, b0) - 2.0 * base + value(am, b0)) / (h * h);
  }
  for (std::size_t i = 0; i < b0.size(); ++i) {
    std::vector<double> bp = b0, bm = b0;
    bp[i] += h;
    bm[i] -= h;
    lap_b += (value(a0, bp) - 2.0 * base + value(a0, bm)) / (h * h);
  }

  const double va = pair_potential_sum(spec, a0);
  const double vb = pair_potential_sum(spec, b0);
  // [H(a) - H(b)] kernel = sign * k^2 * kernel, sign = +1 for creation.
  ComplexVal lhs = (-lap_a + va * base) - (-lap_b + vb * base);
  ComplexVal rhs = (creation ? 1.0 : -1.0) * k * k * base;
  return std::abs(lhs - rhs) / std::abs(base);
}

}  // namespace ladder::kernels
