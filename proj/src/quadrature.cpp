#include "ladder/quadrature.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

namespace ladder::quadrature {

// ---------------------------------------------------------------------------
// Gauss-Jacobi rules by Golub-Welsch: the three-term recurrence of the
// Jacobi polynomials gives a symmetric tridiagonal matrix whose eigenvalues
// are the nodes; weights come from the first eigenvector components scaled
// by the total weight-mass mu0 = 2^(a+b+1) B(a+1, b+1).
// ---------------------------------------------------------------------------
namespace {

std::mutex g_rule_mutex;
std::map<std::tuple<int, double, double>, std::pair<std::vector<double>, std::vector<double>>>
    g_rule_cache;

void compute_gauss_jacobi(int n, double a, double b, std::vector<double>& nodes,
                          std::vector<double>& weights) {
  const double s = a + b;
  Eigen::VectorXd diag(n), sub(n - 1);
  for (int k = 0; k < n; ++k) {
    if (k == 0)
      diag(k) = (b - a) / (s + 2.0);
    else {
      double d = (2.0 * k + s) * (2.0 * k + s + 2.0);
      diag(k) = (b * b - a * a) / d;
    }
  }
  for (int k = 1; k < n; ++k) {
    double b2;
    if (k == 1) {
      // (k + s) / (2k + s - 1) cancelled analytically at k = 1 so that
      // s -> -1 (e.g. Chebyshev a = b = -1/2) stays finite.
      b2 = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + s) * (2.0 + s) * (3.0 + s));
    } else {
      double q = 2.0 * k + s;
      b2 = 4.0 * k * (k + a) * (k + b) * (k + s) /
           (q * q * (q + 1.0) * (q - 1.0));
    }
    sub(k - 1) = std::sqrt(b2);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (es.info() != Eigen::Success)
    throw Error("gauss_jacobi_rule: eigensolver failed");

  const double mu0 = std::exp((s + 1.0) * std::log(2.0) + std::lgamma(a + 1.0) +
                              std::lgamma(b + 1.0) - std::lgamma(s + 2.0));
  nodes.resize(n);
  weights.resize(n);
  for (int i = 0; i < n; ++i) {
    nodes[i] = es.eigenvalues()(i);
    double v0 = es.eigenvectors()(0, i);
    weights[i] = mu0 * v0 * v0;
  }
}

}  // namespace

void gauss_jacobi_rule(int n, double alpha, double beta,
                       std::vector<double>& nodes,
                       std::vector<double>& weights) {
  if (n < 1) throw ValidationError("gauss_jacobi_rule: n >= 1 required");
  if (!(alpha > -1.0 && beta > -1.0))
    throw ValidationError("gauss_jacobi_rule: exponents must be > -1");
  auto key = std::make_tuple(n, alpha, beta);
  {
    std::lock_guard<std::mutex> lk(g_rule_mutex);
    auto it = g_rule_cache.find(key);
    if (it != g_rule_cache.end()) {
      nodes = it->second.first;
      weights = it->second.second;
      return;
    }
  }
  compute_gauss_jacobi(n, alpha, beta, nodes, weights);
  std::lock_guard<std::mutex> lk(g_rule_mutex);
  g_rule_cache.emplace(key, std::make_pair(nodes, weights));
}

void gauss_legendre_rule(int n, std::vector<double>& nodes,
                         std::vector<double>& weights) {
  gauss_jacobi_rule(n, 0.0, 0.0, nodes, weights);
}

// ---------------------------------------------------------------------------
// One-dimensional building blocks.
// ---------------------------------------------------------------------------
namespace {

// Fixed-order Gauss-Jacobi pass over [lo, hi] with the declared endpoint
// powers divided out of the caller's full integrand.
ComplexVal gj_pass_1d(const std::function<ComplexVal(double)>& g, double lo,
                      double hi, int n, double alpha, double beta) {
  std::vector<double> t, w;
  gauss_jacobi_rule(n, alpha, beta, t, w);
  const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
  ComplexVal acc{0.0, 0.0};
  for (int i = 0; i < n; ++i) {
    double corr = 1.0;
    if (alpha != 0.0) corr *= std::pow(1.0 - t[i], -alpha);
    if (beta != 0.0) corr *= std::pow(1.0 + t[i], -beta);
    acc += w[i] * corr * g(mid + half * t[i]);
  }
  // Endpoint powers were divided out in t-space, so only the plain affine
  // Jacobian half remains (the rule's weight already carries the t-powers).
  return acc * half;
}

// Tanh-sinh (double-exponential) pass with level halving; integrable
// endpoint singularities are tolerated because abscissas approach the ends
// double-exponentially while weights vanish even faster.
ComplexVal tanh_sinh_1d(const std::function<ComplexVal(double)>& g, double lo,
                        double hi, double rel_tol, double abs_tol) {
  const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
  const int max_level = 12;
  double h = 1.0;
  ComplexVal prev{0.0, 0.0};
  // Level 0: j = 0 plus symmetric tail terms at spacing h; each deeper level
  // halves h and adds the odd-index terms.
  auto term = [&](double tt) -> ComplexVal {
    double sh = std::sinh(tt);
    double u = std::tanh(0.5 * PI * sh);
    double c = std::cosh(0.5 * PI * sh);
    double w = 0.5 * PI * std::cosh(tt) / (c * c);
    if (w < 1e-300) return {0.0, 0.0};
    double xx = mid + half * u;
    if (xx <= lo || xx >= hi) return {0.0, 0.0};  // underflow clamp
    return w * g(xx);
  };
  ComplexVal sum = term(0.0);
  for (double tt = h; tt <= 4.5; tt += h) sum += term(tt) + term(-tt);
  prev = sum * (half * h);
  for (int level = 1; level <= max_level; ++level) {
    h *= 0.5;
    ComplexVal extra{0.0, 0.0};
    for (double tt = h; tt <= 4.5; tt += 2.0 * h) extra += term(tt) + term(-tt);
    sum += extra;
    ComplexVal cur = sum * (half * h);
    if (level >= 3 &&
        std::abs(cur - prev) <=
            std::max(rel_tol * std::abs(cur), abs_tol))
      return cur;
    prev = cur;
  }
  return prev;
}

}  // namespace

ComplexVal integrate_1d(const std::function<ComplexVal(double)>& g, double lo,
                        double hi, const QuadratureSpec& spec) {
  spec.check();
  if (!(hi > lo)) throw ValidationError("integrate_1d: empty interval");
  if (spec.scheme == Scheme::TanhSinh)
    return tanh_sinh_1d(g, lo, hi, spec.rel_tol, spec.abs_tol);
  const int cap = std::max(spec.max_nodes, spec.nodes_per_dim);
  ComplexVal prev{0.0, 0.0};
  bool have_prev = false;
  for (int n = spec.nodes_per_dim;; n *= 2) {
    ComplexVal cur =
        gj_pass_1d(g, lo, hi, n, spec.jacobi_alpha, spec.jacobi_beta);
    if (have_prev &&
        std::abs(cur - prev) <=
            std::max(spec.rel_tol * std::abs(cur), spec.abs_tol))
      return cur;
    if (2 * n > cap) {
      if (!have_prev) return cur;  // single-pass mode (cap == start count)
      ToleranceNotMet e("integrate_1d: node escalation exhausted");
      e.best_estimate_re = cur.real();
      e.best_estimate_im = cur.imag();
      e.achieved_rel = std::abs(cur - prev) / (std::abs(cur) + 1e-300);
      throw e;
    }
    prev = cur;
    have_prev = true;
  }
}

// ---------------------------------------------------------------------------
// Nested interlacing-domain integration.
// ---------------------------------------------------------------------------
namespace {

struct DimBox {
  double lo, hi, alpha, beta;
};

// Fixed-order tensor pass over a product of intervals with per-dimension
// endpoint exponents divided out.
ComplexVal box_pass(const Integrand& f, const std::vector<DimBox>& dims,
                    int n, Scheme scheme, double rel_tol) {
  const std::size_t N = dims.size();
  std::vector<std::vector<double>> nodes(N), wts(N);
  std::vector<double> mid(N), half(N), scale(N);
  for (std::size_t d = 0; d < N; ++d) {
    if (!(dims[d].hi > dims[d].lo))
      throw ValidationError("nested integration: empty interval");
    mid[d] = 0.5 * (dims[d].lo + dims[d].hi);
    half[d] = 0.5 * (dims[d].hi - dims[d].lo);
    std::vector<double> t, w;
    gauss_jacobi_rule(n, dims[d].alpha, dims[d].beta, t, w);
    nodes[d].resize(n);
    wts[d].resize(n);
    for (int i = 0; i < n; ++i) {
      nodes[d][i] = mid[d] + half[d] * t[i];
      double corr = 1.0;
      if (dims[d].alpha != 0.0) corr *= std::pow(1.0 - t[i], -dims[d].alpha);
      if (dims[d].beta != 0.0) corr *= std::pow(1.0 + t[i], -dims[d].beta);
      wts[d][i] = w[i] * corr;
    }
    scale[d] = half[d];  // endpoint powers divided out in t-space
  }
  (void)scheme;
  (void)rel_tol;
  std::vector<double> xp(N);
  ComplexVal total{0.0, 0.0};
  // Odometer over the tensor grid.
  std::vector<int> idx(N, 0);
  while (true) {
    double wprod = 1.0;
    for (std::size_t d = 0; d < N; ++d) {
      xp[d] = nodes[d][idx[d]];
      wprod *= wts[d][idx[d]];
    }
    ComplexVal fv = f(xp);
    if (!std::isfinite(fv.real()) || !std::isfinite(fv.imag()))
      throw Error("nested integration: non-finite integrand at interior node");
    total += wprod * fv;
    std::size_t d = 0;
    for (; d < N; ++d) {
      if (++idx[d] < n) break;
      idx[d] = 0;
    }
    if (d == N) break;
  }
  for (std::size_t d = 0; d < N; ++d) total *= scale[d];
  return total;
}

// Tanh-sinh tensor pass (fallback scheme): recursively nests the 1-d rule.
ComplexVal box_tanh_sinh(const Integrand& f, const std::vector<DimBox>& dims,
                         double rel_tol, double abs_tol, std::vector<double>& xp,
                         std::size_t d) {
  if (d == dims.size()) return f(xp);
  auto g = [&](double v) {
    xp[d] = v;
    return box_tanh_sinh(f, dims, rel_tol, abs_tol, xp, d + 1);
  };
  return tanh_sinh_1d(g, dims[d].lo, dims[d].hi, rel_tol, abs_tol);
}

ComplexVal escalate_box(const Integrand& f, const std::vector<DimBox>& dims,
                        const QuadratureSpec& spec) {
  spec.check();
  if (dims.empty()) return f({});
  if (spec.scheme == Scheme::TanhSinh) {
    std::vector<double> xp(dims.size());
    return box_tanh_sinh(f, dims, spec.rel_tol, spec.abs_tol, xp, 0);
  }
  const int cap = std::max(spec.max_nodes, spec.nodes_per_dim);
  ComplexVal prev{0.0, 0.0};
  bool have_prev = false;
  for (int n = spec.nodes_per_dim;; n *= 2) {
    ComplexVal cur = box_pass(f, dims, n, spec.scheme, spec.rel_tol);
    if (have_prev &&
        std::abs(cur - prev) <=
            std::max(spec.rel_tol * std::abs(cur), spec.abs_tol))
      return cur;
    if (2 * n > cap) {
      if (!have_prev) return cur;  // single-pass mode (cap == start count)
      ToleranceNotMet e("nested integration: node escalation exhausted");
      e.best_estimate_re = cur.real();
      e.best_estimate_im = cur.imag();
      e.achieved_rel = std::abs(cur - prev) / (std::abs(cur) + 1e-300);
      throw e;
    }
    prev = cur;
    have_prev = true;
  }
}

}  // namespace

ComplexVal integrate_in(const Integrand& f, const Configuration& x,
                        const QuadratureSpec& spec) {
  if (x.size() < 2)
    throw ValidationError("integrate_in: need at least 2 outer coordinates");
  const std::size_t N = x.size() - 1;
  std::vector<DimBox> dims(N);
  for (std::size_t d = 0; d < N; ++d)
    dims[d] = {x[d + 1], x[d], spec.jacobi_alpha, spec.jacobi_beta};
  return escalate_box(f, dims, spec);
}

ComplexVal integrate_out_pbc(const Integrand& f, const Configuration& x,
                             double L, const QuadratureSpec& spec) {
  if (!(L > 0)) throw ValidationError("integrate_out_pbc: L > 0 required");
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!(x[i] > 0.0 && x[i] < L))
      throw ValidationError("integrate_out_pbc: coordinates must lie in (0,L)");
  const std::size_t N = x.size() + 1;
  std::vector<DimBox> dims(N);
  for (std::size_t d = 0; d < N; ++d) {
    double hi = (d == 0) ? L : x[d - 1];
    double lo = (d == N - 1) ? 0.0 : x[d];
    // The box edges at L and 0 are not particle coordinates: no endpoint
    // singularity there, so those edges get exponent 0.
    double alpha = (d == 0) ? 0.0 : spec.jacobi_alpha;
    double beta = (d == N - 1) ? 0.0 : spec.jacobi_beta;
    dims[d] = {lo, hi, alpha, beta};
  }
  return escalate_box(f, dims, spec);
}

// ---------------------------------------------------------------------------
// Scattering-tail regularization.
// ---------------------------------------------------------------------------
namespace {

// Composite Gauss-Legendre down a damped half-line tail.  direction = +1
// integrates over [start, +inf), -1 over (-inf, start]; the damping factor
// exp(-eps * distance) multiplies the integrand.  Panel length and order
// resolve oscillations up to |k| ~ 6 at full precision.
ComplexVal damped_tail(const std::function<ComplexVal(double)>& g, double start,
                       int direction, double eps, double tail_cut) {
  const double panel = 6.0;
  const int order = 24;
  std::vector<double> t, w;
  gauss_legendre_rule(order, t, w);
  const double smax = -std::log(tail_cut) / eps;
  ComplexVal acc{0.0, 0.0};
  for (double s0 = 0.0; s0 < smax; s0 += panel) {
    double s1 = std::min(s0 + panel, smax);
    double mid = 0.5 * (s0 + s1), half = 0.5 * (s1 - s0);
    ComplexVal part{0.0, 0.0};
    for (int i = 0; i < order; ++i) {
      double s = mid + half * t[i];
      part += w[i] * std::exp(-eps * s) * g(start + direction * s);
    }
    acc += part * half;
  }
  return acc;
}

struct OutSbcGeometry {
  // dim d of N: kind 0 = bounded [lo, hi]; +1 = [start, inf); -1 = (-inf,
  // start]; 2 = whole line.
  struct Dim {
    int kind;
    double lo = 0.0, hi = 0.0, start = 0.0;
  };
  std::vector<Dim> dims;
};

ComplexVal out_sbc_recurse(const Integrand& f, const OutSbcGeometry& geo,
                           std::vector<double>& xp, std::size_t d, double eps,
                           const QuadratureSpec& spec, double tail_cut) {
  if (d == geo.dims.size()) return f(xp);
  auto inner = [&](double v) {
    xp[d] = v;
    return out_sbc_recurse(f, geo, xp, d + 1, eps, spec, tail_cut);
  };
  const auto& dim = geo.dims[d];
  switch (dim.kind) {
    case 0: {
      QuadratureSpec s1 = spec;
      return integrate_1d(inner, dim.lo, dim.hi, s1);
    }
    case +1:
      return damped_tail(inner, dim.start, +1, eps, tail_cut);
    case -1:
      return damped_tail(inner, dim.start, -1, eps, tail_cut);
    default: {  // whole line, damped both ways from start
      return damped_tail(inner, dim.start, +1, eps, tail_cut) +
             damped_tail(inner, dim.start, -1, eps, tail_cut);
    }
  }
}

ComplexVal out_sbc_once(const Integrand& f, const Configuration& x, double eps,
                        const QuadratureSpec& spec) {
  const double tail_cut = 1e-10;
  OutSbcGeometry geo;
  const std::size_t N = x.size() + 1;
  geo.dims.resize(N);
  if (x.size() == 0) {
    geo.dims[0] = {2, 0.0, 0.0, 0.0};  // whole line from 0
  } else {
    for (std::size_t d = 0; d < N; ++d) {
      if (d == 0)
        geo.dims[d] = {+1, 0.0, 0.0, x[0]};
      else if (d == N - 1)
        geo.dims[d] = {-1, 0.0, 0.0, x[N - 2]};
      else
        geo.dims[d] = {0, x[d], x[d - 1], 0.0};
    }
  }
  // Interior bounded dims keep the caller's jacobi exponents; the
  // unbounded dims are smooth and handled by composite panels.
  std::vector<double> xp(N);
  QuadratureSpec s1 = spec;
  return out_sbc_recurse(f, geo, xp, 0, eps, s1, tail_cut);
}

}  // namespace

RegularizedResult integrate_out_sbc_regularized(const Integrand& f,
                                                const Configuration& x,
                                                double eps,
                                                const QuadratureSpec& spec,
                                                bool detect_on_shell) {
  if (!(eps > 0.0))
    throw ValidationError("integrate_out_sbc_regularized: eps > 0 required");
  spec.check();
  RegularizedResult r;
  r.value = out_sbc_once(f, x, eps, spec);
  if (detect_on_shell) {
    ComplexVal v2 = out_sbc_once(f, x, 0.5 * eps, spec);
    // A delta contribution makes |v| ~ C/eps: halving eps doubles it.
    double g = std::abs(v2) / (std::abs(r.value) + 1e-300);
    if (g > 1.6 && std::abs(r.value) * eps > 1e-10) {
      r.on_shell = true;
      r.residue_estimate =
          0.5 * (eps * r.value + 0.5 * eps * v2);  // averaged eps*value
    }
  }
  return r;
}

ComplexVal richardson_eps_limit(const std::vector<ComplexVal>& values) {
  // values = {v(e), v(e/2), v(e/4), ...}; eliminate O(eps) then O(eps^2).
  if (values.empty()) throw ValidationError("richardson: no values");
  if (values.size() == 1) return values[0];
  std::vector<ComplexVal> u(values.size() - 1);
  for (std::size_t i = 0; i + 1 < values.size(); ++i)
    u[i] = 2.0 * values[i + 1] - values[i];
  if (u.size() == 1) return u[0];
  return (4.0 * u[1] - u[0]) / 3.0;
}

}  // namespace ladder::quadrature
