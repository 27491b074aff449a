#include "ladder/wavefunctions.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "ladder/specialfn.hpp"

namespace ladder::wavefunctions {

namespace {

const ComplexVal I_UNIT(0.0, 1.0);

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

ComplexVal ipow(ComplexVal z, int n) {
  if (n < 0) return ComplexVal(1.0, 0.0) / ipow(z, -n);
  ComplexVal r(1.0, 0.0);
  while (n-- > 0) r *= z;
  return r;
}

double sgn(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

// 1/B(x,y), with the zeros at numerator Gamma poles taken as exact zeros.
ComplexVal recip_beta(ComplexVal x, ComplexVal y) {
  const bool px = specialfn::is_nonpositive_integer(x);
  const bool py = specialfn::is_nonpositive_integer(y);
  const bool ps = specialfn::is_nonpositive_integer(x + y);
  if (px || py) {
    if (ps)
      throw PoleError("indeterminate beta reciprocal: coinciding Gamma poles");
    return ComplexVal(0.0, 0.0);
  }
  if (ps)
    throw PoleError("beta reciprocal diverges: Gamma(x+y) at a pole");
  return std::exp(specialfn::log_gamma(x + y) - specialfn::log_gamma(x) -
                  specialfn::log_gamma(y));
}

// Sort descending in place, returning the permutation sign; sets tie on an
// exact coincidence.
int sort_desc_sign(std::vector<double>& v, bool& tie) {
  int sign = 1;
  for (std::size_t i = 1; i < v.size(); ++i) {
    const double key = v[i];
    std::size_t j = i;
    while (j > 0 && v[j - 1] < key) {
      v[j] = v[j - 1];
      --j;
      sign = -sign;
    }
    v[j] = key;
  }
  tie = false;
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i] == v[i + 1]) tie = true;
  return sign;
}

// Per-family endpoint-weight rule for the creation integrals: families with
// power-law pair factors |d|^lambda (I, II, III) get Gauss-Jacobi weights
// alpha = beta = lambda; the inverse-cosh and contact families have smooth
// kernels (a lambda-weight would introduce a spurious singularity).
quadrature::QuadratureSpec family_rule(const potentials::PotentialSpec& spec,
                                       const quadrature::QuadratureSpec& q) {
  quadrature::QuadratureSpec qq = q;
  qq.scheme = quadrature::Scheme::GaussJacobi;
  switch (spec.kind) {
    case potentials::Kind::TrigCMS:
    case potentials::Kind::RatCMS:
    case potentials::Kind::HypCMS:
      qq.jacobi_alpha = qq.jacobi_beta = spec.lambda;
      break;
    case potentials::Kind::Morse:
    case potentials::Kind::Delta:
      qq.jacobi_alpha = qq.jacobi_beta = 0.0;
      break;
  }
  return qq;
}

ComplexVal psi_level(const WaveState& st, int n, const std::vector<double>& xs,
                     const quadrature::QuadratureSpec& q) {
  if (n == 1) return std::exp(I_UNIT * st.ks[0] * xs[0]);
  const double kn = st.ks[n - 1];
  const Configuration X{xs};
  const quadrature::QuadratureSpec qq = family_rule(st.spec, q);
  auto f = [&](const std::vector<double>& xp) -> ComplexVal {
    return kernels::creation_function(st.spec, kn, X, Configuration{xp}) *
           psi_level(st, n - 1, xp, q);
  };
  const ComplexVal integral = quadrature::integrate_in(f, X, qq);
  if (!st.normalized) return integral;
  const std::vector<double> kpre(st.ks.begin(), st.ks.begin() + n);
  const ComplexVal C = normalization_C(st.spec, kpre,
                                       NormalizationVariant::RecursionMatched);
  return C / std::sqrt(static_cast<double>(n)) * integral;
}

}  // namespace

// ---------------------------------------------------------------------------
// Normalization constants
// ---------------------------------------------------------------------------
ComplexVal normalization_C(const potentials::PotentialSpec& spec,
                           const std::vector<double>& ks,
                           NormalizationVariant variant) {
  spec.validate();
  if (ks.empty()) throw ValidationError("need at least one quasimomentum");
  const int N = static_cast<int>(ks.size()) - 1;
  if (N == 0) return ComplexVal(1.0, 0.0);
  const double kn = ks.back();
  const double lam = spec.lambda;
  for (int i = 0; i < N; ++i)
    if (ks[i] == kn)
      throw ValidationError("coinciding quasimomenta: constant is singular");

  ComplexVal C(1.0, 0.0);
  switch (spec.kind) {
    case potentials::Kind::TrigCMS: {
      const double L = spec.bc.L;
      C = ipow(ComplexVal(0.0, 2.0 * PI / L), N);
      const ComplexVal two_i_lam =
          std::pow(ComplexVal(0.0, 2.0), ComplexVal(lam, 0.0));
      for (int i = 0; i < N; ++i) {
        const double d = ks[i] - kn;
        if (variant == NormalizationVariant::Tabulated)
          C *= two_i_lam * sgn(d) *
               recip_beta(ComplexVal(L / (2.0 * PI) * std::abs(d), 0.0),
                          ComplexVal(lam + 1.0, 0.0));
        else
          C *= two_i_lam * recip_beta(ComplexVal(L / (2.0 * PI) * d, 0.0),
                                      ComplexVal(lam + 1.0, 0.0));
      }
      if (variant == NormalizationVariant::RecursionMatched)
        C *= std::sqrt(N + 1.0);
      break;
    }
    case potentials::Kind::RatCMS: {
      C = std::exp(I_UNIT * (PI * N * (lam + 1.0) / 2.0));  // i^(N(lam+1))
      const ComplexVal g = specialfn::gamma(ComplexVal(lam + 1.0, 0.0));
      for (int i = 0; i < N; ++i) {
        const double d = ks[i] - kn;
        C *= std::pow(std::abs(d), lam) * d / g;
      }
      break;
    }
    case potentials::Kind::HypCMS: {
      const double a = spec.a;
      C = std::pow(2.0 * a, N);
      for (int i = 0; i < N; ++i) {
        const double d = ks[i] - kn;
        C *= std::pow(2.0, lam) * sgn(d) *
             recip_beta(I_UNIT * (std::abs(d) / (2.0 * a)),
                        ComplexVal(lam + 1.0, 0.0));
      }
      break;
    }
    case potentials::Kind::Morse: {
      const double a = spec.a;
      for (int i = 0; i < N; ++i) {
        const double d = ks[i] - kn;
        const ComplexVal w = I_UNIT * (std::abs(d) / (2.0 * a));
        C *= std::pow(2.0, lam) * (I_UNIT * d) /
             specialfn::hyp2f1(ComplexVal(-lam, 0.0), w, w + 1.0, -1.0);
      }
      break;
    }
    case potentials::Kind::Delta: {
      for (int i = 0; i < N; ++i) {
        const double d = ks[i] - kn;
        C *= (variant == NormalizationVariant::Tabulated) ? (-I_UNIT * d)
                                                          : (I_UNIT * d);
      }
      break;
    }
  }
  return C;
}

// ---------------------------------------------------------------------------
// Slater determinant
// ---------------------------------------------------------------------------
ComplexVal slater(const std::vector<double>& ks,
                  const std::vector<double>& x) {
  const int N = static_cast<int>(ks.size());
  if (N < 1 || static_cast<int>(x.size()) != N)
    throw ValidationError("slater needs matching nonempty k and x lists");
  std::vector<int> perm(N);
  for (int i = 0; i < N; ++i) perm[i] = i;
  ComplexVal det(0.0, 0.0);
  do {
    int inv = 0;
    for (int i = 0; i < N; ++i)
      for (int j = i + 1; j < N; ++j)
        if (perm[i] > perm[j]) ++inv;
    ComplexVal term((inv % 2 == 0) ? 1.0 : -1.0, 0.0);
    for (int m = 0; m < N; ++m)
      term *= std::exp(I_UNIT * ks[m] * x[perm[m]]);
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det / std::sqrt(factorial(N));
}

// ---------------------------------------------------------------------------
// Constructed eigenfunctions
// ---------------------------------------------------------------------------
ComplexVal construct_psi_recursive(const WaveState& st,
                                   const std::vector<double>& x,
                                   const quadrature::QuadratureSpec& q) {
  st.spec.validate();
  if (st.ks.size() != x.size() || x.empty())
    throw ValidationError("need matching nonempty k and x lists");
  std::vector<double> xs = x;
  bool tie = false;
  const int sign = sort_desc_sign(xs, tie);
  if (tie) return ComplexVal(0.0, 0.0);
  return static_cast<double>(sign) *
         psi_level(st, static_cast<int>(xs.size()), xs, q);
}

ComplexVal construct_psi(const WaveState& st, const std::vector<double>& x,
                         const quadrature::QuadratureSpec& q) {
  st.spec.validate();
  if (st.ks.size() != x.size() || x.empty())
    throw ValidationError("need matching nonempty k and x lists");
  if (st.spec.kind == potentials::Kind::TrigCMS && st.normalized) {
    const int N = static_cast<int>(x.size());
    const double L = st.spec.bc.L;
    const double lam = st.spec.lambda;
    std::vector<double> xs = x;
    bool tie = false;
    const int sign = sort_desc_sign(xs, tie);
    if (tie) return ComplexVal(0.0, 0.0);
    std::vector<int> labels =
        jack::partition_labels_from_momenta(st.ks, lam, L);
    const int shift = labels.back() < 0 ? labels.back() : 0;
    for (int& p : labels) p -= shift;
    const jack::Partition part(labels);
    const ComplexVal boost =
        std::exp(I_UNIT * (2.0 * PI * shift / L) * sum(xs));
    return static_cast<double>(sign) * std::sqrt(factorial(N)) * boost *
           jack::trig_eigenfunction_raw(part, lam, L, xs);
  }
  return construct_psi_recursive(st, x, q);
}

// ---------------------------------------------------------------------------
// Two-particle closed forms (hyperbolic and inverse-cosh families)
// ---------------------------------------------------------------------------
namespace {

struct TwoBody {
  double a, lam, k1, k2, kp, u1, u2, z1, z2;
  int sign;  // fermionic extension sign
  bool minus_family;  // true for III (z1 - z2), false for IV (z1 + z2)
};

TwoBody two_body_setup(const potentials::PotentialSpec& spec,
                       const std::vector<double>& ks,
                       const std::vector<double>& x) {
  spec.validate();
  if (spec.kind != potentials::Kind::HypCMS &&
      spec.kind != potentials::Kind::Morse)
    throw ValidationError(
        "two-particle closed form covers the hyperbolic and inverse-cosh "
        "families");
  if (ks.size() != 2 || x.size() != 2)
    throw ValidationError("need exactly two quasimomenta and two coordinates");
  if (ks[0] == ks[1])
    throw ValidationError("coinciding quasimomenta");
  TwoBody t;
  t.a = spec.a;
  t.lam = spec.lambda;
  t.k1 = ks[0];
  t.k2 = ks[1];
  t.kp = (t.k1 - t.k2) / (2.0 * t.a);
  std::vector<double> xs = x;
  bool tie = false;
  t.sign = sort_desc_sign(xs, tie);
  if (tie) t.sign = 0;
  t.u1 = 2.0 * t.a * xs[0];
  t.u2 = 2.0 * t.a * xs[1];
  if (std::abs(t.u1) > 690.0 || std::abs(t.u2) > 690.0)
    throw ValidationError("separation too large for direct exponentiation");
  t.z1 = std::exp(t.u1);
  t.z2 = std::exp(t.u2);
  t.minus_family = (spec.kind == potentials::Kind::HypCMS);
  return t;
}

ComplexVal two_body_prefactor(const potentials::PotentialSpec& spec,
                              const std::vector<double>& ks, const TwoBody& t) {
  const ComplexVal C1 =
      normalization_C(spec, ks, NormalizationVariant::RecursionMatched);
  const double gap = t.minus_family ? (t.z1 - t.z2) : (t.z1 + t.z2);
  return C1 / std::sqrt(2.0) *
         std::exp(I_UNIT * t.k2 * ((t.u1 + t.u2) / (2.0 * t.a))) /
         (2.0 * t.a) * std::pow(2.0, -t.lam) * std::pow(gap, -t.lam);
}

}  // namespace

ComplexVal two_particle_closed_form(const potentials::PotentialSpec& spec,
                                    const std::vector<double>& ks,
                                    const std::vector<double>& x,
                                    const quadrature::QuadratureSpec& q) {
  const TwoBody t = two_body_setup(spec, ks, x);
  if (t.sign == 0) return ComplexVal(0.0, 0.0);
  quadrature::QuadratureSpec qq = q;
  qq.scheme = quadrature::Scheme::GaussJacobi;
  if (t.minus_family)
    qq.jacobi_alpha = qq.jacobi_beta = t.lam;
  else
    qq.jacobi_alpha = qq.jacobi_beta = 0.0;
  const double pm = t.minus_family ? -1.0 : 1.0;
  auto g = [&](double u) -> ComplexVal {
    const double eu = std::exp(u);
    const double f1 = t.z1 + pm * eu;   // z1 - e^u (III) or z1 + e^u (IV)
    const double f2 = eu + pm * t.z2;   // e^u - z2 (III) or e^u + z2 (IV)
    return std::exp(ComplexVal(-t.lam * u, t.kp * u)) *
           std::pow(f1, t.lam) * std::pow(f2, t.lam);
  };
  const ComplexVal chord = quadrature::integrate_1d(g, t.u2, t.u1, qq);
  return static_cast<double>(t.sign) * two_body_prefactor(spec, ks, t) * chord;
}

ComplexVal two_particle_series(const potentials::PotentialSpec& spec,
                               const std::vector<double>& ks,
                               const std::vector<double>& x) {
  const TwoBody t = two_body_setup(spec, ks, x);
  if (t.sign == 0) return ComplexVal(0.0, 0.0);
  const long l = std::lround(t.lam);
  if (std::abs(t.lam - l) > 1e-12 || l < 0)
    throw ValidationError("series form needs a nonnegative integer coupling");
  auto binom = [](long n, long k) {
    double b = 1.0;
    for (long i = 1; i <= k; ++i) b *= static_cast<double>(n - k + i) / i;
    return b;
  };
  ComplexVal chord(0.0, 0.0);
  for (long m = 0; m <= l; ++m) {
    for (long n = 0; n <= l; ++n) {
      double coeff = binom(l, m) * binom(l, n);
      if (t.minus_family && ((m + n) % 2 != 0)) coeff = -coeff;
      const ComplexVal e(static_cast<double>(m - n), t.kp);  // i kp + m - n
      // antiderivative of w^(i kp + m - n - 1): w^e / e, in log space
      const ComplexVal upper = std::exp(e * t.u1);
      const ComplexVal lower = std::exp(e * t.u2);
      chord += coeff * std::pow(t.z1, static_cast<double>(l - m)) *
               std::pow(t.z2, static_cast<double>(n)) * (upper - lower) / e;
    }
  }
  return static_cast<double>(t.sign) * two_body_prefactor(spec, ks, t) * chord;
}

// ---------------------------------------------------------------------------
// Scattering matrices
// ---------------------------------------------------------------------------
ComplexVal smatrix(const potentials::PotentialSpec& spec, double kprime) {
  spec.validate();
  const double lam = spec.lambda;
  const ComplexVal ikp = I_UNIT * kprime;
  switch (spec.kind) {
    case potentials::Kind::HypCMS:
      return -std::exp(specialfn::log_gamma(1.0 - ikp) +
                       specialfn::log_gamma(lam + 1.0 + ikp) -
                       specialfn::log_gamma(1.0 + ikp) -
                       specialfn::log_gamma(lam + 1.0 - ikp));
    case potentials::Kind::Morse: {
      const ComplexVal s3 =
          -std::exp(specialfn::log_gamma(1.0 - ikp) +
                    specialfn::log_gamma(lam + 1.0 + ikp) -
                    specialfn::log_gamma(1.0 + ikp) -
                    specialfn::log_gamma(lam + 1.0 - ikp));
      const ComplexVal den = std::sin(PI * (ComplexVal(lam + 1.0, 0.0) - ikp));
      if (std::abs(den) < 1e-14)
        throw PoleError("inverse-cosh scattering matrix at a removable "
                        "0/0 point; perturb kprime");
      const ComplexVal num =
          std::sin(PI * (lam + 1.0)) + I_UNIT * std::sinh(PI * kprime);
      return s3 * num / den;
    }
    case potentials::Kind::Delta:
      return ComplexVal(-1.0, 0.0);
    default:
      throw ValidationError(
          "scattering matrix defined for the hyperbolic, inverse-cosh, and "
          "contact families");
  }
}

ComplexVal extract_smatrix_numeric(const potentials::PotentialSpec& spec,
                                   const std::vector<double>& ks, double ratio,
                                   const quadrature::QuadratureSpec& q) {
  spec.validate();
  if (spec.kind != potentials::Kind::HypCMS &&
      spec.kind != potentials::Kind::Morse)
    throw ValidationError("numeric extraction covers the hyperbolic and "
                          "inverse-cosh families");
  if (ks.size() != 2 || ks[0] == ks[1])
    throw ValidationError("need two distinct quasimomenta");
  if (!(ratio > 1.0)) throw ValidationError("ratio must exceed 1");
  const double a = spec.a;
  const double d = std::log(ratio) / (2.0 * a);
  const double s = PI / (2.0 * std::abs(ks[0] - ks[1]));
  const std::vector<double> xA{d / 2.0, -d / 2.0};
  const std::vector<double> xB{d / 2.0 + s, -d / 2.0};
  const WaveState st{spec, ks, true};
  const ComplexVal psiA = construct_psi(st, xA, q);
  const ComplexVal psiB = construct_psi(st, xB, q);
  auto e1 = [&](const std::vector<double>& p) {
    return std::exp(I_UNIT * (ks[0] * p[0] + ks[1] * p[1]));
  };
  auto e2 = [&](const std::vector<double>& p) {
    return std::exp(I_UNIT * (ks[1] * p[0] + ks[0] * p[1]));
  };
  const ComplexVal det = e1(xA) * e2(xB) - e2(xA) * e1(xB);
  const ComplexVal A = (psiA * e2(xB) - e2(xA) * psiB) / det;
  const ComplexVal B = (e1(xA) * psiB - psiA * e1(xB)) / det;
  return B / A;
}

// ---------------------------------------------------------------------------
// Residual checks
// ---------------------------------------------------------------------------
double eigen_residual(const WaveState& st, const std::vector<double>& x,
                      double h, const quadrature::QuadratureSpec& q) {
  const ComplexVal base = construct_psi(st, x, q);
  if (std::abs(base) < 1e-300)
    throw SingularityError("wavefunction vanishes at the probe point");
  ComplexVal lap(0.0, 0.0);
  for (std::size_t n = 0; n < x.size(); ++n) {
    std::vector<double> xp = x, xm = x;
    xp[n] += h;
    xm[n] -= h;
    lap += (construct_psi(st, xp, q) + construct_psi(st, xm, q) - 2.0 * base) /
           (h * h);
  }
  const double V = kernels::pair_potential_sum(st.spec, x);
  double E = 0.0;
  for (double k : st.ks) E += k * k;
  return std::abs((-lap + V * base) - E * base) / std::abs(base);
}

double momentum_residual(const WaveState& st, const std::vector<double>& x,
                         double h, const quadrature::QuadratureSpec& q) {
  const ComplexVal base = construct_psi(st, x, q);
  if (std::abs(base) < 1e-300)
    throw SingularityError("wavefunction vanishes at the probe point");
  ComplexVal grad(0.0, 0.0);
  for (std::size_t n = 0; n < x.size(); ++n) {
    std::vector<double> xp = x, xm = x;
    xp[n] += h;
    xm[n] -= h;
    grad += (construct_psi(st, xp, q) - construct_psi(st, xm, q)) / (2.0 * h);
  }
  double K = 0.0;
  for (double k : st.ks) K += k;
  return std::abs(-I_UNIT * grad - K * base) / std::abs(base);
}

// ---------------------------------------------------------------------------
// Torus overlap
// ---------------------------------------------------------------------------
ComplexVal orthogonality_check_pbc(const potentials::PotentialSpec& spec,
                                   int N, const jack::Partition& na,
                                   const jack::Partition& nb, int grid) {
  spec.validate();
  if (spec.kind != potentials::Kind::TrigCMS)
    throw ValidationError("torus overlap applies to the periodic family");
  if (N < 1 || N > 3) throw ValidationError("N must be in 1..3");
  if (grid < 2 || grid > 256) throw ValidationError("grid must be in 2..256");
  const double L = spec.bc.L;
  const jack::TrigEvaluator ea(na, N, spec.lambda, L);
  const jack::TrigEvaluator eb(nb, N, spec.lambda, L);

  std::vector<int> idx(N, 0);
  std::vector<double> x(N), xs(N);
  ComplexVal acc(0.0, 0.0);
  for (;;) {
    for (int i = 0; i < N; ++i) x[i] = idx[i] * L / grid;
    xs = x;
    bool tie = false;
    const int sign = sort_desc_sign(xs, tie);
    if (!tie) {
      const ComplexVal va = static_cast<double>(sign) * ea(xs);
      const ComplexVal vb = static_cast<double>(sign) * eb(xs);
      acc += std::conj(vb) * va;
    }
    int d = 0;
    while (d < N && ++idx[d] == grid) idx[d++] = 0;
    if (d == N) break;
  }
  return acc * std::pow(L / grid, N);
}

// ---------------------------------------------------------------------------
// Coincidence exponent
// ---------------------------------------------------------------------------
double coincidence_exponent(const WaveState& st, double center, double d1,
                            double d2, const quadrature::QuadratureSpec& q) {
  if (st.ks.size() != 2)
    throw ValidationError("coincidence probe is a two-particle check");
  if (!(d1 > 0.0) || !(d2 > 0.0) || d1 == d2)
    throw ValidationError("need two distinct positive separations");
  auto val = [&](double d) {
    const std::vector<double> x{center + d / 2.0, center - d / 2.0};
    const double v = std::abs(construct_psi(st, x, q));
    if (!(v > 0.0))
      throw SingularityError("wavefunction vanished at the probe separation");
    return v;
  };
  return (std::log(val(d1)) - std::log(val(d2))) / (std::log(d1) - std::log(d2));
}

}  // namespace ladder::wavefunctions
