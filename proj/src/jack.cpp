#include "ladder/jack.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <functional>
#include <limits>
#include <random>

#include "ladder/kernels.hpp"
#include "ladder/specialfn.hpp"

namespace ladder::jack {

namespace {

using Monomial = std::vector<int>;                // exponent vector, length nvars
using Dict = std::map<Monomial, Rational>;        // polynomial in monomial dict form

const ComplexVal I_UNIT(0.0, 1.0);

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// All distinct permutations of v (handles repeated entries).
std::vector<Monomial> distinct_perms(Monomial v) {
  std::sort(v.begin(), v.end());
  std::vector<Monomial> out;
  do {
    out.push_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

Monomial representative(const Partition& p, int nvars) {
  return p.padded(static_cast<std::size_t>(nvars));
}

Partition partition_of_monomial(const Monomial& m) {
  Monomial s = m;
  std::sort(s.begin(), s.end(), std::greater<int>());
  return Partition(s);
}

// Action of D = (alpha/2) sum_i z_i^2 d_i^2 + sum_{i!=j} z_i^2/(z_i-z_j) d_i
// on the monomial symmetric function m_nu, as a monomial dict.  On the
// symmetrized pair z^(p,q) + z^(q,p) with p > q the pair part acts as
//   p (z^(p,q) + z^(q,p)) + (p-q) sum_{s=q+1}^{p-1} z_i^s z_j^(p+q-s),
// and on p = q as p z^(p,p).  The diagonal piece max(e_i,e_j) is credited
// while visiting each monomial; the interior band is credited once per
// unordered monomial pair (visited at the member with e_i > e_j).
Dict apply_D(const Partition& nu, int nvars, const Rational& alpha) {
  Dict out;
  for (const Monomial& e : distinct_perms(nu.padded(nvars))) {
    Rational diag = 0;
    for (int i = 0; i < nvars; ++i)
      diag += Rational(e[i]) * Rational(e[i] - 1);
    diag *= alpha / 2;
    for (int i = 0; i < nvars; ++i) {
      for (int j = i + 1; j < nvars; ++j) {
        const int p = std::max(e[i], e[j]);
        const int q = std::min(e[i], e[j]);
        diag += p;
        if (e[i] > e[j]) {
          for (int s = q + 1; s <= p - 1; ++s) {
            Monomial f = e;
            f[i] = s;
            f[j] = p + q - s;
            out[f] += p - q;
          }
        }
      }
    }
    if (diag != 0) out[e] += diag;
  }
  return out;
}

// Partial sums of the padded parts (dominance data).
std::vector<int> partial_sums(const Partition& p, int n) {
  std::vector<int> ps(n, 0);
  int acc = 0;
  for (int i = 0; i < n; ++i) {
    acc += p.part(i);
    ps[i] = acc;
  }
  return ps;
}

Rational lb_eigenvalue(const Partition& p, int nvars, const Rational& alpha) {
  Rational e = 0;
  for (int i = 0; i < nvars; ++i) {
    const Rational pi(p.part(i));
    e += pi * (alpha / 2 * (pi - 1) + (nvars - 1 - i));
  }
  return e;
}

// --- complete homogeneous symmetric polynomials and dict arithmetic -------

void hmono_rec(int nvars, int k, int pos, Monomial& cur, Dict& d) {
  if (pos == nvars - 1) {
    cur[pos] = k;
    d[cur] += 1;
    return;
  }
  for (int t = 0; t <= k; ++t) {
    cur[pos] = t;
    hmono_rec(nvars, k - t, pos + 1, cur, d);
  }
}

Dict h_poly(int nvars, int k) {
  Dict d;
  if (k < 0) return d;
  Monomial cur(nvars, 0);
  if (k == 0) {
    d[cur] = 1;
    return d;
  }
  hmono_rec(nvars, k, 0, cur, d);
  return d;
}

Dict dict_mul(const Dict& A, const Dict& B, int nvars) {
  Dict out;
  for (const auto& [ea, ca] : A) {
    for (const auto& [eb, cb] : B) {
      Monomial e(nvars);
      for (int i = 0; i < nvars; ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  }
  return out;
}

int permutation_sign(const std::vector<int>& perm) {
  int inv = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inv;
  return (inv % 2 == 0) ? 1 : -1;
}

ComplexVal ipow(ComplexVal z, int n) {
  if (n < 0) return ComplexVal(1.0, 0.0) / ipow(z, -n);
  ComplexVal r(1.0, 0.0);
  while (n-- > 0) r *= z;
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// Partition
// ---------------------------------------------------------------------------
Partition::Partition(std::vector<int> p) {
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (p[i] < p[i + 1])
      throw ValidationError("partition parts must be weakly decreasing");
  if (!p.empty() && p.back() < 0)
    throw ValidationError("partition parts must be nonnegative");
  while (!p.empty() && p.back() == 0) p.pop_back();
  parts = std::move(p);
}

Partition Partition::from_increasing(const std::vector<int>& inc) {
  std::vector<int> d(inc.rbegin(), inc.rend());
  return Partition(d);
}

int Partition::weight() const {
  int w = 0;
  for (int p : parts) w += p;
  return w;
}

std::vector<int> Partition::padded(std::size_t n) const {
  if (parts.size() > n)
    throw ValidationError("partition longer than requested padding");
  std::vector<int> out = parts;
  out.resize(n, 0);
  return out;
}

std::vector<Partition> partitions_of(int w, int maxlen) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rem, int maxpart) {
    if (rem == 0) {
      out.emplace_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) >= maxlen) return;
    for (int p = std::min(rem, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(rem - p, p);
      cur.pop_back();
    }
  };
  if (w < 0) throw ValidationError("partition weight must be nonnegative");
  rec(w, w);
  return out;
}

bool dominated(const Partition& lhs, const Partition& rhs) {
  if (lhs.weight() != rhs.weight()) return false;
  const int n = static_cast<int>(std::max(lhs.length(), rhs.length()));
  int al = 0, ar = 0;
  for (int i = 0; i < n; ++i) {
    al += lhs.part(i);
    ar += rhs.part(i);
    if (al > ar) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// SymmetricPoly
// ---------------------------------------------------------------------------
Rational SymmetricPoly::coeff(const Partition& p) const {
  auto it = coeffs.find(p);
  return it == coeffs.end() ? Rational(0) : it->second;
}

bool SymmetricPoly::operator==(const SymmetricPoly& o) const {
  return nvars == o.nvars && coeffs == o.coeffs;
}

ComplexVal SymmetricPoly::eval(const std::vector<ComplexVal>& z) const {
  if (static_cast<int>(z.size()) != nvars)
    throw ValidationError("evaluation point has wrong dimension");
  int maxe = 0;
  for (const auto& [p, c] : coeffs)
    if (!p.parts.empty()) maxe = std::max(maxe, p.parts[0]);
  std::vector<std::vector<ComplexVal>> pw(nvars);
  for (int i = 0; i < nvars; ++i) {
    pw[i].resize(maxe + 1);
    pw[i][0] = ComplexVal(1.0, 0.0);
    for (int e = 1; e <= maxe; ++e) pw[i][e] = pw[i][e - 1] * z[i];
  }
  ComplexVal total(0.0, 0.0);
  for (const auto& [p, c] : coeffs) {
    ComplexVal msum(0.0, 0.0);
    for (const Monomial& mono : distinct_perms(p.padded(nvars))) {
      ComplexVal t(1.0, 0.0);
      for (int i = 0; i < nvars; ++i) t *= pw[i][mono[i]];
      msum += t;
    }
    total += c.get_d() * msum;
  }
  return total;
}

ComplexVal SymmetricPoly::eval_real(const std::vector<double>& z) const {
  std::vector<ComplexVal> zc(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) zc[i] = ComplexVal(z[i], 0.0);
  return eval(zc);
}

SymmetricPoly SymmetricPoly::restricted(int new_nvars) const {
  SymmetricPoly out;
  out.nvars = new_nvars;
  for (const auto& [p, c] : coeffs)
    if (static_cast<int>(p.length()) <= new_nvars && c != 0)
      out.coeffs[p] = c;
  return out;
}

// ---------------------------------------------------------------------------
// Jack polynomials
// ---------------------------------------------------------------------------
SymmetricPoly jack_P(const Partition& mu, int nvars, const Rational& alpha) {
  if (alpha <= 0) throw ValidationError("Jack parameter alpha must be positive");
  if (mu.weight() > 8)
    throw ValidationError("partition weight above the desk-scale cap 8");
  if (nvars < 1 || nvars > 4)
    throw ValidationError("variable count must be in 1..4");
  SymmetricPoly out;
  out.nvars = nvars;
  if (static_cast<int>(mu.length()) > nvars) return out;  // zero polynomial

  std::vector<Partition> dom;
  for (const Partition& k : partitions_of(mu.weight(), nvars))
    if (dominated(k, mu)) dom.push_back(k);
  std::sort(dom.begin(), dom.end(), [&](const Partition& a, const Partition& b) {
    return partial_sums(a, nvars) > partial_sums(b, nvars);
  });
  // dom[0] is mu (its partial sums dominate every other member's).

  const Rational e_mu = lb_eigenvalue(mu, nvars, alpha);
  std::vector<Dict> col(dom.size());
  for (std::size_t s = 0; s < dom.size(); ++s)
    col[s] = apply_D(dom[s], nvars, alpha);

  std::map<Partition, Rational> c;
  c[dom[0]] = 1;
  for (std::size_t t = 1; t < dom.size(); ++t) {
    const Partition& kap = dom[t];
    const Monomial rep = representative(kap, nvars);
    Rational rhs = 0;
    for (std::size_t s = 0; s < t; ++s) {
      auto it = col[s].find(rep);
      if (it != col[s].end()) rhs += it->second * c[dom[s]];
    }
    const Rational den = e_mu - lb_eigenvalue(kap, nvars, alpha);
    if (den == 0)
      throw Error("degenerate eigenvalue in the triangular Jack solve");
    c[kap] = rhs / den;
  }
  for (const auto& [p, v] : c)
    if (v != 0) out.coeffs[p] = v;
  return out;
}

SymmetricPoly schur_poly(const Partition& mu, int nvars) {
  if (mu.weight() > 8)
    throw ValidationError("partition weight above the desk-scale cap 8");
  if (nvars < 1 || nvars > 4)
    throw ValidationError("variable count must be in 1..4");
  SymmetricPoly out;
  out.nvars = nvars;
  if (static_cast<int>(mu.length()) > nvars) return out;
  const int l = static_cast<int>(mu.length());
  if (l == 0) {
    out.coeffs[Partition{}] = 1;
    return out;
  }
  Dict sum;
  std::vector<int> perm(l);
  for (int i = 0; i < l; ++i) perm[i] = i;
  do {
    Dict term;
    term[Monomial(nvars, 0)] = permutation_sign(perm);
    bool zero = false;
    for (int i = 0; i < l && !zero; ++i) {
      const int k = mu.parts[i] - i + perm[i];
      if (k < 0) {
        zero = true;
        break;
      }
      term = dict_mul(term, h_poly(nvars, k), nvars);
    }
    if (!zero)
      for (const auto& [e, v] : term) sum[e] += v;
  } while (std::next_permutation(perm.begin(), perm.end()));

  for (const auto& [e, v] : sum) {
    if (v == 0) continue;
    if (std::is_sorted(e.begin(), e.end(), std::greater<int>()))
      out.coeffs[partition_of_monomial(e)] = v;
  }
  return out;
}

Rational alpha_from_lambda(const Rational& lambda) {
  return Rational(1) / (lambda + 1);
}

Rational rationalize(double x, long max_den) {
  for (long d = 1; d <= max_den; ++d) {
    const double num = x * static_cast<double>(d);
    const double r = std::round(num);
    if (std::abs(num - r) < 1e-9) {
      Rational q(static_cast<long>(r), d);
      q.canonicalize();
      return q;
    }
  }
  throw ValidationError(
      "coupling is not close to a rational with denominator <= 64");
}

// ---------------------------------------------------------------------------
// Trigonometric closed form
// ---------------------------------------------------------------------------
TrigEvaluator::TrigEvaluator(const Partition& n, int N, double lam, double L)
    : N_(N), lam_(lam), L_(L) {
  if (L <= 0) throw ValidationError("period L must be positive");
  if (lam <= -1) throw ValidationError("coupling must exceed -1");
  if (N < 1) throw ValidationError("need at least one coordinate");
  const Rational lamq = rationalize(lam);
  if (static_cast<int>(n.length()) > N) {
    J_.nvars = N;  // zero polynomial
  } else {
    J_ = jack_P(n, N, alpha_from_lambda(lamq));
  }
  inv_sqrt_fact_ = 1.0 / std::sqrt(factorial(N));
  pref_ = std::pow(ComplexVal(0.0, 2.0),
                   ComplexVal((lam + 1.0) * N * (N - 1) / 2.0, 0.0));
}

ComplexVal TrigEvaluator::operator()(const std::vector<double>& x) const {
  if (static_cast<int>(x.size()) != N_)
    throw ValidationError("evaluation point has wrong dimension");
  if (J_.coeffs.empty()) return ComplexVal(0.0, 0.0);
  std::vector<ComplexVal> z(N_);
  for (int i = 0; i < N_; ++i)
    z[i] = std::exp(I_UNIT * (2.0 * PI * x[i] / L_));
  ComplexVal prod(1.0, 0.0);
  for (int i = 0; i < N_; ++i) {
    for (int j = i + 1; j < N_; ++j) {
      const double s = std::sin(PI * (x[i] - x[j]) / L_);
      if (s == 0.0) return ComplexVal(0.0, 0.0);
      prod *= std::pow(ComplexVal(s, 0.0), ComplexVal(lam_ + 1.0, 0.0));
    }
  }
  return pref_ * prod * J_.eval(z) * inv_sqrt_fact_;
}

ComplexVal trig_eigenfunction_raw(const Partition& n, double lam, double L,
                                  const std::vector<double>& x) {
  return TrigEvaluator(n, static_cast<int>(x.size()), lam, L)(x);
}

ComplexVal trig_eigenfunction(const Partition& n, double lam, double L,
                              const Configuration& x) {
  return trig_eigenfunction_raw(n, lam, L, x.coords);
}

std::vector<double> momenta_from_partition(const Partition& n, int N,
                                           double lam, double L) {
  if (static_cast<int>(n.length()) > N)
    throw ValidationError("partition longer than particle count");
  std::vector<double> ks(N);
  for (int i = 1; i <= N; ++i)
    ks[i - 1] =
        (2.0 * PI / L) * (n.part(i - 1) + 0.5 * (lam + 1.0) * (N + 1 - 2 * i));
  return ks;
}

std::vector<int> partition_labels_from_momenta(const std::vector<double>& ks,
                                               double lam, double L) {
  const int N = static_cast<int>(ks.size());
  std::vector<int> m(N);
  for (int i = 1; i <= N; ++i) {
    const double v =
        ks[i - 1] * L / (2.0 * PI) - 0.5 * (lam + 1.0) * (N + 1 - 2 * i);
    const long r = std::lround(v);
    if (std::abs(v - r) > 1e-8)
      throw ValidationError(
          "quasimomentum does not sit on the shifted integer lattice");
    m[i - 1] = static_cast<int>(r);
  }
  for (int i = 0; i + 1 < N; ++i)
    if (m[i] < m[i + 1])
      throw ValidationError("momentum labels are not weakly decreasing");
  return m;
}

double trig_energy(const Partition& n, int N, double lam, double L) {
  double e = 0.0;
  for (double k : momenta_from_partition(n, N, lam, L)) e += k * k;
  return e;
}

double trig_ground_energy(int N, double lam, double L) {
  const double w = 2.0 * PI / L;
  return w * w * (lam + 1.0) * (lam + 1.0) *
         (static_cast<double>(N) * N * N - N) / 12.0;
}

// ---------------------------------------------------------------------------
// Lifting recursion
// ---------------------------------------------------------------------------
double verify_okounkov_recursion(const Partition& n, int N, int lam,
                                 const quadrature::QuadratureSpec& q) {
  if (N < 1 || N > 3) throw ValidationError("N must be in 1..3");
  if (lam < 0 || lam > 2) throw ValidationError("integer coupling in {0,1,2}");
  if (static_cast<int>(n.length()) > N + 1)
    throw ValidationError("partition longer than N+1");

  const std::vector<int> m = n.padded(N + 1);
  const int mlow = m[N];
  std::vector<int> red(N);
  for (int i = 0; i < N; ++i) red[i] = m[i] - mlow;
  const Partition rp(red);

  const Rational alpha = alpha_from_lambda(Rational(lam));
  const SymmetricPoly JN = jack_P(rp, N, alpha);
  const SymmetricPoly JN1 = jack_P(n, N + 1, alpha);

  double bprod = 1.0;
  for (int i = 1; i <= N; ++i)
    bprod *= std::real(specialfn::beta(
        ComplexVal(m[i - 1] - mlow + (N + 1 - i) * (lam + 1.0), 0.0),
        ComplexVal(lam + 1.0, 0.0)));

  quadrature::QuadratureSpec qq = q;
  qq.scheme = quadrature::Scheme::GaussJacobi;
  qq.jacobi_alpha = static_cast<double>(lam);
  qq.jacobi_beta = static_cast<double>(lam);

  std::mt19937 rng(20260822u);
  std::uniform_real_distribution<double> uni(0.05, 0.95);
  double worst = 0.0;
  for (int rep = 0; rep < 5; ++rep) {
    std::vector<double> z(N + 1);
    for (;;) {
      for (double& v : z) v = uni(rng);
      std::sort(z.begin(), z.end(), std::greater<double>());
      bool ok = true;
      for (int i = 0; i + 1 <= N; ++i)
        if (z[i] - z[i + 1] < 0.04) ok = false;
      if (ok) break;
    }
    const Configuration zc{z};
    auto f = [&](const std::vector<double>& xp) -> ComplexVal {
      return kernels::mu_lambda(zc, Configuration{xp},
                                static_cast<double>(lam)) *
             JN.eval_real(xp);
    };
    ComplexVal rhs = quadrature::integrate_in(f, zc, qq) / bprod;
    double zpow = 1.0;
    for (double v : z) zpow *= std::pow(v, mlow);
    rhs *= zpow;
    const ComplexVal lhs = JN1.eval_real(z);
    const double dev = std::abs(lhs - rhs) / std::max(std::abs(lhs), 1e-300);
    worst = std::max(worst, dev);
  }
  return worst;
}

// ---------------------------------------------------------------------------
// Contour annihilation integral
// ---------------------------------------------------------------------------
std::vector<int> annihilation_channels(const Partition& n, int N, int lam) {
  std::vector<int> ch(N);
  for (int i = 1; i <= N; ++i) ch[i - 1] = n.part(i - 1) + (lam + 1) * (N - i);
  return ch;
}

std::pair<ComplexVal, ComplexVal> verify_annihilation_integral(
    const Partition& n, int N, int lam, int ntarget,
    const quadrature::QuadratureSpec& q) {
  (void)q;  // fixed spectral resolutions below
  if (N != 2)
    throw ValidationError("annihilation verification is implemented for N = 2");
  if (lam < 0 || lam > 2) throw ValidationError("integer coupling in {0,1,2}");
  if (static_cast<int>(n.length()) > 2)
    throw ValidationError("partition must have at most two parts");
  const int m1 = n.part(0), m2 = n.part(1);
  if (ntarget < 0 || ntarget > 28 || m1 + lam + 1 > 30)
    throw ValidationError("labels too large for the fixed Laurent bandwidth");

  const SymmetricPoly J2 = jack_P(n, 2, alpha_from_lambda(Rational(lam)));
  const ComplexVal z1 = std::exp(I_UNIT * 0.7);
  constexpr int kInner = 64;   // Laurent sampling of the inner variable
  constexpr int kOuter = 512;  // trapezoid nodes on the outer contour

  auto integrand = [&](ComplexVal z1p, ComplexVal z2p) -> ComplexVal {
    ComplexVal nu = (z1p - z2p) * ipow(z1, -(2 * lam + 1)) *
                    ipow(z1p * z2p, -(ntarget + 1)) *
                    ipow(z1 - z2p, lam) * ipow(z1p - z1, lam);
    return nu * J2.eval({z1p, z2p});
  };

  ComplexVal lhs(0.0, 0.0);
  std::vector<ComplexVal> samples(kInner);
  for (int jo = 0; jo < kOuter; ++jo) {
    const double phi = 2.0 * PI * jo / kOuter;
    const ComplexVal z1p = std::exp(I_UNIT * phi);
    for (int l = 0; l < kInner; ++l) {
      const ComplexVal z2p = std::exp(I_UNIT * (2.0 * PI * l / kInner));
      samples[l] = integrand(z1p, z2p);
    }
    // Laurent coefficients and the seam-averaged primitive rule:
    //   w^p integrates to z1^(p+1)/(p+1) for p != -1, and to i*pi for p = -1.
    ComplexVal inner(0.0, 0.0);
    for (int p = -kInner / 2; p < kInner / 2; ++p) {
      ComplexVal cp(0.0, 0.0);
      for (int l = 0; l < kInner; ++l)
        cp += samples[l] *
              std::exp(I_UNIT * (-2.0 * PI * l * p / kInner));
      cp /= static_cast<double>(kInner);
      if (p == -1)
        inner += cp * ComplexVal(0.0, PI);
      else
        inner += cp * ipow(z1, p + 1) / static_cast<double>(p + 1);
    }
    lhs += inner * I_UNIT * z1p * (2.0 * PI / kOuter);
  }

  const double sign = (lam % 2 == 0) ? -1.0 : 1.0;  // (-1)^(lam+1)
  const ComplexVal bstar =
      sign * ComplexVal(0.0, 2.0 * PI) * specialfn::beta(m1 - m2 + 1.0, lam + 1.0);
  ComplexVal rhs(0.0, 0.0);
  if (ntarget == m2)
    rhs = bstar * ipow(z1, m1 - ntarget);
  else if (ntarget == m1 + lam + 1)
    rhs = bstar * ipow(z1, m2 - ntarget - (lam + 1));
  return {lhs, rhs};
}

// ---------------------------------------------------------------------------
// Bethe quantization
// ---------------------------------------------------------------------------
BetheSolution bethe_quasimomenta(const std::vector<int>& n_increasing,
                                 double lam, double L) {
  if (L <= 0) throw ValidationError("period L must be positive");
  if (lam <= -1) throw ValidationError("coupling must exceed -1");
  const int M = static_cast<int>(n_increasing.size());
  if (M < 1) throw ValidationError("need at least one label");
  for (int i = 0; i + 1 < M; ++i)
    if (n_increasing[i] > n_increasing[i + 1])
      throw ValidationError("labels must be weakly increasing");
  BetheSolution s;
  s.n = n_increasing;
  s.lambda = lam;
  s.L = L;
  s.ks.resize(M);
  s.I.resize(M);
  for (int i = 1; i <= M; ++i) {
    s.ks[i - 1] = (2.0 * PI / L) *
                  (n_increasing[i - 1] + 0.5 * (lam + 1.0) * (M + 1 - 2 * i));
    s.I[i - 1] = n_increasing[i - 1] + 0.5 * (M + 1 - 2 * i);
  }
  return s;
}

double bethe_residual(const BetheSolution& sol, int* convention) {
  const int M = static_cast<int>(sol.ks.size());
  double best = std::numeric_limits<double>::infinity();
  int bestc = 1;
  for (int s : {1, -1}) {
    double r = 0.0;
    for (int i = 0; i < M; ++i) {
      double sum = 0.0;
      for (int j = 0; j < M; ++j) {
        const double d = sol.ks[i] - sol.ks[j];
        sum += (d > 0.0) ? 1.0 : (d < 0.0 ? -1.0 : 0.0);
      }
      const double rhs =
          (2.0 * PI / sol.L) * (sol.I[i] + s * (sol.lambda / 2.0) * sum);
      r = std::max(r, std::abs(sol.ks[i] - rhs));
    }
    if (r < best) {
      best = r;
      bestc = s;
    }
  }
  if (convention) *convention = bestc;
  return best;
}

}  // namespace ladder::jack
