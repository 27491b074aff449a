// Command-line front end: verification suites, wavefunction / S-matrix /
// Jack-polynomial evaluation, JSON (canonical) and CSV (lossy) export.
//
// Exit codes: 0 success, 1 computation failure (including a verification
// that ran but missed its tolerance), 2 validation failure.

#include <CLI11.hpp>

#include <cmath>
#include <complex>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "ladder/jack.hpp"
#include "ladder/kernels.hpp"
#include "ladder/potentials.hpp"
#include "ladder/quadrature.hpp"
#include "ladder/selftest.hpp"
#include "ladder/specialfn.hpp"
#include "ladder/types.hpp"
#include "ladder/wavefunctions.hpp"

namespace {

using namespace ladder;

// ---------------------------------------------------------------------------
// Canonical JSON emission: fixed key order (insertion order at call sites),
// doubles at 17 significant digits -> byte-identical reruns.
// ---------------------------------------------------------------------------
std::string jnum(double v) {
  char b[48];
  std::snprintf(b, sizeof b, "%.17g", v);
  return b;
}

std::string cnum(double v) {  // CSV: 15 significant digits (lossy by design)
  char b[48];
  std::snprintf(b, sizeof b, "%.15g", v);
  return b;
}

std::string jarr(const std::vector<double>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += jnum(v[i]);
  }
  return s + "]";
}

std::string jiarr(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "]";
}

std::string jbool(bool b) { return b ? "true" : "false"; }

void write_output(const std::string& content, const std::string& path) {
  if (path.empty()) {
    std::fputs(content.c_str(), stdout);
    if (content.empty() || content.back() != '\n') std::fputc('\n', stdout);
    return;
  }
  std::FILE* f = std::fopen(path.c_str(), "wb");
  if (!f) throw ValidationError("cannot open output file: " + path);
  std::fputs(content.c_str(), f);
  if (content.empty() || content.back() != '\n') std::fputc('\n', f);
  std::fclose(f);
}

std::vector<double> parse_doubles(const std::string& s) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t next = s.find(',', pos);
    if (next == std::string::npos) next = s.size();
    const std::string tok = s.substr(pos, next - pos);
    try {
      std::size_t used = 0;
      out.push_back(std::stod(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw ValidationError("cannot parse number: '" + tok + "'");
    }
    pos = next + 1;
  }
  if (out.empty()) throw ValidationError("empty number list");
  return out;
}

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  for (double v : parse_doubles(s)) {
    const int i = static_cast<int>(std::lround(v));
    if (std::abs(v - i) > 1e-9) throw ValidationError("expected integers");
    out.push_back(i);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Shared family flags -> PotentialSpec.
// ---------------------------------------------------------------------------
struct SpecOpts {
  std::string kind = "II";
  double lambda = 0.0;
  double a = 1.0, b = 1.0, c = 1.0;
  double L = 0.0;
  std::string bc = "auto";

  void attach(CLI::App* cmd) {
    cmd->add_option("--kind", kind, "family: I|II|III|IV|V");
    cmd->add_option("--lambda", lambda, "dimensionless coupling (> -1)");
    cmd->add_option("--a", a, "rate parameter, kinds III-IV");
    cmd->add_option("--b", b, "rate parameter, kind I");
    cmd->add_option("--c", c, "contact strength, kind V");
    cmd->add_option("--L", L, "period (kind I: overrides --b via b = pi/L)");
    cmd->add_option("--bc", bc, "boundary condition: sbc|pbc|auto");
  }

  potentials::PotentialSpec build() const {
    using potentials::Kind;
    using potentials::PotentialSpec;
    const Kind k = potentials::kind_from_name(kind);
    switch (k) {
      case Kind::TrigCMS: {
        const double bb = (L > 0.0) ? PI / L : b;
        return PotentialSpec::trig(lambda, bb);
      }
      case Kind::RatCMS:
        return PotentialSpec::rational(lambda);
      case Kind::HypCMS:
        return PotentialSpec::hyperbolic(lambda, a);
      case Kind::Morse:
        return PotentialSpec::morse(lambda, a);
      case Kind::Delta: {
        if (bc == "pbc") {
          if (!(L > 0.0)) throw ValidationError("pbc requires --L");
          return PotentialSpec::delta(c, BoundaryCondition::pbc(L));
        }
        return PotentialSpec::delta(c);
      }
    }
    throw ValidationError("unknown family");
  }
};

struct QuadOpts {
  int nodes = 24;
  double rel_tol = 1e-10;
  int max_nodes = 192;
  std::string scheme = "gauss-jacobi";

  void attach(CLI::App* cmd) {
    cmd->add_option("--nodes", nodes, "starting nodes per dimension");
    cmd->add_option("--rel-tol", rel_tol, "escalation agreement tolerance");
    cmd->add_option("--max-nodes", max_nodes, "escalation cap per dimension");
    cmd->add_option("--scheme", scheme, "gauss-jacobi|tanh-sinh");
  }

  quadrature::QuadratureSpec build() const {
    quadrature::QuadratureSpec q;
    q.nodes_per_dim = nodes;
    q.rel_tol = rel_tol;
    q.max_nodes = max_nodes;
    if (scheme == "gauss-jacobi")
      q.scheme = quadrature::Scheme::GaussJacobi;
    else if (scheme == "tanh-sinh")
      q.scheme = quadrature::Scheme::TanhSinh;
    else
      throw ValidationError("unknown scheme: " + scheme);
    return q;
  }
};

std::vector<double> random_desc(int count, std::mt19937& rng, double lo,
                                double hi, double min_gap) {
  std::uniform_real_distribution<double> uni(lo, hi);
  std::vector<double> v(count);
  for (int tries = 0; tries < 10000; ++tries) {
    for (double& x : v) x = uni(rng);
    std::sort(v.begin(), v.end(), std::greater<double>());
    bool ok = true;
    for (int i = 0; i + 1 < count; ++i)
      if (v[i] - v[i + 1] < min_gap) ok = false;
    if (ok) return v;
  }
  throw Error("could not draw a spaced decreasing configuration");
}

std::vector<double> interlace_midpoints(const std::vector<double>& x,
                                        std::mt19937& rng) {
  std::uniform_real_distribution<double> uni(-0.2, 0.2);
  std::vector<double> xp(x.size() - 1);
  for (std::size_t j = 0; j + 1 < x.size(); ++j) {
    const double mid = 0.5 * (x[j] + x[j + 1]);
    xp[j] = mid + uni(rng) * (x[j] - x[j + 1]);
  }
  return xp;
}

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------
int cmd_verify_dixon(int n, double lambda, const std::string& xlist,
                     unsigned seed, double tol, const QuadOpts& qo,
                     const std::string& out, const std::string& format) {
  if (n < 1 || n > 3) throw ValidationError("--n must be in 1..3");
  if (!(lambda > -1.0)) throw ValidationError("--lambda must exceed -1");
  if (tol <= 0.0) tol = (n <= 2) ? 1e-8 : 1e-6;

  const double target = std::real(std::exp(
      (n + 1.0) * specialfn::log_gamma(ComplexVal(lambda + 1.0, 0.0)) -
      specialfn::log_gamma(ComplexVal((n + 1.0) * (lambda + 1.0), 0.0))));

  quadrature::QuadratureSpec q = qo.build();
  q.jacobi_alpha = q.jacobi_beta = lambda;

  std::vector<std::vector<double>> configs;
  if (!xlist.empty()) {
    configs.push_back(parse_doubles(xlist));
    if (static_cast<int>(configs[0].size()) != n + 1)
      throw ValidationError("--x needs n+1 coordinates");
  } else {
    std::mt19937 rng(seed);
    for (int r = 0; r < 3; ++r)
      configs.push_back(random_desc(n + 1, rng, -1.0, 1.0, 0.12));
  }

  std::string rows, csv = "case,value,target,rel_err\n";
  double max_rel = 0.0;
  for (std::size_t ci = 0; ci < configs.size(); ++ci) {
    const Configuration x{configs[ci]};
    const ComplexVal v = quadrature::integrate_in(
        [&](const std::vector<double>& xp) {
          return ComplexVal(
              kernels::mu_lambda(x, Configuration{xp}, lambda), 0.0);
        },
        x, q);
    const double rel = std::abs(v.real() - target) / std::abs(target);
    max_rel = std::max(max_rel, rel);
    if (ci) rows += ",";
    rows += "{\"x\":" + jarr(configs[ci]) + ",\"value\":" + jnum(v.real()) +
            ",\"rel_err\":" + jnum(rel) + "}";
    csv += std::to_string(ci) + "," + cnum(v.real()) + "," + cnum(target) +
           "," + cnum(rel) + "\n";
  }
  const bool pass = max_rel <= tol;
  const std::string json =
      "{\"command\":\"verify-dixon\",\"n\":" + std::to_string(n) +
      ",\"lambda\":" + jnum(lambda) + ",\"seed\":" + std::to_string(seed) +
      ",\"target\":" + jnum(target) + ",\"tol\":" + jnum(tol) +
      ",\"results\":[" + rows + "],\"max_rel_err\":" + jnum(max_rel) +
      ",\"pass\":" + jbool(pass) + "}";
  write_output(format == "csv" ? csv : json, out);
  return pass ? 0 : 1;
}

int cmd_verify_kernel_pde(const SpecOpts& so, int n, double k, double h,
                          const std::string& direction, unsigned seed,
                          double tol, const std::string& out,
                          const std::string& format) {
  const potentials::PotentialSpec spec = so.build();
  if (spec.kind == potentials::Kind::Delta)
    throw ValidationError(
        "the contact family has no pointwise potential; the kernel identity "
        "is checked through the constructed states instead");
  if (n < 1 || n > 3) throw ValidationError("--n must be in 1..3");
  if (tol <= 0.0) tol = 1e-4;

  std::mt19937 rng(seed);
  double lo = -1.0, hi = 1.0;
  if (spec.kind == potentials::Kind::TrigCMS) {
    lo = 0.05 * spec.bc.L;
    hi = 0.95 * spec.bc.L;
  }
  double r1 = 0.0, r2 = 0.0;
  int n_from = 0, n_to = 0;
  if (direction == "creation") {
    const std::vector<double> big = random_desc(n + 1, rng, lo, hi, 0.12);
    const std::vector<double> small = interlace_midpoints(big, rng);
    const Configuration X{big}, XP{small};
    r1 = kernels::kernel_pde_residual(spec, k, X, XP, h);
    r2 = kernels::kernel_pde_residual(spec, k, X, XP, h / 2.0);
    n_from = n;
    n_to = n + 1;
  } else if (direction == "annihilation") {
    const std::vector<double> big = random_desc(n, rng, lo, hi, 0.12);
    const std::vector<double> small = interlace_midpoints(big, rng);
    const Configuration X{small}, XP{big};
    r1 = kernels::kernel_pde_residual(spec, k, X, XP, h);
    r2 = kernels::kernel_pde_residual(spec, k, X, XP, h / 2.0);
    n_from = n;
    n_to = n - 1;
  } else {
    throw ValidationError("--direction must be creation or annihilation");
  }
  const double order = std::log2(std::max(r1, 1e-300) / std::max(r2, 1e-300));
  const bool pass = (r1 <= tol) && (r2 <= r1 / 2.0);
  const std::string json =
      "{\"command\":\"verify-kernel-pde\",\"spec\":" + potentials::to_json(spec) +
      ",\"n_from\":" + std::to_string(n_from) +
      ",\"n_to\":" + std::to_string(n_to) + ",\"k\":" + jnum(k) +
      ",\"h\":" + jnum(h) + ",\"seed\":" + std::to_string(seed) +
      ",\"residual_h\":" + jnum(r1) + ",\"residual_h_half\":" + jnum(r2) +
      ",\"order_estimate\":" + jnum(order) + ",\"tol\":" + jnum(tol) +
      ",\"pass\":" + jbool(pass) + "}";
  const std::string csv =
      "n_from,n_to,k,h,residual_h,residual_h_half,order\n" +
      std::to_string(n_from) + "," + std::to_string(n_to) + "," + cnum(k) +
      "," + cnum(h) + "," + cnum(r1) + "," + cnum(r2) + "," + cnum(order) +
      "\n";
  write_output(format == "csv" ? csv : json, out);
  return pass ? 0 : 1;
}

int cmd_psi_eval(const SpecOpts& so, const QuadOpts& qo,
                 const std::string& kslist, const std::string& xlist,
                 bool unnormalized, bool recursive, const std::string& out,
                 const std::string& format) {
  const potentials::PotentialSpec spec = so.build();
  const std::vector<double> ks = parse_doubles(kslist);
  const std::vector<double> x = parse_doubles(xlist);
  const wavefunctions::WaveState st{spec, ks, !unnormalized};
  const quadrature::QuadratureSpec q = qo.build();
  const ComplexVal v = recursive
                           ? wavefunctions::construct_psi_recursive(st, x, q)
                           : wavefunctions::construct_psi(st, x, q);
  const std::string json =
      "{\"command\":\"psi-eval\",\"spec\":" + potentials::to_json(spec) +
      ",\"ks\":" + jarr(ks) + ",\"x\":" + jarr(x) +
      ",\"value_re\":" + jnum(v.real()) + ",\"value_im\":" + jnum(v.imag()) +
      "}";
  std::string csv = "kind,lambda,ks,x,value_re,value_im\n";
  csv += std::string(potentials::kind_name(spec.kind)) + "," +
         cnum(spec.lambda) + ",";
  for (std::size_t i = 0; i < ks.size(); ++i)
    csv += (i ? ";" : "") + cnum(ks[i]);
  csv += ",";
  for (std::size_t i = 0; i < x.size(); ++i) csv += (i ? ";" : "") + cnum(x[i]);
  csv += "," + cnum(v.real()) + "," + cnum(v.imag()) + "\n";
  write_output(format == "csv" ? csv : json, out);
  return 0;
}

int cmd_smatrix(const SpecOpts& so, const QuadOpts& qo, double kprime,
                double numeric_ratio, const std::string& out,
                const std::string& format) {
  const potentials::PotentialSpec spec = so.build();
  const ComplexVal s = wavefunctions::smatrix(spec, kprime);
  std::string extra;
  std::string csv_extra;
  if (numeric_ratio > 1.0) {
    const double a = spec.a;
    const std::vector<double> ks{a * kprime, -a * kprime};  // kp = (k1-k2)/2a
    const ComplexVal sn = wavefunctions::extract_smatrix_numeric(
        spec, ks, numeric_ratio, qo.build());
    extra = ",\"numeric_ratio\":" + jnum(numeric_ratio) +
            ",\"numeric_re\":" + jnum(sn.real()) +
            ",\"numeric_im\":" + jnum(sn.imag()) +
            ",\"numeric_abs_err\":" + jnum(std::abs(sn - s));
    csv_extra = "," + cnum(sn.real()) + "," + cnum(sn.imag());
  }
  const std::string json =
      "{\"command\":\"smatrix\",\"spec\":" + potentials::to_json(spec) +
      ",\"kprime\":" + jnum(kprime) + ",\"re\":" + jnum(s.real()) +
      ",\"im\":" + jnum(s.imag()) + extra + "}";
  const std::string csv =
      std::string("kind,lambda,a,kprime,re,im") +
      (csv_extra.empty() ? "" : ",numeric_re,numeric_im") + "\n" +
      potentials::kind_name(spec.kind) + "," + cnum(spec.lambda) + "," +
      cnum(spec.a) + "," + cnum(kprime) + "," + cnum(s.real()) + "," +
      cnum(s.imag()) + csv_extra + "\n";
  write_output(format == "csv" ? csv : json, out);
  return 0;
}

int cmd_bethe(const std::string& nlist, double lambda, double L,
              const std::string& out, const std::string& format) {
  const std::vector<int> n = parse_ints(nlist);
  const jack::BetheSolution sol = jack::bethe_quasimomenta(n, lambda, L);
  int convention = 0;
  const double res = jack::bethe_residual(sol, &convention);
  const std::string json =
      "{\"command\":\"bethe\",\"n\":" + jiarr(n) + ",\"lambda\":" +
      jnum(lambda) + ",\"L\":" + jnum(L) + ",\"ks\":" + jarr(sol.ks) +
      ",\"I\":" + jarr(sol.I) + ",\"residual\":" + jnum(res) +
      ",\"convention\":" + std::to_string(convention) + "}";
  std::string csv = "index,n,I,k,residual,convention\n";
  for (std::size_t i = 0; i < sol.ks.size(); ++i)
    csv += std::to_string(i + 1) + "," + std::to_string(n[i]) + "," +
           cnum(sol.I[i]) + "," + cnum(sol.ks[i]) + "," + cnum(res) + "," +
           std::to_string(convention) + "\n";
  write_output(format == "csv" ? csv : json, out);
  return 0;
}

jack::Rational parse_alpha(const std::string& s) {
  const std::size_t slash = s.find('/');
  if (slash != std::string::npos) {
    const long num = std::stol(s.substr(0, slash));
    const long den = std::stol(s.substr(slash + 1));
    if (den <= 0) throw ValidationError("alpha denominator must be positive");
    jack::Rational q(num, den);
    q.canonicalize();
    return q;
  }
  return jack::rationalize(std::stod(s));
}

int cmd_jack_compute(const std::string& plist, int nvars,
                     const std::string& alpha_s, const std::string& out,
                     const std::string& format) {
  const jack::Partition mu(parse_ints(plist));
  const jack::Rational alpha = parse_alpha(alpha_s);
  const jack::SymmetricPoly p = jack::jack_P(mu, nvars, alpha);
  std::string terms, csv = "partition,num,den\n";
  bool first = true;
  for (const auto& [part, coeff] : p.coeffs) {
    if (!first) terms += ",";
    first = false;
    terms += "{\"partition\":" + jiarr(part.parts) + ",\"num\":\"" +
             coeff.get_num().get_str() + "\",\"den\":\"" +
             coeff.get_den().get_str() + "\"}";
    std::string pstr;
    for (std::size_t i = 0; i < part.parts.size(); ++i)
      pstr += (i ? ";" : "") + std::to_string(part.parts[i]);
    csv += pstr + "," + coeff.get_num().get_str() + "," +
           coeff.get_den().get_str() + "\n";
  }
  const std::string json =
      "{\"command\":\"jack-compute\",\"partition\":" + jiarr(mu.parts) +
      ",\"nvars\":" + std::to_string(nvars) + ",\"alpha\":{\"num\":\"" +
      alpha.get_num().get_str() + "\",\"den\":\"" + alpha.get_den().get_str() +
      "\"},\"terms\":[" + terms + "]}";
  write_output(format == "csv" ? csv : json, out);
  return 0;
}

int cmd_jack_verify(const std::string& check, const std::string& plist,
                    int lambda, int bign, int ntarget, const QuadOpts& qo,
                    const std::string& out, const std::string& format) {
  if (check == "schur") {
    int compared = 0, mismatched = 0;
    for (int w = 0; w <= 6; ++w) {
      for (int nv = 1; nv <= 4; ++nv) {
        for (const jack::Partition& mu : jack::partitions_of(w, nv)) {
          ++compared;
          if (!(jack::jack_P(mu, nv, jack::Rational(1)) ==
                jack::schur_poly(mu, nv)))
            ++mismatched;
        }
      }
    }
    const bool pass = (mismatched == 0);
    const std::string json =
        "{\"command\":\"jack-verify\",\"check\":\"schur\",\"compared\":" +
        std::to_string(compared) +
        ",\"mismatched\":" + std::to_string(mismatched) +
        ",\"pass\":" + jbool(pass) + "}";
    const std::string csv = "check,compared,mismatched\nschur," +
                            std::to_string(compared) + "," +
                            std::to_string(mismatched) + "\n";
    write_output(format == "csv" ? csv : json, out);
    return pass ? 0 : 1;
  }
  if (check == "okounkov") {
    const jack::Partition mu(parse_ints(plist));
    const double dev =
        jack::verify_okounkov_recursion(mu, bign, lambda, qo.build());
    const bool pass = dev <= 1e-8;
    const std::string json =
        "{\"command\":\"jack-verify\",\"check\":\"okounkov\",\"partition\":" +
        jiarr(mu.parts) + ",\"n\":" + std::to_string(bign) +
        ",\"lambda\":" + std::to_string(lambda) +
        ",\"deviation\":" + jnum(dev) + ",\"pass\":" + jbool(pass) + "}";
    const std::string csv = "check,n,lambda,deviation\nokounkov," +
                            std::to_string(bign) + "," +
                            std::to_string(lambda) + "," + cnum(dev) + "\n";
    write_output(format == "csv" ? csv : json, out);
    return pass ? 0 : 1;
  }
  if (check == "annihilation") {
    const jack::Partition mu(parse_ints(plist));
    const auto [lhs, rhs] =
        jack::verify_annihilation_integral(mu, 2, lambda, ntarget, qo.build());
    const double scale =
        2.0 * PI *
        std::abs(specialfn::beta(ComplexVal(mu.part(0) - mu.part(1) + 1.0, 0.0),
                                 ComplexVal(lambda + 1.0, 0.0)));
    const double err = std::abs(lhs - rhs);
    const bool pass = err <= 1e-6 * scale;
    const std::string json =
        "{\"command\":\"jack-verify\",\"check\":\"annihilation\","
        "\"partition\":" +
        jiarr(mu.parts) + ",\"lambda\":" + std::to_string(lambda) +
        ",\"ntarget\":" + std::to_string(ntarget) +
        ",\"lhs_re\":" + jnum(lhs.real()) + ",\"lhs_im\":" + jnum(lhs.imag()) +
        ",\"rhs_re\":" + jnum(rhs.real()) + ",\"rhs_im\":" + jnum(rhs.imag()) +
        ",\"abs_err\":" + jnum(err) + ",\"scale\":" + jnum(scale) +
        ",\"pass\":" + jbool(pass) + "}";
    const std::string csv =
        "check,lambda,ntarget,lhs_re,lhs_im,rhs_re,rhs_im,abs_err\n"
        "annihilation," +
        std::to_string(lambda) + "," + std::to_string(ntarget) + "," +
        cnum(lhs.real()) + "," + cnum(lhs.imag()) + "," + cnum(rhs.real()) +
        "," + cnum(rhs.imag()) + "," + cnum(err) + "\n";
    write_output(format == "csv" ? csv : json, out);
    return pass ? 0 : 1;
  }
  throw ValidationError("--check must be schur, okounkov, or annihilation");
}

int cmd_ortho_check(double lambda, double L, const std::string& nalist,
                    const std::string& nblist, int bign, int grid, double tol,
                    const std::string& out, const std::string& format) {
  const potentials::PotentialSpec spec =
      potentials::PotentialSpec::trig(lambda, PI / L);
  const jack::Partition na(parse_ints(nalist));
  const jack::Partition nb(parse_ints(nblist));
  const ComplexVal overlap =
      wavefunctions::orthogonality_check_pbc(spec, bign, na, nb, grid);
  const double norm_a = std::abs(
      wavefunctions::orthogonality_check_pbc(spec, bign, na, na, grid));
  const double norm_b = std::abs(
      wavefunctions::orthogonality_check_pbc(spec, bign, nb, nb, grid));
  const double normalized =
      std::abs(overlap) / std::sqrt(norm_a * norm_b);
  const bool pass = (tol <= 0.0) || (normalized <= tol);
  const std::string json =
      "{\"command\":\"ortho-check\",\"spec\":" + potentials::to_json(spec) +
      ",\"na\":" + jiarr(na.parts) + ",\"nb\":" + jiarr(nb.parts) +
      ",\"n\":" + std::to_string(bign) + ",\"grid\":" + std::to_string(grid) +
      ",\"overlap_re\":" + jnum(overlap.real()) +
      ",\"overlap_im\":" + jnum(overlap.imag()) +
      ",\"norm_a\":" + jnum(norm_a) + ",\"norm_b\":" + jnum(norm_b) +
      ",\"normalized_overlap\":" + jnum(normalized) +
      ",\"pass\":" + jbool(pass) + "}";
  const std::string csv =
      "n,grid,overlap_re,overlap_im,norm_a,norm_b,normalized\n" +
      std::to_string(bign) + "," + std::to_string(grid) + "," +
      cnum(overlap.real()) + "," + cnum(overlap.imag()) + "," + cnum(norm_a) +
      "," + cnum(norm_b) + "," + cnum(normalized) + "\n";
  write_output(format == "csv" ? csv : json, out);
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "ladder: exact interacting-fermion eigenfunctions by iterated creation "
      "integrals (families I sin^-2 | II x^-2 | III sinh^-2 | IV -cosh^-2 | "
      "V contact)"};
  app.require_subcommand(0, 1);

  bool top_selftest = false;
  app.add_flag("--self-test", top_selftest, "run all module invariant suites");

  std::string out, format = "json";
  app.add_option("--output", out, "output file (default: stdout)")
      ->configurable(false);
  app.add_option("--format", format, "json (canonical) | csv (lossy)");

  // Per-subcommand state.
  struct Sub {
    CLI::App* cmd = nullptr;
    bool selftest = false;
    std::string selftest_module;
  };
  std::vector<Sub> subs;
  auto add_sub = [&](const std::string& name, const std::string& desc,
                     const std::string& module) -> CLI::App* {
    CLI::App* c = app.add_subcommand(name, desc);
    subs.push_back({c, false, module});
    c->add_flag("--self-test", subs.back().selftest,
                "run this command's module invariant suite instead");
    return c;
  };

  // verify-dixon
  int vd_n = 2;
  double vd_lambda = 1.0, vd_tol = 0.0;
  unsigned vd_seed = 12345;
  std::string vd_x;
  QuadOpts vd_q;
  CLI::App* vd = add_sub("verify-dixon",
                         "interlacing integral of the measure vs the "
                         "gamma-ratio constant",
                         "kernels");
  vd->add_option("--n", vd_n, "inner dimension N (1..3)");
  vd->add_option("--lambda", vd_lambda, "coupling");
  vd->add_option("--x", vd_x, "explicit outer configuration x1,...,x(n+1)");
  vd->add_option("--seed", vd_seed, "RNG seed for the random configurations");
  vd->add_option("--tol", vd_tol, "pass tolerance (default 1e-8 / 1e-6)");
  vd_q.attach(vd);

  // verify-kernel-pde
  SpecOpts vk_spec;
  int vk_n = 1;
  double vk_k = 0.7, vk_h = 1e-3, vk_tol = 0.0;
  unsigned vk_seed = 12345;
  std::string vk_dir = "creation";
  CLI::App* vk = add_sub("verify-kernel-pde",
                         "finite-difference eigen-identity residual of a "
                         "kernel",
                         "kernels");
  vk_spec.attach(vk);
  vk->add_option("--n", vk_n, "source particle number (1..3)");
  vk->add_option("--k", vk_k, "kernel quasimomentum");
  vk->add_option("--step", vk_h, "finite-difference step");
  vk->add_option("--direction", vk_dir, "creation|annihilation");
  vk->add_option("--seed", vk_seed, "RNG seed");
  vk->add_option("--tol", vk_tol, "pass tolerance (default 1e-4)");

  // psi-eval
  SpecOpts pe_spec;
  QuadOpts pe_q;
  std::string pe_ks, pe_x;
  bool pe_unnorm = false, pe_recursive = false;
  CLI::App* pe = add_sub("psi-eval", "evaluate a constructed eigenfunction",
                         "wavefunctions");
  pe_spec.attach(pe);
  pe_q.attach(pe);
  pe->add_option("--ks", pe_ks, "quasimomenta k1,k2,...")->required();
  pe->add_option("--x", pe_x, "coordinates x1,x2,...")->required();
  pe->add_flag("--unnormalized", pe_unnorm,
               "omit the C_n/sqrt(n+1) prefactors");
  pe->add_flag("--recursive", pe_recursive,
               "force the quadrature recursion (skip closed forms)");

  // smatrix
  SpecOpts sm_spec;
  QuadOpts sm_q;
  double sm_kprime = 0.7, sm_ratio = 0.0;
  CLI::App* sm = add_sub("smatrix", "two-body scattering matrix",
                         "wavefunctions");
  sm_spec.attach(sm);
  sm_q.attach(sm);
  sm->add_option("--kprime", sm_kprime, "relative quasimomentum (k1-k2)/(2a)");
  sm->add_option("--numeric-ratio", sm_ratio,
                 "also extract numerically at this separation ratio");

  // bethe
  std::string be_n;
  double be_lambda = 0.0, be_L = 2.0 * PI;
  CLI::App* be = add_sub("bethe", "quantized quasimomenta from integer labels",
                         "jack");
  be->add_option("--n", be_n, "weakly increasing labels n1,n2,...")->required();
  be->add_option("--lambda", be_lambda, "coupling");
  be->add_option("--L", be_L, "period");

  // jack-compute
  std::string jc_p = "2", jc_alpha = "1";
  int jc_nvars = 2;
  CLI::App* jc = add_sub("jack-compute",
                         "monomial expansion of a Jack polynomial (exact "
                         "rationals)",
                         "jack");
  jc->add_option("--partition", jc_p, "weakly decreasing parts p1,p2,...");
  jc->add_option("--nvars", jc_nvars, "number of variables (1..4)");
  jc->add_option("--alpha", jc_alpha, "Jack parameter (e.g. 1, 0.5, 2/3)");

  // jack-verify
  std::string jv_check = "schur", jv_p = "1";
  int jv_lambda = 1, jv_bign = 2, jv_ntarget = 0;
  QuadOpts jv_q;
  CLI::App* jv = add_sub("jack-verify",
                         "schur | okounkov | annihilation verification",
                         "jack");
  jv->add_option("--check", jv_check, "schur|okounkov|annihilation");
  jv->add_option("--partition", jv_p, "partition for okounkov/annihilation");
  jv->add_option("--lambda", jv_lambda, "integer coupling");
  jv->add_option("--bign", jv_bign, "N of the recursion step (okounkov)");
  jv->add_option("--ntarget", jv_ntarget, "momentum label (annihilation)");
  jv_q.attach(jv);

  // ortho-check
  double oc_lambda = 0.0, oc_L = 2.0 * PI, oc_tol = 0.0;
  std::string oc_na = "1", oc_nb = "2";
  int oc_bign = 2, oc_grid = 128;
  CLI::App* oc = add_sub("ortho-check",
                         "torus overlap of two periodic eigenstates", "jack");
  oc->add_option("--lambda", oc_lambda, "coupling");
  oc->add_option("--L", oc_L, "period");
  oc->add_option("--na", oc_na, "partition label of state a");
  oc->add_option("--nb", oc_nb, "partition label of state b");
  oc->add_option("--bign", oc_bign, "particle number (1..3)");
  oc->add_option("--grid", oc_grid, "trapezoid points per dimension");
  oc->add_option("--tol", oc_tol,
                 "if set, exit 1 unless normalized overlap <= tol");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (top_selftest && app.get_subcommands().empty())
      return ladder::selftest::run("all", true) == 0 ? 0 : 1;
    for (const auto& s : subs) {
      if (s.cmd->parsed() && s.selftest)
        return ladder::selftest::run(s.selftest_module, true) == 0 ? 0 : 1;
    }
    if (vd->parsed())
      return cmd_verify_dixon(vd_n, vd_lambda, vd_x, vd_seed, vd_tol, vd_q,
                              out, format);
    if (vk->parsed())
      return cmd_verify_kernel_pde(vk_spec, vk_n, vk_k, vk_h, vk_dir, vk_seed,
                                   vk_tol, out, format);
    if (pe->parsed())
      return cmd_psi_eval(pe_spec, pe_q, pe_ks, pe_x, pe_unnorm, pe_recursive,
                          out, format);
    if (sm->parsed())
      return cmd_smatrix(sm_spec, sm_q, sm_kprime, sm_ratio, out, format);
    if (be->parsed()) return cmd_bethe(be_n, be_lambda, be_L, out, format);
    if (jc->parsed())
      return cmd_jack_compute(jc_p, jc_nvars, jc_alpha, out, format);
    if (jv->parsed())
      return cmd_jack_verify(jv_check, jv_p, jv_lambda, jv_bign, jv_ntarget,
                             jv_q, out, format);
    if (oc->parsed())
      return cmd_ortho_check(oc_lambda, oc_L, oc_na, oc_nb, oc_bign, oc_grid,
                             oc_tol, out, format);
    std::puts(app.help().c_str());
    return 2;
  } catch (const ladder::ValidationError& e) {
    std::fprintf(stderr, "validation error: %s\n", e.what());
    return 2;
  } catch (const ladder::Error& e) {
    std::fprintf(stderr, "computation error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
