#include "ladder/specialfn.hpp"

#include <cmath>
#include <cstdio>

namespace ladder::specialfn {

bool is_nonpositive_integer(ComplexVal z, double tol) {
  if (std::abs(z.imag()) > tol) return false;
  double r = z.real();
  if (r > 0.5) return false;
  return std::abs(r - std::round(r)) <= tol;
}

namespace {

// Lanczos approximation, g = 7, 9 coefficients; valid for Re(z) >= 0.5.
// Classic double-precision coefficient set (~1e-13 relative accuracy).
const double kLanczos[9] = {
    0.99999999999980993,   676.5203681218851,     -1259.1392167224028,
    771.32342877765313,    -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,  9.9843695780195716e-6, 1.5056327351493116e-7};

ComplexVal log_gamma_lanczos(ComplexVal z) {
  // Requires Re(z) >= 0.5.
  ComplexVal x = kLanczos[0];
  for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z - 1.0 + double(i));
  ComplexVal t = z + 6.5;  // z + g - 0.5
  return 0.918938533204672742 /* log(sqrt(2*pi)) */
         + (z - 0.5) * std::log(t) - t + std::log(x);
}

}  // namespace

ComplexVal log_gamma(ComplexVal z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw ValidationError("log_gamma: non-finite argument");
  if (is_nonpositive_integer(z))
    throw PoleError("log_gamma: pole at nonpositive integer");
  if (z.real() >= 0.5) return log_gamma_lanczos(z);
  // Reflection: log Gamma(z) = log(pi / sin(pi z)) - log Gamma(1 - z).
  ComplexVal s = std::sin(PI * z);
  if (s == ComplexVal(0.0, 0.0))
    throw PoleError("log_gamma: sin(pi z) vanished in reflection");
  return std::log(PI / s) - log_gamma_lanczos(1.0 - z);
}

ComplexVal gamma(ComplexVal z) { return std::exp(log_gamma(z)); }

ComplexVal log_beta(ComplexVal x, ComplexVal y) {
  return log_gamma(x) + log_gamma(y) - log_gamma(x + y);
}

ComplexVal beta(ComplexVal x, ComplexVal y) { return std::exp(log_beta(x, y)); }

namespace {

// Exact terminating sum when a (or b) equals a nonpositive integer -n:
// F = sum_{j=0}^{n} (a)_j (b)_j / (c)_j z^j / j!.
ComplexVal hyp2f1_terminating(ComplexVal a, ComplexVal b, ComplexVal c,
                              double z, int nterms) {
  ComplexVal sum = 1.0, term = 1.0;
  for (int j = 0; j < nterms; ++j) {
    ComplexVal cj = c + double(j);
    if (std::abs(cj) < 1e-14)
      throw ValidationError("hyp2f1: c hits a nonpositive integer before the "
                            "series terminates");
    term *= (a + double(j)) * (b + double(j)) / cj * z / double(j + 1);
    sum += term;
  }
  return sum;
}

ComplexVal hyp2f1_series(ComplexVal a, ComplexVal b, ComplexVal c, double z) {
  const int kMaxTerms = 200000;
  ComplexVal sum = 1.0, term = 1.0;
  for (int j = 0; j < kMaxTerms; ++j) {
    ComplexVal cj = c + double(j);
    if (std::abs(cj) < 1e-14)
      throw ValidationError("hyp2f1: c is a nonpositive integer");
    term *= (a + double(j)) * (b + double(j)) / cj * z / double(j + 1);
    sum += term;
    if (std::abs(term) <= 1e-16 * (1.0 + std::abs(sum)) && j > 3) return sum;
  }
  throw ConvergenceError("hyp2f1: series did not converge in 200000 terms");
}

}  // namespace

ComplexVal hyp2f1(ComplexVal a, ComplexVal b, ComplexVal c, double z) {
  if (!std::isfinite(z)) throw ValidationError("hyp2f1: non-finite z");

  // Terminating cases first: exact polynomials, valid for every real z,
  // and they bypass c-pole trouble beyond the truncation order.
  if (is_nonpositive_integer(a))
    return hyp2f1_terminating(a, b, c, z, int(std::lround(-a.real())));
  if (is_nonpositive_integer(b))
    return hyp2f1_terminating(b, a, c, z, int(std::lround(-b.real())));

  if (z > 1.0) throw ValidationError("hyp2f1: z > 1 unsupported");

  if (is_nonpositive_integer(c))
    throw ValidationError("hyp2f1: c at nonpositive integer");

  if (z == 1.0) {
    // Gauss: F(a,b,c;1) = G(c)G(c-a-b)/(G(c-a)G(c-b)), Re(c-a-b) > 0.
    if ((c - a - b).real() <= 0.0)
      throw ValidationError("hyp2f1: divergent at z=1 (Re(c-a-b) <= 0)");
    return std::exp(log_gamma(c) + log_gamma(c - a - b) - log_gamma(c - a) -
                    log_gamma(c - b));
  }

  if (z >= -0.5) return hyp2f1_series(a, b, c, z);

  // Pfaff: F(a,b,c;z) = (1-z)^(-a) F(a, c-b, c; z/(z-1)); maps z < -0.5 to
  // w in (1/3, 1), where the series converges.
  double w = z / (z - 1.0);
  return std::pow(ComplexVal(1.0 - z, 0.0), -a) * hyp2f1_series(a, c - b, c, w);
}

}  // namespace ladder::specialfn
