#pragma once
// Core value types and structured errors shared by every module.

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace ladder {

// Complex scalar used throughout; serialized as {re, im}.
using ComplexVal = std::complex<double>;

constexpr double PI = 3.14159265358979323846264338327950288;

// ---------------------------------------------------------------------------
// Structured errors.  Quadrature and callers must be able to distinguish an
// integrable endpoint singularity (handled by weights) from an accidental
// pole hit, so poles raise typed exceptions rather than returning ±Inf.
// ---------------------------------------------------------------------------
struct Error : std::runtime_error {
  explicit Error(const std::string& m) : std::runtime_error(m) {}
};

// Bad arguments / unsupported parameter combinations (CLI exit code 2).
struct ValidationError : Error {
  explicit ValidationError(const std::string& m) : Error(m) {}
};

// Evaluation at a pole of f, V, Gamma, ... (CLI exit code 1).
struct PoleError : Error {
  explicit PoleError(const std::string& m) : Error(m) {}
};

// Two coordinates coincide where a kernel or wavefunction is singular.
struct SingularityError : Error {
  explicit SingularityError(const std::string& m) : Error(m) {}
};

// Primed coordinates do not interlace the unprimed ones.
struct InterlacingError : Error {
  explicit InterlacingError(const std::string& m) : Error(m) {}
};

// Node-count escalation exhausted without meeting the requested tolerance.
struct ToleranceNotMet : Error {
  explicit ToleranceNotMet(const std::string& m) : Error(m) {}
  double best_estimate_re = 0.0, best_estimate_im = 0.0, achieved_rel = 0.0;
};

// A series or iteration failed to converge within its term budget.
struct ConvergenceError : Error {
  explicit ConvergenceError(const std::string& m) : Error(m) {}
};

// ---------------------------------------------------------------------------
// Configuration: an ordered tuple of particle coordinates, strictly
// decreasing x1 > x2 > ... > xN (the canonical Weyl sector).
// ---------------------------------------------------------------------------
struct Configuration {
  std::vector<double> coords;

  Configuration() = default;
  explicit Configuration(std::vector<double> c, bool validate = true)
      : coords(std::move(c)) {
    if (validate) check();
  }

  std::size_t size() const { return coords.size(); }
  double operator[](std::size_t i) const { return coords[i]; }

  void check() const {
    for (std::size_t i = 0; i + 1 < coords.size(); ++i)
      if (!(coords[i] > coords[i + 1]))
        throw ValidationError("Configuration not strictly decreasing");
  }

  // True iff this (length N+1) strictly interlaces xp (length N):
  // x1 > x'1 > x2 > ... > xN > x'N > x(N+1).
  bool interlaces(const Configuration& xp) const {
    if (xp.size() + 1 != size()) return false;
    for (std::size_t j = 0; j < xp.size(); ++j)
      if (!(coords[j] > xp.coords[j] && xp.coords[j] > coords[j + 1]))
        return false;
    return true;
  }
};

inline double sum(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s;
}

// ---------------------------------------------------------------------------
// Boundary condition: whole line with scattering asymptotics (SBC) or a
// periodic interval [0, L) (PBC).
// ---------------------------------------------------------------------------
struct BoundaryCondition {
  enum Kind { SBC, PBC } kind = SBC;
  double L = 0.0;  // period, PBC only

  static BoundaryCondition sbc() { return {SBC, 0.0}; }
  static BoundaryCondition pbc(double L) {
    if (!(L > 0.0)) throw ValidationError("PBC requires L > 0");
    return {PBC, L};
  }
};

}  // namespace ladder
