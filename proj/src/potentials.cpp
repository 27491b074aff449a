#include "ladder/potentials.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace ladder::potentials {

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::TrigCMS: return "I";
    case Kind::RatCMS: return "II";
    case Kind::HypCMS: return "III";
    case Kind::Morse: return "IV";
    case Kind::Delta: return "V";
  }
  return "?";
}

Kind kind_from_name(const std::string& s) {
  if (s == "I" || s == "trig" || s == "TrigCMS") return Kind::TrigCMS;
  if (s == "II" || s == "rational" || s == "RatCMS") return Kind::RatCMS;
  if (s == "III" || s == "hyperbolic" || s == "HypCMS") return Kind::HypCMS;
  if (s == "IV" || s == "morse" || s == "Morse") return Kind::Morse;
  if (s == "V" || s == "delta" || s == "Delta") return Kind::Delta;
  throw ValidationError("unknown interaction kind: " + s);
}

void PotentialSpec::validate() const {
  if (!(lambda > -1.0))
    throw ValidationError("PotentialSpec: lambda must be > -1");
  switch (kind) {
    case Kind::TrigCMS:
      if (bc.kind != BoundaryCondition::PBC)
        throw ValidationError("kind I requires periodic boundary conditions");
      if (!(b > 0.0)) throw ValidationError("kind I requires b > 0");
      if (std::abs(bc.L - PI / b) > 1e-12 * (1.0 + bc.L))
        throw ValidationError("kind I requires L = pi/b");
      break;
    case Kind::RatCMS:
      if (bc.kind != BoundaryCondition::SBC)
        throw ValidationError("kind II supports scattering BC only");
      break;
    case Kind::HypCMS:
    case Kind::Morse:
      if (bc.kind != BoundaryCondition::SBC)
        throw ValidationError("kinds III/IV support scattering BC only");
      if (!(a > 0.0)) throw ValidationError("kinds III/IV require a > 0");
      break;
    case Kind::Delta:
      break;  // either BC
  }
}

PotentialSpec PotentialSpec::trig(double lambda, double b) {
  PotentialSpec s;
  s.kind = Kind::TrigCMS;
  s.lambda = lambda;
  s.b = b;
  s.bc = BoundaryCondition::pbc(PI / b);
  s.validate();
  return s;
}
PotentialSpec PotentialSpec::rational(double lambda) {
  PotentialSpec s;
  s.kind = Kind::RatCMS;
  s.lambda = lambda;
  s.validate();
  return s;
}
PotentialSpec PotentialSpec::hyperbolic(double lambda, double a) {
  PotentialSpec s;
  s.kind = Kind::HypCMS;
  s.lambda = lambda;
  s.a = a;
  s.validate();
  return s;
}
PotentialSpec PotentialSpec::morse(double lambda, double a) {
  PotentialSpec s;
  s.kind = Kind::Morse;
  s.lambda = lambda;
  s.a = a;
  s.validate();
  return s;
}
PotentialSpec PotentialSpec::delta(double c, BoundaryCondition bc) {
  PotentialSpec s;
  s.kind = Kind::Delta;
  s.lambda = 0.0;
  s.c = c;
  s.bc = bc;
  s.validate();
  return s;
}

namespace {
void check_pole(const PotentialSpec& spec, double x) {
  const double tol = 1e-14;
  switch (spec.kind) {
    case Kind::TrigCMS: {
      double u = spec.b * x / PI;
      if (std::abs(u - std::round(u)) < tol)
        throw PoleError("kind I: x at a multiple of pi/b");
      break;
    }
    case Kind::RatCMS:
    case Kind::HypCMS:
      if (std::abs(x) < tol) throw PoleError("pole at x = 0");
      break;
    default:
      break;
  }
}
}  // namespace

double eval_f(const PotentialSpec& spec, double x) {
  check_pole(spec, x);
  switch (spec.kind) {
    case Kind::TrigCMS:
      return spec.lambda * spec.b / std::tan(spec.b * x);
    case Kind::RatCMS:
      return spec.lambda / x;
    case Kind::HypCMS:
      return spec.a * spec.lambda / std::tanh(spec.a * x);
    case Kind::Morse:
      return spec.a * spec.lambda * std::tanh(spec.a * x);
    case Kind::Delta:
      return x > 0 ? spec.c : (x < 0 ? -spec.c : 0.0);
  }
  return 0.0;
}

double eval_F(const PotentialSpec& spec, double x) {
  check_pole(spec, x);
  switch (spec.kind) {
    case Kind::TrigCMS:
      return spec.lambda * std::log(std::abs(std::sin(spec.b * x)));
    case Kind::RatCMS:
      return spec.lambda * std::log(std::abs(x));
    case Kind::HypCMS:
      return spec.lambda * std::log(std::abs(std::sinh(spec.a * x)));
    case Kind::Morse: {
      // log(cosh(ax)) without overflow for large |ax|.
      double u = std::abs(spec.a * x);
      return spec.lambda * (u + std::log1p(std::exp(-2.0 * u)) - std::log(2.0));
    }
    case Kind::Delta:
      return spec.c * std::abs(x);
  }
  return 0.0;
}

double eval_V(const PotentialSpec& spec, double x) {
  if (spec.kind == Kind::Delta)
    throw ValidationError(
        "kind V has no pointwise potential; use delta_strength");
  check_pole(spec, x);
  const double l = spec.lambda, g = l * (l + 1.0);
  switch (spec.kind) {
    case Kind::TrigCMS: {
      double s = std::sin(spec.b * x);
      return spec.b * spec.b * g / (s * s);
    }
    case Kind::RatCMS:
      return g / (x * x);
    case Kind::HypCMS: {
      double s = std::sinh(spec.a * x);
      return spec.a * spec.a * g / (s * s);
    }
    case Kind::Morse: {
      double ch = std::cosh(spec.a * x);
      return -spec.a * spec.a * g / (ch * ch);
    }
    case Kind::Delta:
      break;
  }
  return 0.0;
}

double delta_strength(const PotentialSpec& spec) {
  if (spec.kind != Kind::Delta)
    throw ValidationError("delta_strength defined for kind V only");
  return -2.0 * spec.c;
}

double functional_constant(const PotentialSpec& spec) {
  const double l = spec.lambda;
  switch (spec.kind) {
    case Kind::TrigCMS: return spec.b * spec.b * l * l;
    case Kind::RatCMS: return 0.0;
    case Kind::HypCMS: return -spec.a * spec.a * l * l;
    case Kind::Morse: return -spec.a * spec.a * l * l;
    case Kind::Delta: return -spec.c * spec.c;
  }
  return 0.0;
}

double functional_equation_residual(const PotentialSpec& spec, double x,
                                    double y) {
  const double z = -x - y;
  const double fx = eval_f(spec, x), fy = eval_f(spec, y),
               fz = eval_f(spec, z);
  return fx * fy + fx * fz + fy * fz - functional_constant(spec);
}

std::string to_json(const PotentialSpec& spec) {
  // Fixed key order by hand (nlohmann::json sorts keys alphabetically,
  // which happens to be stable too, but we keep explicit control).
  char buf[512];
  std::snprintf(
      buf, sizeof buf,
      "{\"kind\":\"%s\",\"lambda\":%.17g,\"a\":%.17g,\"b\":%.17g,"
      "\"c\":%.17g,\"L\":%.17g,\"bc\":\"%s\"}",
      kind_name(spec.kind), spec.lambda, spec.a, spec.b, spec.c,
      spec.bc.kind == BoundaryCondition::PBC ? spec.bc.L : 0.0,
      spec.bc.kind == BoundaryCondition::PBC ? "PBC" : "SBC");
  return buf;
}

PotentialSpec spec_from_json(const std::string& json) {
  auto j = nlohmann::json::parse(json);
  PotentialSpec s;
  s.kind = kind_from_name(j.at("kind").get<std::string>());
  s.lambda = j.value("lambda", 0.0);
  s.a = j.value("a", 1.0);
  s.b = j.value("b", 1.0);
  s.c = j.value("c", 1.0);
  std::string bc = j.value("bc", std::string("SBC"));
  if (bc == "PBC")
    s.bc = BoundaryCondition::pbc(j.at("L").get<double>());
  else
    s.bc = BoundaryCondition::sbc();
  s.validate();
  return s;
}

}  // namespace ladder::potentials
