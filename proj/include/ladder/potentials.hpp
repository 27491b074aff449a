#pragma once
// The five interaction families: the antisymmetric pair function f, its even
// primitive F, the pair potential V = f^2 - f' + const, the defining
// functional-equation constant, and the delta-interaction strength.
//
// Family table (x is a coordinate difference):
//   I   trigonometric:    f = lambda*b*cot(b x)    V = b^2 l(l+1)/sin^2(bx)
//   II  rational:         f = lambda/x             V = l(l+1)/x^2
//   III hyperbolic:       f = a*lambda*coth(a x)   V = a^2 l(l+1)/sinh^2(ax)
//   IV  inverse-cosh well:f = a*lambda*tanh(a x)   V = -a^2 l(l+1)/cosh^2(ax)
//   V   contact (delta):  f = c*sgn(x)             V = -2c * delta(x)
// with l = lambda throughout and functional-equation constants
//   b^2 l^2, 0, -a^2 l^2, -a^2 l^2, -c^2 respectively.
//
// NOTE on conventions: the N-body Hamiltonian used by every residual check in
// this library is H = -sum_n d^2/dx_n^2 + sum_{i != j} V(x_i - x_j), i.e. the
// pair sum runs over ORDERED pairs, so each unordered pair enters twice.

#include <string>

#include "ladder/types.hpp"

namespace ladder::potentials {

enum class Kind { TrigCMS, RatCMS, HypCMS, Morse, Delta };

const char* kind_name(Kind k);        // "I".."V"
Kind kind_from_name(const std::string& s);  // accepts "I".."V" or names

struct PotentialSpec {
  Kind kind = Kind::RatCMS;
  double lambda = 0.0;  // dimensionless coupling, > -1
  double a = 1.0;       // rate (1/length), kinds III-IV
  double b = 1.0;       // rate (1/length), kind I
  double c = 1.0;       // strength (1/length), kind V
  BoundaryCondition bc = BoundaryCondition::sbc();

  // Validates the family invariants:
  //  * lambda > -1;
  //  * kind I  => PBC with L = pi/b;
  //  * kinds II-IV => SBC;
  //  * kind V  => either boundary condition.
  void validate() const;

  static PotentialSpec trig(double lambda, double b);     // PBC, L = pi/b
  static PotentialSpec rational(double lambda);           // SBC
  static PotentialSpec hyperbolic(double lambda, double a);  // SBC
  static PotentialSpec morse(double lambda, double a);       // SBC
  static PotentialSpec delta(double c, BoundaryCondition bc = BoundaryCondition::sbc());
};

// Antisymmetric pair function f(x).  PoleError at x = 0 for kinds I-III
// (and at multiples of pi/b for kind I).
double eval_f(const PotentialSpec& spec, double x);

// Even primitive F(x) with F' = f:
//   I: lambda*ln|sin(bx)|   II: lambda*ln|x|   III: lambda*ln|sinh(ax)|
//   IV: lambda*ln(cosh(ax))  V: c*|x|
double eval_F(const PotentialSpec& spec, double x);

// Pair potential V(x) = f^2 - f' + const (closed forms above).  Kind V has
// no pointwise potential: eval_V throws ValidationError; use delta_strength.
double eval_V(const PotentialSpec& spec, double x);

// Coefficient of delta(x) in the kind-V pair potential: -2c.
double delta_strength(const PotentialSpec& spec);

// Table constant C in f(x)f(y) + f(y)f(z) + f(z)f(x) = C for x+y+z = 0.
double functional_constant(const PotentialSpec& spec);

// f(x)f(y) + f(x)f(z) + f(y)f(z) - C at z = -x-y; contractually
// |residual| <= 1e-10 * max(1, |C|) away from poles.
double functional_equation_residual(const PotentialSpec& spec, double x, double y);

// JSON round-trip of the spec: {"kind","lambda","a","b","c","L","bc"}.
std::string to_json(const PotentialSpec& spec);
PotentialSpec spec_from_json(const std::string& json);

}  // namespace ladder::potentials
