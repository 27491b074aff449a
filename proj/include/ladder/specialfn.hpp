#pragma once
// Special functions with complex parameters: log-gamma (principal branch),
// Euler beta, and the Gauss hypergeometric function 2F1 at real argument.

#include "ladder/types.hpp"

namespace ladder::specialfn {

// Principal-branch log Gamma(z).  exp(log_gamma(z)) = Gamma(z) to 1e-12
// relative for |z| <= 50.  Throws PoleError at nonpositive integers.
// The imaginary part may differ from the principal Log of Gamma by a
// multiple of 2*pi*i deep in the reflected half-plane; every consumer in
// this library exponentiates, so only the value mod 2*pi*i is contractual.
ComplexVal log_gamma(ComplexVal z);

// Gamma via exp(log_gamma).
ComplexVal gamma(ComplexVal z);

// Euler beta B(x,y) = Gamma(x)Gamma(y)/Gamma(x+y), computed as a log-gamma
// difference.  Throws PoleError if x, y, or x+y sits at a Gamma pole.
ComplexVal beta(ComplexVal x, ComplexVal y);
ComplexVal log_beta(ComplexVal x, ComplexVal y);

// Gauss hypergeometric F(a,b,c;z) for real z <= 1:
//  * a or b a nonpositive integer  -> exact terminating sum (any real z);
//  * z == 1                        -> Gauss value (requires Re(c-a-b) > 0);
//  * -0.5 <= z < 1                 -> defining power series;
//  * z < -0.5                      -> Pfaff transform z -> z/(z-1).
// Throws ValidationError for c at a nonpositive integer (unless the series
// terminates first), ConvergenceError if the series stalls.
ComplexVal hyp2f1(ComplexVal a, ComplexVal b, ComplexVal c, double z);

// True iff z is within tol of a nonpositive integer (pole of Gamma).
bool is_nonpositive_integer(ComplexVal z, double tol = 1e-12);

}  // namespace ladder::specialfn
