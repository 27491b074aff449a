#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "ladder/jack.hpp"
#include "ladder/quadrature.hpp"
#include "ladder/specialfn.hpp"
#include "ladder/types.hpp"
#include "ladder/wavefunctions.hpp"

using namespace ladder;
using namespace ladder::jack;
using quadrature::QuadratureSpec;

namespace {
Partition P(std::initializer_list<int> parts) {
  return Partition(std::vector<int>(parts));
}
}  // namespace

TEST_CASE("jack: partition construction, trimming, and validation") {
  CHECK(P({3, 1}).weight() == 4);
  CHECK(P({3, 1, 0, 0}).parts == std::vector<int>{3, 1});
  CHECK(P({}).weight() == 0);
  CHECK(P({}).length() == 0);
  CHECK_THROWS_AS(Partition(std::vector<int>{1, 2}), ValidationError);
  CHECK_THROWS_AS(Partition(std::vector<int>{2, -1}), ValidationError);
  CHECK(Partition::from_increasing({0, 1, 5}).parts ==
        std::vector<int>{5, 1});
  CHECK(P({2, 1}).padded(4) == std::vector<int>{2, 1, 0, 0});
  CHECK(P({4, 2}).part(0) == 4);
  CHECK(P({4, 2}).part(5) == 0);
}

TEST_CASE("jack: partition enumeration and dominance") {
  CHECK(partitions_of(0, 3).size() == 1);
  CHECK(partitions_of(4, 2).size() == 3);   // 4; 3,1; 2,2
  CHECK(partitions_of(6, 3).size() == 7);
  CHECK(partitions_of(4, 1).size() == 1);   // only (4)
  for (const auto& p : partitions_of(5, 3)) {
    CHECK(p.weight() == 5);
    CHECK(p.length() <= 3);
  }
  CHECK(dominated(P({2, 2}), P({3, 1})));
  CHECK(dominated(P({3, 1}), P({4})));
  CHECK_FALSE(dominated(P({3, 1}), P({2, 2})));
  // Incomparable pair: neither dominates.
  CHECK_FALSE(dominated(P({3, 1, 1, 1}), P({2, 2, 2})));
  CHECK_FALSE(dominated(P({2, 2, 2}), P({3, 1, 1, 1})));
  CHECK(dominated(P({2, 2}), P({2, 2})));
}

TEST_CASE("jack: coupling map and rationalization") {
  CHECK(alpha_from_lambda(Rational(1)) == Rational(1, 2));
  CHECK(alpha_from_lambda(Rational(0)) == Rational(1));
  CHECK(rationalize(0.5) == Rational(1, 2));
  CHECK(rationalize(2.0 / 3.0) == Rational(2, 3));
  CHECK(rationalize(2.0) == Rational(2));
  CHECK_THROWS_AS(rationalize(0.1234567891), ValidationError);
}

TEST_CASE("jack: tabulated expansion coefficients over monomials") {
  // P_(1,1) = m_(1,1) for every coupling (nothing below it in dominance).
  for (Rational alpha : {Rational(1, 2), Rational(1), Rational(3)}) {
    auto p = jack_P(P({1, 1}), 3, alpha);
    CHECK(p.coeff(P({1, 1})) == Rational(1));
    CHECK(p.coeff(P({2})) == Rational(0));
  }
  // P_(2) = m_(2) + 2/(1+alpha) m_(1,1), exactly.
  for (Rational alpha :
       {Rational(1, 2), Rational(2, 3), Rational(1), Rational(3)}) {
    auto p = jack_P(P({2}), 2, alpha);
    CHECK(p.coeff(P({2})) == Rational(1));
    CHECK(p.coeff(P({1, 1})) == Rational(2) / (Rational(1) + alpha));
  }
  // P_(2,1) = m_(2,1) + 6/(2+alpha) m_(1,1,1): alpha = 1 gives the Schur
  // value 2, alpha -> 0 the elementary-product value 3.
  for (Rational alpha : {Rational(1, 2), Rational(1), Rational(5, 3)}) {
    auto p = jack_P(P({2, 1}), 3, alpha);
    CHECK(p.coeff(P({2, 1})) == Rational(1));
    CHECK(p.coeff(P({1, 1, 1})) == Rational(6) / (Rational(2) + alpha));
  }
  // More parts than variables: the zero polynomial.
  CHECK(jack_P(P({1, 1, 1}), 2, Rational(1)).coeffs.empty());
}

TEST_CASE("jack: Schur determinant oracle agrees with the eigenproblem at "
          "alpha = 1") {
  for (int w = 1; w <= 4; ++w) {
    for (int nv : {2, 3}) {
      for (const auto& mu : partitions_of(w, nv)) {
        CHECK(jack_P(mu, nv, Rational(1)) == schur_poly(mu, nv));
      }
    }
  }
}

TEST_CASE("jack: restriction stability in the variable count") {
  for (Rational alpha : {Rational(2, 3), Rational(1)}) {
    for (const auto& mu : {P({2, 1}), P({3}), P({1, 1})}) {
      auto p3 = jack_P(mu, 3, alpha);
      auto p2 = jack_P(mu, 2, alpha);
      CHECK(p3.restricted(2) == p2);
    }
  }
}

TEST_CASE("jack: numeric evaluation and homogeneity") {
  // P_(2) at alpha = 3, z = (1, 2): m_2 + (1/2) m_11 = 5 + 1 = 6.
  auto p = jack_P(P({2}), 2, Rational(3));
  CHECK(std::abs(p.eval_real({1.0, 2.0}) - ComplexVal(6.0, 0.0)) < 1e-13);
  // Complex evaluation and degree-|mu| homogeneity.
  auto p21 = jack_P(P({2, 1}), 3, Rational(1, 2));
  std::vector<ComplexVal> z = {{0.3, 0.4}, {-0.2, 1.1}, {0.9, -0.5}};
  ComplexVal c{0.7, 0.3};
  std::vector<ComplexVal> cz = z;
  for (auto& v : cz) v *= c;
  ComplexVal lhs = p21.eval(cz);
  ComplexVal rhs = std::pow(c, 3) * p21.eval(z);
  CHECK(std::abs(lhs - rhs) < 1e-12 * std::abs(rhs));
}

TEST_CASE("jack: quasimomentum lattice and its inverse") {
  const double L = 2.0 * PI;
  auto ks = momenta_from_partition(P({2}), 2, 1.0, L);
  CHECK(ks.size() == 2);
  CHECK(std::abs(ks[0] - 3.0) < 1e-14);
  CHECK(std::abs(ks[1] - (-1.0)) < 1e-14);
  CHECK(partition_labels_from_momenta({3.0, -1.0}, 1.0, L) ==
        std::vector<int>{2, 0});
  // A common integer boost is absorbed into shifted labels.
  CHECK(partition_labels_from_momenta({4.0, 0.0}, 1.0, L) ==
        std::vector<int>{3, 1});
  CHECK_THROWS_AS(partition_labels_from_momenta({3.3, -1.0}, 1.0, L),
                  ValidationError);
  // Scaled period: k values shrink by 2 pi / L.
  auto ks2 = momenta_from_partition(P({2}), 2, 1.0, PI);
  CHECK(std::abs(ks2[0] - 6.0) < 1e-13);
  CHECK(std::abs(ks2[1] - (-2.0)) < 1e-13);
}

TEST_CASE("jack: periodic state energies") {
  const double L = 2.0 * PI;
  // Ground state: (l+1)^2 N (N^2-1)/12 * (2 pi/L)^2 = 4*3*8/12 = 8.
  CHECK(std::abs(trig_ground_energy(3, 1.0, L) - 8.0) < 1e-13);
  CHECK(std::abs(trig_energy(P({}), 3, 1.0, L) - 8.0) < 1e-13);
  // Excited state = sum of squared quasimomenta: n=(2,0) at lam=1: 9+1.
  CHECK(std::abs(trig_energy(P({2}), 2, 1.0, L) - 10.0) < 1e-13);
}

TEST_CASE("jack: closed-form periodic state reduces to the Slater "
          "determinant at lambda = 0") {
  const double L = 2.0 * PI;
  {
    auto ks = momenta_from_partition(P({1}), 2, 0.0, L);
    std::vector<double> x = {1.9, 0.4};
    ComplexVal t = trig_eigenfunction(P({1}), 0.0, L, Configuration(x));
    ComplexVal s = wavefunctions::slater(ks, x);
    CHECK(std::abs(t - s) < 1e-13);
  }
  {
    auto ks = momenta_from_partition(P({2, 1}), 3, 0.0, L);
    std::vector<double> x = {4.4, 2.6, 0.9};
    ComplexVal t = trig_eigenfunction(P({2, 1}), 0.0, L, Configuration(x));
    ComplexVal s = wavefunctions::slater(ks, x);
    CHECK(std::abs(t - s) < 1e-12 * std::abs(s));
  }
}

TEST_CASE("jack: exchange continuation multiplies by exp(i pi (lambda+1))") {
  const double L = 2.0 * PI;
  for (double lam : {0.0, 0.5, 1.0}) {
    ComplexVal a = trig_eigenfunction_raw(P({2}), lam, L, {1.9, 0.4});
    ComplexVal b = trig_eigenfunction_raw(P({2}), lam, L, {0.4, 1.9});
    ComplexVal ph = std::exp(ComplexVal(0.0, PI * (lam + 1.0)));
    CHECK(std::abs(b - ph * a) < 1e-13 * std::max(1.0, std::abs(a)));
  }
}

TEST_CASE("jack: evaluator class matches the one-shot closed form") {
  const double L = PI;
  TrigEvaluator ev(P({2, 1}), 3, 1.0, L);
  for (auto x : {std::vector<double>{2.2, 1.3, 0.45},
                 std::vector<double>{3.0, 0.8, 0.2}}) {
    ComplexVal a = ev(x);
    ComplexVal b = trig_eigenfunction_raw(P({2, 1}), 1.0, L, x);
    CHECK(std::abs(a - b) < 1e-13 * std::max(1.0, std::abs(b)));
  }
}

TEST_CASE("jack: lifting recursion verified at desk scale") {
  QuadratureSpec q;
  // One-particle -> two-particle, couplings 0 and 1.
  CHECK(verify_okounkov_recursion(P({1}), 1, 0, q) < 1e-10);
  CHECK(verify_okounkov_recursion(P({2}), 1, 1, q) < 1e-10);
  // Two -> three at coupling 1 (the heaviest case kept in unit tests).
  CHECK(verify_okounkov_recursion(P({2, 1}), 2, 1, q) < 1e-9);
  CHECK_THROWS_AS(verify_okounkov_recursion(P({1}), 4, 1, q),
                  ValidationError);
  CHECK_THROWS_AS(verify_okounkov_recursion(P({1}), 1, 3, q),
                  ValidationError);
}

TEST_CASE("jack: annihilation channels and the contour selection rule") {
  QuadratureSpec q;
  CHECK(annihilation_channels(P({1}), 2, 0) == std::vector<int>{2, 0});
  CHECK(annihilation_channels(P({2}), 2, 1) == std::vector<int>{4, 0});
  CHECK(annihilation_channels(P({3, 1}), 2, 1) == std::vector<int>{5, 1});
  // Free coupling, mu = (1,0): the delta fires at 0 and 2 and vanishes at
  // the neighbors.
  for (int nt : {0, 2}) {
    auto [lhs, rhs] = verify_annihilation_integral(P({1}), 2, 0, nt, q);
    CHECK(std::abs(lhs - rhs) < 1e-8 * std::max(1.0, std::abs(rhs)));
    CHECK(std::abs(rhs) > 1.0);  // a genuine 2 pi B(...) scale
  }
  for (int nt : {1, 3}) {
    auto [lhs, rhs] = verify_annihilation_integral(P({1}), 2, 0, nt, q);
    CHECK(std::abs(rhs) == 0.0);
    CHECK(std::abs(lhs) < 1e-8);
  }
  // Coupling 1, mu = (2,0): channels {0, 4} fire; past the band the
  // integral vanishes identically.
  for (int nt : {0, 4}) {
    auto [lhs, rhs] = verify_annihilation_integral(P({2}), 2, 1, nt, q);
    CHECK(std::abs(lhs - rhs) < 1e-8 * std::max(1.0, std::abs(rhs)));
  }
  for (int nt : {5, 6}) {
    auto [lhs, rhs] = verify_annihilation_integral(P({2}), 2, 1, nt, q);
    CHECK(std::abs(rhs) == 0.0);
    CHECK(std::abs(lhs) < 1e-8);
  }
}

TEST_CASE("jack: Bethe quantization closes exactly on monotone sectors") {
  const double L = 2.0 * PI;
  // Narrow gaps (< lambda+1): decreasing quasimomenta, convention +1.
  {
    auto sol = bethe_quasimomenta({0, 1}, 2.0, L);
    CHECK(std::abs(sol.ks[0] - 1.5) < 1e-14);
    CHECK(std::abs(sol.ks[1] - (-0.5)) < 1e-14);
    int conv = 0;
    double r = bethe_residual(sol, &conv);
    CHECK(r == 0.0);
    CHECK(conv == 1);
  }
  // Wide gaps (> lambda+1): increasing quasimomenta, convention -1.
  {
    auto sol = bethe_quasimomenta({0, 4, 8}, 1.0, L);
    CHECK(sol.ks[0] < sol.ks[1]);
    int conv = 0;
    double r = bethe_residual(sol, &conv);
    CHECK(r == 0.0);
    CHECK(conv == -1);
  }
  // Free coupling: plain quantization, exact for any labels.
  {
    auto sol = bethe_quasimomenta({2, 3, 7}, 0.0, L);
    CHECK(bethe_residual(sol) == 0.0);
    for (std::size_t i = 0; i < 3; ++i)
      CHECK(std::abs(sol.ks[i] - (2.0 * PI / L) * sol.I[i]) < 1e-14);
  }
  // A common label shift is a center-of-mass boost: still exact.
  {
    auto sol = bethe_quasimomenta({3, 4}, 2.0, L);
    CHECK(bethe_residual(sol) == 0.0);
  }
  // Gap exactly lambda+1: the quasimomenta collide; the labels sit outside
  // both monotone sectors and the equation does not close.
  {
    auto sol = bethe_quasimomenta({0, 3}, 2.0, L);
    CHECK(std::abs(sol.ks[0] - sol.ks[1]) < 1e-14);
    CHECK(bethe_residual(sol) > 0.1);
  }
  // Mixed gaps: non-monotone quasimomenta; neither global convention works
  // (reported honestly as a nonzero residual).
  {
    auto sol = bethe_quasimomenta({0, 1, 5}, 1.0, L);
    CHECK(std::abs(sol.ks[0] - 2.0) < 1e-14);
    CHECK(std::abs(sol.ks[1] - 1.0) < 1e-14);
    CHECK(std::abs(sol.ks[2] - 3.0) < 1e-14);
    CHECK(bethe_residual(sol) > 0.1);
  }
  // Labels must be weakly increasing.
  CHECK_THROWS_AS(bethe_quasimomenta({3, 1}, 1.0, L), ValidationError);
}
