#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "bergman/kernel.hpp"
#include "bergman/rng.hpp"

using namespace bergman;

namespace {

// Independent oracle for the inner product: midpoint quadrature of
// (1/pi) int z^p conj(z)^q conj(z^r conj(z)^s) dA over the unit disc in
// polar coordinates. The uniform angular grid integrates e^{im theta}
// exactly for |m| < n_theta, so the error is driven by the radial rule.
std::complex<double> inner_quadrature(int p, int q, int r, int s) {
  const int n_rho = 8000, n_theta = 64;
  const int a = p + s, b = q + r;
  std::complex<double> total = 0.0;
  for (int i = 0; i < n_rho; ++i) {
    double rho = (i + 0.5) / n_rho;
    double radial = std::pow(rho, a + b) * rho;
    std::complex<double> angular = 0.0;
    for (int j = 0; j < n_theta; ++j) {
      double theta = 2.0 * M_PI * (j + 0.5) / n_theta;
      angular += std::exp(std::complex<double>(0.0, (a - b) * theta));
    }
    total += radial * angular;
  }
  return total * (2.0 / (static_cast<double>(n_rho) * n_theta));
}

HarmonicSymbol random_coanalytic(SplitMix64& rng, int degree) {
  HarmonicSymbol s;
  for (int j = 0; j <= degree; ++j)
    s.set_anti(j, ExactComplex(make_rational(rng.uniform_int(-9, 9), rng.uniform_int(1, 4)),
                               make_rational(rng.uniform_int(-9, 9), rng.uniform_int(1, 4))));
  return s;
}

}  // namespace

TEST_CASE("monomial_inner: closed values and quadrature oracle") {
  CHECK(monomial_inner(0, 0, 0, 0) == ExactComplex(1));
  CHECK(monomial_inner(1, 0, 1, 0) == ExactComplex(make_rational(1, 2)));
  CHECK(monomial_inner(1, 0, 0, 1) == ExactComplex());
  CHECK(monomial_inner(3, 1, 2, 0) == ExactComplex(make_rational(1, 4)));
  CHECK(monomial_inner(2, 0, 2, 0) == ExactComplex(make_rational(1, 3)));
  CHECK_THROWS_AS(monomial_inner(-1, 0, 0, 0), std::invalid_argument);

  for (auto [p, q, r, s] : {std::array{0, 0, 0, 0}, {1, 0, 1, 0}, {1, 0, 0, 1}, {2, 1, 1, 0},
                            {3, 1, 2, 0}, {2, 2, 0, 0}, {4, 0, 1, 3}, {3, 2, 2, 1}}) {
    std::complex<double> exact = to_complex(monomial_inner(p, q, r, s));
    std::complex<double> quad = inner_quadrature(p, q, r, s);
    CHECK(std::abs(exact - quad) < 1e-6);
  }
}

TEST_CASE("monomial_inner: exact selection rule on a grid") {
  for (int p = 0; p <= 8; ++p)
    for (int q = 0; q <= 8; ++q)
      for (int r = 0; r <= 8; ++r)
        for (int s = 0; s <= 8; ++s) {
          ExactComplex v = monomial_inner(p, q, r, s);
          if (p + s == q + r)
            CHECK(v == ExactComplex(make_rational(1, p + s + 1)));
          else
            CHECK(v.is_zero());
        }
}

TEST_CASE("reflection is a self-adjoint unitary on mixed monomials (degrees <= 12)") {
  // J swaps the z and conj(z) exponents.
  for (int p = 0; p <= 12; ++p)
    for (int q = 0; q <= 12; ++q)
      for (int r = 0; r <= 12; ++r)
        for (int s = 0; s <= 12; ++s) {
          CHECK(monomial_inner(q, p, r, s) == monomial_inner(p, q, s, r));  // self-adjoint
          CHECK(monomial_inner(q, p, s, r) == monomial_inner(r, s, p, q));  // unitary
        }
}

TEST_CASE("project_monomial: examples and the inner-product oracle") {
  auto [c31, d31] = project_monomial(3, 1);
  CHECK(c31 == ExactComplex(make_rational(3, 4)));
  CHECK(d31 == 2);
  auto [c22, d22] = project_monomial(2, 2);
  CHECK(c22 == ExactComplex(make_rational(1, 3)));
  CHECK(d22 == 0);
  auto [c12, d12] = project_monomial(1, 2);
  CHECK(c12.is_zero());
  CHECK(d12 == 0);

  // Projection is determined by <P(z^l conj(z)^m), z^d> = <z^l conj(z)^m, z^d>:
  // the coefficient c at degree l-m must reproduce every monomial pairing.
  for (int l = 0; l <= 16; ++l)
    for (int m = 0; m <= 16; ++m) {
      auto [c, deg] = project_monomial(l, m);
      for (int d = 0; d <= 18; ++d) {
        ExactComplex lhs = c.is_zero() ? ExactComplex() : c * monomial_inner(deg, 0, d, 0);
        CHECK(lhs == monomial_inner(l, m, d, 0));
      }
    }
}

TEST_CASE("project_monomial: idempotence on analytic monomials up to degree 64") {
  for (int l = 0; l <= 64; ++l) {
    auto [c, d] = project_monomial(l, 0);
    CHECK(c == ExactComplex(1));
    CHECK(d == l);
  }
}

TEST_CASE("hankel_action: examples") {
  AnalyticPoly h = hankel_action(antiholomorphic_monomial(1), 0);
  CHECK(h.coeff(1) == ExactComplex(1));
  CHECK(h.coeffs.size() == 1);

  AnalyticPoly c = hankel_action(antiholomorphic_monomial(0), 0);
  CHECK(c.coeff(0) == ExactComplex(1));
  CHECK(c.coeffs.size() == 1);

  // partial sum degree 3 applied to z: 1/2 + (2/3) z + (3/4) z^2
  AnalyticPoly p = hankel_action(partial_sum_symbol(3), 1);
  CHECK(p.coeff(0) == ExactComplex(make_rational(1, 2)));
  CHECK(p.coeff(1) == ExactComplex(make_rational(2, 3)));
  CHECK(p.coeff(2) == ExactComplex(make_rational(3, 4)));
  CHECK(p.coeffs.size() == 3);
}

TEST_CASE("hankel_action agrees with the full reflect-multiply-project path") {
  // The oracle keeps the analytic part and projects it away termwise, which
  // re-derives that b_j never contributes.
  SplitMix64 rng(11);
  for (int t = 0; t < 25; ++t) {
    HarmonicSymbol phi = random_coanalytic(rng, 7);
    for (int j = 1; j <= 4; ++j)
      phi.set_analytic(j, ExactComplex(make_rational(rng.uniform_int(-9, 9), 2)));
    for (int n = 0; n <= 9; ++n) {
      AnalyticPoly oracle;
      // J M_phi z^n = sum_j a_j z^j conj(z)^n + sum_j b_j conj(z)^{j+n}
      for (const auto& [j, a] : phi.anti) {
        auto [c, d] = project_monomial(j, n);
        if (!c.is_zero()) oracle.add_term(d, a * c);
      }
      for (const auto& [j, b] : phi.analytic) {
        auto [c, d] = project_monomial(0, j + n);
        if (!c.is_zero()) oracle.add_term(d, b * c);
      }
      CHECK(oracle == hankel_action(phi, n));
    }
  }
}

TEST_CASE("w_action: definition instances") {
  AnalyticPoly z4;
  z4.add_term(4, ExactComplex(1));
  CHECK(w_action(2, z4).coeff(2) == ExactComplex(1));

  AnalyticPoly z3;
  z3.add_term(3, ExactComplex(1));
  CHECK(w_action(2, z3).is_zero());

  AnalyticPoly one;
  one.add_term(0, ExactComplex(1));
  CHECK(w_action(3, one).coeff(0) == ExactComplex(1));

  CHECK_THROWS_AS(w_action(1, one), std::invalid_argument);
  CHECK_THROWS_AS(w_action(0, one), std::invalid_argument);
}

TEST_CASE("w_adjoint_action: examples and the pairing oracle") {
  auto [c21, d21] = w_adjoint_action(2, 1);
  CHECK(c21 == ExactComplex(make_rational(3, 2)));
  CHECK(d21 == 2);
  auto [c20, d20] = w_adjoint_action(2, 0);
  CHECK(c20 == ExactComplex(1));
  CHECK(d20 == 0);
  auto [c32, d32] = w_adjoint_action(3, 2);
  CHECK(c32 == ExactComplex(make_rational(7, 3)));
  CHECK(d32 == 6);
  CHECK_THROWS_AS(w_adjoint_action(1, 0), std::invalid_argument);

  // <W_k z^a, z^b> = <z^a, W_k* z^b> for a, b <= 32, k in 2..6, both sides
  // written in terms of monomial_inner.
  for (int k = 2; k <= 6; ++k)
    for (int a = 0; a <= 32; ++a)
      for (int b = 0; b <= 32; ++b) {
        ExactComplex lhs = (a % k == 0) ? monomial_inner(a / k, 0, b, 0) : ExactComplex();
        auto [coef, deg] = w_adjoint_action(k, b);
        ExactComplex rhs = coef * monomial_inner(a, 0, deg, 0);
        CHECK(lhs == rhs);
      }
}

TEST_CASE("slant_action: composed oracles by hand") {
  // symbol conj(z)^2 at k = 2
  HarmonicSymbol zbar2 = antiholomorphic_monomial(2);
  AnalyticPoly s0 = slant_action(zbar2, 2, 0);
  CHECK(s0.coeff(1) == ExactComplex(1));
  CHECK(s0.coeffs.size() == 1);
  CHECK(slant_action(zbar2, 2, 1).is_zero());
  AnalyticPoly s2 = slant_action(zbar2, 2, 2);
  CHECK(s2.coeff(0) == ExactComplex(make_rational(1, 3)));
  CHECK_THROWS_AS(slant_action(zbar2, 1, 0), std::invalid_argument);
}

TEST_CASE("slant_action: finite rank and degree bound") {
  SplitMix64 rng(13);
  for (int t = 0; t < 20; ++t) {
    int deg = rng.uniform_int(0, 10);
    int k = rng.uniform_int(2, 6);
    HarmonicSymbol phi = random_coanalytic(rng, deg);
    if (!phi.anti_degree()) continue;
    int d = *phi.anti_degree();
    for (int n = d + 1; n <= d + 2 * k; ++n) CHECK(slant_action(phi, k, n).is_zero());
    for (int n = 0; n <= d; ++n) {
      auto out_deg = slant_action(phi, k, n).degree();
      if (out_deg) CHECK(*out_deg <= d / k);
    }
  }
}

TEST_CASE("build_monomial_action: examples and properties") {
  CHECK(build_monomial_action(HarmonicSymbol{}, 2, 5).columns.empty());
  CHECK_THROWS_AS(build_monomial_action(HarmonicSymbol{}, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(build_monomial_action(HarmonicSymbol{}, 1, 3), std::invalid_argument);

  MonomialAction a = build_monomial_action(antiholomorphic_monomial(2), 2, 3);
  CHECK(a.max_input_degree == 2);
  CHECK(a.column(0).coeff(1) == ExactComplex(1));
  CHECK(a.column(1).is_zero());
  CHECK(a.column(2).coeff(0) == ExactComplex(make_rational(1, 3)));

  // tail of zeros: enlarging D leaves the nonzero columns untouched
  MonomialAction small = build_monomial_action(antiholomorphic_monomial(2), 2, 3);
  MonomialAction large = build_monomial_action(antiholomorphic_monomial(2), 2, 12);
  CHECK(small.columns == large.columns);
}

TEST_CASE("build_monomial_action: symbol non-uniqueness and linearity") {
  SplitMix64 rng(17);
  for (int t = 0; t < 15; ++t) {
    HarmonicSymbol phi = random_coanalytic(rng, 6);
    HarmonicSymbol noisy = phi;
    for (int j = 1; j <= 3; ++j)
      noisy.set_analytic(j, ExactComplex(make_rational(rng.uniform_int(1, 9))));
    int k = rng.uniform_int(2, 5);
    CHECK(build_monomial_action(noisy, k, 8).columns ==
          build_monomial_action(coanalytic_part(noisy), k, 8).columns);

    HarmonicSymbol zeta = random_coanalytic(rng, 6);
    ExactComplex alpha(make_rational(rng.uniform_int(-5, 5)), make_rational(1, 2));
    ExactComplex beta(make_rational(2), make_rational(rng.uniform_int(-5, 5)));
    MonomialAction lhs = build_monomial_action(combine(alpha, phi, beta, zeta), k, 8);
    MonomialAction expected;
    expected.max_input_degree = 7;
    for (int n = 0; n < 8; ++n) {
      AnalyticPoly col;
      col.add_scaled(alpha, slant_action(phi, k, n));
      col.add_scaled(beta, slant_action(zeta, k, n));
      expected.set_column(n, std::move(col));
    }
    CHECK(lhs == expected);
  }
}
