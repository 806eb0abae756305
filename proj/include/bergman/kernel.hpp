#pragma once

#include <utility>

#include "bergman/poly.hpp"
#include "bergman/symbol.hpp"

namespace bergman {

// Exact monomial-basis actions of the building-block operators on the
// Bergman space of the unit disc with normalized area measure. Everything
// here is a pure function over immutable values.

/// <z^p conj(z)^q, z^r conj(z)^s> = 1/(p+s+1) when p+s = q+r, else 0.
ExactComplex monomial_inner(int p, int q, int r, int s);

/// Bergman projection of the mixed monomial z^l conj(z)^m: coefficient
/// (l-m+1)/(l+1) at degree l-m when l >= m, exact zero otherwise.
std::pair<ExactComplex, int> project_monomial(int l, int m);

/// Little Hankel action on z^n. The analytic part of the symbol never
/// reaches the output: after the reflection it lands on conj(z)^{j+n} with
/// j+n >= 1, which the projection annihilates, so it is dropped up front
/// (tests re-derive this from project_monomial).
AnalyticPoly hankel_action(const HarmonicSymbol& phi, int n);

/// W_k: keeps coefficients at degrees divisible by k, contracting z^{kn} to
/// z^n. Requires k >= 2.
AnalyticPoly w_action(int k, const AnalyticPoly& f);

/// Adjoint of W_k on z^m: coefficient (km+1)/(m+1) at degree km.
std::pair<ExactComplex, int> w_adjoint_action(int k, int m);

/// k-th order slant little Hankel action on z^n: W_k after the little Hankel
/// action. Zero whenever n exceeds the co-analytic degree of the symbol.
AnalyticPoly slant_action(const HarmonicSymbol& phi, int k, int n);

/// Assembles slant_action columns 0..D-1. Requires k >= 2, D >= 1.
MonomialAction build_monomial_action(const HarmonicSymbol& phi, int k, int D);

}  // namespace bergman
