#pragma once

#include <map>
#include <optional>
#include <string>

#include "bergman/rational.hpp"

#include <json.hpp>

namespace bergman {

// Harmonic polynomial symbol phi(z) = sum_j a_j conj(z)^j + sum_j b_j z^j
// with finite support and exact complex-rational coefficients. Zero
// coefficients are never stored, so the maps' largest keys are the degrees.
struct HarmonicSymbol {
  std::map<int, ExactComplex> anti;      // a_j, j >= 0
  std::map<int, ExactComplex> analytic;  // b_j, j >= 1

  void set_anti(int degree, ExactComplex value);
  void set_analytic(int degree, ExactComplex value);

  ExactComplex anti_coeff(int degree) const;
  ExactComplex analytic_coeff(int degree) const;

  /// Largest j with a_j != 0; empty for a vanishing co-analytic part.
  std::optional<int> anti_degree() const;
  std::optional<int> analytic_degree() const;

  bool is_zero() const { return anti.empty() && analytic.empty(); }

  friend bool operator==(const HarmonicSymbol&, const HarmonicSymbol&) = default;
};

/// alpha*phi + beta*zeta, coefficientwise, pruned.
HarmonicSymbol combine(const ExactComplex& alpha, const HarmonicSymbol& phi,
                       const ExactComplex& beta, const HarmonicSymbol& zeta);

/// The symbol with every coefficient conjugated (support unchanged).
HarmonicSymbol hat(const HarmonicSymbol& phi);

/// Keep only the co-analytic part (drop every b_j).
HarmonicSymbol coanalytic_part(const HarmonicSymbol& phi);

/// True iff some (alpha, beta) != (0, 0) gives alpha*phi + beta*zeta = 0.
/// Decided exactly: every 2x2 minor of the coefficient vectors over the
/// union of supports must vanish.
bool linearly_dependent(const HarmonicSymbol& phi, const HarmonicSymbol& zeta);

/// sum_j |a_j| + sum_j |b_j| as a double (upper bound surrogate for the
/// essential sup norm of a polynomial symbol's coefficient mass).
double coefficient_l1(const HarmonicSymbol& phi);

// Symbol families used throughout the spectral suites.
HarmonicSymbol partial_sum_symbol(int N);          // sum_{i=0}^{N} conj(z)^i
HarmonicSymbol antiholomorphic_monomial(int i);    // conj(z)^i

// JSON wire format:
//   {"anti": {"0": [reStr, imStr], ...}, "analytic": {"1": [reStr, imStr], ...}}
// Degree keys are decimal strings; coefficients are exact rational strings
// such as "7/3" or "0.25".
HarmonicSymbol symbol_from_json(const nlohmann::ordered_json& j);
nlohmann::ordered_json symbol_to_json(const HarmonicSymbol& s);

/// Reads and parses a symbol file; error messages name the path and the
/// first offending key.
HarmonicSymbol load_symbol_file(const std::string& path);

}  // namespace bergman
