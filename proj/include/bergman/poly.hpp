#pragma once

#include <map>
#include <optional>

#include "bergman/rational.hpp"

namespace bergman {

// Analytic polynomial sum_n c_n z^n with exact coefficients; finite support,
// zero coefficients absent.
struct AnalyticPoly {
  std::map<int, ExactComplex> coeffs;

  void add_term(int degree, const ExactComplex& value) {
    if (degree < 0) throw std::invalid_argument("AnalyticPoly: negative degree");
    if (value.is_zero()) return;
    auto [it, inserted] = coeffs.try_emplace(degree, value);
    if (!inserted) {
      it->second += value;
      if (it->second.is_zero()) coeffs.erase(it);
    }
  }

  void add_scaled(const ExactComplex& scale, const AnalyticPoly& p) {
    if (scale.is_zero()) return;
    for (const auto& [d, v] : p.coeffs) add_term(d, scale * v);
  }

  ExactComplex coeff(int degree) const {
    auto it = coeffs.find(degree);
    return it == coeffs.end() ? ExactComplex() : it->second;
  }

  std::optional<int> degree() const {
    if (coeffs.empty()) return std::nullopt;
    return coeffs.rbegin()->first;
  }

  bool is_zero() const { return coeffs.empty(); }

  friend bool operator==(const AnalyticPoly&, const AnalyticPoly&) = default;
};

// Exact finite-rank linear action in the monomial basis {z^n}: column n holds
// the full, untruncated image of z^n. Columns beyond max_input_degree are
// zero by construction for every action built in this project.
struct MonomialAction {
  std::map<int, AnalyticPoly> columns;  // absent column = zero image
  int max_input_degree = -1;

  const AnalyticPoly& column(int n) const {
    static const AnalyticPoly kZero;
    auto it = columns.find(n);
    return it == columns.end() ? kZero : it->second;
  }

  void set_column(int n, AnalyticPoly image) {
    if (!image.is_zero()) columns[n] = std::move(image);
  }

  /// Exact image of an arbitrary polynomial under the action.
  AnalyticPoly apply(const AnalyticPoly& f) const {
    AnalyticPoly out;
    for (const auto& [n, v] : f.coeffs)
      if (n <= max_input_degree) out.add_scaled(v, column(n));
    return out;
  }

  friend bool operator==(const MonomialAction&, const MonomialAction&) = default;
};

}  // namespace bergman
