#include "bergman/kernel.hpp"

namespace bergman {

namespace {

void require_order(int k) {
  if (k < 2) throw std::invalid_argument("slant order k must be >= 2");
}

}  // namespace

ExactComplex monomial_inner(int p, int q, int r, int s) {
  if (p < 0 || q < 0 || r < 0 || s < 0)
    throw std::invalid_argument("monomial_inner: exponents must be >= 0");
  if (p + s != q + r) return {};
  return ExactComplex(make_rational(1, p + s + 1));
}

std::pair<ExactComplex, int> project_monomial(int l, int m) {
  if (l < 0 || m < 0) throw std::invalid_argument("project_monomial: exponents must be >= 0");
  if (l < m) return {ExactComplex(), 0};
  return {ExactComplex(make_rational(l - m + 1, l + 1)), l - m};
}

AnalyticPoly hankel_action(const HarmonicSymbol& phi, int n) {
  if (n < 0) throw std::invalid_argument("hankel_action: n must be >= 0");
  AnalyticPoly out;
  auto d = phi.anti_degree();
  if (!d) return out;
  for (auto it = phi.anti.lower_bound(n); it != phi.anti.end(); ++it) {
    const auto& [j, a] = *it;
    out.add_term(j - n, make_rational(j - n + 1, j + 1) * a);
  }
  return out;
}

AnalyticPoly w_action(int k, const AnalyticPoly& f) {
  require_order(k);
  AnalyticPoly out;
  for (const auto& [d, v] : f.coeffs)
    if (d % k == 0) out.add_term(d / k, v);
  return out;
}

std::pair<ExactComplex, int> w_adjoint_action(int k, int m) {
  require_order(k);
  if (m < 0) throw std::invalid_argument("w_adjoint_action: m must be >= 0");
  return {ExactComplex(make_rational(static_cast<long>(k) * m + 1, m + 1)),
          k * m};
}

AnalyticPoly slant_action(const HarmonicSymbol& phi, int k, int n) {
  require_order(k);
  return w_action(k, hankel_action(phi, n));
}

MonomialAction build_monomial_action(const HarmonicSymbol& phi, int k, int D) {
  require_order(k);
  if (D < 1) throw std::invalid_argument("build_monomial_action: D must be >= 1");
  MonomialAction action;
  action.max_input_degree = D - 1;
  for (int n = 0; n < D; ++n) action.set_column(n, slant_action(phi, k, n));
  return action;
}

}  // namespace bergman
