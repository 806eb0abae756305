#include "bergman/symbol.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace bergman {

void HarmonicSymbol::set_anti(int degree, ExactComplex value) {
  if (degree < 0) throw std::invalid_argument("HarmonicSymbol: anti degree must be >= 0");
  if (value.is_zero())
    anti.erase(degree);
  else
    anti[degree] = std::move(value);
}

void HarmonicSymbol::set_analytic(int degree, ExactComplex value) {
  if (degree < 1) throw std::invalid_argument("HarmonicSymbol: analytic degree must be >= 1");
  if (value.is_zero())
    analytic.erase(degree);
  else
    analytic[degree] = std::move(value);
}

ExactComplex HarmonicSymbol::anti_coeff(int degree) const {
  auto it = anti.find(degree);
  return it == anti.end() ? ExactComplex() : it->second;
}

ExactComplex HarmonicSymbol::analytic_coeff(int degree) const {
  auto it = analytic.find(degree);
  return it == analytic.end() ? ExactComplex() : it->second;
}

std::optional<int> HarmonicSymbol::anti_degree() const {
  if (anti.empty()) return std::nullopt;
  return anti.rbegin()->first;
}

std::optional<int> HarmonicSymbol::analytic_degree() const {
  if (analytic.empty()) return std::nullopt;
  return analytic.rbegin()->first;
}

HarmonicSymbol combine(const ExactComplex& alpha, const HarmonicSymbol& phi,
                       const ExactComplex& beta, const HarmonicSymbol& zeta) {
  HarmonicSymbol out;
  auto blend = [](const ExactComplex& a, const std::map<int, ExactComplex>& x,
                  const ExactComplex& b, const std::map<int, ExactComplex>& y,
                  std::map<int, ExactComplex>& dst) {
    std::set<int> keys;
    for (const auto& [j, v] : x) keys.insert(j);
    for (const auto& [j, v] : y) keys.insert(j);
    for (int j : keys) {
      auto xi = x.find(j);
      auto yi = y.find(j);
      ExactComplex v;
      if (xi != x.end()) v += a * xi->second;
      if (yi != y.end()) v += b * yi->second;
      if (!v.is_zero()) dst[j] = v;
    }
  };
  blend(alpha, phi.anti, beta, zeta.anti, out.anti);
  blend(alpha, phi.analytic, beta, zeta.analytic, out.analytic);
  return out;
}

HarmonicSymbol hat(const HarmonicSymbol& phi) {
  HarmonicSymbol out;
  for (const auto& [j, v] : phi.anti) out.anti[j] = v.conj();
  for (const auto& [j, v] : phi.analytic) out.analytic[j] = v.conj();
  return out;
}

HarmonicSymbol coanalytic_part(const HarmonicSymbol& phi) {
  HarmonicSymbol out;
  out.anti = phi.anti;
  return out;
}

bool linearly_dependent(const HarmonicSymbol& phi, const HarmonicSymbol& zeta) {
  if (phi.is_zero() || zeta.is_zero()) return true;
  // Coefficient vectors over the union of (part, degree) keys.
  std::vector<std::pair<ExactComplex, ExactComplex>> rows;
  std::set<int> anti_keys, analytic_keys;
  for (const auto& [j, v] : phi.anti) anti_keys.insert(j);
  for (const auto& [j, v] : zeta.anti) anti_keys.insert(j);
  for (const auto& [j, v] : phi.analytic) analytic_keys.insert(j);
  for (const auto& [j, v] : zeta.analytic) analytic_keys.insert(j);
  for (int j : anti_keys) rows.emplace_back(phi.anti_coeff(j), zeta.anti_coeff(j));
  for (int j : analytic_keys) rows.emplace_back(phi.analytic_coeff(j), zeta.analytic_coeff(j));

  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = i + 1; j < rows.size(); ++j)
      if (!(rows[i].first * rows[j].second - rows[j].first * rows[i].second).is_zero())
        return false;
  return true;
}

double coefficient_l1(const HarmonicSymbol& phi) {
  Rational total = 0;
  for (const auto& [j, v] : phi.anti) total += v.l1();
  for (const auto& [j, v] : phi.analytic) total += v.l1();
  // l1 of each complex coefficient bounds its modulus from above, which is all
  // the norm-surrogate checks need.
  return to_double(total);
}

HarmonicSymbol partial_sum_symbol(int N) {
  if (N < 0) throw std::invalid_argument("partial_sum_symbol: N must be >= 0");
  HarmonicSymbol s;
  for (int i = 0; i <= N; ++i) s.anti[i] = ExactComplex(1);
  return s;
}

HarmonicSymbol antiholomorphic_monomial(int i) {
  if (i < 0) throw std::invalid_argument("antiholomorphic_monomial: degree must be >= 0");
  HarmonicSymbol s;
  s.anti[i] = ExactComplex(1);
  return s;
}

namespace {

void parse_part(const nlohmann::ordered_json& j, const std::string& key, bool analytic_part,
                HarmonicSymbol& out) {
  if (!j.contains(key)) return;
  const auto& part = j.at(key);
  if (!part.is_object())
    throw std::invalid_argument("symbol_from_json: key \"" + key + "\" must be an object");
  for (const auto& [deg_str, coeff] : part.items()) {
    int degree = 0;
    try {
      std::size_t used = 0;
      degree = std::stoi(deg_str, &used);
      if (used != deg_str.size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw std::invalid_argument("symbol_from_json: key \"" + key + "." + deg_str +
                                  "\" is not a degree");
    }
    if (!coeff.is_array() || coeff.size() != 2 || !coeff[0].is_string() || !coeff[1].is_string())
      throw std::invalid_argument("symbol_from_json: key \"" + key + "." + deg_str +
                                  "\" must be [reStr, imStr]");
    try {
      ExactComplex v = ExactComplex::parse(coeff[0].get<std::string>(), coeff[1].get<std::string>());
      if (analytic_part)
        out.set_analytic(degree, v);
      else
        out.set_anti(degree, v);
    } catch (const std::exception& e) {
      throw std::invalid_argument("symbol_from_json: key \"" + key + "." + deg_str + "\": " +
                                  e.what());
    }
  }
}

}  // namespace

HarmonicSymbol symbol_from_json(const nlohmann::ordered_json& j) {
  if (!j.is_object()) throw std::invalid_argument("symbol_from_json: document must be an object");
  HarmonicSymbol out;
  parse_part(j, "anti", false, out);
  parse_part(j, "analytic", true, out);
  return out;
}

nlohmann::ordered_json symbol_to_json(const HarmonicSymbol& s) {
  nlohmann::ordered_json j;
  j["anti"] = nlohmann::ordered_json::object();
  j["analytic"] = nlohmann::ordered_json::object();
  for (const auto& [deg, v] : s.anti)
    j["anti"][std::to_string(deg)] = {rational_to_string(v.re), rational_to_string(v.im)};
  for (const auto& [deg, v] : s.analytic)
    j["analytic"][std::to_string(deg)] = {rational_to_string(v.re), rational_to_string(v.im)};
  return j;
}

HarmonicSymbol load_symbol_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open symbol file \"" + path + "\"");
  nlohmann::ordered_json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw std::runtime_error("symbol file \"" + path + "\": " + e.what());
  }
  try {
    return symbol_from_json(j);
  } catch (const std::exception& e) {
    throw std::runtime_error("symbol file \"" + path + "\": " + e.what());
  }
}

}  // namespace bergman
