#include "bergman/commutativity.hpp"

#include <vector>

#include "bergman/kernel.hpp"
#include "bergman/rng.hpp"

namespace bergman {

nlohmann::ordered_json to_json(const CommutatorReport& report) {
  nlohmann::ordered_json j;
  j["commute"] = report.commute;
  j["dependent"] = report.dependent;
  if (report.witness) {
    j["witness"] = {{"input_degree", report.witness->input_degree},
                    {"output_degree", report.witness->output_degree},
                    {"value", {rational_to_string(report.witness->value.re),
                               rational_to_string(report.witness->value.im)}}};
  } else {
    j["witness"] = nullptr;
  }
  j["hypotheses"] = {{"equal_degrees", report.hypotheses.equal_degrees},
                     {"a_top_nonzero", report.hypotheses.a_top_nonzero},
                     {"b_top_nonzero", report.hypotheses.b_top_nonzero},
                     {"b_kp2_nonzero", report.hypotheses.b_kp2_nonzero},
                     {"b_m_nonzero", report.hypotheses.b_m_nonzero},
                     {"lemma_guard_nonzero", report.hypotheses.lemma_guard_nonzero}};
  return j;
}

MonomialAction commutator_action(const HarmonicSymbol& phi, const HarmonicSymbol& zeta, int k) {
  if (k < 2) throw std::invalid_argument("commutator_action: k must be >= 2");
  HarmonicSymbol a = coanalytic_part(phi);
  HarmonicSymbol b = coanalytic_part(zeta);
  int window = 0;
  if (auto d = a.anti_degree()) window = std::max(window, *d);
  if (auto d = b.anti_degree()) window = std::max(window, *d);

  MonomialAction out;
  out.max_input_degree = window;
  for (int n = 0; n <= window; ++n) {
    AnalyticPoly first;   // S_phi S_zeta z^n
    for (const auto& [m, v] : slant_action(b, k, n).coeffs)
      first.add_scaled(v, slant_action(a, k, m));
    AnalyticPoly second;  // S_zeta S_phi z^n
    for (const auto& [m, v] : slant_action(a, k, n).coeffs)
      second.add_scaled(v, slant_action(b, k, m));
    AnalyticPoly diff = first;
    diff.add_scaled(ExactComplex(-1), second);
    out.set_column(n, std::move(diff));
  }
  return out;
}

namespace {

HypothesisFlags hypothesis_flags(const HarmonicSymbol& phi, const HarmonicSymbol& zeta, int k) {
  HypothesisFlags flags;
  HarmonicSymbol hi = coanalytic_part(phi);
  HarmonicSymbol lo = coanalytic_part(zeta);
  auto dh = hi.anti_degree();
  auto dl = lo.anti_degree();
  // Orient so that the phi role carries the higher degree.
  if (dl.has_value() && (!dh.has_value() || *dl > *dh)) {
    std::swap(hi, lo);
    std::swap(dh, dl);
  }
  flags.equal_degrees = dh == dl;
  flags.a_top_nonzero = dh.has_value();  // stored top coefficients are nonzero
  flags.b_top_nonzero = flags.equal_degrees && dl.has_value();
  if (dl) {
    int m = *dl;
    int p2 = m / k;
    flags.b_kp2_nonzero = !lo.anti_coeff(k * p2).is_zero();
    flags.b_m_nonzero = true;
  }
  ExactComplex guard;
  if (dh) {
    int p1 = *dh / k;
    ExactComplex akp1 = hi.anti_coeff(k * p1);
    guard += akp1 * akp1;
  }
  if (dl) {
    int p2 = *dl / k;
    ExactComplex bkp2 = lo.anti_coeff(k * p2);
    guard += bkp2 * bkp2;
  }
  flags.lemma_guard_nonzero = !guard.is_zero();
  return flags;
}

}  // namespace

CommutatorReport decide_commute(const HarmonicSymbol& phi, const HarmonicSymbol& zeta, int k) {
  CommutatorReport report;
  MonomialAction comm = commutator_action(phi, zeta, k);
  report.commute = true;
  for (const auto& [n, col] : comm.columns) {
    if (col.is_zero()) continue;
    report.commute = false;
    const auto& [m, v] = *col.coeffs.begin();
    report.witness = CommutatorWitness{n, m, v};
    break;
  }
  report.dependent = linearly_dependent(coanalytic_part(phi), coanalytic_part(zeta));
  report.hypotheses = hypothesis_flags(phi, zeta, k);
  return report;
}

nlohmann::ordered_json to_json(const TrialSummary& s) {
  nlohmann::ordered_json j;
  j["theorem"] = s.theorem;
  j["n"] = s.n;
  if (s.m >= 0) j["m"] = s.m;
  j["k"] = s.k;
  j["seed"] = s.seed;
  if (s.theorem == "tail-vanishing-lemma") {
    j["pairs_examined"] = s.pairs_examined;
    j["commuting_pairs"] = s.commuting_pairs;
    j["confirmations"] = s.confirmations;
    j["coverage_note"] = s.coverage_note;
  } else {
    j["trials"] = s.trials;
    if (s.dependent_trials > 0) j["dependent_trials"] = s.dependent_trials;
    j["agreements"] = s.agreements;
  }
  j["counterexample"] = s.counterexample ? *s.counterexample : nlohmann::ordered_json(nullptr);
  return j;
}

namespace {

ExactComplex random_coefficient(SplitMix64& rng, bool force_nonzero) {
  for (;;) {
    long re = rng.uniform_int(-9, 9);
    long im = rng.uniform_int(-9, 9);
    long den = rng.uniform_int(1, 4);
    ExactComplex c(make_rational(re, den), make_rational(im, den));
    if (!force_nonzero || !c.is_zero()) return c;
  }
}

/// Co-analytic symbol with support in [0, degree]; the top coefficient is
/// forced nonzero when exact_degree is set.
HarmonicSymbol random_symbol(SplitMix64& rng, int degree, bool exact_degree) {
  HarmonicSymbol s;
  for (int j = 0; j <= degree; ++j) {
    bool top = j == degree && exact_degree;
    ExactComplex c = random_coefficient(rng, top);
    s.set_anti(j, c);
  }
  return s;
}

nlohmann::ordered_json counterexample_json(const HarmonicSymbol& phi, const HarmonicSymbol& zeta,
                                           const CommutatorReport& report, int trial) {
  nlohmann::ordered_json j;
  j["trial"] = trial;
  j["phi"] = symbol_to_json(phi);
  j["zeta"] = symbol_to_json(zeta);
  j["report"] = to_json(report);
  return j;
}

}  // namespace

TrialSummary verify_theorem_equal_degree(int n, int k, int trials, std::uint64_t seed) {
  if (n < 0 || k < 2 || trials < 1)
    throw std::invalid_argument("verify_theorem_equal_degree: bad arguments");
  TrialSummary s;
  s.theorem = "equal-degree";
  s.n = n;
  s.k = k;
  s.seed = seed;
  s.trials = trials;
  s.dependent_trials = std::max(1, trials / 5);

  struct Outcome {
    bool agree = true;
    std::optional<nlohmann::ordered_json> cex;
  };
  int total = s.trials + s.dependent_trials;
  std::vector<Outcome> results(total);
#pragma omp parallel for schedule(dynamic)
  for (int t = 0; t < total; ++t) {
    SplitMix64 rng(derive_stream(seed, static_cast<std::uint64_t>(t)));
    HarmonicSymbol phi = random_symbol(rng, n, true);
    HarmonicSymbol zeta;
    if (t < s.trials) {
      zeta = random_symbol(rng, n, true);
    } else {
      ExactComplex gamma = random_coefficient(rng, true);
      zeta = combine(gamma, phi, ExactComplex(), HarmonicSymbol());
    }
    CommutatorReport rep = decide_commute(phi, zeta, k);
    if (rep.commute != rep.dependent)
      results[t] = {false, counterexample_json(phi, zeta, rep, t)};
  }
  for (int t = 0; t < total; ++t) {
    if (results[t].agree)
      ++s.agreements;
    else if (!s.counterexample)
      s.counterexample = results[t].cex;
  }
  return s;
}

TrialSummary verify_lemma_tail_vanishing(int n, int m, int k, std::uint64_t seed) {
  if (!(n > m && m >= 0 && k >= 2))
    throw std::invalid_argument("verify_lemma_tail_vanishing: need n > m >= 0 and k >= 2");
  TrialSummary s;
  s.theorem = "tail-vanishing-lemma";
  s.n = n;
  s.m = m;
  s.k = k;
  s.seed = seed;
  s.coverage_note =
      "exhaustive small-coefficient grid plus seeded random and constructed dependent samples;"
      " commuting pairs outside the searched families are not enumerated";

  auto consider = [&](const HarmonicSymbol& phi, const HarmonicSymbol& zeta) {
    // Hypothesis gate: deg zeta = m exactly, guard nonzero.
    auto dz = coanalytic_part(zeta).anti_degree();
    if (!dz || *dz != m) return;
    CommutatorReport rep = decide_commute(phi, zeta, k);
    if (!rep.hypotheses.lemma_guard_nonzero) return;
    ++s.pairs_examined;
    if (!rep.commute) return;
    ++s.commuting_pairs;
    bool tail_zero = true;
    HarmonicSymbol a = coanalytic_part(phi);
    for (int j = m + 1; j <= n; ++j)
      if (!a.anti_coeff(j).is_zero()) tail_zero = false;
    if (tail_zero) {
      ++s.confirmations;
    } else if (!s.counterexample) {
      s.counterexample = counterexample_json(phi, zeta, rep, -1);
    }
  };

  // Exhaustive grid over {-1, 0, 1} coefficients (both symbols real here;
  // the random samples below cover complex coefficients).
  long pattern_count = 1;
  for (int i = 0; i < n + m + 2; ++i) pattern_count *= 3;
  if (pattern_count <= 60000) {
    for (long pa = 0; pa < pattern_count; ++pa) {
      long code = pa;
      HarmonicSymbol phi, zeta;
      for (int j = 0; j <= n; ++j, code /= 3) phi.set_anti(j, ExactComplex(code % 3 - 1));
      for (int j = 0; j <= m; ++j, code /= 3) zeta.set_anti(j, ExactComplex(code % 3 - 1));
      consider(phi, zeta);
    }
  }
  // Random samples.
  for (int t = 0; t < 300; ++t) {
    SplitMix64 rng(derive_stream(seed, 1000000 + static_cast<std::uint64_t>(t)));
    consider(random_symbol(rng, n, false), random_symbol(rng, m, true));
  }
  // Constructed commuting pairs: dependent pairs supported in [0, m]
  // (tail above m vacuously zero).
  for (int t = 0; t < 50; ++t) {
    SplitMix64 rng(derive_stream(seed, 2000000 + static_cast<std::uint64_t>(t)));
    HarmonicSymbol base = random_symbol(rng, m, true);
    ExactComplex gamma = random_coefficient(rng, true);
    consider(combine(gamma, base, ExactComplex(), HarmonicSymbol()), base);
  }
  return s;
}

TrialSummary verify_theorem_unequal_degree(int n, int m, int k, int trials, std::uint64_t seed) {
  if (!(n > m && m >= 0 && k >= 2 && trials >= 1))
    throw std::invalid_argument("verify_theorem_unequal_degree: bad arguments");
  TrialSummary s;
  s.theorem = "unequal-degree";
  s.n = n;
  s.m = m;
  s.k = k;
  s.seed = seed;
  s.trials = trials;
  s.coverage_note =
      "dependent pairs cannot satisfy deg zeta = m < n = deg phi with nonzero top coefficients,"
      " so constructed dependent pairs are not applicable here";

  struct Outcome {
    bool agree = true;
    std::optional<nlohmann::ordered_json> cex;
  };
  std::vector<Outcome> results(trials);
#pragma omp parallel for schedule(dynamic)
  for (int t = 0; t < trials; ++t) {
    SplitMix64 rng(derive_stream(seed, static_cast<std::uint64_t>(t)));
    HarmonicSymbol phi = random_symbol(rng, n, true);
    HarmonicSymbol zeta;
    for (;;) {
      zeta = random_symbol(rng, m, true);
      int p2 = m / k;
      if (!zeta.anti_coeff(k * p2).is_zero()) break;  // b_{k p2} != 0 hypothesis
    }
    CommutatorReport rep = decide_commute(phi, zeta, k);
    if (rep.commute != rep.dependent)
      results[t] = {false, counterexample_json(phi, zeta, rep, t)};
  }
  for (int t = 0; t < trials; ++t) {
    if (results[t].agree)
      ++s.agreements;
    else if (!s.counterexample)
      s.counterexample = results[t].cex;
  }
  return s;
}

}  // namespace bergman
