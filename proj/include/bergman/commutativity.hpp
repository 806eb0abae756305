#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "bergman/poly.hpp"
#include "bergman/symbol.hpp"

#include <json.hpp>

namespace bergman {

// Which hypotheses of the commutation statements the pair satisfies, with
// the symbols oriented so the "phi" role carries the higher co-analytic
// degree. a refers to the phi-role coefficients, b to the zeta-role ones;
// n and m are the respective degrees and p1 = floor(n/k), p2 = floor(m/k).
struct HypothesisFlags {
  bool equal_degrees = false;
  bool a_top_nonzero = false;      // a_n != 0
  bool b_top_nonzero = false;      // b_n != 0 (equal-degree statement)
  bool b_kp2_nonzero = false;      // b_{k p2} != 0
  bool b_m_nonzero = false;        // b_m != 0
  bool lemma_guard_nonzero = false;  // a_{k p1}^2 + b_{k p2}^2 != 0
};

struct CommutatorWitness {
  int input_degree = 0;   // n with commutator(z^n) != 0
  int output_degree = 0;  // degree of a nonzero coefficient of the image
  ExactComplex value;     // that exact coefficient
};

struct CommutatorReport {
  bool commute = false;    // exact
  bool dependent = false;  // exact
  std::optional<CommutatorWitness> witness;
  HypothesisFlags hypotheses;
};

nlohmann::ordered_json to_json(const CommutatorReport& report);

/// Exact action of S_phi^k S_zeta^k - S_zeta^k S_phi^k on z^n for
/// 0 <= n <= max degree of the two co-analytic parts. Columns beyond that
/// window are zero: both products annihilate z^n there, so the materialized
/// window decides commutation on the whole space. Analytic parts are dropped
/// first; rejects k < 2.
MonomialAction commutator_action(const HarmonicSymbol& phi, const HarmonicSymbol& zeta, int k);

/// Exact commutation decision plus linear-dependence of the co-analytic
/// parts and the hypothesis bookkeeping. Never touches floating point.
CommutatorReport decide_commute(const HarmonicSymbol& phi, const HarmonicSymbol& zeta, int k);

// Randomized/exhaustive verdicts for the commutation statements. Trials are
// reproducible: each draws its own stream from (seed, trial index), and
// results merge in trial order.
struct TrialSummary {
  std::string theorem;
  int n = 0;
  int m = -1;  // unused (-1) for the equal-degree statement
  int k = 0;
  std::uint64_t seed = 0;
  int trials = 0;            // random pairs drawn
  int dependent_trials = 0;  // constructed dependent pairs (equal-degree only)
  int agreements = 0;        // trials where commute == dependent held
  // lemma bookkeeping
  int pairs_examined = 0;
  int commuting_pairs = 0;
  int confirmations = 0;
  std::string coverage_note;
  std::optional<nlohmann::ordered_json> counterexample;

  bool all_agree() const { return !counterexample.has_value(); }
};

nlohmann::ordered_json to_json(const TrialSummary& s);

/// Random pairs of exact degree n (top coefficients forced nonzero,
/// small Gaussian-integer numerators over denominators 1..4) plus
/// constructed dependent pairs zeta = gamma * phi; asserts
/// commute <=> dependent on every trial.
TrialSummary verify_theorem_equal_degree(int n, int k, int trials, std::uint64_t seed);

/// Searches (exhaustive small grids plus random samples) for commuting pairs
/// with deg phi <= n, deg zeta = m under the tail-vanishing hypotheses and
/// checks a_j = 0 exactly for m < j <= n on every commuting pair found.
TrialSummary verify_lemma_tail_vanishing(int n, int m, int k, std::uint64_t seed);

/// Hypothesis-satisfying random pairs with deg phi = n > deg zeta = m;
/// asserts commute <=> dependent (dependent pairs of unequal exact degrees
/// cannot exist, and the statement rules out commutation).
TrialSummary verify_theorem_unequal_degree(int n, int m, int k, int trials, std::uint64_t seed);

}  // namespace bergman
