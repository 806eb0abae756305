#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "bergman/charpoly.hpp"
#include "bergman/matrix.hpp"
#include "bergman/symbol.hpp"

#include <json.hpp>

namespace bergman {

enum class EigenSource { kClosedForm, kExactOracle, kNumerical };
enum class VerdictStatus { kConfirmed, kMismatchDocumented };

std::string to_string(EigenSource s);
std::string to_string(VerdictStatus s);

struct EigenvalueEntry {
  std::complex<double> value;
  double residual = 0.0;
  EigenSource source = EigenSource::kExactOracle;
  int multiplicity = 1;
};

struct Verdict {
  std::string claim;
  VerdictStatus status = VerdictStatus::kConfirmed;
  std::string detail;
};

struct SpectrumReport {
  std::vector<EigenvalueEntry> eigenvalues;
  bool kernel_note = false;  // 0 lies in the point spectrum
  std::vector<Verdict> verdicts;
};

nlohmann::ordered_json to_json(const SpectrumReport& report);
nlohmann::ordered_json to_json(const Verdict& verdict);

/// Canonical report order: descending real part, then descending imaginary
/// part; near-duplicates within merge_tol collapse into one entry whose
/// multiplicity accumulates.
void finalize_eigenvalues(std::vector<EigenvalueEntry>& values, double merge_tol = 1e-8);

// --- closed forms -----------------------------------------------------------

struct ClosedFormSpectrum {
  std::vector<std::complex<double>> values;  // includes 0
  std::string provenance;
};

/// Exact coefficients [k/2, -(2k+3), k+2] of the quadratic whose roots are
/// the two nonzero closed-form eigenvalues of the partial-sum family.
CVec partial_sum_quadratic(int k);

/// lambda_1 (plus branch) and lambda_2 of the quadratic above.
std::pair<double, double> partial_sum_quadratic_roots(int k);

/// Stated point spectrum for the symbol sum_{i=0}^{N} conj(z)^i:
/// {0, 1} for N < k and {0, lambda_1, lambda_2} for k <= N <= 2k-1.
/// Rejects N outside {0, ..., 2k-1}.
ClosedFormSpectrum closed_form_partial_sum(int N, int k);

/// Stated point spectrum for the monomial symbol conj(z)^i: {0} when (k+1)
/// does not divide i, {0, (k+1)/(k+2)} when it does. For i = 0 the operator
/// coincides with the N = 0 partial sum, whose stated spectrum {0, 1} is
/// used instead of the monomial rule.
ClosedFormSpectrum closed_form_monomial(int i, int k);

// --- exact oracle ------------------------------------------------------------

/// Nonzero point spectrum from the exact characteristic polynomial of the
/// finite-rank block, with certified enclosures; 0 is always included (the
/// operator annihilates z^n beyond the co-analytic degree, so the kernel is
/// nontrivial). By default the analytic part is dropped first; strict mode
/// rejects symbols that carry one.
SpectrumReport point_spectrum_oracle(const HarmonicSymbol& phi, int k, bool strict = false);

/// Certified nonzero eigenvalues only (block-level), for sweep comparisons.
std::vector<std::complex<double>> oracle_nonzero_values(const HarmonicSymbol& phi, int k);

/// Exact zero multiplicity of the finite-rank block (0 when the block is
/// nonsingular; the full operator still annihilates high monomials).
int oracle_block_zero_multiplicity(const HarmonicSymbol& phi, int k);

// --- proof eigenvectors -------------------------------------------------------

// Element a + b*lambda of Q[lambda] reduced modulo the defining quadratic
// (k+2) lambda^2 - (2k+3) lambda + k/2; the reduction makes residual checks
// for the irrational eigenvalues exact.
struct QuadExpr {
  Rational a{0}, b{0};

  bool is_zero() const { return a == 0 && b == 0; }
  friend bool operator==(const QuadExpr&, const QuadExpr&) = default;
};

QuadExpr quad_add(const QuadExpr& x, const QuadExpr& y);
QuadExpr quad_sub(const QuadExpr& x, const QuadExpr& y);
QuadExpr quad_scale(const Rational& s, const QuadExpr& x);
QuadExpr quad_mul(const QuadExpr& x, const QuadExpr& y, int k);

enum class ProofCase { kConstantOne, kQuadraticPair, kKernelSample };

struct ProofEigenvector {
  ProofCase kind = ProofCase::kConstantOne;
  int k = 2;
  int N = 0;
  int branch = 1;  // 1: plus-square-root eigenvalue, 2: minus
  std::map<int, QuadExpr> coeffs;
  QuadExpr eigenvalue;
  double eigenvalue_numeric = 0.0;
};

/// The eigenvector constructions used in the partial-sum proofs:
///   kConstantOne  (N < k):            f = 1,                 lambda = 1
///   kQuadraticPair (k <= N <= 2k-1):  f = 1 + 2(lambda-1) z, lambda = lambda_branch
///   kKernelSample (N < k):            minimal-support kernel witness,
///                                     f = 1 - (N+1) z^N (f = z when N = 0)
/// Rejects inconsistent (case, N) pairs.
ProofEigenvector eigenvector_from_proof(ProofCase kind, int k, int N, int branch = 1);

/// Applies the exact slant action of the partial-sum symbol to f and checks
/// S f - lambda f = 0, reducing modulo the defining quadratic.
bool proof_residual_is_zero(const ProofEigenvector& f);

// --- numerical path ----------------------------------------------------------

/// Dense non-Hermitian eigensolve with per-pair residual certification:
/// every eigenvalue's residual ||A v - lambda v|| (unit v) must come out
/// below 1e-9 * ||A||_F, else the call fails with a diagnostic. Output
/// ordering is deterministic.
SpectrumReport eigenvalues_numerical(const ComplexMatrix& M);

// --- adjoint consequence -------------------------------------------------------

struct AdjointCheck {
  VerdictStatus status = VerdictStatus::kConfirmed;
  bool charpoly_conjugate_exact = false;
  std::vector<std::complex<double>> spectrum;          // nonzero, certified
  std::vector<std::complex<double>> adjoint_spectrum;  // nonzero, certified
  std::string detail;
};

/// Checks that the adjoint block's nonzero point spectrum is the complex
/// conjugate of the block's own, first as an exact coefficient identity on
/// the characteristic polynomials and then on certified roots. This is the
/// finite-rank consequence of the empty-residual-spectrum remark: no nonzero
/// value outside the point spectrum can lie in the compression spectrum.
AdjointCheck adjoint_point_spectrum_check(const HarmonicSymbol& phi, int k);

// --- family sweeps -------------------------------------------------------------

struct SweepCell {
  int k = 0;
  int index = 0;  // N for the partial-sum family, i for the monomial family
  VerdictStatus status = VerdictStatus::kConfirmed;
  std::vector<std::complex<double>> closed_form;  // nonzero stated values
  std::vector<std::complex<double>> oracle;       // nonzero certified values
  std::string detail;
};

std::vector<SweepCell> partial_sum_sweep(int k, double tol = 1e-10);
std::vector<SweepCell> monomial_family_sweep(int k, double tol = 1e-10);
nlohmann::ordered_json sweep_cell_to_json(const SweepCell& cell, const std::string& index_name);

/// Multiset comparison after canonical sorting.
bool spectra_match(std::vector<std::complex<double>> a, std::vector<std::complex<double>> b,
                   double tol);

/// Full per-symbol report for the front-end: certified oracle values plus a
/// numerical cross-check at the given dimension, with agreement verdicts and
/// closed-form comparisons when the symbol matches one of the stated
/// families.
SpectrumReport spectrum_report(const HarmonicSymbol& phi, int k, int dim, double tol);

}  // namespace bergman
