#pragma once

#include <complex>
#include <string>
#include <vector>

#include "bergman/poly.hpp"
#include "bergman/symbol.hpp"

#include <json.hpp>

namespace bergman {

// Dense double-precision complex matrix in the orthonormal basis
// {sqrt(n+1) z^n}. Row-major storage.
struct ComplexMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::complex<double>> entries;

  ComplexMatrix() = default;
  ComplexMatrix(int r, int c) : rows(r), cols(c), entries(static_cast<std::size_t>(r) * c) {}

  std::complex<double>& at(int r, int c) { return entries[static_cast<std::size_t>(r) * cols + c]; }
  const std::complex<double>& at(int r, int c) const {
    return entries[static_cast<std::size_t>(r) * cols + c];
  }

  bool all_finite() const;
};

// Builders. Entry values are produced by evaluating exact rationals and
// square roots at double precision in one step; no float accumulation
// happens inside the entry formulas. The default builders parallelize the
// row loop with OpenMP; the _serial variants are the reference
// implementations kept for testing and benchmarking, and produce
// bit-identical output.

/// D x D little Hankel matrix: entry (m,n) = sqrt(m+1) sqrt(n+1)/(m+n+1) * a_{m+n}.
ComplexMatrix hankel_matrix(const HarmonicSymbol& phi, int D);
ComplexMatrix hankel_matrix_serial(const HarmonicSymbol& phi, int D);

/// D_out x (k(D_out-1)+1) slant map: entry (n, kn) = sqrt((kn+1)/(n+1)), rest zero.
ComplexMatrix w_matrix(int k, int D_out);

/// D x D slant little Hankel matrix via the closed entry formula:
/// entry (m,n) = sqrt(n+1) (km+1) / (sqrt(m+1) (n+km+1)) * a_{n+km}.
ComplexMatrix slant_matrix(const HarmonicSymbol& phi, int k, int D);
ComplexMatrix slant_matrix_serial(const HarmonicSymbol& phi, int k, int D);

/// w_matrix(k, D) * hankel_matrix(phi, k(D-1)+1), first D columns. The inner
/// dimension k(D-1)+1 covers every monomial the slant map can pull into the
/// window, so this agrees with slant_matrix entrywise (to 1e-12).
ComplexMatrix slant_matrix_composed(const HarmonicSymbol& phi, int k, int D);

/// Change of basis e_n = sqrt(n+1) z^n applied to an exact monomial action:
/// entry (m,n) = sqrt((n+1)/(m+1)) * coefficient of z^m in column n.
/// Rejects D-1 > max_input_degree.
ComplexMatrix from_monomial_action(const MonomialAction& action, int D);

/// Conjugate transpose.
ComplexMatrix adjoint(const ComplexMatrix& M);

ComplexMatrix multiply(const ComplexMatrix& A, const ComplexMatrix& B);

// Dumps. CSV: one row per line, entries "re+imi" with 17 significant digits,
// comma separated. JSON mirrors the struct fields with entries as [re, im]
// pairs in row-major order.
std::string to_csv(const ComplexMatrix& M);
nlohmann::ordered_json to_json(const ComplexMatrix& M);
std::string format_complex_csv(const std::complex<double>& z);

// Streaming singular-value scan for w_matrix. Every row of w_matrix holds a
// single nonzero entry in its own column, so the rows are orthogonal and the
// singular values are exactly the row 2-norms. The scan walks all entries of
// row n (without materializing the dense matrix), accumulates the row norm,
// and verifies the one-nonzero-per-row / distinct-column structure; it
// throws if the structure check fails. Values are returned in row order.
std::vector<double> w_row_singular_values(int k, int D_out);
std::vector<double> w_row_singular_values_serial(int k, int D_out);

}  // namespace bergman
