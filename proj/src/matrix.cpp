#include "bergman/matrix.hpp"

#include <cmath>
#include <cstdio>

namespace bergman {

namespace {

void require_order(int k) {
  if (k < 2) throw std::invalid_argument("slant order k must be >= 2");
}

void require_dim(int D) {
  if (D < 1) throw std::invalid_argument("matrix dimension must be >= 1");
}

std::complex<double> hankel_entry(const HarmonicSymbol& phi, int m, int n) {
  auto it = phi.anti.find(m + n);
  if (it == phi.anti.end()) return {};
  double factor = std::sqrt(m + 1.0) * std::sqrt(n + 1.0) / (m + n + 1.0);
  return factor * to_complex(it->second);
}

std::complex<double> slant_entry(const HarmonicSymbol& phi, int k, int m, int n) {
  auto it = phi.anti.find(n + k * m);
  if (it == phi.anti.end()) return {};
  double factor = std::sqrt((n + 1.0) / (m + 1.0)) * (static_cast<double>(k) * m + 1.0) /
                  (n + static_cast<double>(k) * m + 1.0);
  return factor * to_complex(it->second);
}

double w_entry(int k, int n, int c) {
  if (c != static_cast<long>(k) * n) return 0.0;
  return std::sqrt((static_cast<double>(k) * n + 1.0) / (n + 1.0));
}

}  // namespace

bool ComplexMatrix::all_finite() const {
  for (const auto& z : entries)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

ComplexMatrix hankel_matrix_serial(const HarmonicSymbol& phi, int D) {
  require_dim(D);
  ComplexMatrix M(D, D);
  for (int m = 0; m < D; ++m)
    for (int n = 0; n < D; ++n) M.at(m, n) = hankel_entry(phi, m, n);
  return M;
}

ComplexMatrix hankel_matrix(const HarmonicSymbol& phi, int D) {
  require_dim(D);
  ComplexMatrix M(D, D);
#pragma omp parallel for schedule(static)
  for (int m = 0; m < D; ++m)
    for (int n = 0; n < D; ++n) M.at(m, n) = hankel_entry(phi, m, n);
  return M;
}

ComplexMatrix w_matrix(int k, int D_out) {
  require_order(k);
  require_dim(D_out);
  ComplexMatrix M(D_out, k * (D_out - 1) + 1);
  for (int n = 0; n < D_out; ++n) M.at(n, k * n) = w_entry(k, n, k * n);
  return M;
}

ComplexMatrix slant_matrix_serial(const HarmonicSymbol& phi, int k, int D) {
  require_order(k);
  require_dim(D);
  ComplexMatrix M(D, D);
  for (int m = 0; m < D; ++m)
    for (int n = 0; n < D; ++n) M.at(m, n) = slant_entry(phi, k, m, n);
  return M;
}

ComplexMatrix slant_matrix(const HarmonicSymbol& phi, int k, int D) {
  require_order(k);
  require_dim(D);
  ComplexMatrix M(D, D);
#pragma omp parallel for schedule(static)
  for (int m = 0; m < D; ++m)
    for (int n = 0; n < D; ++n) M.at(m, n) = slant_entry(phi, k, m, n);
  return M;
}

ComplexMatrix slant_matrix_composed(const HarmonicSymbol& phi, int k, int D) {
  require_order(k);
  require_dim(D);
  int inner = k * (D - 1) + 1;
  ComplexMatrix W = w_matrix(k, D);
  ComplexMatrix H = hankel_matrix(phi, inner);
  ComplexMatrix P = multiply(W, H);
  ComplexMatrix M(D, D);
  for (int m = 0; m < D; ++m)
    for (int n = 0; n < D; ++n) M.at(m, n) = P.at(m, n);
  return M;
}

ComplexMatrix from_monomial_action(const MonomialAction& action, int D) {
  require_dim(D);
  if (D - 1 > action.max_input_degree)
    throw std::invalid_argument("from_monomial_action: D exceeds the materialized columns");
  ComplexMatrix M(D, D);
  for (int n = 0; n < D; ++n) {
    const AnalyticPoly& col = action.column(n);
    for (const auto& [m, v] : col.coeffs) {
      if (m >= D) throw std::invalid_argument("from_monomial_action: column reaches beyond D");
      M.at(m, n) = std::sqrt((n + 1.0) / (m + 1.0)) * to_complex(v);
    }
  }
  return M;
}

ComplexMatrix adjoint(const ComplexMatrix& M) {
  ComplexMatrix A(M.cols, M.rows);
  for (int r = 0; r < M.rows; ++r)
    for (int c = 0; c < M.cols; ++c) A.at(c, r) = std::conj(M.at(r, c));
  return A;
}

ComplexMatrix multiply(const ComplexMatrix& A, const ComplexMatrix& B) {
  if (A.cols != B.rows) throw std::invalid_argument("multiply: dimension mismatch");
  ComplexMatrix C(A.rows, B.cols);
#pragma omp parallel for schedule(static)
  for (int r = 0; r < A.rows; ++r)
    for (int t = 0; t < A.cols; ++t) {
      std::complex<double> a = A.at(r, t);
      if (a == std::complex<double>{}) continue;
      for (int c = 0; c < B.cols; ++c) C.at(r, c) += a * B.at(t, c);
    }
  return C;
}

std::string format_complex_csv(const std::complex<double>& z) {
  char buf[80];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
  return buf;
}

std::string to_csv(const ComplexMatrix& M) {
  std::string out;
  for (int r = 0; r < M.rows; ++r) {
    for (int c = 0; c < M.cols; ++c) {
      if (c) out += ',';
      out += format_complex_csv(M.at(r, c));
    }
    out += '\n';
  }
  return out;
}

nlohmann::ordered_json to_json(const ComplexMatrix& M) {
  nlohmann::ordered_json j;
  j["rows"] = M.rows;
  j["cols"] = M.cols;
  auto entries = nlohmann::ordered_json::array();
  for (const auto& z : M.entries) entries.push_back({z.real(), z.imag()});
  j["entries"] = std::move(entries);
  return j;
}

namespace {

// Shared by the serial and parallel scans: row norm plus structure check for
// one row of w_matrix(k, D_out).
double scan_w_row(int k, int cols, int n) {
  double norm2 = 0.0;
  long nonzero_col = -1;
  int nonzero_count = 0;
  for (int c = 0; c < cols; ++c) {
    double v = w_entry(k, n, c);
    if (v != 0.0) {
      ++nonzero_count;
      nonzero_col = c;
      norm2 += v * v;
    }
  }
  if (nonzero_count != 1 || nonzero_col != static_cast<long>(k) * n)
    throw std::runtime_error("w_row_singular_values: unexpected row structure");
  return std::sqrt(norm2);
}

}  // namespace

std::vector<double> w_row_singular_values_serial(int k, int D_out) {
  require_order(k);
  require_dim(D_out);
  int cols = k * (D_out - 1) + 1;
  std::vector<double> sv(D_out);
  for (int n = 0; n < D_out; ++n) sv[n] = scan_w_row(k, cols, n);
  return sv;
}

std::vector<double> w_row_singular_values(int k, int D_out) {
  require_order(k);
  require_dim(D_out);
  int cols = k * (D_out - 1) + 1;
  std::vector<double> sv(D_out);
  bool failed = false;
#pragma omp parallel for schedule(static)
  for (int n = 0; n < D_out; ++n) {
    try {
      sv[n] = scan_w_row(k, cols, n);
    } catch (const std::exception&) {
#pragma omp atomic write
      failed = true;
    }
  }
  if (failed) throw std::runtime_error("w_row_singular_values: unexpected row structure");
  // Rows occupy pairwise distinct columns (kn is injective in n), so the row
  // norms are exactly the singular values.
  return sv;
}

}  // namespace bergman
