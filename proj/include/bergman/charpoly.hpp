#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include "bergman/poly.hpp"

namespace bergman {

// Exact monic characteristic polynomial, coefficients low -> high.
struct CharPoly {
  std::vector<ExactComplex> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_monic() const { return !coeffs.empty() && coeffs.back() == ExactComplex(1); }
};

using ExactMatrix = std::vector<std::vector<ExactComplex>>;  // square, [row][col]

/// Materializes the D x D block of a monomial action ([m][n] = coefficient of
/// z^m in the image of z^n).
ExactMatrix monomial_block(const MonomialAction& action, int D);

ExactMatrix conjugate_transpose(const ExactMatrix& M);

/// Faddeev-LeVerrier over exact rational-complex arithmetic.
CharPoly char_poly_of(const ExactMatrix& M);

/// Characteristic polynomial of the D x D block of the action. D must close
/// the finite-rank block: every materialized nonzero column and every image
/// degree has to fit inside the window, otherwise the block would not be
/// invariant and its spectrum meaningless; such calls are rejected.
CharPoly char_poly_exact(const MonomialAction& action, int D);

// --- dense exact polynomial helpers (coefficients low -> high) ------------

using CVec = std::vector<ExactComplex>;

CVec poly_normalize(CVec p);                   // strip high zero coefficients
CVec poly_derivative(const CVec& p);
ExactComplex poly_eval(const CVec& p, const ExactComplex& x);
CVec poly_monic(const CVec& p);
std::pair<CVec, CVec> poly_divmod(const CVec& num, const CVec& den);
CVec poly_gcd(CVec a, CVec b);                 // monic gcd
/// Yun's squarefree decomposition of a monic polynomial: list of
/// (monic squarefree factor, multiplicity), product of factor^mult = input.
std::vector<std::pair<CVec, int>> squarefree_decomposition(const CVec& p);

// --- certified roots --------------------------------------------------------

struct CertifiedRoot {
  ExactComplex center;  // exact rational-complex approximation
  Rational radius;      // exactly one root lies in |z - center| <= radius
  int multiplicity = 1;

  std::complex<double> value() const { return to_complex(center); }
  double width() const { return 2.0 * to_double(radius); }
};

struct RootExtraction {
  int zero_multiplicity = 0;           // exact, from trailing coefficients
  std::vector<CertifiedRoot> nonzero;  // certified enclosures, all roots != 0
};

struct CertificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Working precision (bits) for the Newton refinement of root enclosures;
/// reads SLANT_HANKEL_PRECISION_BITS, defaults to 256.
unsigned certification_precision_bits();

/// All roots of a monic exact polynomial. The zero root's multiplicity is
/// read off the trailing coefficients exactly; the nonzero roots are split
/// into squarefree factors, polished by Newton iteration on the exact
/// polynomial at the working precision, and certified by an exact
/// Rouche-style disc bound (each enclosure is proven to contain exactly one
/// root, enclosures are pairwise disjoint, and per-factor coefficient
/// identities - root sum and product - are verified against the enclosures).
/// Every enclosure width is below 1e-20 or the call throws
/// CertificationError.
RootExtraction extract_roots(const CharPoly& p);

}  // namespace bergman
