#include "bergman/charpoly.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cstdlib>

namespace bergman {

ExactMatrix monomial_block(const MonomialAction& action, int D) {
  if (D < 1) throw std::invalid_argument("monomial_block: D must be >= 1");
  ExactMatrix M(D, std::vector<ExactComplex>(D));
  for (const auto& [n, col] : action.columns) {
    if (n >= D) continue;
    for (const auto& [m, v] : col.coeffs) {
      if (m >= D) throw std::invalid_argument("monomial_block: image degree outside the window");
      M[m][n] = v;
    }
  }
  return M;
}

ExactMatrix conjugate_transpose(const ExactMatrix& M) {
  int n = static_cast<int>(M.size());
  ExactMatrix A(n, std::vector<ExactComplex>(n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) A[c][r] = M[r][c].conj();
  return A;
}

CharPoly char_poly_of(const ExactMatrix& A) {
  int n = static_cast<int>(A.size());
  for (const auto& row : A)
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("char_poly_of: not square");
  CharPoly p;
  p.coeffs.assign(n + 1, ExactComplex());
  p.coeffs[n] = ExactComplex(1);
  if (n == 0) return p;

  // Faddeev-LeVerrier: M_1 = I; P = A M_j; c_{n-j} = -tr(P)/j; M_{j+1} = P + c_{n-j} I.
  ExactMatrix M(n, std::vector<ExactComplex>(n));
  for (int i = 0; i < n; ++i) M[i][i] = ExactComplex(1);
  for (int j = 1; j <= n; ++j) {
    ExactMatrix P(n, std::vector<ExactComplex>(n));
    for (int r = 0; r < n; ++r)
      for (int t = 0; t < n; ++t) {
        if (A[r][t].is_zero()) continue;
        for (int c = 0; c < n; ++c) {
          if (M[t][c].is_zero()) continue;
          P[r][c] += A[r][t] * M[t][c];
        }
      }
    ExactComplex tr;
    for (int r = 0; r < n; ++r) tr += P[r][r];
    ExactComplex cj = make_rational(-1, j) * tr;
    p.coeffs[n - j] = cj;
    if (j < n) {
      for (int r = 0; r < n; ++r) P[r][r] += cj;
      M = std::move(P);
    }
  }
  return p;
}

CharPoly char_poly_exact(const MonomialAction& action, int D) {
  if (D < 1) throw std::invalid_argument("char_poly_exact: D must be >= 1");
  for (const auto& [n, col] : action.columns) {
    if (col.is_zero()) continue;
    if (n >= D)
      throw std::invalid_argument("char_poly_exact: D is below the finite-rank block size");
    if (auto deg = col.degree(); deg && *deg >= D)
      throw std::invalid_argument("char_poly_exact: D is below the finite-rank block size");
  }
  return char_poly_of(monomial_block(action, D));
}

// --------------------------------------------------------------------------

CVec poly_normalize(CVec p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

CVec poly_derivative(const CVec& p) {
  CVec d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(make_rational(static_cast<long>(i)) * p[i]);
  return poly_normalize(std::move(d));
}

ExactComplex poly_eval(const CVec& p, const ExactComplex& x) {
  ExactComplex acc;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

CVec poly_monic(const CVec& p) {
  CVec q = poly_normalize(p);
  if (q.empty()) return q;
  ExactComplex inv = q.back().inverse();
  for (auto& c : q) c *= inv;
  return q;
}

std::pair<CVec, CVec> poly_divmod(const CVec& num, const CVec& den) {
  CVec r = poly_normalize(num);
  CVec d = poly_normalize(den);
  if (d.empty()) throw std::domain_error("poly_divmod: division by zero polynomial");
  if (r.size() < d.size()) return {CVec{}, r};
  CVec q(r.size() - d.size() + 1);
  ExactComplex lead_inv = d.back().inverse();
  for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
    ExactComplex f = r[d.size() - 1 + i] * lead_inv;
    if (f.is_zero()) continue;
    q[i] = f;
    for (std::size_t j = 0; j < d.size(); ++j) r[i + j] -= f * d[j];
  }
  return {poly_normalize(std::move(q)), poly_normalize(std::move(r))};
}

CVec poly_gcd(CVec a, CVec b) {
  a = poly_normalize(std::move(a));
  b = poly_normalize(std::move(b));
  while (!b.empty()) {
    auto [q, r] = poly_divmod(a, b);
    a = std::move(b);
    b = poly_monic(std::move(r));  // keep coefficients small-ish
  }
  return poly_monic(std::move(a));
}

std::vector<std::pair<CVec, int>> squarefree_decomposition(const CVec& p) {
  CVec f = poly_monic(p);
  if (f.size() <= 1) return {};
  std::vector<std::pair<CVec, int>> out;
  // Yun's algorithm.
  CVec fp = poly_derivative(f);
  CVec a = poly_gcd(f, fp);
  CVec b = poly_divmod(f, a).first;
  CVec c = poly_divmod(fp, a).first;
  CVec d = poly_normalize([&] {
    CVec bp = poly_derivative(b);
    CVec r = c;
    r.resize(std::max(r.size(), bp.size()));
    for (std::size_t i = 0; i < bp.size(); ++i) r[i] -= bp[i];
    return r;
  }());
  int i = 1;
  while (b.size() > 1) {
    CVec ai = poly_gcd(b, d);
    if (ai.size() > 1) out.emplace_back(ai, i);
    b = poly_divmod(b, ai).first;
    c = poly_divmod(d, ai).first;
    CVec bp = poly_derivative(b);
    d = c;
    d.resize(std::max(d.size(), bp.size()));
    for (std::size_t j = 0; j < bp.size(); ++j) d[j] -= bp[j];
    d = poly_normalize(std::move(d));
    ++i;
  }
  return out;
}

// --------------------------------------------------------------------------

unsigned certification_precision_bits() {
  if (const char* env = std::getenv("SLANT_HANKEL_PRECISION_BITS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 64 && v <= 16384) return static_cast<unsigned>(v);
  }
  return 256;
}

namespace {

Rational width_limit() {  // enclosure diameter must stay below 1e-20
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, 20);
  den *= 2;
  Rational r(1, den);
  r.canonicalize();
  return r;
}

std::vector<std::complex<double>> numeric_roots(const CVec& monic) {
  int d = static_cast<int>(monic.size()) - 1;
  if (d < 1) return {};
  if (d == 1) return {to_complex(-monic[0])};
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(d, d);
  for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) companion(i, d - 1) = -to_complex(monic[i]);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(companion, false);
  if (es.info() != Eigen::Success)
    throw CertificationError("numeric_roots: eigensolver failed to converge");
  std::vector<std::complex<double>> out(d);
  for (int i = 0; i < d; ++i) out[i] = es.eigenvalues()(i);
  return out;
}

/// Taylor coefficients of f at x (repeated synthetic division).
CVec taylor_shift(const CVec& f, const ExactComplex& x) {
  CVec c = f;
  int d = static_cast<int>(c.size()) - 1;
  for (int i = 0; i <= d; ++i)
    for (int j = d - 1; j >= i; --j) c[j] += x * c[j + 1];
  return c;
}

/// Exact Rouche-style disc test around x. On success returns a radius r such
/// that f has exactly one root in |z - x| <= r: on the circle |h| = r the
/// linear part t0 + t1 h dominates the higher Taylor tail, so f and the
/// linear part have equally many zeros inside, namely one.
bool rouche_disc(const CVec& f, const ExactComplex& x, Rational& radius_out) {
  CVec t = taylor_shift(f, x);
  const ExactComplex& t0 = t[0];
  const ExactComplex& t1 = t[1];
  if (t1.is_zero()) return false;
  if (t0.is_zero()) {  // x is exactly a (simple) root
    radius_out = 0;
    return true;
  }
  Rational r = 4 * (t0 * t1.inverse()).l1();
  Rational lhs = t0.l1();
  Rational rp = r;
  for (std::size_t i = 2; i < t.size(); ++i) {
    rp *= r;
    lhs += t[i].l1() * rp;
  }
  Rational rhs = t1.linf() * r;
  if (lhs >= rhs) return false;
  radius_out = r;
  return true;
}

Rational pow2_inv(unsigned bits) {  // exact 2^-bits
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, bits);
  Rational r(1, den);
  r.canonicalize();
  return r;
}

/// Best rational approximation with bounded denominator (continued
/// fractions). Used to snap Newton iterates onto exact rational roots, which
/// then certify with zero-width enclosures.
Rational rational_reconstruct(const Rational& x, const mpz_class& max_den) {
  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  mpz_class num = x.get_num(), den = x.get_den();
  while (den != 0) {
    mpz_class a, r;
    mpz_fdiv_qr(a.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    mpz_class p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    num = den;
    den = r;
  }
  if (q1 == 0) return x;
  Rational out(p1, q1);
  out.canonicalize();
  return out;
}

CertifiedRoot certify_root(const CVec& factor, const CVec& deriv, std::complex<double> seed,
                           unsigned bits) {
  // doubles are dyadic rationals; mpq_class converts them exactly.
  ExactComplex x(Rational(seed.real()), Rational(seed.imag()));
  const Rational limit = width_limit();
  const Rational tiny_step = pow2_inv(40);
  for (int iter = 0; iter < 24; ++iter) {
    ExactComplex fx = poly_eval(factor, x);
    ExactComplex fpx = poly_eval(deriv, x);
    if (fpx.is_zero()) {
      x += ExactComplex(pow2_inv(48), Rational(0));
      continue;
    }
    ExactComplex step = fx / fpx;
    bool tiny = step.l1() < tiny_step;
    x = dyadic_round(x - step, bits + 64);
    if (tiny) {
      // Exact rational roots are common here (finite-rank blocks with small
      // coefficients); land on them exactly when possible.
      const mpz_class max_den = mpz_class(1) << 48;
      ExactComplex snapped(rational_reconstruct(x.re, max_den),
                           rational_reconstruct(x.im, max_den));
      if (snapped != x && poly_eval(factor, snapped).is_zero()) x = snapped;
    }
    if (tiny || fx.is_zero()) {
      Rational radius;
      if (rouche_disc(factor, x, radius) && 2 * radius < limit) {
        CertifiedRoot root;
        root.center = x;
        root.radius = radius;
        return root;
      }
    }
  }
  throw CertificationError("certify_root: Newton refinement did not certify");
}

void check_factor_consistency(const CVec& factor, const std::vector<CertifiedRoot>& roots) {
  int d = static_cast<int>(factor.size()) - 1;
  // Sum of roots must land within the summed enclosures of -f_{d-1}.
  ExactComplex sum;
  Rational rsum = 0;
  for (const auto& r : roots) {
    sum += r.center;
    rsum += r.radius;
  }
  ExactComplex sum_exact = -factor[d - 1];
  if ((sum - sum_exact).norm2() > rsum * rsum)
    throw CertificationError("extract_roots: enclosure sum check failed");
  // Product of roots versus (-1)^d f_0, with a rigorous first-order bound.
  ExactComplex prod(1);
  for (const auto& r : roots) prod *= r.center;
  ExactComplex prod_exact = (d % 2 == 0) ? factor[0] : -factor[0];
  Rational bound = 0;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    Rational term = roots[i].radius;
    for (std::size_t j = 0; j < roots.size(); ++j)
      if (j != i) term *= roots[j].center.l1() + roots[j].radius;
    bound += term;
  }
  if ((prod - prod_exact).norm2() > bound * bound)
    throw CertificationError("extract_roots: enclosure product check failed");
}

std::vector<CertifiedRoot> certify_factor(const CVec& factor, int multiplicity, unsigned bits) {
  CVec deriv = poly_derivative(factor);
  std::vector<CertifiedRoot> roots;
  for (const auto& seed : numeric_roots(factor)) {
    CertifiedRoot r = certify_root(factor, deriv, seed, bits);
    r.multiplicity = multiplicity;
    roots.push_back(std::move(r));
  }
  // Pairwise disjoint enclosures guarantee the seeds did not collapse onto a
  // shared root.
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      Rational rr = roots[i].radius + roots[j].radius;
      if ((roots[i].center - roots[j].center).norm2() <= rr * rr)
        throw CertificationError("extract_roots: overlapping root enclosures");
    }
  check_factor_consistency(factor, roots);
  return roots;
}

}  // namespace

RootExtraction extract_roots(const CharPoly& p) {
  if (!p.is_monic()) throw std::invalid_argument("extract_roots: polynomial must be monic");
  RootExtraction out;
  std::size_t low = 0;
  while (low < p.coeffs.size() && p.coeffs[low].is_zero()) ++low;
  out.zero_multiplicity = static_cast<int>(low);
  CVec q(p.coeffs.begin() + static_cast<long>(low), p.coeffs.end());
  if (q.size() <= 1) return out;

  unsigned bits = certification_precision_bits();
  for (const auto& [factor, mult] : squarefree_decomposition(q)) {
    std::exception_ptr last;
    for (unsigned attempt = 0, b = bits; attempt < 3; ++attempt, b *= 2) {
      try {
        auto roots = certify_factor(factor, mult, b);
        for (auto& r : roots) out.nonzero.push_back(std::move(r));
        last = nullptr;
        break;
      } catch (const CertificationError&) {
        last = std::current_exception();
      }
    }
    if (last) std::rethrow_exception(last);
  }
  std::sort(out.nonzero.begin(), out.nonzero.end(), [](const CertifiedRoot& a, const CertifiedRoot& b) {
    if (a.center.re != b.center.re) return a.center.re > b.center.re;
    return a.center.im > b.center.im;
  });
  return out;
}

}  // namespace bergman
