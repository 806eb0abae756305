#include "bergman/rational.hpp"

#include <cctype>

namespace bergman {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::domain_error("make_rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Rational pow10(long e) {
  mpz_class z;
  mpz_ui_pow_ui(z.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
  Rational q(z);
  if (e < 0) q = 1 / q;
  return q;
}

}  // namespace

Rational rational_from_string(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("rational_from_string: empty string");

  const auto bad = [&]() {
    return std::invalid_argument("rational_from_string: cannot parse \"" + text + "\"");
  };

  if (auto slash = s.find('/'); slash != std::string::npos) {
    auto parse_mpz = [&](std::string part) {
      bool neg = false;
      if (!part.empty() && (part[0] == '+' || part[0] == '-')) {
        neg = part[0] == '-';
        part = part.substr(1);
      }
      if (!all_digits(part)) throw bad();
      mpz_class z(part, 10);
      return neg ? mpz_class(-z) : z;
    };
    mpz_class n = parse_mpz(s.substr(0, slash));
    mpz_class d = parse_mpz(s.substr(slash + 1));
    if (d == 0) throw bad();
    Rational q(n, d);
    q.canonicalize();
    return q;
  }

  int sign = 1;
  std::size_t pos = 0;
  if (s[0] == '+' || s[0] == '-') {
    sign = s[0] == '-' ? -1 : 1;
    pos = 1;
  }
  std::string int_part, frac_part, exp_part;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) int_part += s[pos++];
  if (pos < s.size() && s[pos] == '.') {
    ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) frac_part += s[pos++];
  }
  long exp10 = 0;
  if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
    ++pos;
    std::string es;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) es += s[pos++];
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) es += s[pos++];
    if (es.empty() || (es.size() == 1 && !std::isdigit(static_cast<unsigned char>(es[0])))) throw bad();
    exp10 = std::stol(es);
  }
  if (pos != s.size() || (int_part.empty() && frac_part.empty())) throw bad();

  mpz_class digits((int_part.empty() ? "0" : int_part) + frac_part, 10);
  Rational q(digits);
  q *= pow10(exp10 - static_cast<long>(frac_part.size()));
  if (sign < 0) q = -q;
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

Rational dyadic_round(const Rational& q, unsigned bits) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, bits);
  Rational s = q * Rational(scale);
  // n = floor(num/den + 1/2) = floor((2 num + den) / (2 den))
  mpz_class num = 2 * s.get_num() + s.get_den();
  mpz_class den = 2 * s.get_den();
  mpz_class n;
  mpz_fdiv_q(n.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  Rational out(n, scale);
  out.canonicalize();
  return out;
}

Rational rational_pow(const Rational& q, unsigned e) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), q.get_num().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), q.get_den().get_mpz_t(), e);
  Rational out(num, den);
  out.canonicalize();
  return out;
}

std::string to_string(const ExactComplex& z) {
  return rational_to_string(z.re) + (z.im >= 0 ? "+" : "") + rational_to_string(z.im) + "i";
}

}  // namespace bergman
