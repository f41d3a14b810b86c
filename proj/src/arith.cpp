#include "growthlab/arith.hpp"

#include <cctype>
#include <cmath>

namespace growthlab {

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw ParseError("empty rational");
  try {
    auto dot = s.find('.');
    if (dot != std::string::npos) {
      std::string whole = s.substr(0, dot);
      std::string frac = s.substr(dot + 1);
      if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("bad decimal '" + text + "'");
      bool negative = !whole.empty() && whole[0] == '-';
      if (whole == "-" || whole == "+" || whole.empty()) whole += "0";
      BigInt w(whole[0] == '+' ? whole.substr(1) : whole);
      BigInt f(frac);
      BigInt scale;
      mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
      Rational r(abs(w) * scale + f, scale);
      r.canonicalize();
      return negative ? Rational(-r) : r;
    }
    Rational r;
    if (s[0] == '+') s.erase(0, 1);
    if (r.set_str(s, 10) != 0) throw ParseError("bad rational '" + text + "'");
    if (r.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw ParseError("bad rational '" + text + "'");
  }
}

Rational pow(const Rational& q, long k) {
  if (k < 0) {
    if (q == 0) throw std::domain_error("zero to a negative power");
    return pow(Rational(1) / q, -k);
  }
  BigInt n, d;
  mpz_pow_ui(n.get_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(k));
  mpz_pow_ui(d.get_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(k));
  Rational r(n, d);
  r.canonicalize();
  return r;
}

BigInt binomial(long n, long k) {
  if (k < 0) return 0;
  if (n >= 0) {
    if (k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
  }
  BigInt r;
  mpz_bin_ui(r.get_mpz_t(), BigInt(n).get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

BigInt factorial(long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

double Radical::to_double() const {
  return std::pow(base.get_d(), 1.0 / root);
}

std::string Radical::to_string() const {
  if (root == 1) return growthlab::to_string(base);
  return growthlab::to_string(base) + "^(1/" + std::to_string(root) + ")";
}

int compare(const Rational& x, const Radical& r) {
  Rational lhs = pow(x, r.root);
  return cmp(lhs, r.base) < 0 ? -1 : (cmp(lhs, r.base) > 0 ? 1 : 0);
}

int compare(const Radical& a, const Radical& b) {
  Rational lhs = pow(a.base, b.root);
  Rational rhs = pow(b.base, a.root);
  int c = cmp(lhs, rhs);
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

}  // namespace growthlab
