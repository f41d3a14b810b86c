// Exact arithmetic helpers shared by every module.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace growthlab {

using Int = std::int64_t;
using BigInt = mpz_class;
using Rational = mpq_class;

/// Raised when a machine-word coordinate would overflow.
struct OverflowError : std::overflow_error {
  using std::overflow_error::overflow_error;
};

/// Raised when an enumeration would exceed its configured size budget.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised on malformed user input.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when a documented precondition of an operation does not hold.
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

/// Non-negative residue of a modulo m (m > 0).
inline Int mod_floor(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

inline Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Int to_int(const BigInt& z) {
  if (!z.fits_slong_p()) throw OverflowError("big integer does not fit in 64 bits");
  return z.get_si();
}

inline BigInt floor_of(const Rational& q) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline BigInt ceil_of(const Rational& q) {
  BigInt r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline Rational abs_of(const Rational& q) { return q < 0 ? Rational(-q) : q; }

/// Formats a rational as "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Parses "p", "p/q" or a finite decimal such as "0.9".
Rational parse_rational(const std::string& text);

/// q^k for an integer exponent k (negative allowed when q != 0).
Rational pow(const Rational& q, long k);

BigInt binomial(long n, long k);
BigInt factorial(long n);

/// Exact real number of the form base^(1/root), base > 0.
struct Radical {
  Rational base{1};
  int root = 1;

  double to_double() const;
  bool is_rational() const { return root == 1; }
  std::string to_string() const;
};

/// Three-way comparison of a rational x >= 0 against r.
int compare(const Rational& x, const Radical& r);
int compare(const Radical& a, const Radical& b);

}  // namespace growthlab
