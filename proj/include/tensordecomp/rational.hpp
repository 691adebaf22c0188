#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace tensordecomp {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Raised when an exact computation produces a value that the algebra says
/// is impossible (a non-integral multiplicity, a failed stability check).
/// Always indicates a bug, never bad input.
class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Returns the numerator of an integral rational; throws IntegrityError otherwise.
inline BigInt require_integer(const Rational& q, const std::string& what) {
  if (!is_integer(q)) {
    throw IntegrityError(what + ": expected an integer, got " + q.get_str());
  }
  return q.get_num();
}

inline BigInt require_nonnegative_integer(const Rational& q, const std::string& what) {
  BigInt v = require_integer(q, what);
  if (v < 0) throw IntegrityError(what + ": expected a nonnegative integer, got " + v.get_str());
  return v;
}

inline BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

/// Parses "p/q" or "p"; the result is canonicalized.
inline Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0) {
    throw std::invalid_argument("not a rational number: '" + text + "'");
  }
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

}  // namespace tensordecomp
