#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

namespace psr {

/// Exact rational number.
///
/// Values whose canonical numerator and denominator fit in 63 bits are kept
/// inline and never touch the heap; anything larger spills into a shared GMP
/// rational. Every value is held in canonical form (gcd-reduced, positive
/// denominator, demoted to the inline form whenever it fits), so equal values
/// always have identical representations and comparisons are exact.
class Rational {
 public:
  Rational() : n_(0), d_(1) {}
  Rational(long long n) : n_(n), d_(1) {}  // NOLINT: implicit conversion intended
  Rational(int n) : n_(n), d_(1) {}        // NOLINT
  Rational(long long num, long long den);
  explicit Rational(const mpq_class& q) { adopt(mpq_class(q)); }

  /// Parses "42", "-7/3" or "2.5" (decimal converted exactly).
  static Rational from_string(std::string_view text);
  /// Exact value of the binary floating-point argument.
  static Rational from_double(double x);

  bool is_zero() const { return big_ ? false : n_ == 0; }
  bool is_negative() const { return sign() < 0; }
  bool is_integer() const;
  int sign() const;
  Rational abs() const;

  Rational operator-() const;
  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;  // throws std::domain_error on /0
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  bool operator==(const Rational& o) const;
  std::strong_ordering operator<=>(const Rational& o) const;

  /// Canonical text form: "n" for integers, "n/d" otherwise.
  std::string str() const;
  double to_double() const;
  mpq_class to_mpq() const;

 private:
  void adopt(mpq_class q);  // canonicalize, demote if possible
  static Rational make(__int128 num, __int128 den);

  long long n_, d_;  // canonical; valid iff !big_
  std::shared_ptr<const mpq_class> big_;

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace psr
