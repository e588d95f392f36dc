#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

namespace painleve {

/// An element a + b*sqrt(2) of Q(sqrt 2) with arbitrary-precision rational
/// parts. Both parts are kept in canonical GMP form.
class ExactNum {
 public:
  ExactNum() = default;
  ExactNum(long value) : a_(value) {}  // NOLINT(google-explicit-constructor)
  explicit ExactNum(mpq_class a, mpq_class b = 0);

  static ExactNum rational(long num, long den);
  static ExactNum sqrt2();

  const mpq_class& rational_part() const noexcept { return a_; }
  const mpq_class& sqrt2_part() const noexcept { return b_; }

  bool is_zero() const noexcept { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_one() const noexcept { return sgn(b_) == 0 && a_ == 1; }
  bool is_rational() const noexcept { return sgn(b_) == 0; }

  /// Throws DivisionByZero for zero.
  ExactNum inverse() const;
  double to_double() const;

  /// Image under Q(sqrt2) -> F_p with sqrt2 -> `root2`. Empty when a
  /// denominator is divisible by p.
  std::optional<std::uint64_t> mod_prime(std::uint64_t prime, std::uint64_t root2) const;

  ExactNum& operator+=(const ExactNum& o);
  ExactNum& operator-=(const ExactNum& o);
  ExactNum& operator*=(const ExactNum& o);
  ExactNum& operator/=(const ExactNum& o) { return *this *= o.inverse(); }

  friend ExactNum operator+(ExactNum l, const ExactNum& r) { return l += r; }
  friend ExactNum operator-(ExactNum l, const ExactNum& r) { return l -= r; }
  friend ExactNum operator*(ExactNum l, const ExactNum& r) { return l *= r; }
  friend ExactNum operator/(ExactNum l, const ExactNum& r) { return l /= r; }
  ExactNum operator-() const;

  friend bool operator==(const ExactNum& l, const ExactNum& r) { return l.a_ == r.a_ && l.b_ == r.b_; }

  /// Plain-text form accepted by the expression parser, e.g. "3/2",
  /// "-sqrt2", "(1 + 1/2*sqrt2)".
  std::string to_string() const;

 private:
  mpq_class a_;
  mpq_class b_;
};

}  // namespace painleve
