#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "painleve/exact_num.hpp"
#include "painleve/symbol.hpp"

namespace painleve {

/// A power product over the symbol registry. Ordered lexicographically in
/// registry order.
class Monomial {
 public:
  using Exponents = std::array<std::uint16_t, kSymbolCount>;

  Monomial() = default;
  static Monomial of(Symbol s, unsigned exponent = 1) {
    Monomial m;
    m.exps_[s.index()] = static_cast<std::uint16_t>(exponent);
    return m;
  }

  unsigned operator[](Symbol s) const noexcept { return exps_[s.index()]; }
  const Exponents& exponents() const noexcept { return exps_; }
  void set(Symbol s, unsigned e) noexcept { exps_[s.index()] = static_cast<std::uint16_t>(e); }

  bool is_one() const noexcept;
  unsigned total_degree() const noexcept;
  bool divides(const Monomial& other) const noexcept;

  Monomial operator*(const Monomial& o) const noexcept;
  /// Requires divides(*this, o) in reverse, i.e. `o` divides `*this`.
  Monomial operator/(const Monomial& o) const noexcept;
  Monomial gcd(const Monomial& o) const noexcept;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& l, const Monomial& r) noexcept {
    return l.exps_ <=> r.exps_;
  }

 private:
  Exponents exps_{};
};

struct Term {
  Monomial mono;
  ExactNum coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Evaluation point for the modular pre-check: one residue per symbol modulo
/// a fixed prime in which 2 is a square.
struct ModPoint {
  std::array<std::uint64_t, kSymbolCount> values{};

  static constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;
  static std::uint64_t root2();
};

/// Sparse multivariate polynomial with ExactNum coefficients. Terms are kept
/// in strictly decreasing monomial order with no zero coefficients, so equal
/// polynomials are structurally identical.
class Poly {
 public:
  Poly() = default;
  Poly(const ExactNum& c);  // NOLINT(google-explicit-constructor)
  Poly(long c) : Poly(ExactNum(c)) {}  // NOLINT(google-explicit-constructor)
  Poly(const ExactNum& c, const Monomial& m);
  static Poly variable(Symbol s);
  /// Builds from arbitrary terms: sorts, merges duplicates, drops zeros.
  static Poly from_terms(std::vector<Term> terms);

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  std::size_t size() const noexcept { return terms_.size(); }
  std::span<const Term> terms() const noexcept { return terms_; }
  const Term& leading() const { return terms_.front(); }
  /// Constant term value (zero when absent).
  ExactNum constant_term() const;

  unsigned degree(Symbol s) const noexcept;
  unsigned min_degree(Symbol s) const noexcept;
  bool depends_on(Symbol s) const noexcept;
  /// Greatest common monomial divisor of all terms (1 for zero).
  Monomial monomial_content() const noexcept;

  /// Coefficients as a polynomial in `s`: result[k] multiplies s^k and no
  /// longer contains `s`.
  std::vector<Poly> coefficients_in(Symbol s) const;

  Poly partial(Symbol s) const;
  Poly pow(unsigned n) const;
  Poly scaled(const ExactNum& c) const;
  Poly times(const Monomial& m) const;
  /// Divides every term by `m`; `m` must divide every monomial.
  Poly divided_by(const Monomial& m) const;

  /// Quotient when `divisor` divides this exactly, otherwise empty.
  std::optional<Poly> divide_exact(const Poly& divisor) const;

  /// Value modulo ModPoint::kPrime, empty when a coefficient denominator
  /// vanishes mod p.
  std::optional<std::uint64_t> eval_mod(const ModPoint& point) const;
  double eval(std::span<const double, kSymbolCount> point) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator+(const Poly& l, const Poly& r);
  friend Poly operator-(const Poly& l, const Poly& r);
  friend Poly operator*(const Poly& l, const Poly& r);
  Poly operator-() const;

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  std::vector<Term> terms_;
};

}  // namespace painleve
