#pragma once

#include <array>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "painleve/poly.hpp"

namespace painleve {

class Substitution;

/// Exact rational function num/den over Q(sqrt2).
///
/// Canonical scale: the leading coefficient of `den` (global lex order) is 1
/// and num/den share no monomial factor. Common polynomial factors are
/// cancelled opportunistically (exact division by known candidate factors),
/// never by a full GCD, so structural equality is not semantic equality:
/// use ratfn_equal.
class RatFn {
 public:
  RatFn() : den_(1) {}
  RatFn(long c) : num_(c), den_(1) {}               // NOLINT(google-explicit-constructor)
  RatFn(const ExactNum& c) : num_(c), den_(1) {}    // NOLINT(google-explicit-constructor)
  RatFn(Poly num) : num_(std::move(num)), den_(1) {}  // NOLINT(google-explicit-constructor)
  /// Throws DivisionByZero when `den` is zero.
  RatFn(Poly num, Poly den);

  static RatFn symbol(Symbol s) { return RatFn(Poly::variable(s)); }

  const Poly& num() const noexcept { return num_; }
  const Poly& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.is_constant(); }
  bool depends_on(Symbol s) const noexcept { return num_.depends_on(s) || den_.depends_on(s); }
  /// Value when the function is a constant.
  std::optional<ExactNum> constant_value() const;

  RatFn partial(Symbol s) const;
  /// Simultaneous substitution; unbound symbols map to themselves. Throws
  /// DenominatorVanishes when the composite denominator is zero.
  RatFn substitute(const Substitution& sigma) const;
  RatFn pow(int n) const;
  RatFn inverse() const;

  RatFn& operator+=(const RatFn& o) { return *this = *this + o; }
  RatFn& operator-=(const RatFn& o) { return *this = *this - o; }
  RatFn& operator*=(const RatFn& o) { return *this = *this * o; }
  RatFn& operator/=(const RatFn& o) { return *this = *this / o; }

  friend RatFn operator+(const RatFn& l, const RatFn& r);
  friend RatFn operator-(const RatFn& l, const RatFn& r);
  friend RatFn operator*(const RatFn& l, const RatFn& r);
  friend RatFn operator/(const RatFn& l, const RatFn& r);
  RatFn operator-() const;

  /// Structural identity of the canonical representation.
  bool identical(const RatFn& o) const { return num_ == o.num_ && den_ == o.den_; }

  /// Builds num/den and cancels against the given candidate factors.
  static RatFn reduced(Poly num, Poly den, std::span<const Poly> candidates);

 private:
  struct Raw {};
  RatFn(Raw, Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {}

  Poly num_;
  Poly den_;
};

/// A simultaneous assignment Symbol -> RatFn. Unbound symbols are fixed.
class Substitution {
 public:
  Substitution() = default;
  Substitution(std::initializer_list<std::pair<Symbol, RatFn>> bindings);

  Substitution& bind(Symbol s, RatFn value);
  const RatFn* find(Symbol s) const noexcept;
  bool empty() const noexcept;
  /// Bound symbols in registry order.
  std::vector<Symbol> symbols() const;

  /// Composition: the result maps s to this(s) with `inner` applied on top,
  /// i.e. (this then inner): f.substitute(result) == f.substitute(*this).substitute(inner).
  Substitution then(const Substitution& inner) const;

 private:
  std::array<std::optional<RatFn>, kSymbolCount> values_;
};

/// Semantic equality: f.num*g.den - g.num*f.den expands to zero. A modular
/// evaluation at random points short-cuts the unequal case.
bool ratfn_equal(const RatFn& f, const RatFn& g);
/// Reseeds the pre-check stream in every thread (outcomes never depend on it).
void set_equality_seed(std::uint64_t seed);

/// Value of f at a random residue point, if defined; used by the pre-check
/// and by tests.
std::optional<std::uint64_t> eval_mod(const RatFn& f, const ModPoint& point);

}  // namespace painleve
