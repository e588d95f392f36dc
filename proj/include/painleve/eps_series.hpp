#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "painleve/ratfn.hpp"

namespace painleve {

/// Truncated Laurent series sum_{n=v}^{N} c_n eps^n with eps-free RatFn
/// coefficients. Orders up to and including N are known exactly; the rest
/// is O(eps^(N+1)). Arithmetic propagates truncation honestly, so a product
/// with a pole loses orders at the top.
class EpsSeries {
 public:
  /// Lowest order any series may reach.
  static constexpr int kValuationFloor = -12;
  /// Truncation used for exactly known operands (e.g. the constant 1).
  static constexpr int kExact = 1 << 20;

  /// The zero series known through order `truncation`.
  explicit EpsSeries(int truncation = 0) : start_(0), trunc_(truncation) {}
  static EpsSeries constant(const RatFn& c, int truncation);
  static EpsSeries monomial(const RatFn& c, int order, int truncation);

  /// Last exactly known order (inclusive).
  int truncation() const noexcept { return trunc_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Lowest order with a nonzero coefficient; truncation()+1 for the zero series.
  int valuation() const noexcept { return coeffs_.empty() ? trunc_ + 1 : start_; }
  /// Coefficient of eps^n; zero below the valuation. Throws std::out_of_range
  /// for n > truncation().
  RatFn coeff(int n) const;
  /// Nonzero (order, coefficient) pairs in increasing order.
  std::vector<std::pair<int, RatFn>> terms() const;

  EpsSeries truncated(int order) const;
  /// Applies f coefficient-wise (e.g. a partial derivative in an eps-free symbol).
  EpsSeries map(const std::function<RatFn(const RatFn&)>& f) const;
  EpsSeries partial(Symbol s) const;

  friend EpsSeries operator+(const EpsSeries& l, const EpsSeries& r);
  friend EpsSeries operator-(const EpsSeries& l, const EpsSeries& r);
  friend EpsSeries operator*(const EpsSeries& l, const EpsSeries& r);
  /// Throws DivisionByZeroSeries when `r` is zero to its known order, and
  /// NotExpandable when the quotient would start below kValuationFloor.
  friend EpsSeries operator/(const EpsSeries& l, const EpsSeries& r);
  EpsSeries operator-() const;
  EpsSeries scaled(const RatFn& c) const;
  EpsSeries pow(int n) const;

 private:
  void set(int order, RatFn c);
  int last() const noexcept { return start_ + static_cast<int>(coeffs_.size()) - 1; }
  void normalize();

  int start_;
  int trunc_;
  std::vector<RatFn> coeffs_;  // orders start_, start_+1, ... (<= trunc_)
};

/// Laurent expansion of f (rational in eps, every other symbol kept in the
/// coefficients) through order N.
EpsSeries series_from_ratfn(const RatFn& f, int N);

/// (1+x)^c = 1 + sum binom(c,n) x^n through order N; x must have valuation
/// >= 1 (NonpositiveValuation otherwise).
EpsSeries binomial_series(const EpsSeries& x, const mpq_class& c, int N);

/// Order-0 coefficient when no negative order survives, else DivergesAtZero.
RatFn limit_eps0(const EpsSeries& s);

/// Coefficient-wise ratfn_equal through the smaller truncation order.
bool series_equal(const EpsSeries& a, const EpsSeries& b);

/// sum_n sigma(c_n) * e^n: substitutes eps-free bindings into the
/// coefficients and the series `e` (valuation exactly 1) for eps.
EpsSeries compose(const EpsSeries& s, const Substitution& sigma, const EpsSeries& e);

}  // namespace painleve
