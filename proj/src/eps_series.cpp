#include "painleve/eps_series.hpp"

#include <algorithm>
#include <stdexcept>

#include "painleve/errors.hpp"
#include "painleve/expr_io.hpp"

namespace painleve {

EpsSeries EpsSeries::constant(const RatFn& c, int truncation) { return monomial(c, 0, truncation); }

EpsSeries EpsSeries::monomial(const RatFn& c, int order, int truncation) {
  EpsSeries s(truncation);
  if (order <= truncation && !c.is_zero()) {
    s.start_ = order;
    s.coeffs_.push_back(c);
  }
  return s;
}

RatFn EpsSeries::coeff(int n) const {
  if (n > trunc_) throw std::out_of_range("order " + std::to_string(n) + " beyond truncation");
  if (coeffs_.empty() || n < start_ || n >= start_ + static_cast<int>(coeffs_.size())) return RatFn();
  return coeffs_[static_cast<std::size_t>(n - start_)];
}

std::vector<std::pair<int, RatFn>> EpsSeries::terms() const {
  std::vector<std::pair<int, RatFn>> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) out.emplace_back(start_ + static_cast<int>(i), coeffs_[i]);
  }
  return out;
}

void EpsSeries::set(int order, RatFn c) {
  if (order > trunc_) return;
  if (coeffs_.empty()) {
    if (c.is_zero()) return;
    start_ = order;
    coeffs_.push_back(std::move(c));
    return;
  }
  if (order < start_) {
    coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(start_ - order), RatFn());
    start_ = order;
  }
  auto idx = static_cast<std::size_t>(order - start_);
  if (idx >= coeffs_.size()) coeffs_.resize(idx + 1);
  coeffs_[idx] = std::move(c);
}

void EpsSeries::normalize() {
  while (!coeffs_.empty() && start_ + static_cast<int>(coeffs_.size()) - 1 > trunc_) coeffs_.pop_back();
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    start_ = 0;
    return;
  }
  coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
  start_ += static_cast<int>(lead);
}

EpsSeries EpsSeries::truncated(int order) const {
  EpsSeries r = *this;
  r.trunc_ = std::min(trunc_, order);
  r.normalize();
  return r;
}

EpsSeries EpsSeries::map(const std::function<RatFn(const RatFn&)>& f) const {
  EpsSeries r(trunc_);
  for (const auto& [n, c] : terms()) r.set(n, f(c));
  r.normalize();
  return r;
}

EpsSeries EpsSeries::partial(Symbol s) const {
  return map([s](const RatFn& c) { return c.partial(s); });
}

EpsSeries EpsSeries::operator-() const {
  EpsSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

EpsSeries EpsSeries::scaled(const RatFn& c) const {
  return map([&c](const RatFn& x) { return x * c; });
}

EpsSeries operator+(const EpsSeries& l, const EpsSeries& r) {
  EpsSeries out(std::min(l.trunc_, r.trunc_));
  if (l.is_zero() && r.is_zero()) return out;
  const int lo = std::min(l.valuation(), r.valuation());
  const int hi = std::min(out.trunc_, std::max(l.last(), r.last()));
  for (int n = lo; n <= hi; ++n) {
    RatFn a = n < l.valuation() ? RatFn() : l.coeff(n);
    RatFn b = n < r.valuation() ? RatFn() : r.coeff(n);
    out.set(n, a + b);
  }
  out.normalize();
  return out;
}

EpsSeries operator-(const EpsSeries& l, const EpsSeries& r) { return l + (-r); }

EpsSeries operator*(const EpsSeries& l, const EpsSeries& r) {
  const int lv = l.valuation();
  const int rv = r.valuation();
  EpsSeries out(std::min(l.trunc_ + rv, r.trunc_ + lv));
  if (l.is_zero() || r.is_zero()) return out;
  const int hi = std::min(out.trunc_, l.last() + r.last());
  for (int n = lv + rv; n <= hi; ++n) {
    RatFn acc;
    for (int i = lv; i <= n - rv; ++i) {
      if (i > l.trunc_ || n - i > r.trunc_) continue;
      RatFn a = l.coeff(i);
      if (a.is_zero()) continue;
      RatFn b = r.coeff(n - i);
      if (b.is_zero()) continue;
      acc += a * b;
    }
    out.set(n, std::move(acc));
  }
  out.normalize();
  return out;
}

EpsSeries operator/(const EpsSeries& l, const EpsSeries& r) {
  if (r.is_zero()) throw DivisionByZeroSeries("division by a series that vanishes to order " + std::to_string(r.trunc_));
  const int lv = l.valuation();
  const int rv = r.valuation();
  const int n_out = std::min(l.trunc_ - rv, r.trunc_ - 2 * rv + lv);
  if (!l.is_zero() && lv - rv < EpsSeries::kValuationFloor) {
    throw NotExpandable("quotient starts at order " + std::to_string(lv - rv) + ", below the floor " +
                        std::to_string(EpsSeries::kValuationFloor));
  }
  if (l.is_zero()) return EpsSeries(n_out);
  // r = eps^rv * u with u(0) != 0; invert u through the orders needed.
  const bool monomial_divisor = r.coeffs_.size() == 1;
  const int need = monomial_divisor ? 0 : n_out - lv + rv;  // orders of 1/u required
  if (need > EpsSeries::kExact / 2) throw NotExpandable("quotient of exact series needs a truncation order");
  const RatFn u0 = r.coeff(rv);
  const RatFn inv0 = u0.inverse();
  std::vector<RatFn> inv{inv0};
  for (int k = 1; k <= need; ++k) {
    RatFn acc;
    for (int j = 1; j <= k; ++j) {
      RatFn uj = rv + j <= r.trunc_ ? r.coeff(rv + j) : RatFn();
      if (uj.is_zero()) continue;
      acc += uj * inv[static_cast<std::size_t>(k - j)];
    }
    inv.push_back(acc.is_zero() ? RatFn() : -acc * inv0);
  }
  EpsSeries out(n_out);
  const int hi = std::min(n_out, l.last() - rv + need);
  for (int n = lv - rv; n <= hi; ++n) {
    RatFn acc;
    for (int i = lv; i <= n + rv && i <= l.trunc_; ++i) {
      const int k = n - (i - rv);
      if (k < 0 || k > need) continue;
      RatFn a = l.coeff(i);
      if (a.is_zero() || inv[static_cast<std::size_t>(k)].is_zero()) continue;
      acc += a * inv[static_cast<std::size_t>(k)];
    }
    out.set(n, std::move(acc));
  }
  out.normalize();
  return out;
}

EpsSeries EpsSeries::pow(int n) const {
  if (n < 0) return EpsSeries::constant(RatFn(1), kExact) / pow(-n);
  EpsSeries acc = EpsSeries::constant(RatFn(1), kExact);
  EpsSeries base = *this;
  for (unsigned e = static_cast<unsigned>(n); e != 0; e >>= 1U) {
    if (e & 1U) acc = acc * base;
    if (e > 1) base = base * base;
  }
  return acc;
}

EpsSeries series_from_ratfn(const RatFn& f, int N) {
  if (f.is_zero()) return EpsSeries(N);
  auto num = f.num().coefficients_in(sym::eps);
  auto den = f.den().coefficients_in(sym::eps);
  auto lowest = [](const std::vector<Poly>& v) {
    std::size_t i = 0;
    while (v[i].is_zero()) ++i;
    return i;
  };
  const std::size_t a = lowest(num);
  const std::size_t b = lowest(den);
  const int v = static_cast<int>(a) - static_cast<int>(b);
  if (v < EpsSeries::kValuationFloor) {
    throw NotExpandable("expansion starts at order " + std::to_string(v) + ", below the floor");
  }
  EpsSeries out(N);
  if (v > N) return out;
  auto n_at = [&](std::size_t k) { return a + k < num.size() ? num[a + k] : Poly(); };
  auto d_at = [&](std::size_t k) { return b + k < den.size() ? den[b + k] : Poly(); };
  const Poly& d0 = den[b];
  const bool unit = d0.is_constant();
  const ExactNum d0inv = unit ? d0.constant_term().inverse() : ExactNum(1);
  const Poly cand[] = {d0};

  // With c_k = P_k / d0^(k+1): P_k = n_k d0^k - sum_{j>=1} d_j P_{k-j} d0^(j-1).
  // For a constant d0 the powers are folded in directly (P_k is then c_k).
  std::vector<Poly> P;
  std::vector<Poly> d0pow{Poly(1)};
  const auto count = static_cast<std::size_t>(N - v + 1);
  for (std::size_t k = 0; k < count; ++k) {
    Poly acc;
    if (unit) {
      acc = n_at(k);
      for (std::size_t j = 1; j <= k; ++j) {
        Poly dj = d_at(j);
        if (!dj.is_zero() && !P[k - j].is_zero()) acc -= dj * P[k - j];
      }
      acc = acc.scaled(d0inv);
    } else {
      while (d0pow.size() <= k + 1) d0pow.push_back(d0pow.back() * d0);
      Poly nk = n_at(k);
      if (!nk.is_zero()) acc = nk * d0pow[k];
      for (std::size_t j = 1; j <= k; ++j) {
        Poly dj = d_at(j);
        if (!dj.is_zero() && !P[k - j].is_zero()) acc -= dj * P[k - j] * d0pow[j - 1];
      }
    }
    P.push_back(acc);
    if (acc.is_zero()) continue;
    RatFn c = unit ? RatFn(acc) : RatFn::reduced(acc, d0pow[k + 1], cand);
    out = out + EpsSeries::monomial(c, v + static_cast<int>(k), N);
  }
  return out;
}

EpsSeries binomial_series(const EpsSeries& x, const mpq_class& c, int N) {
  if (!x.is_zero() && x.valuation() < 1) {
    throw NonpositiveValuation("binomial series needs valuation >= 1, got " + std::to_string(x.valuation()));
  }
  EpsSeries out = EpsSeries::constant(RatFn(1), std::min(N, x.truncation()));
  if (x.is_zero()) return out;
  mpq_class binom = 1;
  EpsSeries power = EpsSeries::constant(RatFn(1), out.truncation());
  const int v = x.valuation();
  for (int n = 1; n * v <= out.truncation(); ++n) {
    binom = binom * (c - n + 1) / n;
    power = power * x;
    if (sgn(binom) == 0) break;
    out = out + power.scaled(RatFn(ExactNum(binom)));
  }
  return out;
}

RatFn limit_eps0(const EpsSeries& s) {
  for (const auto& [n, c] : s.terms()) {
    if (n < 0) throw DivergesAtZero(n, to_string(c));
    break;
  }
  if (s.truncation() < 0) throw NotExpandable("order 0 is beyond the known orders");
  return s.coeff(0);
}

bool series_equal(const EpsSeries& a, const EpsSeries& b) {
  const int top = std::min(a.truncation(), b.truncation());
  const int lo = std::min(a.valuation(), b.valuation());
  for (int n = lo; n <= top; ++n) {
    if (!ratfn_equal(a.coeff(n), b.coeff(n))) return false;
  }
  return true;
}

EpsSeries compose(const EpsSeries& s, const Substitution& sigma, const EpsSeries& e) {
  if (e.valuation() != 1) throw NonpositiveValuation("eps image must have valuation exactly 1");
  if (s.is_zero()) return EpsSeries(s.truncation());
  const int v = s.valuation();
  EpsSeries out(s.truncation());
  EpsSeries e_pow = e.pow(v);
  for (int n = v; n <= s.truncation(); ++n) {
    RatFn c = s.coeff(n);
    if (!c.is_zero()) out = out + e_pow.scaled(c.substitute(sigma));
    if (n < s.truncation()) e_pow = e_pow * e;
  }
  return out;
}

}  // namespace painleve
