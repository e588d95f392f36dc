#include "painleve/poly.hpp"

#include <algorithm>
#include <cmath>

#include "painleve/errors.hpp"

namespace painleve {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % ModPoint::kPrime);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e != 0) {
    if (e & 1U) r = mulmod(r, base);
    base = mulmod(base, base);
    e >>= 1U;
  }
  return r;
}

// Merges two decreasing term lists; `sign` = -1 subtracts the second.
std::vector<Term> merge(std::span<const Term> a, std::span<const Term> b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    auto c = a[i].mono <=> b[j].mono;
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(subtract ? Term{b[j].mono, -b[j].coeff} : b[j]);
      ++j;
    } else {
      ExactNum s = subtract ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
      if (!s.is_zero()) out.push_back(Term{a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(subtract ? Term{b[j].mono, -b[j].coeff} : b[j]);
  return out;
}

}  // namespace

// ---------------------------------------------------------------- Monomial

bool Monomial::is_one() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e == 0; });
}

unsigned Monomial::total_degree() const noexcept {
  unsigned d = 0;
  for (auto e : exps_) d += e;
  return d;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < kSymbolCount; ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const noexcept {
  Monomial r;
  for (std::size_t i = 0; i < kSymbolCount; ++i) r.exps_[i] = static_cast<std::uint16_t>(exps_[i] + o.exps_[i]);
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const noexcept {
  Monomial r;
  for (std::size_t i = 0; i < kSymbolCount; ++i) r.exps_[i] = static_cast<std::uint16_t>(exps_[i] - o.exps_[i]);
  return r;
}

Monomial Monomial::gcd(const Monomial& o) const noexcept {
  Monomial r;
  for (std::size_t i = 0; i < kSymbolCount; ++i) r.exps_[i] = std::min(exps_[i], o.exps_[i]);
  return r;
}

std::uint64_t ModPoint::root2() {
  // kPrime = 3 (mod 4), so a square root of 2 is 2^((p+1)/4).
  static const std::uint64_t r = powmod(2, (kPrime + 1) / 4);
  return r;
}

// -------------------------------------------------------------------- Poly

Poly::Poly(const ExactNum& c) {
  if (!c.is_zero()) terms_.push_back(Term{Monomial{}, c});
}

Poly::Poly(const ExactNum& c, const Monomial& m) {
  if (!c.is_zero()) terms_.push_back(Term{m, c});
}

Poly Poly::variable(Symbol s) { return Poly(ExactNum(1), Monomial::of(s)); }

Poly Poly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.mono > b.mono; });
  Poly r;
  r.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!r.terms_.empty() && r.terms_.back().mono == t.mono) {
      r.terms_.back().coeff += t.coeff;
      if (r.terms_.back().coeff.is_zero()) r.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      r.terms_.push_back(std::move(t));
    }
  }
  return r;
}

bool Poly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one());
}

ExactNum Poly::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return ExactNum{};
}

unsigned Poly::degree(Symbol s) const noexcept {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono[s]);
  return d;
}

unsigned Poly::min_degree(Symbol s) const noexcept {
  if (terms_.empty()) return 0;
  unsigned d = terms_.front().mono[s];
  for (const auto& t : terms_) d = std::min(d, t.mono[s]);
  return d;
}

bool Poly::depends_on(Symbol s) const noexcept {
  return std::any_of(terms_.begin(), terms_.end(), [s](const Term& t) { return t.mono[s] != 0; });
}

Monomial Poly::monomial_content() const noexcept {
  if (terms_.empty()) return Monomial{};
  Monomial g = terms_.front().mono;
  for (const auto& t : terms_) g = g.gcd(t.mono);
  return g;
}

std::vector<Poly> Poly::coefficients_in(Symbol s) const {
  std::vector<Poly> out(degree(s) + 1);
  for (const auto& t : terms_) {
    Monomial m = t.mono;
    unsigned e = m[s];
    m.set(s, 0);
    out[e].terms_.push_back(Term{m, t.coeff});
  }
  return out;
}

Poly Poly::partial(Symbol s) const {
  Poly r;
  for (const auto& t : terms_) {
    unsigned e = t.mono[s];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set(s, e - 1);
    r.terms_.push_back(Term{m, t.coeff * ExactNum(static_cast<long>(e))});
  }
  return r;
}

Poly Poly::pow(unsigned n) const {
  if (n == 0) return Poly(1);
  if (is_monomial()) {
    Monomial m;
    for (std::size_t i = 0; i < kSymbolCount; ++i) {
      Symbol s(static_cast<std::uint8_t>(i));
      m.set(s, terms_.front().mono[s] * n);
    }
    ExactNum c(1);
    for (unsigned i = 0; i < n; ++i) c *= terms_.front().coeff;
    return Poly(c, m);
  }
  Poly r = *this;
  for (unsigned i = 1; i < n; ++i) r = r * *this;
  return r;
}

Poly Poly::scaled(const ExactNum& c) const {
  if (c.is_zero()) return Poly();
  Poly r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Poly Poly::times(const Monomial& m) const {
  Poly r = *this;
  for (auto& t : r.terms_) t.mono = t.mono * m;
  return r;
}

Poly Poly::divided_by(const Monomial& m) const {
  Poly r = *this;
  for (auto& t : r.terms_) t.mono = t.mono / m;
  return r;
}

std::optional<Poly> Poly::divide_exact(const Poly& divisor) const {
  if (divisor.is_zero()) throw DivisionByZero();
  if (is_zero()) return Poly();
  const Term& lead = divisor.terms_.front();
  if (divisor.is_monomial()) {
    ExactNum inv = lead.coeff.inverse();
    Poly r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      if (!lead.mono.divides(t.mono)) return std::nullopt;
      r.terms_.push_back(Term{t.mono / lead.mono, t.coeff * inv});
    }
    return r;
  }
  // Cheap necessary conditions: degree bounds and divisibility of the
  // leading and trailing monomials.
  for (std::size_t i = 0; i < kSymbolCount; ++i) {
    Symbol s(static_cast<std::uint8_t>(i));
    if (divisor.degree(s) > degree(s)) return std::nullopt;
    if (divisor.min_degree(s) > min_degree(s)) return std::nullopt;
  }
  if (!lead.mono.divides(terms_.front().mono)) return std::nullopt;
  if (!divisor.terms_.back().mono.divides(terms_.back().mono)) return std::nullopt;

  ExactNum inv = lead.coeff.inverse();
  std::vector<Term> rem = terms_;
  std::vector<Term> quotient;
  std::vector<Term> scratch;
  while (!rem.empty()) {
    const Term& lt = rem.front();
    if (!lead.mono.divides(lt.mono)) return std::nullopt;
    Term qt{lt.mono / lead.mono, lt.coeff * inv};
    scratch.clear();
    scratch.reserve(divisor.terms_.size());
    for (const auto& d : divisor.terms_) scratch.push_back(Term{d.mono * qt.mono, d.coeff * qt.coeff});
    rem = merge(rem, scratch, true);
    quotient.push_back(std::move(qt));
  }
  Poly q;
  q.terms_ = std::move(quotient);
  return q;
}

std::optional<std::uint64_t> Poly::eval_mod(const ModPoint& point) const {
  std::array<std::vector<std::uint64_t>, kSymbolCount> powers;
  const std::uint64_t root2 = ModPoint::root2();
  unsigned __int128 acc = 0;
  for (const auto& t : terms_) {
    auto c = t.coeff.mod_prime(ModPoint::kPrime, root2);
    if (!c) return std::nullopt;
    std::uint64_t v = *c;
    for (std::size_t i = 0; i < kSymbolCount; ++i) {
      unsigned e = t.mono.exponents()[i];
      if (e == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(1);
      while (pw.size() <= e) pw.push_back(mulmod(pw.back(), point.values[i]));
      v = mulmod(v, pw[e]);
    }
    acc = (acc + v) % ModPoint::kPrime;
  }
  return static_cast<std::uint64_t>(acc);
}

double Poly::eval(std::span<const double, kSymbolCount> point) const {
  double acc = 0.0;
  for (const auto& t : terms_) {
    double v = t.coeff.to_double();
    for (std::size_t i = 0; i < kSymbolCount; ++i) {
      unsigned e = t.mono.exponents()[i];
      if (e != 0) v *= std::pow(point[i], static_cast<int>(e));
    }
    acc += v;
  }
  return acc;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.is_zero()) return *this;
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.is_zero()) return *this;
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

Poly operator+(const Poly& l, const Poly& r) {
  Poly out;
  out.terms_ = merge(l.terms_, r.terms_, false);
  return out;
}

Poly operator-(const Poly& l, const Poly& r) {
  Poly out;
  out.terms_ = merge(l.terms_, r.terms_, true);
  return out;
}

Poly operator*(const Poly& l, const Poly& r) {
  if (l.is_zero() || r.is_zero()) return Poly();
  if (l.is_monomial()) return r.times(l.terms_.front().mono).scaled(l.terms_.front().coeff);
  if (r.is_monomial()) return l.times(r.terms_.front().mono).scaled(r.terms_.front().coeff);
  const Poly& small = l.size() <= r.size() ? l : r;
  const Poly& big = l.size() <= r.size() ? r : l;
  // Each row small[i] * big is already sorted; merge rows pairwise.
  std::vector<std::vector<Term>> rows;
  rows.reserve(small.size());
  for (const auto& a : small.terms_) {
    std::vector<Term> row;
    row.reserve(big.size());
    for (const auto& b : big.terms_) row.push_back(Term{a.mono * b.mono, a.coeff * b.coeff});
    rows.push_back(std::move(row));
  }
  while (rows.size() > 1) {
    std::vector<std::vector<Term>> next;
    next.reserve((rows.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < rows.size(); i += 2) next.push_back(merge(rows[i], rows[i + 1], false));
    if (rows.size() % 2 == 1) next.push_back(std::move(rows.back()));
    rows = std::move(next);
  }
  Poly out;
  out.terms_ = std::move(rows.front());
  return out;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

}  // namespace painleve
