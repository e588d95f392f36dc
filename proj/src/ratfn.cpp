#include "painleve/ratfn.hpp"

#include <atomic>
#include <random>

#include "painleve/errors.hpp"

namespace painleve {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % ModPoint::kPrime);
}

std::uint64_t submod(std::uint64_t a, std::uint64_t b) {
  return a >= b ? a - b : a + (ModPoint::kPrime - b);
}

// Tries to strip the common factor `d` from both n and m (repeatedly).
void strip(Poly& n, Poly& m, const Poly& d) {
  if (d.is_constant() || n.is_zero()) return;
  for (;;) {
    auto qm = m.divide_exact(d);
    if (!qm) return;
    auto qn = n.divide_exact(d);
    if (!qn) return;
    n = std::move(*qn);
    m = std::move(*qm);
  }
}

// Cancels when one of the two divides the other.
void cancel_pair(Poly& n, Poly& d) {
  if (n.is_zero() || d.is_constant()) return;
  if (auto q = n.divide_exact(d)) {
    n = std::move(*q);
    d = Poly(1);
    return;
  }
  if (n.is_constant()) return;
  if (auto q = d.divide_exact(n)) {
    d = std::move(*q);
    n = Poly(1);
  }
}

}  // namespace

RatFn RatFn::reduced(Poly num, Poly den, std::span<const Poly> candidates) {
  if (den.is_zero()) throw DivisionByZero();
  if (num.is_zero()) return RatFn();
  Monomial g = num.monomial_content().gcd(den.monomial_content());
  if (!g.is_one()) {
    num = num.divided_by(g);
    den = den.divided_by(g);
  }
  if (den.is_monomial() && !den.is_constant()) {
    // nothing more to cancel once monomial content is gone
  } else if (!den.is_constant()) {
    if (auto q = num.divide_exact(den)) {
      num = std::move(*q);
      den = Poly(1);
    } else {
      for (const auto& c : candidates) {
        strip(num, den, c);
        if (den.is_constant()) break;
      }
    }
  }
  ExactNum lc = den.leading().coeff;
  if (!lc.is_one()) {
    ExactNum inv = lc.inverse();
    num = num.scaled(inv);
    den = den.scaled(inv);
  }
  return RatFn(Raw{}, std::move(num), std::move(den));
}

RatFn::RatFn(Poly num, Poly den) { *this = reduced(std::move(num), std::move(den), {}); }

std::optional<ExactNum> RatFn::constant_value() const {
  if (!num_.is_constant() || !den_.is_constant()) return std::nullopt;
  return num_.constant_term() / den_.constant_term();
}

RatFn RatFn::operator-() const { return RatFn(Raw{}, -num_, den_); }

RatFn operator+(const RatFn& l, const RatFn& r) {
  if (l.is_zero()) return r;
  if (r.is_zero()) return l;
  if (l.den_ == r.den_) {
    const Poly cand[] = {l.den_};
    return RatFn::reduced(l.num_ + r.num_, l.den_, cand);
  }
  if (l.den_.is_constant()) return RatFn::reduced(l.num_ * r.den_ + r.num_, r.den_, {});
  if (r.den_.is_constant()) return RatFn::reduced(l.num_ + r.num_ * l.den_, l.den_, {});
  if (auto q = r.den_.divide_exact(l.den_)) {
    const Poly cand[] = {l.den_, *q};
    return RatFn::reduced(l.num_ * *q + r.num_, r.den_, cand);
  }
  if (auto q = l.den_.divide_exact(r.den_)) {
    const Poly cand[] = {r.den_, *q};
    return RatFn::reduced(l.num_ + r.num_ * *q, l.den_, cand);
  }
  const Poly cand[] = {l.den_, r.den_};
  return RatFn::reduced(l.num_ * r.den_ + r.num_ * l.den_, l.den_ * r.den_, cand);
}

RatFn operator-(const RatFn& l, const RatFn& r) { return l + (-r); }

RatFn operator*(const RatFn& l, const RatFn& r) {
  if (l.is_zero() || r.is_zero()) return RatFn();
  Poly ln = l.num_;
  Poly ld = l.den_;
  Poly rn = r.num_;
  Poly rd = r.den_;
  cancel_pair(ln, rd);
  cancel_pair(rn, ld);
  return RatFn::reduced(ln * rn, ld * rd, {});
}

RatFn RatFn::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return reduced(den_, num_, {});
}

RatFn operator/(const RatFn& l, const RatFn& r) { return l * r.inverse(); }

RatFn RatFn::pow(int n) const {
  if (n == 0) return RatFn(1);
  if (n < 0) return inverse().pow(-n);
  return RatFn(Raw{}, num_.pow(static_cast<unsigned>(n)), den_.pow(static_cast<unsigned>(n)));
}

RatFn RatFn::partial(Symbol s) const {
  if (den_.is_constant()) return RatFn(Raw{}, num_.partial(s), den_);
  Poly dd = den_.partial(s);
  if (dd.is_zero()) return reduced(num_.partial(s), den_, {});
  const Poly cand[] = {den_};
  return reduced(num_.partial(s) * den_ - num_ * dd, den_ * den_, cand);
}

// ----------------------------------------------------------- substitution

namespace {

struct Binding {
  Symbol symbol;
  const RatFn* value;
};

// Homogenized image of f: sum over terms of c * prod_i n_i^e_i d_i^(D_i - e_i),
// with D_i = `degrees[i]` fixed per bound symbol. Horner in each bound symbol.
Poly homogenize(const Poly& f, std::span<const Binding> bound, std::span<const unsigned> degrees) {
  if (bound.empty()) return f;
  const Binding& b = bound.front();
  const unsigned total = degrees.front();
  auto rest = bound.subspan(1);
  auto rest_deg = degrees.subspan(1);
  const Poly& n = b.value->num();
  const Poly& d = b.value->den();
  const bool poly_value = d.is_constant();

  auto coeffs = f.coefficients_in(b.symbol);
  const unsigned deg = static_cast<unsigned>(coeffs.size() - 1);
  Poly acc = homogenize(coeffs.back(), rest, rest_deg);
  Poly dpow(1);
  for (unsigned k = deg; k-- > 0;) {
    acc = acc * n;
    if (!poly_value) dpow = dpow * d;
    if (coeffs[k].is_zero()) continue;
    Poly c = homogenize(coeffs[k], rest, rest_deg);
    acc += poly_value ? c : c * dpow;
  }
  if (!poly_value && total > deg) acc = acc * d.pow(total - deg);
  return acc;
}

}  // namespace

RatFn RatFn::substitute(const Substitution& sigma) const {
  std::vector<Binding> bound;
  std::vector<unsigned> num_deg;
  std::vector<unsigned> den_deg;
  for (Symbol s : sigma.symbols()) {
    if (!depends_on(s)) continue;
    bound.push_back(Binding{s, sigma.find(s)});
    num_deg.push_back(num_.degree(s));
    den_deg.push_back(den_.degree(s));
  }
  if (bound.empty()) return *this;

  Poly hn = homogenize(num_, bound, num_deg);
  Poly hd = homogenize(den_, bound, den_deg);
  std::vector<Poly> cand;
  for (std::size_t i = 0; i < bound.size(); ++i) {
    const Poly& d = bound[i].value->den();
    if (d.is_constant()) continue;
    if (den_deg[i] > num_deg[i]) hn = hn * d.pow(den_deg[i] - num_deg[i]);
    if (num_deg[i] > den_deg[i]) hd = hd * d.pow(num_deg[i] - den_deg[i]);
    cand.push_back(d);
  }
  if (hd.is_zero()) throw DenominatorVanishes("substituted denominator is the zero polynomial");
  return reduced(std::move(hn), std::move(hd), cand);
}

Substitution::Substitution(std::initializer_list<std::pair<Symbol, RatFn>> bindings) {
  for (const auto& [s, v] : bindings) bind(s, v);
}

Substitution& Substitution::bind(Symbol s, RatFn value) {
  if (value.identical(RatFn::symbol(s))) {
    values_[s.index()].reset();
  } else {
    values_[s.index()] = std::move(value);
  }
  return *this;
}

const RatFn* Substitution::find(Symbol s) const noexcept {
  const auto& v = values_[s.index()];
  return v ? &*v : nullptr;
}

bool Substitution::empty() const noexcept {
  for (const auto& v : values_) {
    if (v) return false;
  }
  return true;
}

std::vector<Symbol> Substitution::symbols() const {
  std::vector<Symbol> out;
  for (std::size_t i = 0; i < kSymbolCount; ++i) {
    if (values_[i]) out.emplace_back(static_cast<std::uint8_t>(i));
  }
  return out;
}

Substitution Substitution::then(const Substitution& inner) const {
  Substitution out;
  for (std::size_t i = 0; i < kSymbolCount; ++i) {
    Symbol s(static_cast<std::uint8_t>(i));
    if (values_[i]) {
      out.bind(s, values_[i]->substitute(inner));
    } else if (inner.values_[i]) {
      out.bind(s, *inner.values_[i]);
    }
  }
  return out;
}

// ---------------------------------------------------------------- equality

std::optional<std::uint64_t> eval_mod(const RatFn& f, const ModPoint& point) {
  auto n = f.num().eval_mod(point);
  auto d = f.den().eval_mod(point);
  if (!n || !d || *d == 0) return std::nullopt;
  // d^(p-2)
  std::uint64_t inv = 1;
  std::uint64_t base = *d;
  for (std::uint64_t e = ModPoint::kPrime - 2; e != 0; e >>= 1U) {
    if (e & 1U) inv = mulmod(inv, base);
    base = mulmod(base, base);
  }
  return mulmod(*n, inv);
}

namespace {
std::atomic<std::uint64_t> equality_seed{0x5eed'cafe'f00dULL};
std::atomic<std::uint64_t> seed_generation{0};
}  // namespace

void set_equality_seed(std::uint64_t seed) {
  equality_seed = seed;
  ++seed_generation;
}

bool ratfn_equal(const RatFn& f, const RatFn& g) {
  if (f.identical(g)) return true;
  // The random stream only decides how fast "unequal" is detected; a
  // "maybe equal" answer is always confirmed by expansion below.
  thread_local std::mt19937_64 rng(equality_seed.load());
  thread_local std::uint64_t generation = seed_generation.load();
  if (generation != seed_generation.load()) {
    generation = seed_generation.load();
    rng.seed(equality_seed.load());
  }
  std::uniform_int_distribution<std::uint64_t> dist(1, ModPoint::kPrime - 1);
  for (int round = 0; round < 2; ++round) {
    ModPoint pt;
    for (auto& v : pt.values) v = dist(rng);
    auto fn = f.num().eval_mod(pt);
    auto fd = f.den().eval_mod(pt);
    auto gn = g.num().eval_mod(pt);
    auto gd = g.den().eval_mod(pt);
    if (!fn || !fd || !gn || !gd) continue;
    if (submod(mulmod(*fn, *gd), mulmod(*gn, *fd)) != 0) return false;
  }
  if (f.den() == g.den()) return f.num() == g.num();
  return f.num() * g.den() == g.num() * f.den();
}

}  // namespace painleve
