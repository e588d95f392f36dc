#include "painleve/exact_num.hpp"

#include <cmath>

#include "painleve/errors.hpp"

namespace painleve {

namespace {

std::optional<std::uint64_t> mpq_mod(const mpq_class& v, std::uint64_t prime) {
  const auto n = mpz_fdiv_ui(v.get_num_mpz_t(), prime);
  const auto d = mpz_fdiv_ui(v.get_den_mpz_t(), prime);
  if (d == 0) return std::nullopt;
  // d^(p-2) mod p
  unsigned __int128 result = 1;
  unsigned __int128 base = d;
  std::uint64_t e = prime - 2;
  while (e != 0) {
    if (e & 1U) result = result * base % prime;
    base = base * base % prime;
    e >>= 1U;
  }
  return static_cast<std::uint64_t>(result * n % prime);
}

}  // namespace

ExactNum::ExactNum(mpq_class a, mpq_class b) : a_(std::move(a)), b_(std::move(b)) {
  a_.canonicalize();
  b_.canonicalize();
}

ExactNum ExactNum::rational(long num, long den) {
  if (den == 0) throw DivisionByZero();
  return ExactNum(mpq_class(num, den));
}

ExactNum ExactNum::sqrt2() { return ExactNum(mpq_class(0), mpq_class(1)); }

ExactNum ExactNum::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (is_rational()) return ExactNum(1 / a_);
  // (a + b r)^-1 = (a - b r) / (a^2 - 2 b^2); the norm is nonzero since r is irrational.
  mpq_class norm = a_ * a_ - 2 * b_ * b_;
  return ExactNum(a_ / norm, -b_ / norm);
}

double ExactNum::to_double() const {
  if (is_rational()) return a_.get_d();
  return a_.get_d() + b_.get_d() * std::sqrt(2.0);
}

std::optional<std::uint64_t> ExactNum::mod_prime(std::uint64_t prime, std::uint64_t root2) const {
  auto a = mpq_mod(a_, prime);
  if (!a) return std::nullopt;
  if (is_rational()) return a;
  auto b = mpq_mod(b_, prime);
  if (!b) return std::nullopt;
  unsigned __int128 v = static_cast<unsigned __int128>(*b) * root2 % prime;
  return static_cast<std::uint64_t>((v + *a) % prime);
}

ExactNum& ExactNum::operator+=(const ExactNum& o) {
  a_ += o.a_;
  if (!o.is_rational()) b_ += o.b_;
  return *this;
}

ExactNum& ExactNum::operator-=(const ExactNum& o) {
  a_ -= o.a_;
  if (!o.is_rational()) b_ -= o.b_;
  return *this;
}

ExactNum& ExactNum::operator*=(const ExactNum& o) {
  if (is_rational() && o.is_rational()) {
    a_ *= o.a_;
    return *this;
  }
  mpq_class a = a_ * o.a_ + 2 * b_ * o.b_;
  mpq_class b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

ExactNum ExactNum::operator-() const {
  ExactNum r(*this);
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

std::string ExactNum::to_string() const {
  if (is_rational()) return a_.get_str();
  std::string b;
  if (b_ == 1) {
    b = "sqrt2";
  } else if (b_ == -1) {
    b = "-sqrt2";
  } else {
    b = b_.get_str() + "*sqrt2";
  }
  if (sgn(a_) == 0) return b;
  if (b.front() == '-') return "(" + a_.get_str() + " - " + b.substr(1) + ")";
  return "(" + a_.get_str() + " + " + b + ")";
}

}  // namespace painleve
