#pragma once

#include <stdexcept>
#include <string>

namespace painleve {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
  using Error::Error;
};

/// A substitution turned a denominator into the zero polynomial.
class DenominatorVanishes : public Error {
 public:
  using Error::Error;
};

/// A rational function or composite has no Laurent expansion in eps at the
/// requested order.
class NotExpandable : public Error {
 public:
  using Error::Error;
};

class DivisionByZeroSeries : public Error {
 public:
  using Error::Error;
};

class NonpositiveValuation : public Error {
 public:
  using Error::Error;
};

/// A series has a nonzero coefficient of negative order.
class DivergesAtZero : public Error {
 public:
  DivergesAtZero(int order, std::string coefficient)
      : Error("series diverges as eps -> 0: order " + std::to_string(order) +
              " has coefficient " + coefficient),
        order_(order),
        coefficient_(std::move(coefficient)) {}

  int order() const noexcept { return order_; }
  const std::string& coefficient() const noexcept { return coefficient_; }

 private:
  int order_;
  std::string coefficient_;
};

class UnsupportedSystem : public Error {
 public:
  using Error::Error;
};

class UnsupportedArrow : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& what)
      : Error("syntax error at position " + std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class UnknownSymbol : public Error {
 public:
  explicit UnknownSymbol(const std::string& name) : Error("unknown symbol '" + name + "'"), name_(name) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

/// Numeric evaluation hit a denominator (or time weight) too close to zero.
class NearPole : public Error {
 public:
  using Error::Error;
};

}  // namespace painleve
