#include "painleve/expr_io.hpp"

#include <cctype>
#include <fstream>

#include "painleve/eps_series.hpp"
#include "painleve/errors.hpp"

namespace painleve {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RatFn run() {
    RatFn r = expression();
    skip_space();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(pos_, what); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RatFn expression() {
    RatFn acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  RatFn term() {
    const bool negate = accept('-');
    RatFn acc = factor();
    for (;;) {
      if (accept('*')) {
        acc *= factor();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        RatFn d = factor();
        if (d.is_zero()) throw SyntaxError(at, "division by zero");
        acc /= d;
      } else {
        break;
      }
    }
    return negate ? -acc : acc;
  }

  RatFn factor() {
    RatFn b = base();
    if (accept('^')) {
      const bool negate = accept('-');
      skip_space();
      const std::size_t at = pos_;
      std::string digits = integer_digits();
      if (digits.size() > 4) throw SyntaxError(at, "exponent too large");
      int e = std::stoi(digits);
      if (negate && b.is_zero()) throw SyntaxError(at, "negative power of zero");
      b = b.pow(negate ? -e : e);
    }
    return b;
  }

  std::string integer_digits() {
    std::size_t begin = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (begin == pos_) fail("expected an integer");
    return std::string(text_.substr(begin, pos_ - begin));
  }

  RatFn base() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return RatFn(ExactNum(mpq_class(mpz_class(integer_digits()))));
    }
    if (c == '(') {
      ++pos_;
      RatFn r = expression();
      if (!accept(')')) fail("expected ')'");
      return r;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t begin = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string_view name = text_.substr(begin, pos_ - begin);
      if (name == "sqrt2") return RatFn(ExactNum::sqrt2());
      if (auto s = find_symbol(name)) return RatFn::symbol(*s);
      throw UnknownSymbol(std::string(name));
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string superscript(unsigned e) {
  static const char* const kDigits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string digits = std::to_string(e);
  std::string out;
  for (char d : digits) out += kDigits[d - '0'];
  return out;
}

std::string monomial_string(const Monomial& m, const PrintOptions& opts) {
  std::string out;
  for (std::size_t i = 0; i < kSymbolCount; ++i) {
    unsigned e = m.exponents()[i];
    if (e == 0) continue;
    Symbol s(static_cast<std::uint8_t>(i));
    if (!out.empty()) out += opts.unicode ? "·" : "*";
    out += opts.unicode ? s.pretty_name() : s.name();
    if (e > 1) out += opts.unicode ? superscript(e) : "^" + std::to_string(e);
  }
  return out;
}

// Magnitude text of a coefficient and whether it was negative.
std::pair<std::string, bool> coefficient_string(const ExactNum& c, const PrintOptions& opts) {
  const std::string root = opts.unicode ? "√2" : "sqrt2";
  const std::string times = opts.unicode ? "·" : "*";
  const mpq_class& a = c.rational_part();
  const mpq_class& b = c.sqrt2_part();
  if (c.is_rational()) return {mpq_class(abs(a)).get_str(), sgn(a) < 0};
  if (sgn(a) == 0) {
    mpq_class mb = abs(b);
    return {mb == 1 ? root : mb.get_str() + times + root, sgn(b) < 0};
  }
  mpq_class mb = abs(b);
  std::string bs = mb == 1 ? root : mb.get_str() + times + root;
  return {"(" + a.get_str() + (sgn(b) < 0 ? " - " : " + ") + bs + ")", false};
}

}  // namespace

RatFn parse(std::string_view text) { return Parser(text).run(); }

std::string to_string(const Poly& f, PrintOptions opts) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    auto [mag, negative] = coefficient_string(t.coeff, opts);
    std::string mono = monomial_string(t.mono, opts);
    std::string body;
    if (mono.empty()) {
      body = mag;
    } else if (mag == "1") {
      body = mono;
    } else {
      body = mag + (opts.unicode ? "·" : "*") + mono;
    }
    if (first) {
      out += negative ? "-" + body : body;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
    first = false;
  }
  return out;
}

std::string to_string(const RatFn& f, PrintOptions opts) {
  if (f.is_polynomial()) return to_string(f.num(), opts);
  std::string n = to_string(f.num(), opts);
  if (f.num().size() > 1) n = "(" + n + ")";
  std::string d = to_string(f.den(), opts);
  const bool bare_den = f.den().is_monomial() && [&] {
    int factors = 0;
    for (auto e : f.den().leading().mono.exponents()) factors += e != 0 ? 1 : 0;
    return factors == 1;
  }();
  if (!bare_den) d = "(" + d + ")";
  return n + "/" + d;
}

std::string to_string(const EpsSeries& s, PrintOptions opts) {
  std::string out;
  for (const auto& [order, c] : s.terms()) {
    out += "(" + std::to_string(order) + ", " + to_string(c, opts) + "), ";
  }
  out += opts.unicode ? "O(ε" + (s.truncation() + 1 < 0 ? "^" + std::to_string(s.truncation() + 1)
                                                         : superscript(static_cast<unsigned>(s.truncation() + 1))) + ")"
                      : "O(eps^" + std::to_string(s.truncation() + 1) + ")";
  return out;
}

std::vector<FixtureLine> read_fixture(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open fixture " + path.string());
  std::vector<FixtureLine> out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    auto end = line.find_last_not_of(" \t\r");
    out.push_back(FixtureLine{number, line.substr(begin, end - begin + 1)});
  }
  return out;
}

}  // namespace painleve
