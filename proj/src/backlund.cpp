#include "painleve/backlund.hpp"

#include <cctype>

#include "painleve/errors.hpp"
#include "painleve/expr_io.hpp"

namespace painleve {

namespace {

struct Entry {
  const char* symbol;
  const char* image;
};

struct GenText {
  SystemId system;
  int index;
  std::vector<Entry> action;
};

// One row per generator; symbols not listed are fixed.
// clang-format off
const std::vector<GenText>& tables() {
  static const std::vector<GenText> t = {
    // W(D4)
    {SystemId::VI, 0, {{"alpha0", "-alpha0"}, {"alpha2", "alpha2 + alpha0"}, {"p", "p - alpha0/(q - t)"}}},
    {SystemId::VI, 1, {{"alpha1", "-alpha1"}, {"alpha2", "alpha2 + alpha1"}}},
    {SystemId::VI, 2, {{"alpha0", "alpha0 + alpha2"}, {"alpha1", "alpha1 + alpha2"}, {"alpha2", "-alpha2"},
                       {"alpha3", "alpha3 + alpha2"}, {"alpha4", "alpha4 + alpha2"}, {"q", "q + alpha2/p"}}},
    {SystemId::VI, 3, {{"alpha2", "alpha2 + alpha3"}, {"alpha3", "-alpha3"}, {"p", "p - alpha3/(q - 1)"}}},
    {SystemId::VI, 4, {{"alpha2", "alpha2 + alpha4"}, {"alpha4", "-alpha4"}, {"p", "p - alpha4/q"}}},
    // W(A3)
    {SystemId::V, 0, {{"alpha0", "-alpha0"}, {"alpha1", "alpha1 + alpha0"}, {"alpha3", "alpha3 + alpha0"},
                      {"q", "q + alpha0/(p + t)"}}},
    {SystemId::V, 1, {{"alpha0", "alpha0 + alpha1"}, {"alpha1", "-alpha1"}, {"alpha2", "alpha2 + alpha1"},
                      {"p", "p - alpha1/q"}}},
    {SystemId::V, 2, {{"alpha1", "alpha1 + alpha2"}, {"alpha2", "-alpha2"}, {"alpha3", "alpha3 + alpha2"},
                      {"q", "q + alpha2/p"}}},
    {SystemId::V, 3, {{"alpha0", "alpha0 + alpha3"}, {"alpha2", "alpha2 + alpha3"}, {"alpha3", "-alpha3"},
                      {"p", "p - alpha3/(q - 1)"}}},
    // W(A2)
    {SystemId::IV, 0, {{"alpha0", "-alpha0"}, {"alpha1", "alpha1 + alpha0"}, {"alpha2", "alpha2 + alpha0"},
                       {"q", "q + 2*alpha0/(2*p - q - 2*t)"}, {"p", "p + alpha0/(2*p - q - 2*t)"}}},
    {SystemId::IV, 1, {{"alpha0", "alpha0 + alpha1"}, {"alpha1", "-alpha1"}, {"alpha2", "alpha2 + alpha1"},
                       {"p", "p - alpha1/q"}}},
    {SystemId::IV, 2, {{"alpha0", "alpha0 + alpha2"}, {"alpha1", "alpha1 + alpha2"}, {"alpha2", "-alpha2"},
                       {"q", "q + alpha2/p"}}},
    // W(C2)
    {SystemId::III, 0, {{"alpha0", "-alpha0"}, {"alpha1", "alpha1 + alpha0"}, {"q", "q + alpha0/p"}}},
    {SystemId::III, 1, {{"alpha0", "alpha0 + 2*alpha1"}, {"alpha1", "-alpha1"}, {"alpha2", "alpha2 + 2*alpha1"},
                        {"t", "-t"}, {"p", "p - 2*alpha1/q + t/q^2"}}},
    {SystemId::III, 2, {{"alpha1", "alpha1 + alpha2"}, {"alpha2", "-alpha2"}, {"q", "q + alpha2/(p - 1)"}}},
    // W(A1)
    {SystemId::II, 0, {{"alpha0", "-alpha0"}, {"alpha1", "alpha1 + 2*alpha0"},
                       {"q", "q + alpha0/(p - 2*q^2 - t)"},
                       {"p", "p + 4*alpha0*q/(p - 2*q^2 - t) + 2*alpha0^2/(p - 2*q^2 - t)^2"}}},
    {SystemId::II, 1, {{"alpha0", "alpha0 + 2*alpha1"}, {"alpha1", "-alpha1"}, {"q", "q + alpha1/p"}}},
  };
  return t;
}
// clang-format on

std::vector<BacklundGen> build(SystemId id) {
  std::vector<BacklundGen> out;
  for (const auto& g : tables()) {
    if (g.system != id) continue;
    Substitution action;
    for (const auto& e : g.action) action.bind(*find_symbol(e.symbol), parse(e.image));
    out.push_back(BacklundGen{id, g.index, "s" + std::to_string(g.index), std::move(action)});
  }
  return out;
}

std::string describe(Symbol x, const RatFn& got, const RatFn& want) {
  return std::string(x.name()) + ": got " + to_string(got) + ", expected " + to_string(want);
}

}  // namespace

Word Word::parse(std::string_view text) {
  std::vector<int> letters;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '*')) ++i;
  };
  skip();
  if (i < text.size() && text[i] == '1' && text.find_first_not_of(" 1") == std::string_view::npos) return Word();
  while (i < text.size()) {
    if (text[i] != 's' && text[i] != 'S') throw SyntaxError(i, "expected a generator name");
    ++i;
    std::size_t begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (begin == i) throw SyntaxError(i, "expected a generator index");
    letters.push_back(std::stoi(std::string(text.substr(begin, i - begin))));
    skip();
  }
  return Word(std::move(letters));
}

Word Word::operator*(const Word& o) const {
  std::vector<int> l = letters_;
  l.insert(l.end(), o.letters_.begin(), o.letters_.end());
  return Word(std::move(l));
}

Word Word::pow(unsigned n) const {
  Word out;
  for (unsigned i = 0; i < n; ++i) out = out * *this;
  return out;
}

Word Word::inverse() const { return Word(std::vector<int>(letters_.rbegin(), letters_.rend())); }

std::string Word::to_string() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (int l : letters_) {
    if (!out.empty()) out += ' ';
    out += "s" + std::to_string(l);
  }
  return out;
}

const std::vector<BacklundGen>& generators(SystemId id) {
  if (id == SystemId::I) throw UnsupportedSystem("no Bäcklund group for P_I");
  static const std::array<std::vector<BacklundGen>, 5> all{build(SystemId::VI), build(SystemId::V),
                                                           build(SystemId::IV), build(SystemId::III),
                                                           build(SystemId::II)};
  return all[static_cast<std::size_t>(id)];
}

const BacklundGen& generator(SystemId id, int index) {
  const auto& gens = generators(id);
  if (index < 0 || static_cast<std::size_t>(index) >= gens.size()) {
    throw Error("no generator s" + std::to_string(index) + " in W_" + std::string(label(id)));
  }
  return gens[static_cast<std::size_t>(index)];
}

std::vector<Symbol> field_generators(SystemId id) {
  std::vector<Symbol> out = painleve_system(id).params;
  out.push_back(sym::t);
  out.push_back(sym::q);
  out.push_back(sym::p);
  return out;
}

RatFn apply_word(SystemId id, const Word& w, const RatFn& f) {
  RatFn out = f;
  const auto& letters = w.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) out = out.substitute(generator(id, *it).action);
  return out;
}

std::vector<Relation> fundamental_relations(SystemId id) {
  std::vector<Relation> out;
  const int n = static_cast<int>(generators(id).size());
  auto s = [](int i) { return Word({i}); };
  auto add = [&](Word w, unsigned k) {
    std::string l = w.letters().size() == 1 ? w.to_string() : "(" + w.to_string() + ")";
    out.push_back(Relation{w.pow(k), l + "^" + std::to_string(k)});
  };
  for (int i = 0; i < n; ++i) add(s(i), 2);
  switch (id) {
    case SystemId::VI: {
      const int outer[] = {0, 1, 3, 4};
      for (int a = 0; a < 4; ++a) {
        for (int b = a + 1; b < 4; ++b) add(s(outer[a]) * s(outer[b]), 2);
      }
      for (int i : outer) add(s(i) * s(2), 3);
      break;
    }
    case SystemId::V:
      for (int i = 0; i < 2; ++i) add(s(i) * s(i + 2), 2);
      for (int i = 0; i < 4; ++i) add(s(i) * s((i + 1) % 4), 3);
      break;
    case SystemId::IV:
      add(s(0) * s(1), 3);
      add(s(1) * s(2), 3);
      add(s(2) * s(0), 3);
      break;
    case SystemId::III:
      add(s(0) * s(1), 4);
      add(s(1) * s(2), 4);
      break;
    case SystemId::II:
    case SystemId::I:
      break;
  }
  return out;
}

Outcome check_relation(SystemId id, const Word& w) {
  for (Symbol x : field_generators(id)) {
    RatFn fx = RatFn::symbol(x);
    RatFn image = apply_word(id, w, fx);
    if (!ratfn_equal(image, fx)) return Outcome{false, describe(x, image, fx)};
  }
  return {};
}

bool verify_relation(SystemId id, const Word& w) { return check_relation(id, w).pass; }

Outcome check_symplectic(const BacklundGen& g) {
  RatFn gq = RatFn::symbol(sym::q).substitute(g.action);
  RatFn gp = RatFn::symbol(sym::p).substitute(g.action);
  RatFn bracket = poisson_bracket(gp, gq);
  if (ratfn_equal(bracket, RatFn(1))) return {};
  return Outcome{false, "{g(p), g(q)} = " + to_string(bracket)};
}

bool verify_symplectic(const BacklundGen& g) { return check_symplectic(g).pass; }

Outcome check_commutes_with_derivation(const BacklundGen& g) {
  for (Symbol x : field_generators(g.system)) {
    RatFn fx = RatFn::symbol(x);
    // The Hamiltonians carry the normalization, so the two sides agree on
    // the constraint surface only.
    const Chart chart = lower_chart(g.system);
    RatFn lhs = impose_constraint(g.system, derivation_apply(g.system, fx.substitute(g.action)), chart);
    RatFn rhs = impose_constraint(g.system, derivation_apply(g.system, fx).substitute(g.action), chart);
    if (!ratfn_equal(lhs, rhs)) return Outcome{false, "delta " + describe(x, lhs, rhs)};
  }
  return {};
}

bool verify_commutes_with_derivation(const BacklundGen& g) { return check_commutes_with_derivation(g).pass; }

Outcome check_constraint_preserved(const BacklundGen& g) {
  const RatFn& c = painleve_system(g.system).constraint;
  RatFn image = c.substitute(g.action);
  if (ratfn_equal(image, c)) return {};
  return Outcome{false, "constraint maps to " + to_string(image)};
}

}  // namespace painleve
