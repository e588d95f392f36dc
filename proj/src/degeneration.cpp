#include "painleve/degeneration.hpp"

#include <algorithm>
#include <functional>

#include "painleve/errors.hpp"
#include "painleve/expr_io.hpp"

namespace painleve {

namespace {

struct Binding {
  const char* symbol;
  const char* value;
};

struct GenRow {
  const char* name;
  const char* word;
  const char* alternate;
  const char* eps_exact;  // nullptr for a branch
  int sign;
  const char* base;
  const char* exponent;
  int tau_sign;
};

struct ArrowRow {
  SystemId source;
  SystemId target;
  std::vector<Binding> param_map;
  std::vector<Binding> forward;
  // applied in order: the first stage writes T, Q, P in the source letters,
  // later stages eliminate auxiliary letters
  std::vector<std::vector<Binding>> inverse;
  std::vector<Binding> param_inverse;
  const char* eps_inverse;  // nullptr when not birational
  int eps_power;
  const char* eps_power_value;
  const char* tau_forward;  // nullptr when there is no square root
  const char* tau_square;
  const char* tau_derivation;
  const char* ham_factor;
  const char* ham_shift;
  bool delta_commutes;
  int default_order;
  std::vector<GenRow> gens;
};

// clang-format off
const std::vector<ArrowRow>& rows() {
  static const std::vector<ArrowRow> s = {
    {SystemId::VI, SystemId::V,
     {{"alpha0", "1/eps"}, {"alpha1", "A3"}, {"alpha2", "A2"}, {"alpha3", "A0 - A2 - 1/eps"}, {"alpha4", "A1"}},
     {{"t", "1 + eps*T"}, {"q", "Q/(Q - 1)"}, {"p", "(-A2 - (Q - 1)*P)*(Q - 1)"}},
     {{{"T", "(t - 1)/eps"}, {"Q", "q/(q - 1)"}, {"P", "(-alpha2 - (q - 1)*p)*(q - 1)"}}},
     {{"A0", "alpha0 + alpha2 + alpha3"}, {"A1", "alpha4"}, {"A2", "alpha2"}, {"A3", "alpha1"}},
     "1/alpha0", 1, "1/alpha0",
     nullptr, "0", "0",
     "1/(1 + eps*T)", "0", true, 8,
     {{"S0", "s0 s2 s3 s2 s0", "s3 s2 s0 s2 s3", "eps/(1 - A0*eps)", 1, "0", "0", 1},
      {"S1", "s4", "s4", "eps", 1, "0", "0", 1},
      {"S2", "s2", "s2", "eps/(1 + A2*eps)", 1, "0", "0", 1},
      {"S3", "s1", "s1", "eps", 1, "0", "0", 1}}},
    {SystemId::V, SystemId::IV,
     {{"alpha0", "A0 + 1/(2*eps^2)"}, {"alpha1", "A1"}, {"alpha2", "A2"}, {"alpha3", "-1/(2*eps^2)"}},
     {{"t", "(1 + 2*eps*T)/(2*eps^2)"}, {"q", "-eps*Q/(1 - eps*Q)"}, {"p", "-(1 - eps*Q)*(P - eps*(A2 + Q*P))/eps"}},
     {{{"T", "eps*t - 1/(2*eps)"}, {"Q", "q/(eps*(q - 1))"}, {"P", "-eps*(q - 1)*(p*(q - 1) + alpha2)"}}},
     {{"A0", "alpha0 + alpha3"}, {"A1", "alpha1"}, {"A2", "alpha2"}},
     nullptr, 2, "-1/(2*alpha3)",
     nullptr, "0", "0",
     "2*eps/(1 + 2*eps*T)", "0", false, 12,
     {{"S0", "s3 s0 s3", "s0 s3 s0", nullptr, 1, "2*A0*eps^2", "-1/2", 1},
      {"S1", "s1", "s1", "eps", 1, "0", "0", 1},
      {"S2", "s2", "s2", nullptr, 1, "-2*A2*eps^2", "-1/2", 1}}},
    {SystemId::V, SystemId::III,
     {{"alpha0", "A2"}, {"alpha1", "1/eps"}, {"alpha2", "A0"}, {"alpha3", "2*A1 - 1/eps"}},
     {{"t", "-eps*T"}, {"q", "1 + Q/(eps*T)"}, {"p", "eps*T*P"}},
     {{{"T", "-t/eps"}, {"Q", "-(q - 1)*t"}, {"P", "-p/t"}}},
     {{"A0", "alpha2"}, {"A1", "(alpha1 + alpha3)/2"}, {"A2", "alpha0"}},
     "1/alpha1", 1, "1/alpha1",
     nullptr, "0", "0",
     "1", "Q*P", true, 8,
     {{"S0", "s2", "s2", "eps/(1 + A0*eps)", 1, "0", "0", 1},
      {"S1", "s3 s1", "s1 s3", "-eps", 1, "0", "0", 1},
      {"S2", "s0", "s0", "eps/(1 + A2*eps)", 1, "0", "0", 1}}},
    {SystemId::IV, SystemId::II,
     {{"alpha0", "A0 - 1/(4*eps^6)"}, {"alpha1", "1/(4*eps^6)"}, {"alpha2", "A1"}},
     {{"t", "-(1 - eps^4*T)/(sqrt2*eps^3)"}, {"q", "(1 + 2*eps^2*Q)/(sqrt2*eps^3)"}, {"p", "eps*P/sqrt2"}},
     {{{"T", "(1 + sqrt2*eps^3*t)/eps^4"}, {"Q", "(sqrt2*eps^3*q - 1)/(2*eps^2)"}, {"P", "sqrt2*p/eps"}}},
     {{"A0", "alpha0 + alpha1"}, {"A1", "alpha2"}},
     nullptr, 6, "1/(4*alpha1)",
     nullptr, "0", "0",
     "eps/sqrt2", "0", false, 12,
     {{"S0", "s0 s1 s0", "s1 s0 s1", nullptr, 1, "-4*A0*eps^6", "-1/6", 1},
      {"S1", "s2", "s2", nullptr, 1, "4*A1*eps^6", "-1/6", 1}}},
    {SystemId::III, SystemId::II,
     {{"alpha0", "A1"}, {"alpha1", "1/(4*eps^3)"}, {"alpha2", "A0 - 1/(2*eps^3)"}},
     {{"t", "-tau^2"}, {"q", "-tau/x"}, {"p", "x/tau*(A1 + x*y)"}},
     {{{"T", "(4*eps^3*tau - 1)/eps^2"}, {"Q", "(x - 1)/(2*eps)"}, {"P", "2*eps*y"}},
      {{"y", "(p*tau/x - alpha0)/x"}},
      {{"x", "-tau/q"}}},
     {{"A0", "alpha2 + 2*alpha1"}, {"A1", "alpha0"}},
     nullptr, 3, "1/(4*alpha1)",
     "(1 + eps^2*T)/(4*eps^3)", "-t", "tau/2",
     "2*eps^2/(1 + eps^2*T)", "eps*(1 + 2*eps*Q)*P/(2*(1 + eps^2*T))", false, 12,
     {{"S0", "s2 s1 s2 s1", "s1 s2 s1 s2", "-eps", 1, "0", "0", -1},
      {"S1", "s0", "s0", nullptr, 1, "4*A1*eps^3", "-1/3", 1}}},
  };
  return s;
}
// clang-format on

// Substitution for the auxiliary letters of the III -> II forward map.
const std::vector<Binding> kAuxForward = {{"x", "1 + 2*eps*Q"}, {"y", "P/(2*eps)"}};

Substitution bindings(const std::vector<Binding>& list) {
  Substitution out;
  for (const auto& b : list) out.bind(*find_symbol(b.symbol), parse(b.value));
  return out;
}

DegenerationArrow build(const ArrowRow& s) {
  DegenerationArrow a;
  a.source = s.source;
  a.target = s.target;
  a.param_map = bindings(s.param_map);
  a.param_inverse = bindings(s.param_inverse);

  Substitution fwd = bindings(s.forward);
  if (s.tau_forward) {
    // t, q, p are written through tau, x, y; resolve them to (A, eps, T, Q, P)
    Substitution aux = bindings(kAuxForward);
    aux.bind(sym::tau, parse(s.tau_forward));
    Substitution resolved;
    for (Symbol v : {sym::t, sym::q, sym::p}) resolved.bind(v, fwd.find(v)->substitute(aux));
    resolved.bind(sym::tau, parse(s.tau_forward));
    fwd = resolved;
  }
  a.forward = fwd;

  for (Symbol X : {sym::T, sym::Q, sym::P}) {
    RatFn v = RatFn::symbol(X);
    for (const auto& stage : s.inverse) v = v.substitute(bindings(stage));
    a.inverse.bind(X, v);
  }
  if (s.eps_inverse) a.eps_inverse = parse(s.eps_inverse);
  a.eps_power = s.eps_power;
  a.eps_power_value = parse(s.eps_power_value);
  a.tau_square = parse(s.tau_square);
  a.tau_derivation = parse(s.tau_derivation);
  a.ham_factor = parse(s.ham_factor);
  a.ham_shift = parse(s.ham_shift);
  a.delta_commutes = s.delta_commutes;
  a.default_order = s.default_order;
  for (const auto& g : s.gens) {
    SubgroupGenerator out;
    out.name = g.name;
    out.word = Word::parse(g.word);
    out.alternate = Word::parse(g.alternate);
    if (g.eps_exact) out.eps.exact = parse(g.eps_exact);
    out.eps.sign = g.sign;
    out.eps.base = parse(g.base);
    out.eps.exponent = mpq_class(g.exponent);
    out.eps.exponent.canonicalize();
    out.tau_sign = g.tau_sign;
    a.generators.push_back(std::move(out));
  }
  return a;
}

const std::vector<DegenerationArrow>& arrows() {
  static const std::vector<DegenerationArrow> a = [] {
    std::vector<DegenerationArrow> out;
    for (const auto& s : rows()) out.push_back(build(s));
    return out;
  }();
  return a;
}

// The push-forward F: alpha, t, q, p (and tau) in terms of (A, eps, T, Q, P).
Substitution push(const DegenerationArrow& a) {
  Substitution out = a.param_map;
  for (Symbol s : a.forward.symbols()) out.bind(s, *a.forward.find(s));
  return out;
}

// Images of the source field generators under w, pushed forward.
Substitution pushed_images(const DegenerationArrow& a, const Word& w, int tau_sign) {
  const Substitution F = push(a);
  Substitution out;
  for (Symbol s : field_generators(a.source)) out.bind(s, apply_word(a.source, w, RatFn::symbol(s)).substitute(F));
  if (a.has_tau()) out.bind(sym::tau, RatFn(tau_sign) * *a.forward.find(sym::tau));
  return out;
}

Substitution pushed_params(const DegenerationArrow& a, const Word& w) {
  Substitution out;
  for (Symbol s : painleve_system(a.source).params) {
    out.bind(s, apply_word(a.source, w, RatFn::symbol(s)).substitute(a.param_map));
  }
  return out;
}

// Upper-case letter -> lower-case letter of the target table.
Symbol lower_of(Symbol X) {
  if (X == sym::T) return sym::t;
  if (X == sym::Q) return sym::q;
  if (X == sym::P) return sym::p;
  for (int j = 0; j < 4; ++j) {
    if (X == sym::A[j]) return sym::alpha[j];
  }
  throw Error(std::string("no lower-case counterpart for ") + std::string(X.name()));
}

// f evaluated at series images of its symbols (others stay in the coefficients).
EpsSeries eval_poly_series(const Poly& f, const std::map<Symbol, EpsSeries>& images, int N) {
  EpsSeries out(N);
  for (const auto& term : f.terms()) {
    Monomial mono = term.mono;
    EpsSeries factor = EpsSeries::constant(RatFn(1), EpsSeries::kExact);
    for (const auto& [s, img] : images) {
      unsigned e = mono[s];
      if (e == 0) continue;
      factor = factor * img.pow(static_cast<int>(e));
      mono.set(s, 0);
    }
    Poly rest = Poly::from_terms({Term{mono, term.coeff}});
    out = out + factor * series_from_ratfn(RatFn(rest), N);
  }
  return out;
}

EpsSeries eval_series(const RatFn& f, const std::map<Symbol, EpsSeries>& images, int N) {
  return eval_poly_series(f.num(), images, N) / eval_poly_series(f.den(), images, N);
}

// Coefficients in E of f, evaluated at the series u.
EpsSeries poly_at_placeholder(const Poly& f, const EpsSeries& u, int M) {
  auto c = f.coefficients_in(sym::E);
  EpsSeries acc = series_from_ratfn(RatFn(c.back()), M);
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    acc = acc * u;
    if (!c[k].is_zero()) acc = acc + series_from_ratfn(RatFn(c[k]), M);
  }
  return acc;
}

// G(E) at E = eps * u, u of valuation 0 given to any order by `unit`. The
// factor eps is put in exactly first, so spurious eps powers cancel before
// the series quotient and no orders are lost to them.
EpsSeries expand_placeholder(const RatFn& G, const std::function<EpsSeries(int)>& unit, int N) {
  const Substitution scale{{sym::E, RatFn::symbol(sym::eps) * RatFn::symbol(sym::E)}};
  RatFn H = G.substitute(scale);
  int M = N + 2;
  for (int attempt = 0; attempt < 10; ++attempt) {
    EpsSeries u = unit(M);
    EpsSeries den = poly_at_placeholder(H.den(), u, M);
    if (den.is_zero()) {
      M += 4;  // the denominator starts beyond the working order
      continue;
    }
    EpsSeries r = poly_at_placeholder(H.num(), u, M) / den;
    if (r.truncation() >= N) return r.truncated(N);
    M += std::max(N - r.truncation(), 2);
  }
  throw NotExpandable("placeholder expansion did not reach order " + std::to_string(N));
}

EpsSeries expand_placeholder(const RatFn& G, const EpsAction& act, int N) {
  return expand_placeholder(
      G, [&](int M) { return binomial_series(series_from_ratfn(act.base, M), act.exponent, M).scaled(RatFn(act.sign)); },
      N);
}

std::string describe(const std::string& what, const RatFn& got, const RatFn& want) {
  return what + ": got " + to_string(got) + ", expected " + to_string(want);
}

}  // namespace

// ----------------------------------------------------------------- EpsAction

EpsSeries EpsAction::series(int N) const {
  if (exact) return series_from_ratfn(*exact, N);
  EpsSeries eps = EpsSeries::monomial(RatFn(sign), 1, EpsSeries::kExact);
  return (eps * binomial_series(series_from_ratfn(base, N), exponent, N)).truncated(N);
}

std::string EpsAction::to_string() const {
  if (exact) return painleve::to_string(*exact);
  std::string head = sign < 0 ? "-eps" : "eps";
  return head + "*(1 + " + painleve::to_string(base) + ")^(" + exponent.get_str() + ")";
}

// ------------------------------------------------------------------- arrows

std::string DegenerationArrow::name() const {
  return std::string(label(source)) + "->" + std::string(label(target));
}

const SubgroupGenerator& DegenerationArrow::generator(const std::string& n) const {
  for (const auto& g : generators) {
    if (g.name == n) return g;
  }
  throw Error("arrow " + name() + " has no generator " + n);
}

const DegenerationArrow& arrow(SystemId source, SystemId target) {
  if (source == SystemId::II && target == SystemId::I) {
    throw UnsupportedArrow(
        "II->I: P_I has no parameters and no Bäcklund transformations; under this limit the W(A1) "
        "generators of P_II tend to the identity map as eps -> 0, so no subgroup survives");
  }
  for (const auto& a : arrows()) {
    if (a.source == source && a.target == target) return a;
  }
  throw UnsupportedArrow("no degeneration arrow " + std::string(label(source)) + "->" + std::string(label(target)));
}

const std::vector<const DegenerationArrow*>& all_arrows() {
  static const std::vector<const DegenerationArrow*> out = [] {
    std::vector<const DegenerationArrow*> v;
    for (const auto& a : arrows()) v.push_back(&a);
    return v;
  }();
  return out;
}

std::vector<Symbol> lifted_symbols(const DegenerationArrow& a) {
  std::vector<Symbol> out = upper_chart(a.target).params;
  out.push_back(sym::eps);
  out.push_back(sym::T);
  out.push_back(sym::Q);
  out.push_back(sym::P);
  return out;
}

// --------------------------------------------------------------------- lift

RatFn lift_param(const DegenerationArrow& a, const Word& w, Symbol A) {
  const RatFn* inv = a.param_inverse.find(A);
  if (!inv) throw Error(std::string("not a parameter of ") + a.name() + ": " + std::string(A.name()));
  return inv->substitute(pushed_params(a, w));
}

std::optional<RatFn> lift_eps_exact(const DegenerationArrow& a, const Word& w) {
  if (!a.eps_inverse) return std::nullopt;
  return a.eps_inverse->substitute(pushed_params(a, w));
}

RatFn lift_eps_power(const DegenerationArrow& a, const Word& w) {
  return a.eps_power_value.substitute(pushed_params(a, w));
}

RatFn lift_variable_exact(const DegenerationArrow& a, const Word& w, const RatFn& eps_image, int tau_sign, Symbol X) {
  Substitution sigma = pushed_images(a, w, tau_sign);
  sigma.bind(sym::eps, eps_image);
  return a.inverse.find(X)->substitute(sigma);
}

EpsSeries lift_variable(const DegenerationArrow& a, const Word& w, const EpsAction& eps_action, int tau_sign,
                        Symbol X, int N) {
  if (auto e = lift_eps_exact(a, w)) return series_from_ratfn(lift_variable_exact(a, w, *e, tau_sign, X), N);
  if (eps_action.exact) {
    return series_from_ratfn(lift_variable_exact(a, w, *eps_action.exact, tau_sign, X), N);
  }
  RatFn G = lift_variable_exact(a, w, RatFn::symbol(sym::E), tau_sign, X);
  return expand_placeholder(G, eps_action, N);
}

namespace {

LiftedGenerator lift(const DegenerationArrow& a, const std::string& name, const Word& w, const EpsAction& act,
                     int tau_sign, int N) {
  LiftedGenerator out;
  out.arrow = &a;
  out.name = name;
  out.word = w;
  for (Symbol A : upper_chart(a.target).params) {
    RatFn v = lift_param(a, w, A);
    out.actions.emplace(A, series_from_ratfn(v, N));
    out.exact.emplace(A, std::move(v));
  }
  std::optional<RatFn> e = lift_eps_exact(a, w);
  if (!e) e = act.exact;
  out.actions.emplace(sym::eps, e ? series_from_ratfn(*e, N) : act.series(N));
  if (e) out.exact.emplace(sym::eps, *e);
  for (Symbol X : {sym::T, sym::Q, sym::P}) {
    if (e) {
      RatFn v = lift_variable_exact(a, w, *e, tau_sign, X);
      out.actions.emplace(X, series_from_ratfn(v, N));
      out.exact.emplace(X, std::move(v));
    } else {
      out.actions.emplace(X, lift_variable(a, w, act, tau_sign, X, N));
    }
  }
  return out;
}

}  // namespace

LiftedGenerator lift_generator(const DegenerationArrow& a, const SubgroupGenerator& g, int N) {
  return lift(a, g.name, g.word, g.eps, g.tau_sign, N);
}

LiftedGenerator lift_word(const DegenerationArrow& a, const Word& w, int N) {
  if (!a.eps_inverse) {
    throw UnsupportedArrow("raw words lift only on arrows where eps is a rational function of the parameters");
  }
  return lift(a, w.to_string(), w, EpsAction::identity(), 1, N);
}

RatFn limit_action(const DegenerationArrow& a, const SubgroupGenerator& g, Symbol X, int N) {
  if (X == sym::T || X == sym::Q || X == sym::P) {
    return limit_eps0(lift_variable(a, g.word, g.eps, g.tau_sign, X, N));
  }
  if (X == sym::eps) return limit_eps0(lift_generator(a, g, N).actions.at(sym::eps));
  return limit_eps0(series_from_ratfn(lift_param(a, g.word, X), N));
}

RatFn target_table_entry(const DegenerationArrow& a, int index, Symbol X) {
  const Symbol x = lower_of(X);
  const RatFn* v = generator(a.target, index).action.find(x);
  return (v ? *v : RatFn::symbol(x)).substitute(to_upper());
}

// -------------------------------------------------------------- Hamiltonian

RatFn degenerate_hamiltonian_exact(const DegenerationArrow& a) {
  return a.ham_factor * hamiltonian(a.source).substitute(push(a)) + a.ham_shift;
}

EpsSeries degenerate_hamiltonian(const DegenerationArrow& a, int N) {
  return series_from_ratfn(degenerate_hamiltonian_exact(a), N);
}

HamiltonianComparison compare_hamiltonian(const DegenerationArrow& a, int N) {
  HamiltonianComparison out;
  EpsSeries H = degenerate_hamiltonian(a, std::max(N, 0));
  bool pole_ok = true;
  for (const auto& [n, c] : H.terms()) {
    if (n >= 0) break;
    out.pole_terms.emplace_back(n, c);
    if (!c.partial(sym::Q).is_zero() || !c.partial(sym::P).is_zero()) {
      pole_ok = false;
      out.detail = "order " + std::to_string(n) + " depends on (Q, P): " + to_string(c);
    }
  }
  out.order0 = H.coeff(0);
  const Chart upper = upper_chart(a.target);
  const RatFn HK = hamiltonian(a.target).substitute(to_upper());
  out.dropped = impose_constraint(a.target, out.order0 - HK, upper);
  const bool free = out.dropped.partial(sym::Q).is_zero() && out.dropped.partial(sym::P).is_zero();
  if (!free && out.detail.empty()) out.detail = "order 0 differs from H_K by " + to_string(out.dropped);
  out.pass = pole_ok && free;
  return out;
}

Outcome check_transformed_system(const DegenerationArrow& a) {
  const PainleveSystem& J = painleve_system(a.source);
  const PainleveSystem& K = painleve_system(a.target);
  const Chart lower = lower_chart(a.source);
  const Substitution F = push(a);
  const RatFn H = degenerate_hamiltonian_exact(a);
  const RatFn want[3] = {K.t_weight.substitute(to_upper()), H.partial(sym::P), -H.partial(sym::Q)};
  const Symbol vars[3] = {sym::T, sym::Q, sym::P};
  for (int i = 0; i < 3; ++i) {
    const RatFn& Xinv = *a.inverse.find(vars[i]);
    RatFn d = derivation_apply(J.hamiltonian, J.t_weight, Xinv, lower);
    if (a.has_tau()) d += Xinv.partial(sym::tau) * a.tau_derivation;
    RatFn got = a.ham_factor * d.substitute(F);
    if (!ratfn_equal(got, want[i])) {
      return Outcome{false, describe(std::string("delta ") + std::string(vars[i].name()), got, want[i])};
    }
  }
  return Outcome{};
}

EpsSeries transformed_system_factor(const DegenerationArrow& a, const SubgroupGenerator& g, int N) {
  if (a.delta_commutes) return EpsSeries::constant(RatFn(1), N);
  std::map<Symbol, EpsSeries> images;
  LiftedGenerator L = lift_generator(a, g, N + 2);
  images.emplace(sym::eps, L.actions.at(sym::eps));
  images.emplace(sym::T, L.actions.at(sym::T));
  for (Symbol A : upper_chart(a.target).params) images.emplace(A, L.actions.at(A));
  EpsSeries wc = eval_series(a.ham_factor, images, N + 2);
  return (series_from_ratfn(a.ham_factor, N + 2) / wc).truncated(N);
}

// ---------------------------------------------------------------- relations

LiftedParams compose_lifted_params(const DegenerationArrow& a, const std::vector<int>& indices, int N) {
  const auto params = upper_chart(a.target).params;
  LiftedParams cur;
  for (Symbol A : params) cur.params.emplace(A, RatFn::symbol(A));
  cur.eps = EpsSeries::monomial(RatFn(1), 1, N);
  for (int i : indices) {
    const SubgroupGenerator& g = a.generators.at(static_cast<std::size_t>(i));
    Substitution sigma;
    for (const auto& [A, v] : cur.params) sigma.bind(A, v);
    LiftedParams next;
    for (Symbol A : params) next.params.emplace(A, lift_param(a, g.word, A).substitute(sigma));
    std::optional<RatFn> e = lift_eps_exact(a, g.word);
    EpsSeries ge = e ? series_from_ratfn(*e, N) : g.eps.series(N);
    next.eps = compose(ge, sigma, cur.eps).truncated(N);
    next.tau_sign = cur.tau_sign * g.tau_sign;
    cur = std::move(next);
  }
  return cur;
}

namespace {

// The relation word acting on T, Q, P through the lift, with eps acting by
// the composed series; expected to be the identity.
Outcome check_full_field(const DegenerationArrow& a, const Word& w, const std::vector<int>& idx,
                         const LiftedParams& L, int N) {
  if (!L.eps.is_zero() && L.eps.valuation() != 1) return Outcome{false, "eps image has valuation != 1"};
  const EpsSeries eps = EpsSeries::monomial(RatFn(1), 1, EpsSeries::kExact);
  for (Symbol X : {sym::T, sym::Q, sym::P}) {
    RatFn G = lift_variable_exact(a, w, RatFn::symbol(sym::E), L.tau_sign, X);
    EpsSeries got = expand_placeholder(
        G, [&](int M) { return (compose_lifted_params(a, idx, M + 1).eps / eps).truncated(M); }, N);
    if (!series_equal(got, series_from_ratfn(RatFn::symbol(X), N))) {
      return Outcome{false, std::string(X.name()) + ": got " + to_string(got)};
    }
  }
  return Outcome{};
}

}  // namespace

std::vector<SubgroupRelationResult> verify_subgroup_relations(const DegenerationArrow& a, int N) {
  std::vector<SubgroupRelationResult> out;
  for (const auto& rel : fundamental_relations(a.target)) {
    SubgroupRelationResult r;
    r.label = rel.label;
    std::replace(r.label.begin(), r.label.end(), 's', 'S');
    std::vector<int> idx;
    for (int letter : rel.word.letters()) {
      idx.push_back(letter);
      r.j_word = r.j_word * a.generators.at(static_cast<std::size_t>(letter)).word;
    }
    r.exact = check_relation(a.source, r.j_word);
    LiftedParams L = compose_lifted_params(a, idx, N);
    for (const auto& [A, v] : L.params) {
      if (!ratfn_equal(v, RatFn::symbol(A))) {
        r.lifted = Outcome{false, describe(std::string(A.name()), v, RatFn::symbol(A))};
        break;
      }
    }
    if (r.lifted.pass && !series_equal(L.eps, EpsSeries::monomial(RatFn(1), 1, N))) {
      r.lifted = Outcome{false, "eps: got " + to_string(L.eps)};
    }
    if (r.lifted.pass && a.has_tau() && L.tau_sign != 1) r.lifted = Outcome{false, "tau changes sign"};
    r.full_field = check_full_field(a, r.j_word, idx, L, N);
    out.push_back(std::move(r));
  }
  return out;
}

// ------------------------------------------------------------------- checks

Outcome check_eps_branch(const DegenerationArrow& a, const SubgroupGenerator& g, int N) {
  if (auto e = lift_eps_exact(a, g.word)) {
    if (!g.eps.exact) return Outcome{false, "declared branch for a birational arrow"};
    if (!ratfn_equal(*e, *g.eps.exact)) return Outcome{false, describe("eps", *e, *g.eps.exact)};
    return Outcome{};
  }
  EpsSeries lhs = g.eps.series(N).pow(a.eps_power);
  EpsSeries rhs = series_from_ratfn(lift_eps_power(a, g.word), lhs.truncation());
  if (!series_equal(lhs, rhs)) {
    return Outcome{false, "eps^" + std::to_string(a.eps_power) + ": got " + to_string(lhs) + ", expected " +
                              to_string(rhs)};
  }
  return Outcome{};
}

Outcome check_params_vs_table(const DegenerationArrow& a, std::size_t index) {
  const SubgroupGenerator& g = a.generators.at(index);
  for (Symbol A : upper_chart(a.target).params) {
    RatFn got = lift_param(a, g.word, A);
    if (got.depends_on(sym::eps)) return Outcome{false, std::string(A.name()) + " depends on eps: " + to_string(got)};
    RatFn want = target_table_entry(a, static_cast<int>(index), A);
    if (!ratfn_equal(got, want)) return Outcome{false, describe(std::string(A.name()), got, want)};
  }
  return Outcome{};
}

Outcome check_limits(const DegenerationArrow& a, std::size_t index, int N) {
  const SubgroupGenerator& g = a.generators.at(index);
  for (Symbol X : {sym::T, sym::Q, sym::P}) {
    RatFn got;
    try {
      got = limit_action(a, g, X, N);
    } catch (const Error& e) {
      return Outcome{false, std::string(X.name()) + ": " + e.what()};
    }
    RatFn want = target_table_entry(a, static_cast<int>(index), X);
    if (!ratfn_equal(got, want)) return Outcome{false, describe(std::string(X.name()), got, want)};
  }
  return Outcome{};
}

Outcome check_round_trip(const DegenerationArrow& a) {
  const Substitution F = push(a);
  for (Symbol X : {sym::T, sym::Q, sym::P}) {
    RatFn back = a.inverse.find(X)->substitute(F);
    if (!ratfn_equal(back, RatFn::symbol(X))) return Outcome{false, describe(std::string(X.name()), back, RatFn::symbol(X))};
  }
  for (Symbol A : upper_chart(a.target).params) {
    RatFn back = a.param_inverse.find(A)->substitute(a.param_map);
    if (!ratfn_equal(back, RatFn::symbol(A))) return Outcome{false, describe(std::string(A.name()), back, RatFn::symbol(A))};
  }
  // the other direction, with t written through tau where there is one
  Substitution G = a.param_inverse;
  for (Symbol X : {sym::T, sym::Q, sym::P}) G.bind(X, *a.inverse.find(X));
  Substitution reduce;
  if (a.has_tau()) {
    RatFn slope = a.tau_square.partial(sym::t);
    reduce.bind(sym::t, RatFn::symbol(sym::tau).pow(2) / slope);
  }
  for (Symbol x : {sym::t, sym::q, sym::p}) {
    RatFn there = a.forward.find(x)->substitute(G).substitute(reduce);
    RatFn want = RatFn::symbol(x).substitute(reduce);
    if (!ratfn_equal(there, want)) return Outcome{false, describe(std::string(x.name()), there, want)};
  }
  return Outcome{};
}

Outcome check_forward_symplectic(const DegenerationArrow& a) {
  RatFn b = poisson_bracket(*a.forward.find(sym::p), *a.forward.find(sym::q), sym::Q, sym::P);
  if (!ratfn_equal(b, RatFn(1))) return Outcome{false, describe("{p, q}", b, RatFn(1))};
  return Outcome{};
}

Outcome check_constraint_transport(const DegenerationArrow& a) {
  RatFn got = painleve_system(a.source).constraint.substitute(a.param_map);
  RatFn want = painleve_system(a.target).constraint.substitute(to_upper());
  if (!ratfn_equal(got, want)) return Outcome{false, describe("constraint", got, want)};
  return Outcome{};
}

}  // namespace painleve
