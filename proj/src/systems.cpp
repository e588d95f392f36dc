#include "painleve/systems.hpp"

#include <algorithm>
#include <cctype>

#include "painleve/expr_io.hpp"

namespace painleve {

namespace {

struct SystemText {
  SystemId id;
  const char* label;
  const char* hamiltonian;
  const char* t_weight;
  int param_count;
  const char* constraint;
};

// clang-format off
constexpr SystemText kSystems[] = {
  {SystemId::VI, "VI",
   "q*(q - 1)*(q - t)*p^2 - ((alpha0 - 1)*q*(q - 1) + alpha4*(q - 1)*(q - t) + alpha3*q*(q - t))*p"
   " + alpha2*(alpha1 + alpha2)*(q - t)",
   "t*(t - 1)", 5, "alpha0 + alpha1 + 2*alpha2 + alpha3 + alpha4"},
  {SystemId::V, "V",
   "q*(q - 1)*p*(p + t) - (alpha1 + alpha3)*q*p + alpha1*p + alpha2*t*q",
   "t", 4, "alpha0 + alpha1 + alpha2 + alpha3"},
  {SystemId::IV, "IV",
   "q*p*(2*p - q - 2*t) - 2*alpha1*p - alpha2*q",
   "1", 3, "alpha0 + alpha1 + alpha2"},
  {SystemId::III, "III",
   "q^2*p*(p - 1) + q*((alpha0 + alpha2)*p - alpha0) + t*p",
   "t", 3, "alpha0 + 2*alpha1 + alpha2"},
  {SystemId::II, "II",
   "(1/2)*p^2 - (q^2 + t/2)*p - alpha1*q",
   "1", 2, "alpha0 + alpha1"},
  {SystemId::I, "I",
   "(1/2)*p^2 - 2*q^3 - t*q",
   "1", 0, "1"},
};
// clang-format on

const SystemText& text_of(SystemId id) { return kSystems[static_cast<std::size_t>(id)]; }

PainleveSystem build(const SystemText& s) {
  PainleveSystem out{s.id, parse(s.hamiltonian), parse(s.t_weight), {}, parse(s.constraint)};
  for (int i = 0; i < s.param_count; ++i) out.params.push_back(sym::alpha[static_cast<std::size_t>(i)]);
  return out;
}

}  // namespace

std::string_view label(SystemId id) noexcept { return text_of(id).label; }

std::optional<SystemId> parse_system(std::string_view text) noexcept {
  std::string upper(text);
  std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char c) { return std::toupper(c); });
  for (const auto& s : kSystems) {
    if (upper == s.label) return s.id;
  }
  return std::nullopt;
}

const PainleveSystem& painleve_system(SystemId id) {
  static const std::array<PainleveSystem, 6> systems = [] {
    return std::array<PainleveSystem, 6>{build(kSystems[0]), build(kSystems[1]), build(kSystems[2]),
                                         build(kSystems[3]), build(kSystems[4]), build(kSystems[5])};
  }();
  return systems[static_cast<std::size_t>(id)];
}

RatFn hamiltonian(SystemId id) { return painleve_system(id).hamiltonian; }

Chart lower_chart(SystemId id) { return Chart{painleve_system(id).params, sym::t, sym::q, sym::p}; }

Chart upper_chart(SystemId id) {
  Chart c{{}, sym::T, sym::Q, sym::P};
  for (std::size_t i = 0; i < painleve_system(id).params.size(); ++i) c.params.push_back(sym::A[i]);
  return c;
}

const Substitution& to_upper() {
  static const Substitution s = [] {
    Substitution r;
    for (std::size_t i = 0; i < sym::A.size(); ++i) r.bind(sym::alpha[i], RatFn::symbol(sym::A[i]));
    r.bind(sym::t, RatFn::symbol(sym::T));
    r.bind(sym::q, RatFn::symbol(sym::Q));
    r.bind(sym::p, RatFn::symbol(sym::P));
    return r;
  }();
  return s;
}

RatFn poisson_bracket(const RatFn& f, const RatFn& g, Symbol q, Symbol p) {
  return f.partial(p) * g.partial(q) - f.partial(q) * g.partial(p);
}

RatFn derivation_apply(const RatFn& H, const RatFn& t_weight, const RatFn& f, const Chart& chart) {
  RatFn out;
  if (f.depends_on(chart.t)) out += f.partial(chart.t) * t_weight;
  if (f.depends_on(chart.q)) out += f.partial(chart.q) * H.partial(chart.p);
  if (f.depends_on(chart.p)) out -= f.partial(chart.p) * H.partial(chart.q);
  return out;
}

RatFn derivation_apply(SystemId id, const RatFn& f) {
  const auto& s = painleve_system(id);
  return derivation_apply(s.hamiltonian, s.t_weight, f, lower_chart(id));
}

RatFn impose_constraint(SystemId id, const RatFn& f, const Chart& chart) {
  if (chart.params.empty()) return f;
  const auto& sys = painleve_system(id);
  Substitution rename;
  for (std::size_t i = 0; i < chart.params.size(); ++i) rename.bind(sys.params[i], RatFn::symbol(chart.params[i]));
  // constraint = first + rest, so first = 1 - rest
  RatFn rest = sys.constraint.substitute(rename) - RatFn::symbol(chart.params.front());
  return f.substitute(Substitution{{chart.params.front(), RatFn(1) - rest}});
}

}  // namespace painleve
