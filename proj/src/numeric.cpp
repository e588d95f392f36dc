#include "painleve/numeric.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>

#include "painleve/errors.hpp"

namespace painleve {

Assignment make_assignment(std::initializer_list<std::pair<Symbol, double>> values) {
  Assignment x{};
  for (const auto& [s, v] : values) x[s.index()] = v;
  return x;
}

double eval(const RatFn& f, const Assignment& x) { return CompiledRatFn(f)(x); }

// ------------------------------------------------------------ CompiledRatFn

CompiledRatFn::CompiledRatFn(const RatFn& f) : num_(flatten(f.num())), den_(flatten(f.den())) {}

std::vector<CompiledRatFn::Term> CompiledRatFn::flatten(const Poly& p) {
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    Term term{t.coeff.to_double(), {}};
    for (std::size_t i = 0; i < kSymbolCount; ++i) {
      const auto e = t.mono.exponents()[i];
      if (e != 0) term.factors.emplace_back(static_cast<std::uint8_t>(i), e);
    }
    out.push_back(std::move(term));
  }
  return out;
}

double CompiledRatFn::value(const std::vector<Term>& terms, const Assignment& x) {
  double acc = 0.0;
  for (const auto& t : terms) {
    double v = t.coeff;
    for (const auto& [i, e] : t.factors) {
      double b = x[i];
      for (std::uint16_t k = 0; k < e; ++k) v *= b;
    }
    acc += v;
  }
  return acc;
}

double CompiledRatFn::operator()(const Assignment& x) const {
  const double d = value(den_, x);
  if (!(std::abs(d) > kPoleGuard)) throw NearPole("denominator " + std::to_string(d) + " within the pole guard");
  return value(num_, x) / d;
}

// --------------------------------------------------------------------- Flow

Flow Flow::hamiltonian(const RatFn& H, const RatFn& weight, Symbol t, Symbol q, Symbol p) {
  Flow f;
  f.dq_.push_back(Part{CompiledRatFn(H.partial(p)), 0});
  f.dp_.push_back(Part{CompiledRatFn(-H.partial(q)), 0});
  f.weight_ = CompiledRatFn(weight);
  f.t_ = t;
  f.q_ = q;
  f.p_ = p;
  return f;
}

Flow Flow::series(const EpsSeries& H, const RatFn& weight, Symbol t, Symbol q, Symbol p) {
  Flow f;
  for (const auto& [n, c] : H.terms()) {
    RatFn hp = c.partial(p);
    RatFn hq = c.partial(q);
    if (!hp.is_zero()) f.dq_.push_back(Part{CompiledRatFn(hp), n});
    if (!hq.is_zero()) f.dp_.push_back(Part{CompiledRatFn(-hq), n});
  }
  f.weight_ = CompiledRatFn(weight);
  f.t_ = t;
  f.q_ = q;
  f.p_ = p;
  return f;
}

std::array<double, 2> Flow::field(const Assignment& base, double t, double q, double p) const {
  Assignment x = base;
  x[t_.index()] = t;
  x[q_.index()] = q;
  x[p_.index()] = p;
  const double eps = x[sym::eps.index()];
  auto sum = [&](const std::vector<Part>& parts) {
    double acc = 0.0;
    for (const auto& part : parts) acc += part.f(x) * (part.order == 0 ? 1.0 : std::pow(eps, part.order));
    return acc;
  };
  const double w = weight_(x);
  if (!(std::abs(w) > kPoleGuard)) throw NearPole("time weight vanishes at t = " + std::to_string(t));
  return {sum(dq_) / w, sum(dp_) / w};
}

// -------------------------------------------------------------- integrate

void Trajectory::write_csv(std::ostream& out) const {
  out << "t,q,p\n";
  out << std::setprecision(17);
  for (const auto& s : samples) out << s[0] << ',' << s[1] << ',' << s[2] << '\n';
}

Trajectory integrate(const Flow& flow, const Assignment& base, std::array<double, 3> initial, double t1, double h) {
  if (!(h > 0)) throw Error("step size must be positive");
  Trajectory out;
  out.h = h;
  const double t0 = initial[0];
  const double span = t1 - t0;
  const long steps = std::lround(std::abs(span) / h);
  const double dt = steps == 0 ? 0.0 : span / static_cast<double>(steps);
  out.samples.push_back(initial);
  double q = initial[1];
  double p = initial[2];
  try {
    for (long i = 0; i < steps; ++i) {
      const double t = t0 + dt * static_cast<double>(i);
      auto k1 = flow.field(base, t, q, p);
      auto k2 = flow.field(base, t + dt / 2, q + dt / 2 * k1[0], p + dt / 2 * k1[1]);
      auto k3 = flow.field(base, t + dt / 2, q + dt / 2 * k2[0], p + dt / 2 * k2[1]);
      auto k4 = flow.field(base, t + dt, q + dt * k3[0], p + dt * k3[1]);
      q += dt / 6 * (k1[0] + 2 * k2[0] + 2 * k3[0] + k4[0]);
      p += dt / 6 * (k1[1] + 2 * k2[1] + 2 * k3[1] + k4[1]);
      if (!std::isfinite(q) || !std::isfinite(p)) throw NearPole("trajectory left the finite range");
      out.samples.push_back({t0 + dt * static_cast<double>(i + 1), q, p});
    }
  } catch (const NearPole& e) {
    out.complete = false;
    out.note = e.what();
  }
  return out;
}

namespace {

Assignment params_assignment(const std::vector<Symbol>& symbols, const std::vector<double>& values) {
  if (symbols.size() != values.size()) {
    throw Error("expected " + std::to_string(symbols.size()) + " parameters, got " + std::to_string(values.size()));
  }
  Assignment x{};
  for (std::size_t i = 0; i < symbols.size(); ++i) x[symbols[i].index()] = values[i];
  return x;
}

void require_complete(const Trajectory& tr) {
  if (!tr.complete) throw NearPole("integration aborted: " + tr.note);
}

double max_distance(const Trajectory& a, const Trajectory& b) {
  double dev = 0.0;
  const std::size_t n = std::min(a.samples.size(), b.samples.size());
  for (std::size_t i = 0; i < n; ++i) {
    dev = std::max(dev, std::hypot(a.samples[i][1] - b.samples[i][1], a.samples[i][2] - b.samples[i][2]));
  }
  return dev;
}

}  // namespace

Trajectory integrate(SystemId id, const std::vector<double>& params, std::array<double, 3> initial, double t1,
                     double h) {
  const PainleveSystem& sys = painleve_system(id);
  Flow f = Flow::hamiltonian(sys.hamiltonian, sys.t_weight, sym::t, sym::q, sym::p);
  Trajectory tr = integrate(f, params_assignment(sys.params, params), initial, t1, h);
  tr.system = std::string(label(id));
  tr.params = params;
  return tr;
}

double backlund_numeric_check(SystemId id, const BacklundGen& g, const std::vector<double>& params,
                              std::array<double, 3> initial, double t1, double h) {
  const PainleveSystem& sys = painleve_system(id);
  const Assignment base = params_assignment(sys.params, params);
  auto image = [&](Symbol s) {
    const RatFn* v = g.action.find(s);
    return CompiledRatFn(v ? *v : RatFn::symbol(s));
  };
  const CompiledRatFn gt = image(sym::t), gq = image(sym::q), gp = image(sym::p);

  std::vector<double> new_params;
  for (Symbol s : sys.params) new_params.push_back(image(s)(base));

  Trajectory original = integrate(id, params, initial, t1, h);
  require_complete(original);
  Trajectory mapped = original;
  for (auto& s : mapped.samples) {
    Assignment x = base;
    x[sym::t.index()] = s[0];
    x[sym::q.index()] = s[1];
    x[sym::p.index()] = s[2];
    s = {gt(x), gq(x), gp(x)};
  }
  const auto& last = mapped.samples.back();
  Trajectory again = integrate(id, new_params, mapped.samples.front(), last[0], h);
  require_complete(again);
  return max_distance(mapped, again);
}

double degeneration_numeric_check(const DegenerationArrow& a, double eps, const std::vector<double>& A,
                                  std::array<double, 3> initial, double t1, double h, int N) {
  const Chart upper = upper_chart(a.target);
  Assignment base = params_assignment(upper.params, A);
  base[sym::eps.index()] = eps;
  const PainleveSystem& K = painleve_system(a.target);
  const RatFn weight = K.t_weight.substitute(to_upper());

  Flow deg = Flow::series(degenerate_hamiltonian(a, N > 0 ? N : a.default_order), weight, sym::T, sym::Q, sym::P);
  Flow target = Flow::hamiltonian(K.hamiltonian.substitute(to_upper()), weight, sym::T, sym::Q, sym::P);
  Trajectory x = integrate(deg, base, initial, t1, h);
  Trajectory y = integrate(target, base, initial, t1, h);
  require_complete(x);
  require_complete(y);
  return max_distance(x, y);
}

}  // namespace painleve
