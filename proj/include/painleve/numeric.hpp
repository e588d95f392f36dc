#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "painleve/backlund.hpp"
#include "painleve/degeneration.hpp"

namespace painleve {

/// Real values for the registry symbols, indexed by Symbol::index().
using Assignment = std::array<double, kSymbolCount>;

Assignment make_assignment(std::initializer_list<std::pair<Symbol, double>> values);

/// Double-precision value of f; NearPole when |den| <= kPoleGuard.
inline constexpr double kPoleGuard = 1e-12;
double eval(const RatFn& f, const Assignment& x);

/// A rational function flattened to doubles for repeated evaluation.
class CompiledRatFn {
 public:
  CompiledRatFn() = default;
  explicit CompiledRatFn(const RatFn& f);
  double operator()(const Assignment& x) const;

 private:
  struct Term {
    double coeff;
    std::vector<std::pair<std::uint8_t, std::uint16_t>> factors;
  };
  static std::vector<Term> flatten(const Poly& p);
  static double value(const std::vector<Term>& terms, const Assignment& x);
  std::vector<Term> num_;
  std::vector<Term> den_;
};

/// dq/dt = {H, q}/w, dp/dt = {H, p}/w in a chart (t, q, p). H may be a
/// truncated eps-series, kept as (coefficient, order) pairs evaluated at the
/// assignment's eps.
class Flow {
 public:
  static Flow hamiltonian(const RatFn& H, const RatFn& weight, Symbol t, Symbol q, Symbol p);
  static Flow series(const EpsSeries& H, const RatFn& weight, Symbol t, Symbol q, Symbol p);

  /// (dq/dt, dp/dt) at (t, q, p) with the other symbols from `base`.
  std::array<double, 2> field(const Assignment& base, double t, double q, double p) const;

 private:
  struct Part {
    CompiledRatFn f;
    int order;
  };
  std::vector<Part> dq_;
  std::vector<Part> dp_;
  CompiledRatFn weight_;
  Symbol t_ = sym::t;
  Symbol q_ = sym::q;
  Symbol p_ = sym::p;
};

struct Trajectory {
  std::string system;
  std::vector<double> params;
  double h = 0;
  std::vector<std::array<double, 3>> samples;  // (t, q, p)
  bool complete = true;                        // false when aborted near a pole
  std::string note;

  /// "t,q,p" header, one sample per line, 17 significant digits.
  void write_csv(std::ostream& out) const;
};

/// Fixed-step RK4 from (t0, q0, p0) to t1 (either direction, |step| = h).
/// Stops early with complete = false when a pole guard trips.
Trajectory integrate(const Flow& flow, const Assignment& base, std::array<double, 3> initial, double t1, double h);
Trajectory integrate(SystemId id, const std::vector<double>& params, std::array<double, 3> initial, double t1,
                     double h);

/// Max distance between g applied to a P_J trajectory and the P_J trajectory
/// with g-transformed parameters from the mapped initial point.
double backlund_numeric_check(SystemId id, const BacklundGen& g, const std::vector<double>& params,
                              std::array<double, 3> initial, double t1, double h);

/// Max distance between the flow of the truncated H_{J->K} at eps and the
/// P_K flow, both from (T0, Q0, P0) with parameters A. N = 0 uses the arrow's
/// default order.
double degeneration_numeric_check(const DegenerationArrow& a, double eps, const std::vector<double>& A,
                                  std::array<double, 3> initial, double t1, double h, int N = 0);

}  // namespace painleve
