#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "painleve/backlund.hpp"
#include "painleve/eps_series.hpp"

namespace painleve {

/// How a lifted generator acts on eps: either an exact rational function of
/// (A, eps), or a branch sign * eps * (1 + base)^exponent with the binomial
/// series convention (constant term 1).
struct EpsAction {
  std::optional<RatFn> exact;
  int sign = 1;
  RatFn base;          // in A and eps, valuation >= 1
  mpq_class exponent;  // e.g. -1/2

  static EpsAction identity() { return EpsAction{RatFn::symbol(sym::eps), 1, RatFn(), 0}; }
  /// Series through order N (exact actions are expanded too).
  EpsSeries series(int N) const;
  std::string to_string() const;
};

struct SubgroupGenerator {
  std::string name;  // "S0", ...
  Word word;
  Word alternate;    // a second spelling of the same element (may equal `word`)
  EpsAction eps;
  int tau_sign = 1;  // action on the auxiliary square root, when the arrow has one
};

/// One degeneration P_J -> P_K: parameter map, variable maps, subgroup words
/// and Hamiltonian rescaling.
struct DegenerationArrow {
  SystemId source;
  SystemId target;
  Substitution param_map;      // alpha_i -> RatFn(A, eps)
  Substitution forward;        // t, q, p (and tau) -> RatFn(A, eps, T, Q, P)
  Substitution inverse;        // T, Q, P -> RatFn(alpha, eps, t, q, p[, tau])
  Substitution param_inverse;  // A_j -> RatFn(alpha)
  std::optional<RatFn> eps_inverse;  // eps as a function of alpha, when birational
  int eps_power = 1;                 // otherwise eps^eps_power = eps_power_value(alpha)
  RatFn eps_power_value;
  /// Auxiliary square root tau with tau^2 = tau_square (in t); zero when absent.
  RatFn tau_square;
  RatFn tau_derivation;              // delta_J tau
  RatFn ham_factor;                  // c, with delta_K = c * delta_J
  RatFn ham_shift;
  bool delta_commutes = true;
  int default_order = 8;
  std::vector<SubgroupGenerator> generators;

  bool has_tau() const { return !tau_square.is_zero(); }
  std::string name() const;
  const SubgroupGenerator& generator(const std::string& name) const;
};

/// UnsupportedArrow for pairs outside the five arrows; the (II, I) refusal
/// explains why.
const DegenerationArrow& arrow(SystemId source, SystemId target);
const std::vector<const DegenerationArrow*>& all_arrows();

/// Lifted action of a W_J element on (A, eps, T, Q, P).
struct LiftedGenerator {
  const DegenerationArrow* arrow = nullptr;
  std::string name;
  Word word;
  std::map<Symbol, EpsSeries> actions;
  /// Exact values where the lift is rational (always for A_j; for eps, T, Q, P
  /// on birational arrows).
  std::map<Symbol, RatFn> exact;
};

/// Symbols a lifted generator acts on: A_0..., eps, T, Q, P.
std::vector<Symbol> lifted_symbols(const DegenerationArrow& a);

/// Exact image of a parameter A_j under a W_J word, in (A, eps).
RatFn lift_param(const DegenerationArrow& a, const Word& w, Symbol A);
/// Exact image of eps for birational arrows.
std::optional<RatFn> lift_eps_exact(const DegenerationArrow& a, const Word& w);
/// Image of eps^eps_power under w, exact in (A, eps).
RatFn lift_eps_power(const DegenerationArrow& a, const Word& w);

/// Image of X in {T, Q, P} under w with eps acting by `eps_action`, as a
/// series through order N.
EpsSeries lift_variable(const DegenerationArrow& a, const Word& w, const EpsAction& eps_action, int tau_sign,
                        Symbol X, int N);
/// Exact version for arrows where eps acts rationally.
RatFn lift_variable_exact(const DegenerationArrow& a, const Word& w, const RatFn& eps_image, int tau_sign, Symbol X);

LiftedGenerator lift_generator(const DegenerationArrow& a, const SubgroupGenerator& g, int N);
/// Lift of a raw W_J word (only meaningful on birational arrows, where eps
/// acts rationally); used for the divergence control.
LiftedGenerator lift_word(const DegenerationArrow& a, const Word& w, int N);

/// limit_eps0 of the lifted action on X.
RatFn limit_action(const DegenerationArrow& a, const SubgroupGenerator& g, Symbol X, int N);
/// The W_K table entry for generator `index` acting on X, written in (A, T, Q, P).
RatFn target_table_entry(const DegenerationArrow& a, int index, Symbol X);

/// c * H_J (pushed forward) + shift, exact and as a series.
RatFn degenerate_hamiltonian_exact(const DegenerationArrow& a);
EpsSeries degenerate_hamiltonian(const DegenerationArrow& a, int N);

/// Comparison of the order-0 Hamiltonian with H_K. Hamiltonians generate
/// the same flow when they differ by a (Q, P)-free function, so those terms
/// (and the constraint) are factored out; `dropped` lists what was ignored.
struct HamiltonianComparison {
  bool pass = false;
  std::vector<std::pair<int, RatFn>> pole_terms;  // negative orders (must be (Q,P)-free)
  RatFn order0;
  RatFn dropped;                                  // order0 - H_K on the constraint surface
  std::string detail;
};
HamiltonianComparison compare_hamiltonian(const DegenerationArrow& a, int N);

/// Exact check that P_J in (T, Q, P) is the Hamiltonian system of H_{J->K}
/// with delta_K = c * delta_J: delta_K T = weight_K, delta_K Q = dH/dP,
/// delta_K P = -dH/dQ.
Outcome check_transformed_system(const DegenerationArrow& a);

/// c * w(1/c): the factor in front of w(H_{J->K}) in the transformed system.
/// The constant 1 when delta_K commutes with the subgroup.
EpsSeries transformed_system_factor(const DegenerationArrow& a, const SubgroupGenerator& g, int N);

/// Check (a): the relation word of W_K, spelled in W_J letters, holds on
/// C(alpha, t, q, p). Check (b): it holds on the lifted (A, eps) actions.
/// `full_field` (informational) tests the lifted T, Q, P actions as series.
struct SubgroupRelationResult {
  std::string label;
  Word j_word;
  Outcome exact;
  Outcome lifted;
  Outcome full_field;
};
std::vector<SubgroupRelationResult> verify_subgroup_relations(const DegenerationArrow& a, int N);

/// Lifted action on (A, eps) of a product of subgroup generators (by index).
struct LiftedParams {
  std::map<Symbol, RatFn> params;
  EpsSeries eps;
  int tau_sign = 1;
};
LiftedParams compose_lifted_params(const DegenerationArrow& a, const std::vector<int>& indices, int N);

/// The declared eps action agrees with the lift: exactly on birational
/// arrows, and through w(eps)^k == w(eps^k) on branched ones.
Outcome check_eps_branch(const DegenerationArrow& a, const SubgroupGenerator& g, int N);
/// Lifted A-actions are eps-free and equal the W_K table.
Outcome check_params_vs_table(const DegenerationArrow& a, std::size_t index);
/// limit_eps0 of the lifted T, Q, P actions equals the W_K table.
Outcome check_limits(const DegenerationArrow& a, std::size_t index, int N);

/// Structural checks of the arrow data.
Outcome check_round_trip(const DegenerationArrow& a);
Outcome check_forward_symplectic(const DegenerationArrow& a);
Outcome check_constraint_transport(const DegenerationArrow& a);

}  // namespace painleve
