#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "painleve/ratfn.hpp"

namespace painleve {

enum class SystemId : std::uint8_t { VI, V, IV, III, II, I };

inline constexpr std::array<SystemId, 6> kAllSystems{SystemId::VI, SystemId::V,  SystemId::IV,
                                                     SystemId::III, SystemId::II, SystemId::I};

std::string_view label(SystemId id) noexcept;
/// Accepts roman numerals ("VI", "iv", ...).
std::optional<SystemId> parse_system(std::string_view text) noexcept;

/// The coordinate letters a system is written in: (alpha, t, q, p) for the
/// source of a degeneration, (A, T, Q, P) for its target.
struct Chart {
  std::vector<Symbol> params;
  Symbol t;
  Symbol q;
  Symbol p;
};

struct PainleveSystem {
  SystemId id;
  RatFn hamiltonian;     // in alpha, t, q, p
  RatFn t_weight;        // delta t
  std::vector<Symbol> params;
  RatFn constraint;      // weighted sum of params; equals 1 on the system
};

const PainleveSystem& painleve_system(SystemId id);
RatFn hamiltonian(SystemId id);

/// The standard chart (alpha, t, q, p) and the capital chart (A, T, Q, P)
/// used for the target of a degeneration arrow.
Chart lower_chart(SystemId id);
Chart upper_chart(SystemId id);
/// Renames alpha_i -> A_i, t -> T, q -> Q, p -> P.
const Substitution& to_upper();

/// {f, g} = f_p g_q - f_q g_p in the chart's (q, p).
RatFn poisson_bracket(const RatFn& f, const RatFn& g, Symbol q = sym::q, Symbol p = sym::p);

/// delta f = f_t * weight + f_q * {H, q} + f_p * {H, p}, with delta(param) = 0.
RatFn derivation_apply(const RatFn& H, const RatFn& t_weight, const RatFn& f, const Chart& chart);
RatFn derivation_apply(SystemId id, const RatFn& f);

/// Eliminates the first parameter through the constraint (every system
/// gives it weight 1), so identities that hold only on the constraint
/// surface become plain identities.
RatFn impose_constraint(SystemId id, const RatFn& f, const Chart& chart);

}  // namespace painleve
