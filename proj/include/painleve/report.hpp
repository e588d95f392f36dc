#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "painleve/degeneration.hpp"
#include "painleve/numeric.hpp"

namespace painleve {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kReportSchemaVersion = 1;

enum class Status { Pass, Fail, Skip };
std::string_view status_name(Status s) noexcept;

struct CheckRecord {
  std::string id;      // e.g. "relation", "limit", "numeric-backlund"
  std::string scope;   // group or arrow, e.g. "W_VI", "VI->V"
  std::string inputs;  // what was checked, e.g. "(s0 s2)^3" or "S0(T)"
  std::string source;  // where the expected value comes from
  Status status = Status::Pass;
  std::string witness;  // always set on failure
  std::string detail;   // optional printable result (limits, deviations)
  double seconds = 0;
};

struct ReportConfig {
  int order = 0;  // 0: each arrow's default
  double h = 1e-3;
  double eps = 1e-3;
  double tol = 1e-6;
  std::uint64_t seed = 20240601;
  unsigned jobs = 1;
};

struct Report {
  std::string command;
  ReportConfig config;
  std::vector<std::string> branches;
  std::vector<CheckRecord> records;

  std::size_t count(Status s) const;
  bool ok() const { return count(Status::Fail) == 0; }
  void write_text(std::ostream& out) const;
  nlohmann::json to_json() const;
};

using CheckTask = std::function<std::vector<CheckRecord>()>;
/// Runs the tasks on `jobs` threads; records come back in task order.
std::vector<CheckRecord> run_tasks(const std::vector<CheckTask>& tasks, unsigned jobs);

/// Relations, symplecticity, constraint and derivation commutation of the
/// Bäcklund groups (all when `only` is empty); UnsupportedSystem for P_I.
Report cmd_verify_groups(std::optional<SystemId> only, const ReportConfig& cfg);

enum class What { Params, Limits, Hamiltonian, Relations, All };
std::optional<What> parse_what(std::string_view text) noexcept;
/// UnsupportedArrow for pairs that are not arrows.
Report cmd_degenerate(const DegenerationArrow& a, What what, const ReportConfig& cfg);

/// Default generic data for the numeric checks.
struct NumericCase {
  std::vector<double> params;
  std::array<double, 3> initial;
  double t1;
};
NumericCase default_backlund_case(SystemId id);
NumericCase default_degeneration_case(const DegenerationArrow& a);

/// `gen` < 0 runs every generator. Deviations are compared with cfg.tol.
Report cmd_numeric_backlund(SystemId id, int gen, const std::optional<NumericCase>& data, const ReportConfig& cfg);
/// Deviation at cfg.eps is compared with 10 * eps.
Report cmd_numeric_degeneration(const DegenerationArrow& a, const std::optional<NumericCase>& data,
                                const ReportConfig& cfg);

}  // namespace painleve
