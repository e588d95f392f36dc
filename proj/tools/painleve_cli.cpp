// painleve: verification reports for the Bäcklund groups of the Painlevé
// systems and their degenerations.

#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "painleve/errors.hpp"
#include "painleve/report.hpp"

using namespace painleve;

namespace {

SystemId system_arg(const std::string& text) {
  auto id = parse_system(text);
  if (!id) throw Error("unknown system '" + text + "' (expected I, II, III, IV, V or VI)");
  return *id;
}

const DegenerationArrow& arrow_arg(const std::vector<std::string>& pair) {
  if (pair.size() != 2) throw Error("an arrow is given as two systems, e.g. VI V");
  return arrow(system_arg(pair[0]), system_arg(pair[1]));
}

std::optional<NumericCase> case_arg(const std::vector<double>& params, const std::vector<double>& initial,
                                    std::optional<double> t1, NumericCase defaults) {
  if (params.empty() && initial.empty() && !t1) return std::nullopt;
  if (!params.empty()) defaults.params = params;
  if (!initial.empty()) {
    if (initial.size() != 3) throw Error("--initial takes three values t,q,p");
    defaults.initial = {initial[0], initial[1], initial[2]};
  }
  if (t1) defaults.t1 = *t1;
  return defaults;
}

int emit(const Report& rep, const std::string& format) {
  if (format == "json") {
    std::cout << rep.to_json().dump(2) << '\n';
  } else {
    rep.write_text(std::cout);
  }
  return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and numeric verification of Bäcklund groups of the Painlevé systems and their degenerations"};
  app.set_help_flag("--help", "print this help and exit");
  app.fallthrough();
  app.require_subcommand(1);

  ReportConfig cfg;
  cfg.jobs = std::max(1U, std::thread::hardware_concurrency());
  std::string format = "text";
  app.add_option("--format", format, "report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--order", cfg.order, "truncation order (default 8, or 12 for V->IV, IV->II, III->II)")
      ->check(CLI::Range(1, 40));
  app.add_option("--h", cfg.h, "RK4 step")->check(CLI::PositiveNumber);
  app.add_option("--eps", cfg.eps, "eps for numeric degeneration checks")->check(CLI::NonNegativeNumber);
  app.add_option("--tol", cfg.tol, "tolerance for numeric Bäcklund checks")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "seed of the randomized equality pre-check");
  app.add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::Range(1U, 1024U));

  auto* verify = app.add_subcommand("verify-groups", "relations, symplecticity, constraint and flow commutation");
  std::string system;
  verify->add_option("--system", system, "only this system (II..VI)");

  auto* degen = app.add_subcommand("degenerate", "degeneration checks for one arrow J -> K");
  std::vector<std::string> degen_arrow;
  std::string what = "all";
  degen->add_option("arrow", degen_arrow, "source and target, e.g. VI V")->expected(2)->required();
  degen->add_option("--what", what, "params, limits, hamiltonian, relations or all")
      ->check(CLI::IsMember({"params", "limits", "hamiltonian", "relations", "all"}));

  auto* numeric = app.add_subcommand("numeric", "RK4 cross-checks");
  numeric->require_subcommand(1);
  std::vector<double> params, initial;
  std::optional<double> t1;
  auto data_options = [&](CLI::App* sub) {
    sub->add_option("--params", params, "parameter values")->delimiter(',');
    sub->add_option("--initial", initial, "initial t,q,p")->delimiter(',');
    sub->add_option("--to", t1, "end of the time window");
  };
  auto* nb = numeric->add_subcommand("backlund", "g maps P_J solutions to solutions");
  std::string gen;
  nb->add_option("--system", system, "II..VI")->required();
  nb->add_option("--gen", gen, "generator, e.g. s1 (default: all)");
  data_options(nb);
  auto* nd = numeric->add_subcommand("degeneration", "P_{J->K} flow at eps against the P_K flow");
  std::vector<std::string> num_arrow;
  nd->add_option("--arrow", num_arrow, "source and target, e.g. V III")->expected(2)->required();
  data_options(nd);
  auto* nt = numeric->add_subcommand("trajectory", "dump a P_J trajectory as CSV");
  std::string out_path;
  nt->add_option("--system", system, "I..VI")->required();
  nt->add_option("--out", out_path, "CSV file (default: stdout)");
  data_options(nt);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) {
      std::optional<SystemId> only;
      if (!system.empty()) only = system_arg(system);
      return emit(cmd_verify_groups(only, cfg), format);
    }
    if (*degen) {
      const DegenerationArrow& a = arrow_arg(degen_arrow);
      return emit(cmd_degenerate(a, *parse_what(what), cfg), format);
    }
    if (*nb) {
      SystemId id = system_arg(system);
      int index = -1;
      if (!gen.empty()) {
        if (gen.size() < 2 || gen[0] != 's') throw Error("generator names look like s0, s1, ...");
        index = std::stoi(gen.substr(1));
      }
      return emit(cmd_numeric_backlund(id, index, case_arg(params, initial, t1, default_backlund_case(id)), cfg),
                  format);
    }
    if (*nd) {
      const DegenerationArrow& a = arrow_arg(num_arrow);
      return emit(cmd_numeric_degeneration(a, case_arg(params, initial, t1, default_degeneration_case(a)), cfg),
                  format);
    }
    if (*nt) {
      SystemId id = system_arg(system);
      NumericCase c = id == SystemId::I ? NumericCase{{}, {0, 0, 0}, 1} : default_backlund_case(id);
      if (auto given = case_arg(params, initial, t1, c)) c = *given;
      Trajectory tr = integrate(id, c.params, c.initial, c.t1, cfg.h);
      if (out_path.empty()) {
        tr.write_csv(std::cout);
      } else {
        std::ofstream f(out_path);
        if (!f) throw Error("cannot write " + out_path);
        tr.write_csv(f);
      }
      if (!tr.complete) {
        std::cerr << "trajectory stopped at t = " << tr.samples.back()[0] << ": " << tr.note << '\n';
        return 1;
      }
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
