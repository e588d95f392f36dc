#include "painleve/report.hpp"

#include <atomic>
#include <chrono>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include "painleve/errors.hpp"
#include "painleve/expr_io.hpp"

namespace painleve {

std::string_view status_name(Status s) noexcept {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skip: return "skip";
  }
  return "?";
}

std::size_t Report::count(Status s) const {
  std::size_t n = 0;
  for (const auto& r : records) n += r.status == s ? 1 : 0;
  return n;
}

void Report::write_text(std::ostream& out) const {
  out << "painleve " << kToolVersion << "  " << command << '\n';
  out << "config: order=" << (config.order > 0 ? std::to_string(config.order) : std::string("default"))
      << " h=" << config.h << " eps=" << config.eps << " tol=" << config.tol << " seed=" << config.seed
      << " jobs=" << config.jobs << '\n';
  for (const auto& b : branches) out << "branch: " << b << '\n';
  for (const auto& r : records) {
    std::string tag(status_name(r.status));
    for (auto& c : tag) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    out << tag << "  " << r.id << "  " << r.scope << "  " << r.inputs << "  [" << r.source << "]";
    out << "  (" << std::fixed << std::setprecision(2) << r.seconds << " s)" << std::defaultfloat
        << std::setprecision(6) << '\n';
    if (!r.detail.empty()) out << "      " << r.detail << '\n';
    if (!r.witness.empty()) out << "      witness: " << r.witness << '\n';
  }
  out << "summary: " << count(Status::Pass) << " pass, " << count(Status::Fail) << " fail, "
      << count(Status::Skip) << " skip, " << records.size() << " total\n";
}

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["schema_version"] = kReportSchemaVersion;
  j["tool"] = "painleve";
  j["version"] = kToolVersion;
  j["command"] = command;
  j["config"] = {{"order", config.order}, {"h", config.h},       {"eps", config.eps},
                 {"tol", config.tol},     {"seed", config.seed}, {"jobs", config.jobs}};
  j["branches"] = branches;
  auto& list = j["records"] = nlohmann::json::array();
  for (const auto& r : records) {
    nlohmann::json e = {{"id", r.id},           {"scope", r.scope},   {"inputs", r.inputs},
                        {"source", r.source},   {"status", status_name(r.status)},
                        {"detail", r.detail},   {"seconds", r.seconds}};
    if (r.status == Status::Fail || !r.witness.empty()) e["witness"] = r.witness;
    list.push_back(std::move(e));
  }
  j["summary"] = {{"pass", count(Status::Pass)},
                  {"fail", count(Status::Fail)},
                  {"skip", count(Status::Skip)},
                  {"total", records.size()}};
  return j;
}

std::vector<CheckRecord> run_tasks(const std::vector<CheckTask>& tasks, unsigned jobs) {
  std::vector<std::vector<CheckRecord>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < tasks.size();) results[i] = tasks[i]();
  };
  const unsigned n = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(tasks.size())));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < n; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::vector<CheckRecord> out;
  for (auto& r : results) {
    for (auto& rec : r) out.push_back(std::move(rec));
  }
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

// Times `body`, which fills status/witness/detail; library errors become
// failures with the error as witness.
CheckRecord timed(CheckRecord r, const std::function<void(CheckRecord&)>& body) {
  const auto start = Clock::now();
  try {
    body(r);
  } catch (const NearPole& e) {
    r.status = Status::Skip;
    r.witness = e.what();
  } catch (const std::exception& e) {
    r.status = Status::Fail;
    r.witness = e.what();
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (r.status == Status::Fail && r.witness.empty()) r.witness = "(no witness recorded)";
  return r;
}

void apply(CheckRecord& r, const Outcome& o) {
  r.status = o.pass ? Status::Pass : Status::Fail;
  r.witness = o.witness;
}

std::string group_name(SystemId id) {
  switch (id) {
    case SystemId::VI: return "W(D4^(1))";
    case SystemId::V: return "W(A3^(1))";
    case SystemId::IV: return "W(A2^(1))";
    case SystemId::III: return "W(C2^(1))";
    case SystemId::II: return "W(A1^(1))";
    default: return "none";
  }
}

std::string scope_of(SystemId id) { return "W_" + std::string(label(id)); }

std::vector<CheckTask> group_tasks(SystemId id) {
  std::vector<CheckTask> tasks;
  const std::string scope = scope_of(id);
  const std::string table = "Bäcklund group " + group_name(id) + " of P_" + std::string(label(id));
  for (const Relation& rel : fundamental_relations(id)) {
    tasks.push_back([=] {
      return std::vector{timed({"relation", scope, rel.label, "fundamental relations of " + table},
                               [&](CheckRecord& r) { apply(r, check_relation(id, rel.word)); })};
    });
  }
  for (const BacklundGen& g : generators(id)) {
    tasks.push_back([=, &g] {
      std::vector<CheckRecord> out;
      out.push_back(timed({"symplectic", scope, g.name + ": {g(p), g(q)} = 1", "generator table of " + table},
                          [&](CheckRecord& r) { apply(r, check_symplectic(g)); }));
      out.push_back(timed({"constraint", scope, g.name + " preserves the parameter constraint",
                           "generator table of " + table},
                          [&](CheckRecord& r) { apply(r, check_constraint_preserved(g)); }));
      out.push_back(timed({"commutation", scope, g.name + " commutes with the derivation of P_" + std::string(label(id)),
                           "Bäcklund transformations commute with the Painlevé flow"},
                          [&](CheckRecord& r) { apply(r, check_commutes_with_derivation(g)); }));
      return out;
    });
  }
  return tasks;
}

std::string arrow_source(const DegenerationArrow& a, const std::string& what) {
  return what + " for the degeneration P_" + std::string(label(a.source)) + " -> P_" + std::string(label(a.target));
}

int order_for(const DegenerationArrow& a, const ReportConfig& cfg) {
  return cfg.order > 0 ? cfg.order : a.default_order;
}

std::vector<CheckTask> structure_tasks(const DegenerationArrow& a) {
  const std::string scope = a.name();
  const std::string src = arrow_source(a, "change of variables");
  return {[=, &a] {
    return std::vector{
        timed({"structure", scope, "forward and inverse maps are mutually inverse", src},
              [&](CheckRecord& r) { apply(r, check_round_trip(a)); }),
        timed({"structure", scope, "{P, Q} = 1 after the change of variables", src},
              [&](CheckRecord& r) { apply(r, check_forward_symplectic(a)); }),
        timed({"structure", scope, "parameter constraint of P_J maps to that of P_K", src},
              [&](CheckRecord& r) { apply(r, check_constraint_transport(a)); })};
  }};
}

std::vector<CheckTask> params_tasks(const DegenerationArrow& a, int N) {
  std::vector<CheckTask> tasks;
  const std::string scope = a.name();
  for (std::size_t i = 0; i < a.generators.size(); ++i) {
    const SubgroupGenerator& g = a.generators[i];
    tasks.push_back([=, &a, &g] {
      std::vector<CheckRecord> out;
      out.push_back(timed({"params", scope, g.name + " = " + g.word.to_string() + " on A",
                           "W_" + std::string(label(a.target)) + " generator table"},
                          [&](CheckRecord& r) {
                            apply(r, check_params_vs_table(a, i));
                            std::string d;
                            for (Symbol A : upper_chart(a.target).params) {
                              d += (d.empty() ? "" : ", ") + std::string(A.name()) + " -> " +
                                   to_string(lift_param(a, g.word, A));
                            }
                            r.detail = d;
                          }));
      out.push_back(timed({"eps", scope, g.name + "(eps)", arrow_source(a, "branch convention of the subgroup")},
                          [&](CheckRecord& r) {
                            apply(r, check_eps_branch(a, g, N));
                            r.detail = "eps -> " + g.eps.to_string();
                          }));
      return out;
    });
  }
  return tasks;
}

std::vector<CheckTask> limit_tasks(const DegenerationArrow& a, int N) {
  std::vector<CheckTask> tasks;
  const std::string scope = a.name();
  for (std::size_t i = 0; i < a.generators.size(); ++i) {
    const SubgroupGenerator& g = a.generators[i];
    for (Symbol X : {sym::T, sym::Q, sym::P}) {
      tasks.push_back([=, &a, &g] {
        return std::vector{timed(
            {"limit", scope, g.name + "(" + std::string(X.name()) + ") as eps -> 0",
             "W_" + std::string(label(a.target)) + " generator s" + std::to_string(i)},
            [&](CheckRecord& r) {
              RatFn got = limit_action(a, g, X, N);
              RatFn want = target_table_entry(a, static_cast<int>(i), X);
              const bool ok = ratfn_equal(got, want);
              r.status = ok ? Status::Pass : Status::Fail;
              r.detail = "limit " + to_string(got) + "  |  table " + to_string(want);
              if (!ok) r.witness = r.detail;
            })};
      });
    }
  }
  if (a.source == SystemId::V && a.target == SystemId::III) {
    tasks.push_back([=, &a] {
      return std::vector{timed(
          {"remainder", scope, "S1(P) - (P - 2*A1/Q + T/Q^2) has eps-valuation >= 1",
           arrow_source(a, "lifted action of S1")},
          [&](CheckRecord& r) {
            LiftedGenerator L = lift_generator(a, a.generator("S1"), 4);
            RatFn rem = L.exact.at(sym::P) - parse("P - 2*A1/Q + T/Q^2");
            const int v = series_from_ratfn(rem, 4).valuation();
            r.status = !rem.is_zero() && v >= 1 ? Status::Pass : Status::Fail;
            r.detail = "valuation " + std::to_string(v);
            if (r.status == Status::Fail) r.witness = "remainder " + to_string(rem);
          })};
    });
  }
  if (a.source == SystemId::VI && a.target == SystemId::V) {
    tasks.push_back([=, &a] {
      return std::vector{timed(
          {"negative-control", scope, "raw s3 on A0 diverges as eps -> 0",
           "generators outside the subgroup have no limit"},
          [&](CheckRecord& r) {
            LiftedGenerator L = lift_word(a, Word::parse("s3"), 4);
            try {
              RatFn l = limit_eps0(L.actions.at(sym::A[0]));
              r.status = Status::Fail;
              r.witness = "finite limit " + to_string(l);
            } catch (const DivergesAtZero& e) {
              r.status = Status::Pass;
              r.detail = e.what();
            }
          })};
    });
  }
  return tasks;
}

std::vector<CheckTask> hamiltonian_tasks(const DegenerationArrow& a, int N) {
  const std::string scope = a.name();
  std::vector<CheckTask> tasks;
  tasks.push_back([=, &a] {
    return std::vector{timed(
        {"hamiltonian", scope, "order-0 coefficient of H_{J->K} vs H_K",
         "H_" + std::string(label(a.target)) + " up to (Q,P)-free terms and the constraint"},
        [&](CheckRecord& r) {
          HamiltonianComparison c = compare_hamiltonian(a, N);
          r.status = c.pass ? Status::Pass : Status::Fail;
          std::ostringstream d;
          d << "order0 " << to_string(c.order0);
          if (!c.dropped.is_zero()) d << "  dropped " << to_string(c.dropped);
          if (!c.pole_terms.empty()) d << "  (Q,P)-free pole orders " << c.pole_terms.size();
          r.detail = d.str();
          if (!c.pass) r.witness = c.detail;
        })};
  });
  tasks.push_back([=, &a] {
    return std::vector{timed({"transformed-system", scope, "P_J in (T,Q,P) is generated by H_{J->K}",
                              arrow_source(a, "transformed Hamiltonian system")},
                             [&](CheckRecord& r) { apply(r, check_transformed_system(a)); })};
  });
  if (a.source == SystemId::V && a.target == SystemId::III) {
    tasks.push_back([=, &a] {
      return std::vector{timed({"hamiltonian-identity", scope, "H_{V->III} = H_V + Q*P exactly",
                                arrow_source(a, "Hamiltonian")},
                               [&](CheckRecord& r) {
                                 Substitution F = a.param_map;
                                 for (Symbol s : a.forward.symbols()) F.bind(s, *a.forward.find(s));
                                 RatFn diff = degenerate_hamiltonian_exact(a) - hamiltonian(SystemId::V).substitute(F);
                                 const bool ok = ratfn_equal(diff, parse("Q*P"));
                                 r.status = ok ? Status::Pass : Status::Fail;
                                 if (!ok) r.witness = "difference " + to_string(diff);
                               })};
    });
  }
  return tasks;
}

std::vector<CheckTask> relation_tasks(const DegenerationArrow& a, int N) {
  const std::string scope = a.name();
  return {[=, &a] {
    std::vector<CheckRecord> out;
    const auto start = Clock::now();
    std::vector<SubgroupRelationResult> res;
    try {
      res = verify_subgroup_relations(a, N);
    } catch (const std::exception& e) {
      CheckRecord r{"subgroup-relations", scope, "all", "relations of W_" + std::string(label(a.target))};
      r.status = Status::Fail;
      r.witness = e.what();
      out.push_back(r);
      return out;
    }
    const double each = std::chrono::duration<double>(Clock::now() - start).count() /
                        static_cast<double>(std::max<std::size_t>(1, res.size()));
    for (const auto& s : res) {
      CheckRecord r{"subgroup-relation", scope, s.label + " = " + s.j_word.to_string() + " on C(alpha, t, q, p)",
                    "relations of W_" + std::string(label(a.target))};
      apply(r, s.exact);
      r.seconds = each / 2;
      out.push_back(r);
      CheckRecord l{"subgroup-relation-lifted", scope, s.label + " on the lifted (A, eps)",
                    "relations of W_" + std::string(label(a.target))};
      apply(l, s.lifted);
      l.seconds = each / 2;
      out.push_back(l);
    }
    return out;
  }};
}

void append(std::vector<CheckTask>& to, std::vector<CheckTask> from) {
  for (auto& t : from) to.push_back(std::move(t));
}

std::string fmt(double x) {
  std::ostringstream o;
  o << std::setprecision(6) << x;
  return o.str();
}

std::string describe_case(const NumericCase& c) {
  std::ostringstream o;
  o << "params (";
  for (std::size_t i = 0; i < c.params.size(); ++i) o << (i ? ", " : "") << fmt(c.params[i]);
  o << "), initial (" << fmt(c.initial[0]) << ", " << fmt(c.initial[1]) << ", " << fmt(c.initial[2]) << "), to "
    << fmt(c.t1);
  return o.str();
}

}  // namespace

std::optional<What> parse_what(std::string_view text) noexcept {
  if (text == "params") return What::Params;
  if (text == "limits") return What::Limits;
  if (text == "hamiltonian") return What::Hamiltonian;
  if (text == "relations") return What::Relations;
  if (text == "all") return What::All;
  return std::nullopt;
}

Report cmd_verify_groups(std::optional<SystemId> only, const ReportConfig& cfg) {
  if (only && *only == SystemId::I) throw UnsupportedSystem("no Bäcklund group for P_I");
  set_equality_seed(cfg.seed);
  Report rep;
  rep.config = cfg;
  rep.command = "verify-groups" + (only ? " --system " + std::string(label(*only)) : std::string());
  std::vector<CheckTask> tasks;
  for (SystemId id : {SystemId::VI, SystemId::V, SystemId::IV, SystemId::III, SystemId::II}) {
    if (!only || *only == id) append(tasks, group_tasks(id));
  }
  rep.records = run_tasks(tasks, cfg.jobs);
  return rep;
}

Report cmd_degenerate(const DegenerationArrow& a, What what, const ReportConfig& cfg) {
  set_equality_seed(cfg.seed);
  const int N = order_for(a, cfg);
  Report rep;
  rep.config = cfg;
  rep.config.order = N;
  static const char* names[] = {"params", "limits", "hamiltonian", "relations", "all"};
  rep.command = "degenerate " + std::string(label(a.source)) + " " + std::string(label(a.target)) + " --what " +
                names[static_cast<int>(what)];
  for (const auto& g : a.generators) {
    rep.branches.push_back(a.name() + " " + g.name + " = " + g.word.to_string() + ": eps -> " + g.eps.to_string());
  }
  std::vector<CheckTask> tasks;
  if (what == What::All) append(tasks, structure_tasks(a));
  if (what == What::Params || what == What::All) append(tasks, params_tasks(a, N));
  if (what == What::Limits || what == What::All) append(tasks, limit_tasks(a, N));
  if (what == What::Hamiltonian || what == What::All) append(tasks, hamiltonian_tasks(a, N));
  if (what == What::Relations || what == What::All) append(tasks, relation_tasks(a, std::min(N, 6)));
  rep.records = run_tasks(tasks, cfg.jobs);
  return rep;
}

NumericCase default_backlund_case(SystemId id) {
  switch (id) {
    case SystemId::II: return {{2.0 / 3, 1.0 / 3}, {0, 1, 1}, 1};
    case SystemId::III: return {{0.3, 0.2, 0.3}, {1, 0.6, 0.4}, 1.5};
    case SystemId::IV: return {{0.2, 0.5, 0.3}, {0, 0.3, 0.2}, 0.5};
    case SystemId::V: return {{0.1, 0.2, 0.3, 0.4}, {1, 0.4, 0.3}, 2};
    case SystemId::VI: return {{0.3, 0.2, 0.1, 0.2, 0.1}, {2, 0.4, 0.1}, 2.5};
    default: throw UnsupportedSystem("no Bäcklund group for P_I");
  }
}

NumericCase default_degeneration_case(const DegenerationArrow& a) {
  switch (a.target) {
    case SystemId::V: return {{0.3, 0.2, 0.1, 0.4}, {1, 0.5, 0.3}, 1.5};
    case SystemId::III: return {{0.3, 0.2, 0.3}, {1, 0.5, 0.3}, 1.5};
    case SystemId::IV: return {{0.2, 0.5, 0.3}, {0, 0.3, 0.2}, 0.5};
    default: return {{0.6, 0.4}, {0, 0.5, 0.3}, 0.5};
  }
}

Report cmd_numeric_backlund(SystemId id, int gen, const std::optional<NumericCase>& data, const ReportConfig& cfg) {
  const NumericCase c = data ? *data : default_backlund_case(id);
  Report rep;
  rep.config = cfg;
  rep.command = "numeric backlund --system " + std::string(label(id)) + (gen >= 0 ? " --gen s" + std::to_string(gen) : "");
  std::vector<CheckTask> tasks;
  for (const BacklundGen& g : generators(id)) {
    if (gen >= 0 && g.index != gen) continue;
    tasks.push_back([=, &g] {
      return std::vector{timed({"numeric-backlund", scope_of(id), g.name + " with " + describe_case(c),
                                "Bäcklund transformations map solutions to solutions"},
                               [&](CheckRecord& r) {
                                 double d = backlund_numeric_check(id, g, c.params, c.initial, c.t1, cfg.h);
                                 r.status = d < cfg.tol ? Status::Pass : Status::Fail;
                                 r.detail = "max deviation " + fmt(d) + " (tol " + fmt(cfg.tol) + ", h " + fmt(cfg.h) + ")";
                                 if (r.status == Status::Fail) r.witness = r.detail;
                               })};
    });
  }
  if (tasks.empty()) throw Error("P_" + std::string(label(id)) + " has no generator s" + std::to_string(gen));
  rep.records = run_tasks(tasks, cfg.jobs);
  return rep;
}

Report cmd_numeric_degeneration(const DegenerationArrow& a, const std::optional<NumericCase>& data,
                                const ReportConfig& cfg) {
  const NumericCase c = data ? *data : default_degeneration_case(a);
  Report rep;
  rep.config = cfg;
  rep.config.order = order_for(a, cfg);
  rep.command = "numeric degeneration --arrow " + std::string(label(a.source)) + " " + std::string(label(a.target));
  rep.records.push_back(timed({"numeric-degeneration", a.name(), "eps " + fmt(cfg.eps) + ", " + describe_case(c),
                               arrow_source(a, "P_J tends to P_K as eps -> 0")},
                              [&](CheckRecord& r) {
                                double d = degeneration_numeric_check(a, cfg.eps, c.params, c.initial, c.t1, cfg.h,
                                                                      rep.config.order);
                                const double tol = 10 * cfg.eps;
                                r.status = d < tol ? Status::Pass : Status::Fail;
                                r.detail = "max deviation " + fmt(d) + " (tol 10*eps = " + fmt(tol) + ")";
                                if (r.status == Status::Fail) r.witness = r.detail;
                              }));
  return rep;
}

}  // namespace painleve
