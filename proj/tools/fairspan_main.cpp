// fairspan: generate, run, certify, and sweep fair scheduling mechanisms on
// exact-rational instances. Exit codes: 0 success, 1 certificate failure,
// 2 validation error, 3 enumeration cap exceeded.

#include <algorithm>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fairspan/fairness.hpp"
#include "fairspan/generators.hpp"
#include "fairspan/goods.hpp"
#include "fairspan/instance.hpp"
#include "fairspan/io.hpp"
#include "fairspan/mechanisms.hpp"
#include "fairspan/oracles.hpp"

namespace {

using fairspan::Allocation;
using fairspan::Instance;
using fairspan::Kind;
using fairspan::PaymentVector;
using fairspan::Rational;
using ojson = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitCertificateFailure = 1;
constexpr int kExitValidation = 2;
constexpr int kExitCapExceeded = 3;

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    fairspan::write_text_file(out_path, text);
  }
}

std::string mangle(const Rational& r) {
  std::string s = r.str();
  std::replace(s.begin(), s.end(), '/', '_');
  return s;
}

ojson payments_json(const PaymentVector& payments) {
  ojson arr = ojson::array();
  for (const Rational& p : payments.payments) arr.push_back(p.str());
  return arr;
}

ojson allocation_json(const Allocation& alloc) {
  ojson arr = ojson::array();
  for (int j = 0; j < alloc.job_count(); ++j) arr.push_back(alloc.machine_of(j) + 1);
  return arr;
}

struct GenOptions {
  int machines = 0;
  int jobs = 0;
  std::string eps = "1/4";
  std::uint64_t seed = 0;
  std::string kind = "chores";
  int denominator = 1000;
  std::string out;
};

int run_gen(const std::string& family, const GenOptions& opt) {
  Instance inst = [&]() {
    if (family == "lb32") {
      return fairspan::lb_three_halves_instance(opt.machines, opt.jobs,
                                                Rational::parse(opt.eps));
    }
    if (family == "goods-lb") return fairspan::goods_lb_instance(opt.machines, opt.jobs);
    const Kind kind = fairspan::kind_from_string(opt.kind);
    const auto fam = family == "uniform" ? fairspan::RandomFamily::uniform_unit
                                         : fairspan::RandomFamily::normalized_uniform;
    return fairspan::random_instance(opt.machines, opt.jobs, kind, opt.seed, fam,
                                     opt.denominator);
  }();
  emit(opt.out, fairspan::instance_to_json_text(inst));
  return kExitOk;
}

struct RunOptions {
  std::string instance_path;
  std::string base_allocation;
  std::string eps;
  bool with_opt = false;
  std::string out;
};

Allocation resolve_base_allocation(const Instance& inst, const RunOptions& opt,
                                   std::uint64_t cap,
                                   std::optional<fairspan::OptResult>& opt_cache) {
  if (!opt.base_allocation.empty() && opt.base_allocation != "opt") {
    return fairspan::parse_assignment_text(opt.base_allocation, inst.machines(), inst.jobs());
  }
  if (opt.base_allocation.empty() && !opt.with_opt) {
    throw std::invalid_argument(
        "this mechanism needs --base-allocation (literal or 'opt') or --with-opt");
  }
  if (!opt_cache) opt_cache = fairspan::brute_force_opt(inst, cap);
  return opt_cache->witness;
}

void attach_opt_ratio(ojson& report, const char* value_key, const Rational& value,
                      const Rational& opt_value) {
  report["opt"] = opt_value.str();
  ojson ratios = ojson::object();
  if (!opt_value.is_zero()) {
    ratios[std::string(value_key) + "_over_opt"] = (value / opt_value).str();
  }
  report["ratios"] = std::move(ratios);
}

int run_run(const std::string& mechanism, const RunOptions& opt, std::uint64_t cap) {
  Instance inst = fairspan::read_instance_file(opt.instance_path);
  std::optional<fairspan::OptResult> opt_cache;
  ojson report;
  report["mechanism"] = mechanism;
  bool all_true = true;

  if (mechanism == "anti-diagonal") {
    Allocation base = resolve_base_allocation(inst, opt, cap, opt_cache);
    auto result = fairspan::anti_diagonal_mechanism(inst, base);
    const Rational span = fairspan::makespan(inst, result.outcome.allocation);
    report["allocation"] = allocation_json(result.outcome.allocation);
    report["payments"] = payments_json(result.outcome.payments);
    report["makespan"] = span.str();
    ojson certs;
    certs["mean_efficient"] = fairspan::is_mean_efficient(inst, result.outcome.allocation);
    certs["proportional"] =
        fairspan::is_proportional(inst, result.outcome.allocation, result.outcome.payments);
    for (auto& [k, v] : certs.items()) all_true = all_true && v.get<bool>();
    report["certificates"] = std::move(certs);
    if (opt.with_opt) {
      if (!opt_cache) opt_cache = fairspan::brute_force_opt(inst, cap);
      attach_opt_ratio(report, "makespan", span, opt_cache->value);
    }
  } else if (mechanism == "cyclic") {
    if (opt.eps.empty()) throw std::invalid_argument("cyclic needs --eps");
    const Rational eps = Rational::parse(opt.eps);
    Allocation base = resolve_base_allocation(inst, opt, cap, opt_cache);
    auto result = fairspan::cyclic_mechanism(inst, base, eps);
    const Rational span = fairspan::makespan(inst, result.outcome.allocation);
    const Rational alpha = Rational(1) - eps;
    report["allocation"] = allocation_json(result.outcome.allocation);
    report["payments"] = payments_json(result.outcome.payments);
    report["makespan"] = span.str();
    report["eps"] = eps.str();
    ojson certs;
    certs["cyclic_ef_" + mangle(alpha)] = fairspan::is_cyclic_envy_free(
        inst, result.outcome.allocation, result.outcome.payments, alpha);
    for (auto& [k, v] : certs.items()) all_true = all_true && v.get<bool>();
    report["certificates"] = std::move(certs);
    if (opt.with_opt) {
      if (!opt_cache) opt_cache = fairspan::brute_force_opt(inst, cap);
      attach_opt_ratio(report, "makespan", span, opt_cache->value);
    }
  } else if (mechanism == "normalized-opt") {
    auto outcome = fairspan::normalized_optimal_mechanism(inst, cap);
    const Rational span = fairspan::makespan(inst, outcome.allocation);
    report["allocation"] = allocation_json(outcome.allocation);
    report["payments"] = payments_json(outcome.payments);
    report["makespan"] = span.str();
    ojson certs;
    certs["mean_efficient"] = fairspan::is_mean_efficient(inst, outcome.allocation);
    certs["proportional"] = fairspan::is_proportional(inst, outcome.allocation, outcome.payments);
    certs["improvement_graph_acyclic"] =
        fairspan::is_acyclic(fairspan::make_improvement_graph(inst, outcome.allocation));
    for (auto& [k, v] : certs.items()) all_true = all_true && v.get<bool>();
    report["certificates"] = std::move(certs);
    // the same enumeration that selected the allocation establishes OPT
    attach_opt_ratio(report, "makespan", span, span);
  } else if (mechanism == "goods-normalized-opt") {
    auto outcome = fairspan::goods_normalized_optimal_mechanism(inst, cap);
    const Rational welfare = fairspan::egalitarian_welfare(inst, outcome.allocation);
    report["allocation"] = allocation_json(outcome.allocation);
    report["payments"] = payments_json(outcome.payments);
    report["welfare"] = welfare.str();
    ojson certs;
    certs["mean_efficient"] = fairspan::is_mean_efficient(inst, outcome.allocation);
    certs["proportional"] = fairspan::is_proportional(inst, outcome.allocation, outcome.payments);
    for (auto& [k, v] : certs.items()) all_true = all_true && v.get<bool>();
    report["certificates"] = std::move(certs);
    attach_opt_ratio(report, "welfare", welfare, welfare);
  } else {
    throw std::invalid_argument("unknown mechanism '" + mechanism + "'");
  }

  emit(opt.out, report.dump(2) + "\n");
  return all_true ? kExitOk : kExitCertificateFailure;
}

struct CheckOptions {
  std::string instance_path;
  std::string allocation;
  std::string payments;
  std::string alpha = "1";
  std::string out;
};

int run_check(const CheckOptions& opt) {
  Instance inst = fairspan::read_instance_file(opt.instance_path);
  Allocation alloc =
      fairspan::parse_assignment_text(opt.allocation, inst.machines(), inst.jobs());
  const Rational alpha = Rational::parse(opt.alpha);
  PaymentVector payments;
  if (opt.payments.empty()) {
    payments = fairspan::proportional_payments(inst, alloc);
  } else {
    payments.payments = fairspan::parse_rational_list(opt.payments);
    fairspan::check_dimensions(inst, payments);
  }

  ojson report;
  report["allocation"] = allocation_json(alloc);
  report["payments"] = payments_json(payments);
  report["alpha"] = alpha.str();
  ojson certs;
  certs["mean_efficient"] = fairspan::is_mean_efficient(inst, alloc);
  certs["proportional"] = fairspan::is_proportional(inst, alloc, payments);
  std::vector<int> witness;
  if (inst.kind() == Kind::chores) {
    certs["alpha_ef"] = fairspan::is_alpha_envy_free(inst, alloc, payments, alpha);
    certs["cyclic_ef"] = fairspan::is_cyclic_envy_free(inst, alloc, payments, alpha);
    auto heaviest = fairspan::heaviest_path_payments(inst, alloc, alpha);
    certs["locally_efficient"] = heaviest.payments.has_value();
    witness = heaviest.positive_cycle;
  }
  bool all_true = true;
  for (auto& [k, v] : certs.items()) all_true = all_true && v.get<bool>();
  report["certificates"] = std::move(certs);
  if (!witness.empty()) {
    ojson cycle = ojson::array();
    for (int v : witness) cycle.push_back(v + 1);
    report["witness_cycle"] = std::move(cycle);
  }

  emit(opt.out, report.dump(2) + "\n");
  return all_true ? kExitOk : kExitCertificateFailure;
}

struct SweepOptions {
  std::string family;
  std::vector<int> machines;
  std::vector<int> jobs;
  std::vector<std::string> eps;         // lb32 family parameter
  std::vector<std::string> cyclic_eps;  // adds cyclic mechanism rows
  int trials = 1;
  std::uint64_t seed = 0;
  std::string kind = "chores";
  int denominator = 1000;
  std::string out;
};

struct SweepRow {
  std::string seed, m, n, family, mechanism, makespan, opt, ratio, mean_efficient, proportional,
      status;
};

std::string csv_line(const SweepRow& r) {
  return r.seed + "," + r.m + "," + r.n + "," + r.family + "," + r.mechanism + "," + r.makespan +
         "," + r.opt + "," + r.ratio + "," + r.mean_efficient + "," + r.proportional + "," +
         r.status + "\r\n";
}

struct SweepPoint {
  std::uint64_t seed;
  int m;
  int n;
  std::string eps;  // empty unless lb32
};

std::vector<SweepRow> sweep_point_rows(const SweepOptions& opt, const SweepPoint& point,
                                       std::uint64_t cap) {
  SweepRow base;
  base.seed = std::to_string(point.seed);
  base.m = std::to_string(point.m);
  base.n = std::to_string(point.n);
  base.family = opt.family;
  base.status = "ok";

  std::vector<std::string> mechanisms;
  Instance inst = [&]() {
    if (opt.family == "lb32") {
      return fairspan::lb_three_halves_instance(point.m, point.n, Rational::parse(point.eps));
    }
    if (opt.family == "goods-lb") return fairspan::goods_lb_instance(point.m, point.n);
    const auto fam = opt.family == "uniform" ? fairspan::RandomFamily::uniform_unit
                                             : fairspan::RandomFamily::normalized_uniform;
    return fairspan::random_instance(point.m, point.n, fairspan::kind_from_string(opt.kind),
                                     point.seed, fam, opt.denominator);
  }();

  const bool chores = inst.kind() == Kind::chores;
  const bool normalized = fairspan::normalization_factor(inst).has_value();
  if (chores) {
    mechanisms.push_back("anti-diagonal");
    for (const std::string& ce : opt.cyclic_eps) mechanisms.push_back("cyclic-" + ce);
    if (normalized) mechanisms.push_back("normalized-opt");
  } else if (normalized) {
    mechanisms.push_back("goods-normalized-opt");
  }
  mechanisms.push_back("best-proportionable");

  std::vector<SweepRow> rows;
  try {
    fairspan::EnumerationReport report = fairspan::make_enumeration_report(inst, cap);
    auto ratio_text = [&](const Rational& value) {
      return report.opt.is_zero() ? std::string() : (value / report.opt).str();
    };
    for (const std::string& name : mechanisms) {
      SweepRow row = base;
      row.mechanism = name;
      row.opt = report.opt.str();
      if (name == "anti-diagonal") {
        auto result = fairspan::anti_diagonal_mechanism(
            inst, fairspan::brute_force_opt(inst, cap).witness);
        Rational span = fairspan::makespan(inst, result.outcome.allocation);
        row.makespan = span.str();
        row.ratio = ratio_text(span);
        row.mean_efficient =
            fairspan::is_mean_efficient(inst, result.outcome.allocation) ? "true" : "false";
        row.proportional = fairspan::is_proportional(inst, result.outcome.allocation,
                                                     result.outcome.payments)
                               ? "true"
                               : "false";
      } else if (name.rfind("cyclic-", 0) == 0) {
        const Rational eps = Rational::parse(name.substr(7));
        auto result = fairspan::cyclic_mechanism(
            inst, fairspan::brute_force_opt(inst, cap).witness, eps);
        Rational span = fairspan::makespan(inst, result.outcome.allocation);
        row.makespan = span.str();
        row.ratio = ratio_text(span);
        row.mean_efficient =
            fairspan::is_mean_efficient(inst, result.outcome.allocation) ? "true" : "false";
        row.proportional = fairspan::is_proportional(inst, result.outcome.allocation,
                                                     result.outcome.payments)
                               ? "true"
                               : "false";
      } else if (name == "normalized-opt" || name == "goods-normalized-opt") {
        auto outcome = chores ? fairspan::normalized_optimal_mechanism(inst, cap)
                              : fairspan::goods_normalized_optimal_mechanism(inst, cap);
        Rational value = chores ? fairspan::makespan(inst, outcome.allocation)
                                : fairspan::egalitarian_welfare(inst, outcome.allocation);
        row.makespan = value.str();
        row.ratio = ratio_text(value);
        row.mean_efficient = fairspan::is_mean_efficient(inst, outcome.allocation) ? "true" : "false";
        row.proportional =
            fairspan::is_proportional(inst, outcome.allocation, outcome.payments) ? "true"
                                                                                  : "false";
      } else {  // best-proportionable
        if (!report.best_proportionable) continue;
        row.makespan = report.best_proportionable->str();
        row.ratio = ratio_text(*report.best_proportionable);
        // mean efficiency is the filter that defined this value
        row.mean_efficient = "true";
        row.proportional = "true";
      }
      rows.push_back(std::move(row));
    }
  } catch (const fairspan::CapExceeded&) {
    for (const std::string& name : mechanisms) {
      SweepRow row = base;
      row.mechanism = name;
      row.status = "skipped";
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

int run_sweep(const SweepOptions& opt, std::uint64_t cap) {
  if (opt.family != "lb32" && opt.family != "goods-lb" && opt.family != "uniform" &&
      opt.family != "normalized-uniform") {
    throw std::invalid_argument("unknown family '" + opt.family + "'");
  }
  if (opt.machines.empty() || opt.jobs.empty()) {
    throw std::invalid_argument("sweep needs --m and --n lists");
  }
  if (opt.family == "lb32" && opt.eps.empty()) {
    throw std::invalid_argument("lb32 sweeps need --eps");
  }
  if (opt.trials < 1) throw std::invalid_argument("--trials must be at least 1");

  std::vector<SweepPoint> points;
  for (int trial = 0; trial < opt.trials; ++trial) {
    for (int m : opt.machines) {
      for (int n : opt.jobs) {
        if (opt.family == "lb32") {
          for (const std::string& eps : opt.eps) {
            points.push_back(SweepPoint{opt.seed + trial, m, n, eps});
          }
        } else {
          points.push_back(SweepPoint{opt.seed + trial, m, n, {}});
        }
      }
    }
  }

  std::vector<std::vector<SweepRow>> results(points.size());
  std::vector<std::string> errors(points.size());
  // row order is fixed by the point index regardless of scheduling; errors
  // must not unwind out of the parallel region
#pragma omp parallel for schedule(dynamic)
  for (std::size_t p = 0; p < points.size(); ++p) {
    try {
      results[p] = sweep_point_rows(opt, points[p], cap);
    } catch (const std::exception& e) {
      errors[p] = e.what();
    }
  }
  for (const std::string& error : errors) {
    if (!error.empty()) throw std::invalid_argument(error);
  }

  std::string csv = "seed,m,n,family,mechanism,makespan,opt,ratio,mean_efficient,proportional,status\r\n";
  for (const auto& rows : results) {
    for (const SweepRow& row : rows) csv += csv_line(row);
  }
  emit(opt.out, csv);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact mechanisms and certificates for fair job scheduling with payments"};
  app.require_subcommand(1);

  GenOptions gen_opt;
  CLI::App* gen = app.add_subcommand("gen", "generate an instance file");
  gen->require_subcommand(1);
  std::vector<std::pair<std::string, CLI::App*>> gen_families;
  for (const char* family : {"lb32", "goods-lb", "uniform", "normalized-uniform"}) {
    CLI::App* sub = gen->add_subcommand(family);
    sub->add_option("--m", gen_opt.machines, "machine count")->required();
    sub->add_option("--n", gen_opt.jobs, "job count")->required();
    if (std::string(family) == "lb32") {
      sub->add_option("--eps", gen_opt.eps, "eps in (0, 1/2]");
    }
    if (std::string(family) == "uniform" || std::string(family) == "normalized-uniform") {
      sub->add_option("--seed", gen_opt.seed, "random seed");
      sub->add_option("--kind", gen_opt.kind, "chores or goods");
      sub->add_option("--denominator", gen_opt.denominator, "entry denominator");
    }
    sub->add_option("--out", gen_opt.out, "output file (default: stdout)");
    gen_families.emplace_back(family, sub);
  }

  RunOptions run_opt;
  std::string run_mechanism;
  CLI::App* run = app.add_subcommand("run", "run a mechanism and certify its output");
  run->add_option("mechanism", run_mechanism,
                  "anti-diagonal | cyclic | normalized-opt | goods-normalized-opt")
      ->required();
  run->add_option("instance", run_opt.instance_path, "instance file")->required();
  run->add_option("--base-allocation", run_opt.base_allocation,
                  "assignment vector like 1,2,2 or the keyword 'opt'");
  run->add_option("--eps", run_opt.eps, "cyclic mechanism parameter in (0,1)");
  run->add_flag("--with-opt", run_opt.with_opt, "also report OPT and the ratio");
  run->add_option("--out", run_opt.out, "output file (default: stdout)");

  CheckOptions check_opt;
  CLI::App* check = app.add_subcommand("check", "certify an allocation/payment pair");
  check->add_option("instance", check_opt.instance_path, "instance file")->required();
  check->add_option("--allocation", check_opt.allocation, "assignment vector like 1,2,2")
      ->required();
  check->add_option("--payments", check_opt.payments,
                    "payments like 0,5/8 (default: proportional payments)");
  check->add_option("--alpha", check_opt.alpha, "approximation factor in (0,1]");
  check->add_option("--out", check_opt.out, "output file (default: stdout)");

  SweepOptions sweep_opt;
  CLI::App* sweep = app.add_subcommand("sweep", "emit a CSV over a parameter grid");
  sweep->add_option("--family", sweep_opt.family,
                    "lb32 | goods-lb | uniform | normalized-uniform")
      ->required();
  sweep->add_option("--m", sweep_opt.machines, "machine counts")->delimiter(',')->required();
  sweep->add_option("--n", sweep_opt.jobs, "job counts")->delimiter(',')->required();
  sweep->add_option("--eps", sweep_opt.eps, "lb32 eps grid")->delimiter(',');
  sweep->add_option("--cyclic-eps", sweep_opt.cyclic_eps, "adds cyclic mechanism rows")
      ->delimiter(',');
  sweep->add_option("--trials", sweep_opt.trials, "trials per grid point");
  sweep->add_option("--seed", sweep_opt.seed, "base seed; trial t uses seed+t");
  sweep->add_option("--kind", sweep_opt.kind, "chores or goods (random families)");
  sweep->add_option("--denominator", sweep_opt.denominator, "entry denominator");
  sweep->add_option("--out", sweep_opt.out, "output CSV (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    const std::uint64_t cap = fairspan::enum_cap_from_env(fairspan::kDefaultEnumCap);
    if (gen->parsed()) {
      for (auto& [family, sub] : gen_families) {
        if (sub->parsed()) return run_gen(family, gen_opt);
      }
    }
    if (run->parsed()) return run_run(run_mechanism, run_opt, cap);
    if (check->parsed()) return run_check(check_opt);
    if (sweep->parsed()) return run_sweep(sweep_opt, cap);
  } catch (const fairspan::CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitValidation;
}
