// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Command-line front end: runs algorithms on instance files, classifies
// systems, generates padded instances from graphs, and sweeps a directory of
// instances into a CSV table with the approximation-bound columns filled in.
//
// Exit codes: 0 success, 2 argument error, 3 parse error, 4 cap refusal,
// 5 internal invariant violation.

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "submax/algorithms.hpp"
#include "submax/checkers.hpp"
#include "submax/errors.hpp"
#include "submax/instance.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitArgument = 2;
constexpr int kExitParse = 3;
constexpr int kExitCap = 4;
constexpr int kExitInternal = 5;

constexpr double kBoundSlack = 1e-9;

std::string bool_str(bool b) { return b ? "true" : "false"; }

std::string opt_real(const std::optional<double>& v) {
  return v ? submax::format_real(*v) : std::string();
}

struct RunOptions {
  std::string algorithm = "greedy";
  double epsilon = 0.1;
  std::uint64_t seed = 0;
  bool cache = false;
  std::size_t cap = 20;
};

submax::RunRecord dispatch(const submax::Instance& inst, const RunOptions& opt) {
  submax::ValueOracle f = inst.value_oracle(opt.cache);
  submax::MembershipOracle sys = inst.membership_oracle();
  if (opt.algorithm == "greedy") return submax::greedy(f, sys);
  if (opt.algorithm == "threshold") return submax::threshold_greedy(f, sys, opt.epsilon);
  if (opt.algorithm == "triple") {
    return submax::triple_greedy(f, sys, opt.epsilon,
                                 submax::UnconstrainedVariant::kDeterministic, opt.seed);
  }
  if (opt.algorithm == "dg-det") return submax::unconstrained_max_deterministic(f);
  if (opt.algorithm == "dg-rand") return submax::unconstrained_max_randomized(f, opt.seed);
  if (opt.algorithm == "brute") return submax::brute_force(f, sys, opt.cap);
  throw std::invalid_argument("unknown algorithm \"" + opt.algorithm + "\"");
}

bool algorithm_is_constrained(const std::string& algorithm) {
  return algorithm != "dg-det" && algorithm != "dg-rand";
}

int cmd_run(const std::string& path, const RunOptions& opt) {
  submax::Instance inst = submax::load_instance_file(path);
  submax::RunRecord rec = dispatch(inst, opt);
  if (algorithm_is_constrained(opt.algorithm)) {
    if (!rec.feasible) {
      throw submax::InternalError("algorithm produced an infeasible set on " + inst.name);
    }
  } else {
    // unconstrained algorithms ignore the system; report honest membership
    rec.feasible = inst.membership_oracle().contains(rec.chosen);
  }
  std::string name = inst.name.empty() ? std::filesystem::path(path).stem().string() : inst.name;
  std::cout << name << "," << rec.algorithm << "," << opt_real(rec.epsilon) << ","
            << (rec.seed ? std::to_string(*rec.seed) : std::string()) << ","
            << submax::format_real(rec.value) << "," << rec.value_queries << ","
            << rec.membership_queries << "," << submax::format_real(rec.wall_ms) << ","
            << bool_str(rec.feasible) << "\n";
  return kExitOk;
}

int cmd_classify(const std::string& path, std::size_t cap) {
  submax::Instance inst = submax::load_instance_file(path);
  submax::MembershipOracle sys = inst.membership_oracle();
  submax::ValueOracle f = inst.value_oracle();
  submax::ClassificationReport report = submax::classify_system(sys, 8, cap);
  submax::PropertyCheck submodular = submax::check_submodular(f, cap);
  submax::PropertyCheck monotone = submax::check_monotone(f, cap);

  std::cout << "instance: " << (inst.name.empty() ? path : inst.name) << "\n";
  std::cout << "n: " << inst.n << "\n";
  std::cout << "declared_class: " << sys.declared_class().to_string() << "\n";
  std::cout << report.to_string() << "\n";
  std::cout << "function_submodular: " << bool_str(submodular.holds) << "\n";
  std::cout << "function_monotone: " << bool_str(monotone.holds) << "\n";

  std::string summary;
  if (report.is_matroid) {
    summary = "matroid, 1-extendible";
  } else {
    summary = report.p_system.to_string() + "-system, not matroid";
    if (report.p_extendible) {
      summary += ", " + std::to_string(*report.p_extendible) + "-extendible";
    }
  }
  std::cout << "summary: " << summary << "\n";
  if (inst.expected_p && report.p_extendible && *inst.expected_p != *report.p_extendible) {
    std::cout << "note: expected_p = " << *inst.expected_p << " disagrees with checker\n";
  }
  return kExitOk;
}

int cmd_reduce(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw submax::ParseError("cannot open " + path);
  submax::Graph g = submax::read_graph(in);
  std::string name = "phi_" + std::filesystem::path(path).stem().string();
  std::cout << submax::serialize_instance(submax::make_phi_instance(g, name));
  return kExitOk;
}

// One suite row; empty fields render as empty CSV cells.
struct SuiteRow {
  std::string instance;
  std::string n;
  std::string algorithm;
  std::string epsilon;
  std::string value;
  std::string value_queries;
  std::string membership_queries;
  std::string feasible;
  std::string p_extendible;
  std::string alpha;
  std::string bound;
  std::string beta;
  std::string opt;
  std::string ratio;
  std::string bound_satisfied;
  std::string error;

  std::string to_line() const {
    std::ostringstream out;
    out << instance << "," << n << "," << algorithm << "," << epsilon << "," << value << ","
        << value_queries << "," << membership_queries << "," << feasible << "," << p_extendible
        << "," << alpha << "," << bound << "," << beta << "," << opt << "," << ratio << ","
        << bound_satisfied << "," << error;
    return out.str();
  }
};

constexpr const char* kSuiteHeader =
    "instance,n,algorithm,epsilon,value,value_queries,membership_queries,feasible,"
    "p_extendible,alpha,bound,beta,opt,ratio,bound_satisfied,error";

double threshold_alpha(int p, double epsilon) {
  return 1.0 / (static_cast<double>(p) / (1.0 - epsilon) + 1.0 + epsilon);
}

double composed_bound(double alpha, double beta) { return alpha * beta / (alpha + 2.0 * beta); }

struct SuiteContext {
  std::vector<double> epsilons;
  std::size_t brute_cap = 20;
  std::size_t checker_cap = submax::kDefaultCheckerCap;
  std::uint64_t seed = 0;
  bool cache = false;
};

void fill_common(SuiteRow& row, const std::string& name, std::size_t n,
                 const submax::RunRecord& rec) {
  row.instance = name;
  row.n = std::to_string(n);
  row.algorithm = rec.algorithm;
  row.epsilon = opt_real(rec.epsilon);
  row.value = submax::format_real(rec.value);
  row.value_queries = std::to_string(rec.value_queries);
  row.membership_queries = std::to_string(rec.membership_queries);
  row.feasible = bool_str(rec.feasible);
}

std::vector<SuiteRow> run_suite_instance(const std::filesystem::path& file,
                                         const SuiteContext& ctx) {
  std::vector<SuiteRow> rows;
  submax::Instance inst;
  try {
    inst = submax::load_instance_file(file.string());
  } catch (const std::exception& e) {
    SuiteRow row;
    row.instance = file.stem().string();
    row.error = e.what();
    std::replace(row.error.begin(), row.error.end(), ',', ';');  // keep the row one cell wide
    rows.push_back(row);
    return rows;
  }
  std::string name = inst.name.empty() ? file.stem().string() : inst.name;

  std::optional<double> opt_value;
  if (inst.n <= ctx.brute_cap) {
    submax::ValueOracle f = inst.value_oracle(ctx.cache);
    submax::MembershipOracle sys = inst.membership_oracle();
    submax::RunRecord rec = submax::brute_force(f, sys, ctx.brute_cap);
    opt_value = rec.value;
    SuiteRow row;
    fill_common(row, name, inst.n, rec);
    row.opt = submax::format_real(rec.value);
    if (rec.value > 0.0) row.ratio = submax::format_real(1.0);
    rows.push_back(row);
  }

  std::optional<int> p;
  bool monotone = false;
  bool maxi1 = false;
  bool disjoint_bases = false;
  std::optional<double> beta_max;
  if (inst.n <= ctx.checker_cap) {
    submax::MembershipOracle sys = inst.membership_oracle();
    p = submax::p_extendible_parameter(sys, 8, ctx.checker_cap);
    monotone = submax::check_monotone(inst.value_oracle(), ctx.checker_cap).holds;
    maxi1 = submax::p_system_parameter(sys, ctx.checker_cap) == submax::Rational::of(1, 1);
    disjoint_bases = submax::has_two_disjoint_bases(sys, ctx.checker_cap);
    submax::ValueOracle cardinality(
        inst.n, [](const submax::ElementSet& s) { return static_cast<double>(s.count()); });
    beta_max = submax::brute_force(cardinality, inst.membership_oracle(), ctx.brute_cap).value;
  }

  {
    submax::ValueOracle f = inst.value_oracle(ctx.cache);
    submax::MembershipOracle sys = inst.membership_oracle();
    submax::RunRecord rec = submax::greedy(f, sys);
    SuiteRow row;
    fill_common(row, name, inst.n, rec);
    if (opt_value) {
      row.opt = submax::format_real(*opt_value);
      if (*opt_value > 0.0) row.ratio = submax::format_real(rec.value / *opt_value);
      // greedy guarantees: 2/n on equal-size-basis systems with two disjoint
      // bases, 1/beta_max for monotone objectives
      std::optional<double> bound;
      if (maxi1 && disjoint_bases) {
        bound = 2.0 / static_cast<double>(inst.n);
      } else if (monotone && beta_max && *beta_max > 0.0) {
        bound = 1.0 / *beta_max;
      }
      if (bound) {
        row.bound = submax::format_real(*bound);
        row.bound_satisfied = bool_str(
            rec.value >= *bound * *opt_value - kBoundSlack * std::max(1.0, *opt_value));
      }
    }
    rows.push_back(row);
  }

  for (double eps : ctx.epsilons) {
    submax::ValueOracle f = inst.value_oracle(ctx.cache);
    submax::MembershipOracle sys = inst.membership_oracle();
    submax::RunRecord rec = submax::threshold_greedy(f, sys, eps);
    SuiteRow row;
    fill_common(row, name, inst.n, rec);
    if (p) {
      row.p_extendible = std::to_string(*p);
      double alpha = threshold_alpha(*p, eps);
      row.alpha = submax::format_real(alpha);
      if (inst.n <= ctx.brute_cap) {
        double achieved = submax::max_union_ratio(rec.chosen, inst.value_oracle(),
                                                  inst.membership_oracle(), ctx.brute_cap);
        row.bound = submax::format_real(alpha);
        row.ratio = std::isinf(achieved) ? "inf" : submax::format_real(achieved);
        row.bound_satisfied = bool_str(achieved >= alpha - kBoundSlack);
      }
    }
    rows.push_back(row);
  }

  for (double eps : ctx.epsilons) {
    submax::ValueOracle f = inst.value_oracle(ctx.cache);
    submax::MembershipOracle sys = inst.membership_oracle();
    submax::RunRecord rec = submax::triple_greedy(
        f, sys, eps, submax::UnconstrainedVariant::kDeterministic, ctx.seed);
    SuiteRow row;
    fill_common(row, name, inst.n, rec);
    if (p) {
      double alpha = threshold_alpha(*p, eps);
      double beta = 1.0 / 3.0;
      double bound = composed_bound(alpha, beta);
      row.p_extendible = std::to_string(*p);
      row.alpha = submax::format_real(alpha);
      row.beta = submax::format_real(beta);
      row.bound = submax::format_real(bound);
      if (opt_value) {
        row.opt = submax::format_real(*opt_value);
        if (*opt_value > 0.0) row.ratio = submax::format_real(rec.value / *opt_value);
        row.bound_satisfied = bool_str(
            rec.value >= bound * *opt_value - kBoundSlack * std::max(1.0, *opt_value));
      }
    }
    rows.push_back(row);
  }

  return rows;
}

int cmd_suite(const std::string& dir, const SuiteContext& ctx, std::size_t jobs) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".inst") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());

  std::cout << kSuiteHeader << "\n";
  if (jobs <= 1) {
    for (const auto& file : files) {
      for (const auto& row : run_suite_instance(file, ctx)) std::cout << row.to_line() << "\n";
    }
    return kExitOk;
  }

  // Rows are buffered per instance and emitted in filename order regardless
  // of completion order.
  std::vector<std::future<std::vector<SuiteRow>>> futures;
  futures.reserve(files.size());
  for (const auto& file : files) {
    futures.push_back(
        std::async(std::launch::async, [file, &ctx]() { return run_suite_instance(file, ctx); }));
    if (futures.size() >= jobs) futures[futures.size() - jobs].wait();
  }
  for (auto& fut : futures) {
    for (const auto& row : fut.get()) std::cout << row.to_line() << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Submodular maximization over independence systems"};
  app.require_subcommand(1);

  std::string run_path;
  RunOptions run_opt;
  std::string cache_mode = "off";
  auto* run = app.add_subcommand("run", "Run one algorithm on an instance file; prints a CSV row");
  run->add_option("instance", run_path, "Instance file")->required();
  run->add_option("--algorithm", run_opt.algorithm, "Algorithm id")
      ->check(CLI::IsMember({"greedy", "threshold", "triple", "dg-det", "dg-rand", "brute"}));
  run->add_option("--epsilon", run_opt.epsilon, "Threshold accuracy parameter in (0,1)");
  run->add_option("--seed", run_opt.seed, "Random seed (dg-rand)");
  run->add_option("--cache", cache_mode, "Oracle evaluation cache")
      ->check(CLI::IsMember({"on", "off"}));
  run->add_option("--cap", run_opt.cap, "Brute-force ground-set cap");

  std::string classify_path;
  std::size_t classify_cap = submax::kDefaultCheckerCap;
  auto* classify = app.add_subcommand("classify", "Exhaustively classify an instance's system");
  classify->add_option("instance", classify_path, "Instance file")->required();
  classify->add_option("--cap", classify_cap, "Checker ground-set cap");

  std::string reduce_path;
  auto* reduce =
      app.add_subcommand("reduce", "Emit the padded instance of a graph (\"n m\" + edge lines)");
  reduce->add_option("graph", reduce_path, "Graph file")->required();

  std::string suite_dir;
  SuiteContext suite_ctx;
  std::size_t suite_jobs = 1;
  std::string suite_cache = "off";
  auto* suite = app.add_subcommand("suite", "Run all algorithms over a directory of instances");
  suite->add_option("directory", suite_dir, "Directory of .inst files")->required();
  suite->add_option("--epsilon", suite_ctx.epsilons, "Threshold epsilons (repeatable)");
  suite->add_option("--jobs", suite_jobs, "Concurrent instances");
  suite->add_option("--cap", suite_ctx.brute_cap, "Brute-force ground-set cap");
  suite->add_option("--seed", suite_ctx.seed, "Random seed");
  suite->add_option("--cache", suite_cache, "Oracle evaluation cache")
      ->check(CLI::IsMember({"on", "off"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitArgument;
  }

  try {
    if (*run) {
      run_opt.cache = cache_mode == "on";
      return cmd_run(run_path, run_opt);
    }
    if (*classify) return cmd_classify(classify_path, classify_cap);
    if (*reduce) return cmd_reduce(reduce_path);
    if (*suite) {
      if (suite_ctx.epsilons.empty()) suite_ctx.epsilons = {0.05, 0.1, 0.2};
      suite_ctx.cache = suite_cache == "on";
      return cmd_suite(suite_dir, suite_ctx, std::max<std::size_t>(suite_jobs, 1));
    }
  } catch (const submax::CapExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const submax::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const submax::InternalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitArgument;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitOk;
}
