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

#include "gsval/cli.h"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"

#include "gsval/analysis.h"
#include "gsval/certify.h"
#include "gsval/classes.h"
#include "gsval/constructions.h"
#include "gsval/io.h"
#include "gsval/reproduce.h"
#include "gsval/sampling.h"
#include "gsval/transforms.h"

namespace gsval {
namespace {

// Thrown for bad arguments discovered after parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<Rational> ParseList(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(ParseRational(item));
  if (out.empty()) throw UsageError("empty list '" + text + "'");
  return out;
}

int ParseItem(const SetFunction& f, const std::string& text) {
  for (int i = 0; i < f.m(); ++i) {
    if (f.ItemName(i) == text) return i;
  }
  if (!text.empty() && std::all_of(text.begin(), text.end(), ::isdigit)) {
    const int i = std::stoi(text);
    if (i < f.m()) return i;
  }
  throw UsageError("unknown item '" + text + "'");
}

SetFunction LoadValuation(const std::string& path) {
  return ValuationFromJson(LoadJsonFile(path));
}

std::string Describe(const SetFunction& f, const CheckResult& r) {
  if (r.holds) return "yes";
  std::string out = "no";
  if (r.witness) {
    const Witness& w = *r.witness;
    out += " (S = " + f.FormatSubset(w.set);
    if (!w.items.empty()) {
      out += ", items";
      for (int i : w.items) out += " " + f.ItemName(i);
    }
    if (!w.other.empty()) out += ", T = " + f.FormatSubset(w.other);
    if (!w.detail.empty()) out += ", " + w.detail;
    out += ")";
  }
  return out;
}

struct Context {
  bool json = false;
  int jobs = 1;
  std::ostream& out;
};

void EmitValuation(const Context&, const SetFunction& f,
                   const std::string& out_path, std::ostream& out) {
  if (!out_path.empty()) {
    SaveJsonFile(out_path, ToJson(f));
  } else {
    out << ToJson(f).dump(2) << "\n";
  }
}

int RunCheck(const Context& ctx, const std::string& file, bool no_xos) {
  const SetFunction f = LoadValuation(file);
  const ClassReport report = Classify(f, !no_xos);
  if (ctx.json) {
    ctx.out << ToJson(report).dump(2) << "\n";
    return kExitOk;
  }
  ctx.out << "monotone:     " << Describe(f, report.monotone) << "\n"
          << "submodular:   " << Describe(f, report.submodular) << "\n"
          << "gs:           " << Describe(f, report.gs) << "\n"
          << "sws:          " << Describe(f, report.sws) << "\n"
          << "additive:     " << Describe(f, report.additive) << "\n"
          << "budget-additive: " << (report.budget_additive ? "yes" : "no")
          << "\n";
  if (report.xos) ctx.out << "xos:          " << Describe(f, *report.xos) << "\n";
  ctx.out << "subadditive:  " << Describe(f, report.subadditive) << "\n"
          << "mrf:          "
          << (report.mrf_scale ? "yes (scale " + ToString(*report.mrf_scale) + ")"
                               : std::string("no"))
          << "\n";
  return kExitOk;
}

int RunSymmetrize(const Context& ctx, const std::string& file,
                  const std::string& items, const std::string& target,
                  bool partial, const std::string& out_path) {
  const SetFunction g = LoadValuation(file);
  if (items.empty() == target.empty()) {
    throw UsageError("give exactly one of --items and --target");
  }
  if (!target.empty()) {
    const FixpointResult r = SymmetrizeToFixpoint(g, LoadValuation(target));
    if (ctx.json) {
      Json j = {{"steps", r.steps.size()}, {"result", ToJson(r.result)}};
      ctx.out << j.dump(2) << "\n";
      if (!out_path.empty()) SaveJsonFile(out_path, ToJson(r.result));
    } else {
      EmitValuation(ctx, r.result, out_path, ctx.out);
      if (!out_path.empty()) ctx.out << "steps: " << r.steps.size() << "\n";
    }
    return kExitOk;
  }
  const size_t comma = items.find(',');
  if (comma == std::string::npos) throw UsageError("--items expects i,j");
  const int i = ParseItem(g, items.substr(0, comma));
  const int j = ParseItem(g, items.substr(comma + 1));
  const SetFunction h = partial ? PartialSymmetrize(g, i, j)
                                : MaxSymmetrize(g, i, j);
  EmitValuation(ctx, h, out_path, ctx.out);
  return kExitOk;
}

int RunConvolve(const Context& ctx, const std::vector<std::string>& files,
                const std::string& out_path) {
  if (files.size() < 2) throw UsageError("convolve needs at least two files");
  std::vector<SetFunction> fs;
  for (const std::string& f : files) fs.push_back(LoadValuation(f));
  EmitValuation(ctx, ConvolveAll(fs), out_path, ctx.out);
  return kExitOk;
}

int RunGap(const Context& ctx, const std::string& approx,
           const std::string& target, bool upper) {
  const SetFunction g = LoadValuation(approx);
  const SetFunction f = LoadValuation(target);
  const GapReport report =
      ApproximationRatio(g, f, upper ? GapMode::kUpper : GapMode::kLower);
  if (ctx.json) {
    ctx.out << ToJson(report).dump(2) << "\n";
  } else {
    ctx.out << "sandwich holds: " << (report.lower_ok ? "yes" : "no") << "\n";
    if (report.infinite) {
      ctx.out << "ratio: infinite at " << f.FormatSubset(report.argmax) << "\n";
    } else {
      ctx.out << "ratio: " << ToString(report.ratio) << " at "
              << f.FormatSubset(report.argmax) << "\n";
    }
    for (Subset s : report.violations) {
      ctx.out << "violated at " << f.FormatSubset(s) << "\n";
    }
  }
  return report.lower_ok ? kExitOk : kExitViolation;
}

struct ConstructArgs {
  std::string kind;
  std::string values;
  std::string budget;
  std::string thresholds;
  std::string file;
  std::string rho = "791/500";
  int k = 2;
  int d = 1;
  int q = 2;
  int n = 200;
  uint64_t seed = 7;
  std::string out;
};

int RunConstruct(const Context& ctx, const ConstructArgs& a) {
  auto need = [](const std::string& v, const char* flag) {
    if (v.empty()) throw UsageError(std::string("missing ") + flag);
    return v;
  };
  std::optional<SetFunction> f;
  if (a.kind == "additive") {
    f = Additive(ParseList(need(a.values, "--values")));
  } else if (a.kind == "budget-additive") {
    f = BudgetAdditive(ParseList(need(a.values, "--values")),
                       ParseRational(need(a.budget, "--budget")));
  } else if (a.kind == "unit-demand") {
    f = UnitDemand(ParseList(need(a.values, "--values")));
  } else if (a.kind == "ba-levels") {
    f = BudgetAdditiveLevels(a.k, a.d);
  } else if (a.kind == "approx2") {
    f = Approx2Gs(a.k);
  } else if (a.kind == "threshold") {
    f = ThresholdGs(ParseList(need(a.values, "--values")),
                    ParseList(need(a.thresholds, "--thresholds")));
  } else if (a.kind == "ba-loglog") {
    f = BaLogLogApprox(LoadValuation(need(a.file, "--f")));
  } else if (a.kind == "ba-log") {
    f = BaLogApprox(LoadValuation(need(a.file, "--f")));
  } else if (a.kind == "xos-grid") {
    f = XosGrid(a.q);
  } else if (a.kind == "xos-submod") {
    f = XosGridSubmodApprox(a.q);
  } else if (a.kind == "coverage") {
    f = CoverageApproxBa(LoadValuation(need(a.file, "--f")), a.n, a.seed,
                         ParseRational(a.rho))
            .g;
  } else {
    throw UsageError("unknown construction '" + a.kind + "'");
  }
  EmitValuation(ctx, *f, a.out, ctx.out);
  return kExitOk;
}

void PrintCertificate(const Context& ctx, const SearchProblem& problem,
                      const SearchResult& r, bool replayed) {
  if (ctx.json) {
    Json j = ToJson(problem, r.certificate);
    j["exhausted"] = r.exhausted;
    j["replayed"] = replayed;
    ctx.out << j.dump(2) << "\n";
    return;
  }
  const Certificate& c = r.certificate;
  ctx.out << "result: "
          << (r.exhausted ? "budget exhausted"
                          : (c.feasible ? "feasible" : "infeasible"))
          << "\n"
          << "combinations: " << problem.order.size() << "\n"
          << "lps solved: " << c.lps_solved << "\n"
          << "nodes visited: " << c.nodes_visited << "\n"
          << "pruned nodes: " << c.pruned.size() << "\n"
          << "max depth: " << c.max_depth << "\n"
          << "replay: " << (replayed ? "ok" : "FAILED") << "\n";
  if (c.feasible && c.witness) {
    ctx.out << "witness: " << ToJson(*c.witness).dump() << "\n";
  }
}

struct CertifyArgs {
  std::string combos = "full";
  bool mono_submod = false;
  bool fail_first = false;
  std::optional<uint64_t> shuffle_seed;
  std::string log;
  std::string file;
  std::string rho;
  bool sym = false;
  int size = 6;
  int64_t budget = 0;
};

int RunCertifyS1(const Context& ctx, const CertifyArgs& a) {
  SearchProblem problem{kS1Items, S1FixedConstraints(), {}};
  if (a.combos == "full") {
    problem.order = S1DefaultOrder();
  } else if (a.combos == "set1") {
    problem.order = S1SufficientSet(1);
  } else if (a.combos == "set2") {
    problem.order = S1SufficientSet(2);
  } else {
    throw UsageError("--combos must be full, set1 or set2");
  }
  if (a.shuffle_seed) {
    Rng rng(*a.shuffle_seed);
    rng.Shuffle(problem.order);
  }
  SearchOptions options;
  options.include_mono_submod = a.mono_submod;
  options.fail_first = a.fail_first;
  options.jobs = ctx.jobs;
  const SearchResult r = TreeSearch(problem, options);
  const bool replayed =
      !r.exhausted && ReplayCertificate(problem, r.certificate, a.mono_submod);
  if (!a.log.empty()) {
    SaveJsonFile(a.log, ToJson(problem, r.certificate));
  }
  PrintCertificate(ctx, problem, r, replayed);
  return replayed ? kExitOk : kExitViolation;
}

int RunCertifyGap(const Context& ctx, const CertifyArgs& a) {
  if (a.file.empty() || a.rho.empty()) throw UsageError("need --f and --rho");
  const SetFunction f = LoadValuation(a.file);
  const GapCertificate cert =
      GsGapCertifier(f, ParseRational(a.rho), a.sym, ctx.jobs);
  const bool replayed = ReplayCertificate(cert.problem, cert.certificate, false);
  if (!a.log.empty()) {
    SaveJsonFile(a.log, ToJson(cert.problem, cert.certificate));
  }
  PrintCertificate(ctx, cert.problem, {cert.certificate, false}, replayed);
  if (!ctx.json && cert.witness_ratio) {
    ctx.out << "witness ratio: " << ToString(*cert.witness_ratio) << "\n";
  }
  return replayed ? kExitOk : kExitViolation;
}

int RunCertifySufficient(const Context& ctx, const CertifyArgs& a) {
  const SufficientSetsResult r = FindSufficientSets(a.size, a.budget, ctx.jobs);
  Json sets = Json::array();
  for (const auto& set : r.sets) {
    Json names = Json::array();
    for (const Combination& c : set) names.push_back(FormatCombination(c));
    sets.push_back(names);
  }
  if (ctx.json) {
    ctx.out << Json({{"complete", r.complete},
                     {"subsets_tried", r.subsets_tried},
                     {"lps_solved", r.lps_solved},
                     {"sets", sets}})
                   .dump(2)
            << "\n";
  } else {
    ctx.out << "complete: " << (r.complete ? "yes" : "no (budget exhausted)")
            << "\nsubsets tried: " << r.subsets_tried
            << "\nlps solved: " << r.lps_solved << "\n";
    for (const Json& s : sets) ctx.out << "sufficient: " << s.dump() << "\n";
  }
  return kExitOk;
}

int RunDemand(const Context& ctx, const std::string& file,
              const std::string& prices_text, bool greedy) {
  const SetFunction f = LoadValuation(file);
  const std::vector<Rational> prices = ParseList(prices_text);
  const DemandResult best = DemandBruteForce(f, prices);
  std::optional<GreedyDemand> g;
  if (greedy) g = DemandGreedy(f, prices);
  if (ctx.json) {
    Json demanded = Json::array();
    for (Subset s : best.demanded) demanded.push_back(SubsetToJson(s));
    Json j = {{"best_utility", ToString(best.best_utility)},
              {"demanded", demanded}};
    if (g) {
      j["greedy"] = {{"set", SubsetToJson(g->set)},
                     {"utility", ToString(g->utility)},
                     {"optimal", g->utility == best.best_utility}};
    }
    ctx.out << j.dump(2) << "\n";
  } else {
    ctx.out << "best utility: " << ToString(best.best_utility) << "\n";
    for (Subset s : best.demanded) {
      ctx.out << "demanded: " << f.FormatSubset(s) << "\n";
    }
    if (g) {
      ctx.out << "greedy: " << f.FormatSubset(g->set) << " utility "
              << ToString(g->utility)
              << (g->utility == best.best_utility ? " (optimal)"
                                                  : " (suboptimal)")
              << "\n";
    }
  }
  return kExitOk;
}

int RunReproduce(const Context& ctx, const std::string& id, int k,
                 uint64_t seed) {
  if (id == "list") {
    for (const ClaimInfo& c : Claims()) {
      ctx.out << c.id << "  " << c.summary << "\n";
    }
    return kExitOk;
  }
  ReproduceOptions options;
  options.k = k;
  options.seed = seed;
  options.jobs = ctx.jobs;
  const ClaimReport r = Reproduce(id, options);
  if (ctx.json) {
    Json checks = Json::array();
    for (const ClaimCheck& c : r.checks) {
      checks.push_back({{"check", c.description},
                        {"pass", c.pass},
                        {"detail", c.detail}});
    }
    ctx.out << Json({{"claim", r.id}, {"pass", r.pass}, {"checks", checks}})
                   .dump(2)
            << "\n";
  } else {
    for (const ClaimCheck& c : r.checks) {
      ctx.out << (c.pass ? "  ok   " : "  FAIL ") << c.description;
      if (!c.detail.empty()) ctx.out << ": " << c.detail;
      ctx.out << "\n";
    }
    ctx.out << (r.pass ? "PASS " : "FAIL ") << r.id << "\n";
  }
  return r.pass ? kExitOk : kExitViolation;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Exact toolkit for gross substitutes valuations", "gsval"};
  app.require_subcommand(1);
  app.fallthrough();
  Context ctx{false, 1, out};
  app.add_flag("--json", ctx.json, "Machine-readable JSON output");
  app.add_option("--jobs", ctx.jobs, "Worker threads for searches")
      ->check(CLI::PositiveNumber);

  std::string file, items, target, approx, out_path, prices, claim;
  bool no_xos = false, partial = false, upper = false, greedy = false;
  std::vector<std::string> files;

  auto* check = app.add_subcommand("check", "Classify a valuation");
  check->add_option("--file", file, "Valuation JSON")->required();
  check->add_flag("--no-xos", no_xos, "Skip the LP-based XOS check");

  auto* sym = app.add_subcommand("symmetrize", "Max-symmetrize items");
  sym->add_option("--file", file, "Valuation JSON")->required();
  sym->add_option("--items", items, "Two items i,j (names or indices)");
  sym->add_flag("--partial", partial, "Only raise the second item's sets");
  sym->add_option("--target", target,
                  "Symmetrize to a fixpoint against this valuation");
  sym->add_option("--out", out_path, "Write the result here");

  auto* conv = app.add_subcommand("convolve", "Welfare convolution");
  conv->add_option("--file", files, "Valuation JSON (repeat)")->required();
  conv->add_option("--out", out_path, "Write the result here");

  auto* gap = app.add_subcommand("gap", "Approximation ratio of g to f");
  gap->add_option("--approx", approx, "Approximator g")->required();
  gap->add_option("--target", target, "Target f")->required();
  gap->add_flag("--upper", upper, "Check f <= g <= ratio f instead");

  ConstructArgs cons;
  auto* construct = app.add_subcommand("construct", "Build a valuation");
  construct
      ->add_option("kind", cons.kind,
                   "additive, budget-additive, unit-demand, ba-levels, "
                   "approx2, threshold, ba-loglog, ba-log, xos-grid, "
                   "xos-submod, coverage")
      ->required();
  construct->add_option("--values", cons.values, "Comma-separated rationals");
  construct->add_option("--budget", cons.budget, "Budget");
  construct->add_option("--thresholds", cons.thresholds, "Thresholds T");
  construct->add_option("--f", cons.file, "Budget-additive input valuation");
  construct->add_option("--k", cons.k, "k");
  construct->add_option("--d", cons.d, "d");
  construct->add_option("--q", cons.q, "Grid size q");
  construct->add_option("--n", cons.n, "Coverage universe size");
  construct->add_option("--seed", cons.seed, "Coverage sampling seed");
  construct->add_option("--rho", cons.rho, "Coverage ratio");
  construct->add_option("--out", cons.out, "Write the result here");

  CertifyArgs cert;
  auto* certify = app.add_subcommand("certify", "Branch-and-prune searches");
  certify->require_subcommand(1);
  auto* s1 = certify->add_subcommand("s1", "The five-item S1 instance");
  s1->add_option("--combos", cert.combos, "full, set1 or set2");
  s1->add_flag("--with-mono-submod", cert.mono_submod,
               "Add monotonicity and submodularity to every node");
  s1->add_flag("--fail-first", cert.fail_first,
               "Branch on the most constrained combination first");
  s1->add_option("--shuffle-seed", cert.shuffle_seed,
                 "Shuffle the combination order with this seed");
  s1->add_option("--log", cert.log, "Write the certificate JSON here");
  auto* cgap = certify->add_subcommand("gap", "No GS within rho of f");
  cgap->add_option("--f", cert.file, "Valuation JSON")->required();
  cgap->add_option("--rho", cert.rho, "Ratio p/q")->required();
  cgap->add_flag("--sym", cert.sym, "Respect the symmetries of f");
  cgap->add_option("--log", cert.log, "Write the certificate JSON here");
  auto* suff = certify->add_subcommand("sufficient",
                                       "Search sufficient S1 combination sets");
  suff->add_option("--size", cert.size, "Set size")
      ->check(CLI::Range(1, 40));
  suff->add_option("--budget", cert.budget, "LP budget (0 = unlimited)");

  auto* demand = app.add_subcommand("demand", "Demand at given prices");
  demand->add_option("--file", file, "Valuation JSON")->required();
  demand->add_option("--prices", prices, "Comma-separated prices")
      ->required();
  demand->add_flag("--greedy", greedy, "Also run the greedy procedure");

  int k = 2;
  uint64_t seed = 7;
  auto* reproduce = app.add_subcommand("reproduce", "Run a named check");
  reproduce->add_option("claim", claim, "Claim id, or 'list'")->required();
  reproduce->add_option("--k", k, "k for approx2 and ba-gap");
  reproduce->add_option("--seed", seed, "Sampling seed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (check->parsed()) return RunCheck(ctx, file, no_xos);
    if (sym->parsed()) {
      return RunSymmetrize(ctx, file, items, target, partial, out_path);
    }
    if (conv->parsed()) return RunConvolve(ctx, files, out_path);
    if (gap->parsed()) return RunGap(ctx, approx, target, upper);
    if (construct->parsed()) return RunConstruct(ctx, cons);
    if (s1->parsed()) return RunCertifyS1(ctx, cert);
    if (cgap->parsed()) return RunCertifyGap(ctx, cert);
    if (suff->parsed()) return RunCertifySufficient(ctx, cert);
    if (demand->parsed()) return RunDemand(ctx, file, prices, greedy);
    if (reproduce->parsed()) return RunReproduce(ctx, claim, k, seed);
  } catch (const std::logic_error& e) {
    // Covers invalid_argument and domain_error raised by bad input.
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace gsval
