// bsrbd: decide clause sets, inspect regions, encode and check timed
// automata, run the Ramsey demo.
//
// Exit status: 0 on an answer (sat and unsat alike), 1 on errors, 2 when
// --max-candidates is exceeded, 3 when `ta reach --backend both` disagrees.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "bsrbd/decide.hpp"
#include "bsrbd/error.hpp"
#include "bsrbd/frontend.hpp"
#include "bsrbd/normalize.hpp"
#include "bsrbd/ramsey.hpp"
#include "bsrbd/regions.hpp"
#include "bsrbd/report.hpp"
#include "bsrbd/timed.hpp"

namespace {

using namespace bsrbd;

struct Options {
  std::string output = "human";
  std::optional<std::uint64_t> max_candidates;
  std::optional<std::uint64_t> seed;
  bool naive = false;
  bool no_symmetry = false;
  std::string file;
  std::string mode = "bd";
  std::uint32_t arity = 1;
  std::int64_t kappa = 1;
  std::vector<std::string> points;
  bool list = false;
  std::string goal;
  std::string backend = "both";
  std::optional<std::int64_t> lambda;
};

OutputFormat format(const Options& o) { return o.output == "structured" ? OutputFormat::Structured : OutputFormat::Human; }

int run_decide(const Options& o) {
  const ClauseSet set = parse_clause_set(read_file(o.file));
  if (o.naive) {
    const auto r = decide_naive(set);
    ResultReport rep;
    rep.signature = set;
    rep.signature.clauses.clear();
    if (!r) {
      rep = error_report("resource-limit", "naive search gave up");
      std::cout << emit_result(rep, format(o));
      return 2;
    }
    rep.status = *r ? Status::Sat : Status::Unsat;
    std::cout << emit_result(rep, format(o));
    return 0;
  }
  const NormalizedClauseSet n = normalize(set);
  DecideOptions opt;
  opt.symmetry = !o.no_symmetry;
  opt.max_candidates = o.max_candidates;
  try {
    std::cout << emit_result(make_report(n, decide(n, opt)), format(o));
  } catch (const ResourceLimit& e) {
    std::cout << emit_result(error_report("resource-limit", e.what()), format(o));
    return 2;
  }
  return 0;
}

int run_normalize(const Options& o) {
  const NormalizedClauseSet n = normalize(parse_clause_set(read_file(o.file)));
  std::cout << print_clause_set(n.combined());
  return 0;
}

int run_regions(const Options& o) {
  const bool structured = format(o) == OutputFormat::Structured;
  std::vector<std::pair<std::string, RegionScheme>> schemes;
  if (o.mode == "slr") {
    std::vector<Rational> pts;
    if (o.points.empty())
      for (std::int64_t i = 1; i <= o.kappa; ++i) pts.push_back(Rational(static_cast<long>(i)));
    else
      for (const auto& p : o.points) pts.push_back(Rational::parse(p));
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    schemes.emplace_back("slr", RegionScheme::slr(PartitionJ(pts)));
  } else {
    schemes.emplace_back("bounded", RegionScheme::bounded(o.kappa));
    schemes.emplace_back("unbounded", RegionScheme::unbounded(o.kappa));
  }
  for (const auto& [name, s] : schemes) {
    const std::uint64_t count = count_classes(s, o.arity);
    if (structured) std::cout << name << ".classes: " << count << "\n";
    else std::cout << name << " classes of arity " << o.arity << ": " << count << "\n";
    if (!o.list) continue;
    std::uint64_t i = 0;
    enumerate_classes(s, o.arity, [&](const RegionClass& c) {
      if (structured) std::cout << name << ".class: #" << i << " " << s.describe(c) << "\n";
      else std::cout << "  #" << i << "  " << s.describe(c) << "\n";
      ++i;
      return true;
    });
  }
  return 0;
}

int run_ta_encode(const Options& o) {
  const TimedAutomaton a = parse_ta(read_file(o.file));
  if (o.goal.empty()) std::cout << print_clause_set(encode_fol_la(a));
  else std::cout << print_clause_set(encode_reachability(a, parse_goal(a, o.goal), o.lambda));
  return 0;
}

int run_ta_reach(const Options& o) {
  const TimedAutomaton a = parse_ta(read_file(o.file));
  const ReachQuery q = parse_goal(a, o.goal);
  const bool structured = format(o) == OutputFormat::Structured;
  const std::int64_t lambda = o.lambda.value_or(default_lambda(a, q));
  std::optional<bool> by_region, by_bsr;
  if (o.backend != "bsr") by_region = region_reach(a, q, lambda);
  if (o.backend != "region") {
    const NormalizedClauseSet n = normalize(encode_reachability(a, q, lambda));
    DecideOptions opt;
    opt.max_candidates = o.max_candidates;
    by_bsr = !decide(n, opt).sat;
  }
  auto word = [](bool r) { return r ? "reachable" : "unreachable"; };
  if (structured) std::cout << "lambda: " << lambda << "\n";
  else std::cout << "box [0, " << lambda + 1 << ")\n";
  if (by_region) std::cout << (structured ? "region: " : "region backend: ") << word(*by_region) << "\n";
  if (by_bsr) std::cout << (structured ? "bsr: " : "bsr backend: ") << word(*by_bsr) << "\n";
  if (by_region && by_bsr && *by_region != *by_bsr) {
    std::cout << (structured ? "agree: false\n" : "backends disagree\n");
    return 3;
  }
  if (by_region && by_bsr && structured) std::cout << "agree: true\n";
  return 0;
}

int run_ramsey_demo(const Options& o) {
  for (const auto& line : ramsey_demo(o.seed)) std::cout << line << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decision procedures for BSR with simple linear real constraints and bounded differences"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  Options o;
  app.add_option("--output", o.output, "human or structured")
      ->check(CLI::IsMember({"human", "structured"}))
      ->capture_default_str();
  app.add_option("--max-candidates", o.max_candidates, "give up after this many candidates");
  app.add_option("--seed", o.seed, "seed for randomized generators");

  std::function<int()> action;

  auto* decide_cmd = app.add_subcommand("decide", "decide satisfiability of a clause file");
  decide_cmd->add_option("file", o.file)->required()->check(CLI::ExistingFile);
  decide_cmd->add_flag("--naive", o.naive, "use the reference enumerator");
  decide_cmd->add_flag("--no-symmetry", o.no_symmetry, "enumerate all constant assignments");
  decide_cmd->callback([&] { action = [&] { return run_decide(o); }; });

  auto* norm_cmd = app.add_subcommand("normalize", "print the normal form of a clause file");
  norm_cmd->add_option("file", o.file)->required()->check(CLI::ExistingFile);
  norm_cmd->callback([&] { action = [&] { return run_normalize(o); }; });

  auto* regions_cmd = app.add_subcommand("regions", "count and list region classes");
  regions_cmd->add_option("--mode", o.mode)->check(CLI::IsMember({"slr", "bd"}))->capture_default_str();
  regions_cmd->add_option("--arity", o.arity)->capture_default_str();
  regions_cmd->add_option("--kappa", o.kappa, "bd: kappa; slr: points 1..kappa")->capture_default_str();
  regions_cmd->add_option("--points", o.points, "slr: explicit points")->delimiter(',');
  regions_cmd->add_flag("--list", o.list, "print every class");
  regions_cmd->callback([&] { action = [&] { return run_regions(o); }; });

  auto* ta_cmd = app.add_subcommand("ta", "timed automata");
  ta_cmd->require_subcommand(1);
  auto* enc_cmd = ta_cmd->add_subcommand("encode", "print the clause encoding");
  enc_cmd->add_option("file", o.file)->required()->check(CLI::ExistingFile);
  enc_cmd->add_option("--goal", o.goal, "with a goal: the bounded reachability encoding");
  enc_cmd->add_option("--lambda", o.lambda);
  enc_cmd->callback([&] { action = [&] { return run_ta_encode(o); }; });
  auto* reach_cmd = ta_cmd->add_subcommand("reach", "check reachability of a goal");
  reach_cmd->add_option("file", o.file)->required()->check(CLI::ExistingFile);
  reach_cmd->add_option("--goal", o.goal, "loc:cc")->required();
  reach_cmd->add_option("--backend", o.backend)->check(CLI::IsMember({"region", "bsr", "both"}))->capture_default_str();
  reach_cmd->add_option("--lambda", o.lambda);
  reach_cmd->callback([&] { action = [&] { return run_ta_reach(o); }; });

  auto* ramsey_cmd = app.add_subcommand("ramsey", "Ramsey constructions");
  ramsey_cmd->require_subcommand(1);
  auto* demo_cmd = ramsey_cmd->add_subcommand("demo", "run a worked example and print its trace");
  demo_cmd->callback([&] { action = [&] { return run_ramsey_demo(o); }; });

  CLI11_PARSE(app, argc, argv);
  try {
    return action ? action() : 1;
  } catch (const bsrbd::Error& e) {
    if (format(o) == OutputFormat::Structured) {
      std::cout << emit_result(error_report("error", e.what()), OutputFormat::Structured);
    } else {
      std::cerr << "error: " << e.what() << "\n";
    }
    return 1;
  }
}
