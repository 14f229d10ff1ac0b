#pragma once

#include <chrono>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "shapeavoid/count_cache.hpp"
#include "shapeavoid/enumeration.hpp"
#include "shapeavoid/greene.hpp"
#include "shapeavoid/rsk.hpp"
#include "shapeavoid/verify.hpp"
#include "shapeavoid/witness.hpp"

namespace shapeavoid::cli {

using nlohmann::json;

enum ExitCode : int { kOk = 0, kDomainError = 1, kUsageError = 2, kBudgetExceeded = 3 };

inline constexpr int kJsonSchema = 1;

// Everything a subcommand can be handed on the command line.
struct Invocation {
  std::string command;
  std::string perm;
  std::string shape;
  std::string pattern;
  std::vector<std::string> positional;
  int n = -1;
  int from = -1;
  int m = 0;
  int k = 0;
  std::string method;
  std::string suite;
  bool json = false;
  bool oracle = false;
  int jobs = default_jobs();
  std::uint64_t budget = kDefaultBudget;
  std::string cache = "./shape-avoid-cache.json";
  std::uint64_t seed = 1;

  ScanOptions scan() const { return {jobs, budget}; }
};

// What a subcommand hands back to the single output writer.
struct Outcome {
  json inputs = json::object();
  json result;
  std::string text;
  std::optional<std::string> method;
  bool cached = false;
  int exit = kOk;
};

namespace detail {

inline json positions_json(const std::vector<int>& zero_based) {
  json out = json::array();
  for (int p : zero_based) out.push_back(p + 1);
  return out;
}

inline std::string join(const std::vector<int>& v, const char* sep = ",") {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

inline std::string rows_text(const StandardTableau& t) {
  std::ostringstream os;
  for (const auto& row : t.rows()) os << "  " << join(row, " ") << '\n';
  return os.str();
}

inline Permutation require_perm(const Invocation& inv) {
  std::string text = inv.perm;
  if (text.empty() && !inv.positional.empty()) text = inv.positional.front();
  if (text.empty()) throw CLI::ValidationError("--perm", "a permutation is required");
  return parse_permutation(text);
}

inline Partition require_shape(const Invocation& inv) {
  if (inv.shape.empty()) throw CLI::ValidationError("--shape", "a shape is required");
  return parse_partition(inv.shape);
}

inline Partition positional_shape(const Invocation& inv, std::size_t index, const char* name) {
  if (index < inv.positional.size()) return parse_partition(inv.positional[index]);
  if (index == 0 && !inv.shape.empty()) return parse_partition(inv.shape);
  throw CLI::ValidationError(name, "a shape argument is required");
}

inline int require_n(const Invocation& inv) {
  if (inv.n < 0) throw CLI::ValidationError("--n", "--n is required");
  return inv.n;
}

inline Outcome cmd_rsk(const Invocation& inv) {
  const Permutation pi = require_perm(inv);
  const RskPair pair = rsk(pi);
  Outcome o;
  o.inputs = {{"perm", pi.word()}};
  o.result = {{"p", pair.p.rows()}, {"q", pair.q.rows()}, {"shape", pair.shape().parts()}};
  o.text = "P:\n" + rows_text(pair.p) + "Q:\n" + rows_text(pair.q) + "shape: " + pair.shape().to_string() + '\n';
  return o;
}

inline Outcome cmd_shape(const Invocation& inv) {
  const Permutation pi = require_perm(inv);
  const Partition lambda = shape_of(pi);
  Outcome o;
  o.inputs = {{"perm", pi.word()}};
  o.result = lambda.parts();
  o.text = lambda.to_string() + '\n';
  return o;
}

inline Outcome cmd_contains(const Invocation& inv) {
  const Partition mu = positional_shape(inv, 0, "mu");
  const Partition lambda = positional_shape(inv, 1, "lambda");
  const bool r = contains(mu, lambda);
  Outcome o;
  o.inputs = {{"mu", mu.parts()}, {"lambda", lambda.parts()}};
  o.result = r;
  o.text = std::string(r ? "true" : "false") + '\n';
  return o;
}

inline Outcome cmd_dominates(const Invocation& inv) {
  const Partition lambda = positional_shape(inv, 0, "lambda");
  const Partition mu = positional_shape(inv, 1, "mu");
  const bool r = dominates(lambda, mu);
  Outcome o;
  o.inputs = {{"lambda", lambda.parts()}, {"mu", mu.parts()}};
  o.result = r;
  o.text = std::string(r ? "true" : "false") + '\n';
  return o;
}

inline Outcome cmd_conjugate(const Invocation& inv) {
  const Partition lambda = positional_shape(inv, 0, "shape");
  const Partition conj = conjugate(lambda);
  Outcome o;
  o.inputs = {{"shape", lambda.parts()}};
  o.result = conj.parts();
  o.text = conj.to_string() + '\n';
  return o;
}

inline Outcome cmd_greene(const Invocation& inv) {
  const Permutation pi = require_perm(inv);
  const Partition lambda = shape_of(pi);
  const int rows = std::max(lambda.first(), lambda.length());
  Outcome o;
  o.inputs = {{"perm", pi.word()}};
  if (inv.k > 0) o.inputs["k"] = inv.k;
  json inc = json::array(), dec = json::array();
  std::ostringstream text;
  text << "shape: " << lambda.to_string() << "\nk increasing decreasing\n";
  for (int i = 1; i <= rows; ++i) {
    const int a = greene_prefix(pi, i, Direction::increasing);
    const int b = greene_prefix(pi, i, Direction::decreasing);
    inc.push_back(a);
    dec.push_back(b);
    text << i << ' ' << a << ' ' << b << '\n';
  }
  o.result = {{"shape", lambda.parts()}, {"increasing", inc}, {"decreasing", dec}};
  if (inv.k > 0) {
    json chains = json::object();
    for (Direction d : {Direction::increasing, Direction::decreasing}) {
      const ChainUnion cu = extract_chain_union(pi, inv.k, d);
      json list = json::array();
      text << to_string(d) << " chains (k=" << inv.k << ", total " << cu.total_size << "):\n";
      for (const auto& c : cu.chains) {
        list.push_back(positions_json(c));
        std::vector<int> one_based;
        for (int p : c) one_based.push_back(p + 1);
        text << "  " << join(one_based) << '\n';
      }
      chains[to_string(d)] = {{"total", cu.total_size}, {"chains", list}};
    }
    o.result["chains"] = chains;
    o.method = "min-cost-flow";
  }
  o.text = text.str();
  return o;
}

inline Outcome cmd_cell(const Invocation& inv) {
  const Partition mu = require_shape(inv);
  const auto cell = knuth_cell(mu, inv.budget);
  Outcome o;
  o.inputs = {{"shape", mu.parts()}};
  json list = json::array();
  std::ostringstream text;
  for (const auto& p : cell) {
    list.push_back(p.word());
    text << p.to_string() << '\n';
  }
  o.result = {{"size", cell.size()}, {"members", list}};
  o.text = text.str();
  return o;
}

inline Outcome cmd_avoids(const Invocation& inv) {
  const Permutation pi = require_perm(inv);
  Outcome o;
  o.inputs = {{"perm", pi.word()}};
  bool avoids = false;
  if (!inv.pattern.empty()) {
    const Permutation sigma = parse_permutation(inv.pattern);
    o.inputs["pattern"] = sigma.word();
    avoids = !contains_pattern(pi, sigma, inv.budget);
  } else {
    const Partition mu = require_shape(inv);
    o.inputs["shape"] = mu.parts();
    avoids = avoids_shape(pi, mu, inv.budget);
  }
  o.result = avoids;
  o.text = std::string(avoids ? "true" : "false") + '\n';
  return o;
}

inline CountRecord compute_count(const Invocation& inv, int n, const CountTarget& target, CountMethod method) {
  if (const auto* sigma = std::get_if<Permutation>(&target)) {
    if (method != CountMethod::brute)
      throw precondition_error("single-pattern counts are only available with --method brute");
    return single_pattern_avoid_count(n, *sigma, inv.scan());
  }
  const Partition& mu = std::get<Partition>(target);
  switch (method) {
    case CountMethod::brute:
      return avoid_count_brute(n, mu, inv.scan());
    case CountMethod::hook_formula:
      if (mu.empty() || !mu.is_hook())
        throw precondition_error("the hook formula needs a hook shape, got " + mu.to_string());
      return avoid_count_hook(n, mu.first(), mu.length());
    case CountMethod::two_two_formula:
      if (mu != Partition{2, 2})
        throw precondition_error("the two-two formula counts avoiders of (2,2) only, got " + mu.to_string());
      return avoid_count_22(n);
    case CountMethod::cell_sum_bound:
      return cell_sum_bound(n, mu);
  }
  throw std::logic_error("unreachable");
}

inline CountTarget require_target(const Invocation& inv, json& inputs) {
  if (!inv.pattern.empty()) {
    Permutation sigma = parse_permutation(inv.pattern);
    inputs["pattern"] = sigma.word();
    return sigma;
  }
  Partition mu = require_shape(inv);
  inputs["shape"] = mu.parts();
  return mu;
}

inline Outcome cmd_count(const Invocation& inv) {
  Outcome o;
  const int n = require_n(inv);
  o.inputs["n"] = n;
  const CountTarget target = require_target(inv, o.inputs);
  const CountMethod method = parse_count_method(inv.method.empty() ? "brute" : inv.method);
  o.method = to_string(method);

  std::optional<BigInt> count;
  if (!inv.cache.empty()) {
    const CountCache cache(inv.cache);
    count = cache.lookup(n, target, method);
    o.cached = count.has_value();
    if (!count) {
      CountRecord rec = compute_count(inv, n, target, method);
      cache.store(rec);
      count = rec.count;
    }
  } else {
    count = compute_count(inv, n, target, method).count;
  }
  o.result = {{"count", to_decimal(*count)}, {"upper_bound", method == CountMethod::cell_sum_bound}};
  o.text = to_decimal(*count) + '\n';
  return o;
}

inline Outcome cmd_witness(const Invocation& inv) {
  const Permutation pi = require_perm(inv);
  const Partition mu = require_shape(inv);
  const Partition lambda = shape_of(pi);
  Outcome o;
  o.inputs = {{"perm", pi.word()}, {"shape", mu.parts()}};

  std::optional<SubsequenceWitness> w;
  const bool rectangle_ok = mu.empty() || contains(Partition::rectangle(mu.first(), mu.length()), lambda);
  const bool hook_ok = !mu.empty() && mu.is_hook() && [&] {
    const int m = mu.first(), k = mu.length();
    if (m <= 3 || k <= 3) return contains(mu, lambda);
    return (lambda.first() >= 2 * m - 3 && lambda.length() >= k) ||
           (lambda.first() >= m && lambda.length() >= 2 * k - 3);
  }();
  if (!inv.oracle && rectangle_ok) {
    w = extract_shape(pi, mu);
    o.method = "rectangle";
  } else if (!inv.oracle && hook_ok) {
    w = extract_hook(pi, mu.first(), mu.length());
    o.method = "hook";
  } else {
    w = brute_force_find_shape(pi, mu, inv.budget);
    o.method = "oracle";
  }

  if (!w) {
    o.result = {{"found", false}};
    o.text = "no subsequence of shape " + mu.to_string() + '\n';
    return o;
  }
  std::vector<int> one_based, values;
  for (int p : w->positions) {
    one_based.push_back(p + 1);
    values.push_back(pi[static_cast<std::size_t>(p)]);
  }
  const Permutation flat = pattern_of(pi, w->positions);
  o.result = {{"found", true},
              {"positions", one_based},
              {"values", values},
              {"pattern", flat.word()},
              {"shape", w->shape.parts()}};
  o.text = "positions: " + join(one_based) + "\nvalues: " + join(values) + "\npattern: " + flat.to_string() +
           "\nshape: " + w->shape.to_string() + "\nmethod: " + *o.method + '\n';
  return o;
}

inline Outcome cmd_counterexample(const Invocation& inv) {
  if (inv.m <= 0 || inv.k <= 0) throw CLI::ValidationError("--m/--k", "--m and --k are required");
  const Permutation pi = hook_counterexample(inv.m, inv.k);
  const Partition lambda = shape_of(pi);
  const Partition big_hook = Partition::hook(2 * inv.m - 4, 2 * inv.k - 4);
  const Partition target = Partition::hook(inv.m, inv.k);
  const auto found = brute_force_find_shape(pi, target, inv.budget);
  Outcome o;
  o.inputs = {{"m", inv.m}, {"k", inv.k}};
  o.result = {{"perm", pi.word()},
              {"shape", lambda.parts()},
              {"contains", big_hook.parts()},
              {"shape_contains", contains(big_hook, lambda)},
              {"target", target.parts()},
              {"target_found", found.has_value()}};
  o.method = "oracle";
  o.text = "perm: " + pi.to_string() + "\nshape: " + lambda.to_string() + "\ncontains " + big_hook.to_string() +
           ": " + (contains(big_hook, lambda) ? "true" : "false") + "\nsubsequence of shape " +
           target.to_string() + ": " + (found ? "found" : "none") + '\n';
  return o;
}

inline Outcome cmd_verify(const Invocation& inv) {
  std::string suite = inv.suite;
  if (suite.empty() && !inv.positional.empty()) suite = inv.positional.front();
  if (suite.empty()) suite = "all";
  std::vector<std::string> names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
  VerifyOptions opt;
  opt.max_n = std::max(inv.n, 0);
  opt.seed = inv.seed;
  opt.scan = inv.scan();
  Outcome o;
  o.inputs = {{"suite", suite}, {"seed", inv.seed}};
  if (inv.n >= 0) o.inputs["n"] = inv.n;
  json reports = json::array();
  std::ostringstream text;
  bool all_passed = true;
  for (const auto& name : names) {
    SuiteReport r = (name == "thm-4.1" && inv.m > 0 && inv.k > 0)
                        ? suites::rectangle_subshapes(opt, {{inv.m, inv.k}})
                        : run_suite(name, opt);
    all_passed = all_passed && r.passed();
    reports.push_back({{"suite", r.suite},
                       {"passed", r.passed()},
                       {"cases", r.cases},
                       {"failures", r.failures},
                       {"first_failure", r.first_failure}});
    text << (r.passed() ? "PASS " : "FAIL ") << r.suite << " (" << r.cases << " cases, " << r.failures
         << " failures)";
    if (!r.passed()) text << ": " << r.first_failure;
    text << '\n';
  }
  o.result = {{"passed", all_passed}, {"suites", reports}};
  o.text = text.str();
  o.exit = all_passed ? kOk : kDomainError;
  return o;
}

inline Outcome cmd_growth(const Invocation& inv) {
  Outcome o;
  const int max_n = require_n(inv);
  const Partition mu = require_shape(inv);
  CountMethod method = CountMethod::brute;
  if (!inv.method.empty())
    method = parse_count_method(inv.method);
  else if (mu == Partition{2, 2})
    method = CountMethod::two_two_formula;
  else if (!mu.empty() && mu.is_hook())
    method = CountMethod::hook_formula;
  o.inputs = {{"shape", mu.parts()}, {"n", max_n}};
  o.method = to_string(method);
  int from = inv.from;
  if (from < 0)
    from = (method == CountMethod::hook_formula && mu.is_hook() && !mu.empty())
               ? hook_formula_threshold(mu.first(), mu.length())
               : 1;
  o.inputs["from"] = from;
  std::vector<CountRecord> records;
  for (int n = std::max(from, 1); n <= max_n; ++n) records.push_back(compute_count(inv, n, mu, method));
  const GrowthSeries g = growth_series(records, mu);

  std::ostringstream csv;
  csv << std::fixed << std::setprecision(6);
  csv << "n,root,lower_ref,upper_ref" << (g.hook_limit ? ",hook_limit" : "") << '\n';
  json points = json::array();
  for (const auto& p : g.points) {
    csv << p.n << ',' << p.root << ',' << g.lower_ref << ',' << g.upper_ref;
    if (g.hook_limit) csv << ',' << *g.hook_limit;
    csv << '\n';
    std::ostringstream root;
    root << std::fixed << std::setprecision(6) << p.root;
    points.push_back({{"n", p.n}, {"root", std::stod(root.str())}});
  }
  o.result = {{"points", points}, {"lower_ref", g.lower_ref}, {"upper_ref", g.upper_ref}};
  if (g.hook_limit) o.result["hook_limit"] = *g.hook_limit;
  o.text = csv.str();
  return o;
}

}  // namespace detail

// Parses argv (without the program name) and runs one subcommand. Results go
// to `out`, diagnostics to `err`.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Shape avoidance for permutations under RSK", "shape-avoid"};
  app.fallthrough();
  app.require_subcommand(1, 1);
  Invocation inv;

  app.add_flag("--json", inv.json, "Emit one JSON object instead of text");
  app.add_option("--jobs", inv.jobs, "Worker threads for exhaustive scans")->check(CLI::PositiveNumber);
  app.add_option("--budget", inv.budget, "Maximum enumeration work units")->check(CLI::PositiveNumber);
  app.add_option("--cache", inv.cache, "Count cache file (empty string disables it)");
  app.add_option("--seed", inv.seed, "Seed for randomized sampling in verify");

  auto perm_opts = [&](CLI::App* sub) {
    sub->add_option("--perm", inv.perm, "Permutation, e.g. 6,5,1,2,7,8,4,3 or 65127843");
    sub->add_option("args", inv.positional, "Positional arguments");
  };
  struct Entry {
    const char* name;
    const char* help;
    Outcome (*handler)(const Invocation&);
  };
  const std::vector<Entry> entries{
      {"rsk", "Print the RSK tableaux P and Q", detail::cmd_rsk},
      {"shape", "Print the RSK shape of a permutation", detail::cmd_shape},
      {"contains-shape", "contains-shape MU LAMBDA: is MU inside LAMBDA", detail::cmd_contains},
      {"dominates", "dominates LAMBDA MU: does LAMBDA dominate MU", detail::cmd_dominates},
      {"conjugate", "Conjugate partition", detail::cmd_conjugate},
      {"greene", "Greene prefix sums, and chain unions with --k", detail::cmd_greene},
      {"cell", "List every permutation of a given shape", detail::cmd_cell},
      {"avoids", "Does --perm avoid --shape (or --pattern)", detail::cmd_avoids},
      {"count", "Count avoiders in S_n (--method brute|hook|two-two|bound)", detail::cmd_count},
      {"witness", "Find a subsequence of --perm with shape --shape", detail::cmd_witness},
      {"counterexample", "Hook counterexample for --m, --k >= 4", detail::cmd_counterexample},
      {"verify", "Run a named property suite (or all)", detail::cmd_verify},
      {"growth", "Growth roots count^(1/2n) as CSV (or JSON)", detail::cmd_growth},
  };
  std::vector<std::pair<CLI::App*, const Entry*>> subs;
  for (const auto& e : entries) {
    CLI::App* sub = app.add_subcommand(e.name, e.help);
    perm_opts(sub);
    sub->add_option("--shape", inv.shape, "Shape as comma-separated parts");
    sub->add_option("--pattern", inv.pattern, "Single pattern permutation");
    sub->add_option("--n", inv.n, "Permutation size (max size for verify/growth)")->check(CLI::NonNegativeNumber);
    sub->add_option("--from", inv.from, "First n of a growth series")->check(CLI::NonNegativeNumber);
    sub->add_option("--m", inv.m, "Row length m")->check(CLI::PositiveNumber);
    sub->add_option("--k", inv.k, "Row count k")->check(CLI::PositiveNumber);
    sub->add_option("--method", inv.method, "Counting method");
    if (std::string(e.name) == "witness") sub->add_flag("--oracle", inv.oracle, "Use exhaustive search");
    subs.push_back({sub, &e});
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n' << app.help();
    return kUsageError;
  }

  const Entry* chosen = nullptr;
  for (auto [sub, e] : subs)
    if (sub->parsed()) chosen = e;
  inv.command = chosen->name;

  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = chosen->handler(inv);
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const validation_error& e) {
    err << "invalid input: " << e.what() << '\n';
    return kUsageError;
  } catch (const precondition_error& e) {
    err << "precondition failed: " << e.what() << '\n';
    return kDomainError;
  } catch (const budget_exceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kBudgetExceeded;
  }
  const auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();

  if (inv.json) {
    json doc{{"schema", kJsonSchema},
             {"command", inv.command},
             {"inputs", outcome.inputs},
             {"result", outcome.result},
             {"method", outcome.method ? json(*outcome.method) : json(nullptr)},
             {"cached", outcome.cached},
             {"elapsed_ms", elapsed}};
    out << doc.dump() << '\n';
  } else {
    out << outcome.text;
  }
  return outcome.exit;
}

}  // namespace shapeavoid::cli
