#include "splitkit/cli/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "splitkit/aba.hpp"
#include "splitkit/cli/generate.hpp"
#include "splitkit/cli/io.hpp"
#include "splitkit/error.hpp"
#include "splitkit/instantiate.hpp"
#include "splitkit/split_aba.hpp"
#include "splitkit/split_finder.hpp"
#include "splitkit/split_setaf.hpp"

namespace splitkit::cli {

namespace {

struct Options {
  std::string input;
  std::string format;
  std::string semantics = "prf";
  std::string mode = "direct";
  std::string split_set;
  std::string output;
  double balance = 0.5;
  std::vector<double> window{0.25, 0.75};
  std::size_t guard = 0;
  std::uint64_t seed = 1;
  std::size_t count = 100;
  std::size_t assumptions = 5;
  std::size_t rules = 6;
  std::size_t max_body = 3;
  std::size_t extra = 2;
  bool all_supports = false;
  bool strict_dummy = false;
  bool quasi = false;
  bool dot = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::size_t guard_of(const Options& o) { return o.guard ? o.guard : default_guard(); }

Semantics semantics_of(const Options& o) {
  auto s = parse_semantics(o.semantics);
  if (!s) throw UsageError("unknown semantics '" + o.semantics + "'");
  return *s;
}

std::string detect_format(const Options& o, const std::string& text) {
  if (!o.format.empty()) return o.format;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream tok(line);
    std::string p, kind;
    if (tok >> p >> kind && p == "p") return kind;
  }
  return "aba";
}

struct Input {
  std::string format;
  Abaf abaf;
  Setaf sf;
};

Input load(const Options& o, std::ostream& err) {
  if (o.input.empty()) throw UsageError("an input file is required");
  std::string text;
  try {
    text = read_file(o.input);
  } catch (const std::runtime_error& e) {
    throw UsageError(e.what());
  }
  Input in;
  in.format = detect_format(o, text);
  if (in.format == "aba") {
    ParsedAbaf parsed = parse_aba(text, ParseOptions{o.strict_dummy});
    for (const auto& w : parsed.warnings) err << "warning: " << w << "\n";
    in.abaf = std::move(parsed.abaf);
  } else if (in.format == "setaf") {
    in.sf = parse_setaf(text);
  } else {
    throw UsageError("unknown format '" + in.format + "'");
  }
  return in;
}

IdSet load_split_set(const Options& o, std::size_t n) {
  std::string text;
  try {
    text = read_file(o.split_set);
  } catch (const std::runtime_error& e) {
    throw UsageError(e.what());
  }
  return parse_id_list(text, n);
}

QuasiOptions quasi_options(const Options& o) {
  if (o.window.size() != 2 || o.window[0] > o.window[1]) throw UsageError("--window expects LOW HIGH");
  QuasiOptions q;
  q.low = o.window[0];
  q.high = o.window[1];
  return q;
}

std::string names_of(const IdSet& s, std::span<const std::string> names) {
  std::string out;
  for (Id p : s) out += (out.empty() ? "" : " ") + names[p];
  return out;
}

std::string cmd_solve(const Options& o, std::ostream& err) {
  const Input in = load(o, err);
  const Semantics sigma = semantics_of(o);
  const std::size_t guard = guard_of(o);
  if (in.format == "setaf") {
    Family result;
    if (o.mode == "direct") {
      result = enumerate_extensions(in.sf, sigma, guard);
    } else if (o.mode == "split") {
      IdSet a1 = o.split_set.empty() ? find_setaf_splitting(in.sf, {.target = o.balance})
                                     : load_split_set(o, in.sf.arg_count());
      result = split_solve(in.sf, a1, sigma,
                           [guard](const Setaf& sub, Semantics s) { return enumerate_extensions(sub, s, guard); });
    } else if (o.mode == "param") {
      throw UsageError("parametrised splitting needs an ABA input");
    } else {
      throw UsageError("unknown mode '" + o.mode + "'");
    }
    return format_extensions(result, in.sf.names());
  }

  Family result;
  if (o.mode == "direct") {
    result = enumerate_extensions(in.abaf, sigma, false, guard);
  } else if (o.mode == "split") {
    IdSet s = o.split_set.empty() ? find_balanced_splitting(in.abaf, {.target = o.balance})
                                  : load_split_set(o, in.abaf.atom_count());
    result = split_solve(in.abaf, s, sigma, [guard](const Abaf& sub, Semantics sem) {
      return enumerate_extensions(sub, sem, false, guard);
    });
  } else if (o.mode == "param") {
    if (sigma != Semantics::kStable) throw UsageError("parametrised splitting supports stb only");
    IdSet s = o.split_set.empty() ? find_quasi_splitting(in.abaf, quasi_options(o)).s
                                  : load_split_set(o, in.abaf.atom_count());
    result = param_split_solve(in.abaf, s, guard);
  } else {
    throw UsageError("unknown mode '" + o.mode + "'");
  }
  return format_extensions(result, in.abaf.names());
}

std::string cmd_instantiate(const Options& o, std::ostream& err) {
  const Input in = load(o, err);
  if (in.format == "setaf") return emit_aba(setaf_to_aba(in.sf));
  return emit_setaf(aba_to_setaf(in.abaf, o.all_supports));
}

std::string cmd_find_split(const Options& o, std::ostream& err) {
  const Input in = load(o, err);
  if (in.format == "setaf") {
    if (o.dot) return to_dot(primal_graph(in.sf), in.sf.names());
    IdSet a1 = find_setaf_splitting(in.sf, {.target = o.balance});
    return "# " + names_of(a1, in.sf.names()) + "\n" + emit_id_list(a1);
  }
  if (o.dot) return to_dot(dependency_graph(in.abaf), in.abaf.names());
  if (o.quasi) {
    QuasiSplitting q = find_quasi_splitting(in.abaf, quasi_options(o));
    std::string out = "# " + names_of(q.s, in.abaf.names()) + "\n";
    out += "# k " + std::to_string(q.k);
    if (q.k > 0) out += " vulnerabilities " + names_of(q.vulnerabilities, in.abaf.names());
    return out + "\n" + emit_id_list(q.s);
  }
  IdSet s = find_balanced_splitting(in.abaf, {.target = o.balance});
  return "# " + names_of(s, in.abaf.names()) + "\n" + emit_id_list(s);
}

std::string cmd_gen(const Options& o) {
  const std::string format = o.format.empty() ? "aba" : o.format;
  if (format == "aba") {
    AbafShape shape{o.assumptions, o.rules, o.max_body, o.extra, 0.0};
    return emit_aba(random_abaf(shape, o.seed));
  }
  if (format == "setaf") return emit_setaf(random_setaf({o.assumptions, o.rules, o.max_body}, o.seed));
  throw UsageError("unknown format '" + format + "'");
}

// Compares split solving against direct enumeration on random instances and
// every nontrivial bottom of the condensation. Returns the mismatch report, if
// any, through `report`.
bool cmd_check(const Options& o, std::string& report, std::string& summary) {
  const Semantics sigma = semantics_of(o);
  if (!splittable(sigma)) throw UsageError("check needs one of stb, adm, com, prf, grd");
  const std::string format = o.format.empty() ? "aba" : o.format;
  if (format != "aba" && format != "setaf") throw UsageError("unknown format '" + format + "'");
  std::size_t splits = 0;
  for (std::size_t i = 0; i < o.count; ++i) {
    const std::uint64_t seed = o.seed + i;
    std::mt19937_64 rng(seed);
    auto upto = [&](std::size_t lo, std::size_t hi) {
      return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
    };
    if (format == "aba") {
      AbafShape shape{upto(1, 7), upto(0, 10), 3, upto(0, 2), 0.0};
      const Abaf d = random_abaf(shape, seed);
      const Family direct = enumerate_extensions(d, sigma);
      const Condensation c = condense(dependency_graph(d));
      for (const IdSet& ideal : enumerate_ideals(c, 4096)) {
        const IdSet s = c.nodes_of(ideal);
        if (s.empty() || s.size() == d.atom_count()) continue;
        ++splits;
        if (split_solve(d, s, sigma) != direct) {
          report = "mismatch for seed " + std::to_string(seed) + "\n" + emit_aba(d) + "split set\n" + emit_id_list(s);
          return false;
        }
      }
    } else {
      const Setaf sf = random_setaf({upto(1, 8), upto(0, 10), 3}, seed);
      const Family direct = enumerate_extensions(sf, sigma);
      const Condensation c = condense(primal_graph(sf));
      for (const IdSet& ideal : enumerate_ideals(c, 4096)) {
        const IdSet a1 = c.nodes_of(ideal);
        if (a1.empty() || a1.size() == sf.arg_count()) continue;
        ++splits;
        if (split_solve(sf, a1, sigma) != direct) {
          report = "mismatch for seed " + std::to_string(seed) + "\n" + emit_setaf(sf) + "split set\n" +
                   emit_id_list(a1);
          return false;
        }
      }
    }
  }
  summary = "ok " + std::to_string(o.count) + " instances " + std::to_string(splits) + " splittings\n";
  return true;
}

void add_input(CLI::App* cmd, Options& o) {
  cmd->add_option("input", o.input, "Input framework file");
  cmd->add_option("--format", o.format, "Input format")->check(CLI::IsMember({"aba", "setaf"}));
  cmd->add_flag("--strict-dummy", o.strict_dummy, "Reject dummy rules instead of dropping them");
  cmd->add_option("-o,--output", o.output, "Write the result to this file");
}

void add_solving(CLI::App* cmd, Options& o) {
  cmd->add_option("--semantics", o.semantics, "cf, adm, com, grd, prf or stb");
  cmd->add_option("--split-set", o.split_set, "File with the bottom side, one id per line");
  cmd->add_option("--balance", o.balance, "Target share of the bottom side");
  cmd->add_option("--window", o.window, "Admissible bottom share for quasi-splittings")->expected(2);
  cmd->add_option("--guard", o.guard, "Largest framework enumerated directly");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"splitkit: ABA and SETAF solving by splitting", "splitkit"};
  app.require_subcommand(1);
  Options o;

  auto* solve = app.add_subcommand("solve", "Enumerate extensions");
  add_input(solve, o);
  add_solving(solve, o);
  solve->add_option("--mode", o.mode, "direct, split or param")
      ->check(CLI::IsMember({"direct", "split", "param"}));

  auto* split = app.add_subcommand("split-solve", "Enumerate extensions through one splitting");
  add_input(split, o);
  add_solving(split, o);

  auto* param = app.add_subcommand("param-split", "Stable extensions through a quasi-splitting");
  add_input(param, o);
  add_solving(param, o);

  auto* inst = app.add_subcommand("instantiate", "Translate ABA to SETAF or back");
  add_input(inst, o);
  inst->add_flag("--all-supports", o.all_supports, "Emit an attack for every derivation leaf set");

  auto* find = app.add_subcommand("find-split", "Compute a splitting set");
  add_input(find, o);
  find->add_option("--balance", o.balance, "Target share of the bottom side");
  find->add_flag("--quasi", o.quasi, "Search quasi-splittings by minimum cut");
  find->add_option("--window", o.window, "Admissible bottom share for quasi-splittings")->expected(2);
  find->add_flag("--dot", o.dot, "Print the dependency or primal graph in DOT");

  auto* gen = app.add_subcommand("gen", "Generate a random framework");
  gen->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"aba", "setaf"}));
  gen->add_option("--seed", o.seed, "Random seed");
  gen->add_option("--assumptions", o.assumptions, "Assumptions (arguments for setaf)");
  gen->add_option("--rules", o.rules, "Rules (attacks for setaf)");
  gen->add_option("--max-body", o.max_body, "Largest body (tail for setaf)");
  gen->add_option("--extra", o.extra, "Additional non-assumption atoms");
  gen->add_option("-o,--output", o.output, "Write the result to this file");

  auto* check = app.add_subcommand("check", "Compare split and direct solving on random instances");
  check->add_option("--format", o.format, "Instance kind")->check(CLI::IsMember({"aba", "setaf"}));
  check->add_option("--semantics", o.semantics, "stb, adm, com, prf or grd");
  check->add_option("--seed", o.seed, "First seed");
  check->add_option("--count", o.count, "Number of instances");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    std::string result;
    if (solve->parsed()) {
      result = cmd_solve(o, err);
    } else if (split->parsed()) {
      o.mode = "split";
      result = cmd_solve(o, err);
    } else if (param->parsed()) {
      o.mode = "param";
      o.semantics = "stb";
      result = cmd_solve(o, err);
    } else if (inst->parsed()) {
      result = cmd_instantiate(o, err);
    } else if (find->parsed()) {
      result = cmd_find_split(o, err);
    } else if (gen->parsed()) {
      result = cmd_gen(o);
    } else if (check->parsed()) {
      std::string report, summary;
      if (!cmd_check(o, report, summary)) {
        out << report;
        return kMismatch;
      }
      result = summary;
    }
    if (!o.output.empty()) {
      std::ofstream file(o.output, std::ios::binary);
      if (!file) throw UsageError("cannot write " + o.output);
      file << result;
    } else {
      out << result;
    }
    return kOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::kParse ? kParseFailure : kValidationFailure;
  }
}

}  // namespace splitkit::cli
