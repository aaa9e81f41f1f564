#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "mgrough/approximations.hpp"
#include "mgrough/completion.hpp"
#include "mgrough/errors.hpp"
#include "mgrough/report.hpp"
#include "mgrough/rough_systems.hpp"
#include "mgrough/sweep.hpp"
#include "mgrough/text_format.hpp"

namespace mgrough::cli {

namespace {

constexpr std::size_t kSweepMaxN = 6;

struct Options {
  std::string input;
  std::string inline_spec;
  std::string out_path;
  std::string system = "opt";
  std::string format;
  std::string set;
  std::string family;
  std::string p_name;
  std::string q_name;
  std::string tolerance_name;
  std::size_t max_n = 4;
  bool allow_large = false;
  std::size_t random_pairs = 0;
  std::size_t threads = 1;
  std::size_t limit = kDefaultExhaustiveLimit;
  std::uint64_t seed = kDefaultSeed;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

RelationFile load_input(const Options& o) {
  if (!o.inline_spec.empty()) {
    if (!o.input.empty()) throw UsageError("give either an input file or --inline, not both");
    std::string text = o.inline_spec;
    std::replace(text.begin(), text.end(), ';', '\n');
    return parse_relation_file(text);
  }
  if (o.input.empty()) throw UsageError("missing input file (or --inline)");
  std::ifstream in(o.input, std::ios::binary);
  if (!in) throw UsageError("cannot read input file '" + o.input + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_relation_file(buf.str());
}

const Equivalence& pick_partition(const RelationFile& f, const std::string& name,
                                  std::size_t position) {
  if (!name.empty()) return f.partition(name);
  if (f.partitions.size() <= position) {
    throw UsageError(position == 0 ? std::string("input has no partition line")
                                   : std::string("input needs a second partition line"));
  }
  return f.partitions[position].second;
}

std::pair<Equivalence, Equivalence> pick_pair(const RelationFile& f, const Options& o) {
  return {pick_partition(f, o.p_name, 0), pick_partition(f, o.q_name, 1)};
}

const Tolerance& pick_tolerance(const RelationFile& f, const Options& o) {
  if (!o.tolerance_name.empty()) return f.tolerance(o.tolerance_name);
  if (f.tolerances.empty()) throw UsageError("input has no tolerance line");
  return f.tolerances.front().second;
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (format == a) return;
  }
  throw UsageError("format '" + format + "' is not available for this command");
}

std::string format_or(const Options& o, const char* fallback) {
  return o.format.empty() ? fallback : o.format;
}

// ---- table / approx --------------------------------------------------------

std::string cmd_table(const Options& o) {
  const auto file = load_input(o);
  if (!o.format.empty()) require_format(o.format, {"tsv"});
  const auto [p, q] = pick_pair(file, o);
  return approximation_table_tsv(p, q, o.limit);
}

std::string cmd_approx(const Options& o) {
  const auto file = load_input(o);
  if (!o.format.empty()) require_format(o.format, {"tsv"});
  const auto& u = file.universe;
  const Subset x = u.parse_set(o.set);
  std::string out = "X\t" + u.format(x) + "\n";
  auto line = [&](const char* key, const Subset& s) { out += std::string(key) + "\t" + u.format(s) + "\n"; };

  const bool use_tolerance =
      !o.tolerance_name.empty() || (file.partitions.size() < 2 && !file.tolerances.empty());
  if (use_tolerance) {
    const auto& t = pick_tolerance(file, o);
    line("X_T", lower_t(t, x));
    line("X^T", upper_t(t, x));
    line("◇X", diamond(t, x));
    line("□X", box(t, x));
    return out;
  }
  if (file.partitions.size() == 1 && o.q_name.empty()) {
    const auto& e = pick_partition(file, o.p_name, 0);
    line("X_E", lower_e(e, x));
    line("X^E", upper_e(e, x));
    return out;
  }
  const auto [p, q] = pick_pair(file, o);
  line("X_P", lower_e(p, x));
  line("X_Q", lower_e(q, x));
  line("X^P", upper_e(p, x));
  line("X^Q", upper_e(q, x));
  line("X_{P+Q}", opt_lower(p, q, x));
  line("X^{P+Q}", opt_upper(p, q, x));
  line("X_{P∪Q}", pess_lower(p, q, x));
  line("X^{P∪Q}", pess_upper(p, q, x));
  return out;
}

// ---- systems and diagrams --------------------------------------------------

RoughSystem select_system(const RelationFile& file, const Options& o) {
  if (o.system == "tol") return build_rs_tolerance(pick_tolerance(file, o), o.limit);
  if (o.system == "equiv") return build_rs_equivalence(pick_partition(file, o.p_name, 0), o.limit);
  const auto [p, q] = pick_pair(file, o);
  if (o.system == "opt") return build_rs(SystemKind::optimistic, p, q, o.limit);
  if (o.system == "pess") return build_rs(SystemKind::pessimistic, p, q, o.limit);
  return build_irs(p, q, o.limit);
}

std::vector<std::string> lattice_banner(const RoughSystem& s) {
  auto result = try_lattice(s.order());
  const auto* w = std::get_if<NonLatticeWitness>(&result);
  if (!w) return {"lattice: yes"};
  const bool join = w->kind == NonLatticeWitness::Kind::no_join;
  std::string bounds;
  for (auto b : w->bounds) bounds += (bounds.empty() ? "" : " ") + s.format_pair(b);
  return {std::string("NOT A LATTICE: ") + s.format_pair(w->a) + " and " + s.format_pair(w->b) +
              " have no " + (join ? "join" : "meet"),
          std::string(join ? "minimal upper bounds: " : "maximal lower bounds: ") + bounds};
}

std::string system_dot(const RoughSystem& s) {
  DotOptions opts;
  opts.graph_name = std::string(to_string(s.kind()));
  opts.comments = {"elements: " + std::to_string(s.size())};
  for (auto& line : lattice_banner(s)) opts.comments.push_back(std::move(line));
  return to_dot(s.order(), [&](std::size_t i) { return s.format_pair(i); }, opts);
}

std::string system_tsv(const RoughSystem& s) {
  std::string out = "index\tlower\tupper\n";
  for (std::size_t i = 0; i < s.size(); ++i) {
    out += std::to_string(i) + "\t" + s.universe().format(s[i].lower) + "\t" +
           s.universe().format(s[i].upper) + "\n";
  }
  for (const auto& line : lattice_banner(s)) out += "# " + line + "\n";
  return out;
}

std::string system_json(const RoughSystem& s) {
  nlohmann::ordered_json j;
  j["kind"] = std::string(to_string(s.kind()));
  j["universe"] = s.universe().names();
  auto& elems = j["elements"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < s.size(); ++i) {
    elems.push_back({{"lower", s.universe().format(s[i].lower)},
                     {"upper", s.universe().format(s[i].upper)}});
  }
  auto& cov = j["covers"] = nlohmann::ordered_json::array();
  for (auto [a, b] : covers(s.order())) cov.push_back({a, b});
  auto result = try_lattice(s.order());
  j["is_lattice"] = std::holds_alternative<FiniteLattice>(result);
  if (const auto* w = std::get_if<NonLatticeWitness>(&result)) {
    j["witness"] = {{"a", w->a}, {"b", w->b}, {"bounds", w->bounds}};
  }
  return j.dump(2) + "\n";
}

std::string cmd_system(const Options& o) {
  const auto file = load_input(o);
  const auto s = select_system(file, o);
  const auto fmt = format_or(o, "tsv");
  if (fmt == "dot") return system_dot(s);
  if (fmt == "json") return system_json(s);
  require_format(fmt, {"tsv"});
  return system_tsv(s);
}

std::string cmd_dot(const Options& o) {
  const auto file = load_input(o);
  if (!o.format.empty()) require_format(o.format, {"dot"});
  if (o.family.empty()) return system_dot(select_system(file, o));

  const auto [p, q] = pick_pair(file, o);
  const Tolerance uni = rel_union(p, q);
  SetFamily fam;
  if (o.family == "interior") {
    fam = interior_system_opt(p, q, o.limit);
  } else if (o.family == "closure") {
    fam = closure_system_opt(p, q, o.limit);
  } else if (o.family == "interior-pess") {
    fam = lower_system(uni, o.limit);
  } else {
    fam = upper_system(uni, o.limit);
  }
  DotOptions opts;
  opts.graph_name = "family";
  opts.comments = {o.family + ": " + std::to_string(fam.size()) + " sets"};
  return to_dot(family_poset(fam), [&](std::size_t i) { return file.universe.format(fam[i]); },
                opts);
}

std::string cmd_dm(const Options& o) {
  const auto file = load_input(o);
  const auto [p, q] = pick_pair(file, o);
  const auto rs = build_rs(SystemKind::optimistic, p, q, o.limit);
  const auto irs = build_irs(p, q, o.limit);
  const auto dm = dm_completion(rs.order());
  const auto verdict = check_smallest_completion(rs, irs);

  std::vector<std::pair<std::string, std::string>> lines = {
      {"rs_size", std::to_string(rs.size())},
      {"dm_size", std::to_string(dm.lattice.size())},
      {"irs_size", std::to_string(irs.size())},
      {"isomorphic_to_irs", verdict.isomorphic ? "true" : "false"},
      {"rs_join_dense_in_irs", verdict.dense.join_dense.holds ? "true" : "false"},
      {"rs_meet_dense_in_irs", verdict.dense.meet_dense.holds ? "true" : "false"},
  };
  const auto fmt = format_or(o, "dot");
  if (fmt == "tsv") {
    std::string out;
    for (const auto& [k, v] : lines) out += k + "\t" + v + "\n";
    return out;
  }
  require_format(fmt, {"dot"});

  // Each closed set is named by its join in the product of the two families;
  // elements missing from RS(P+Q) carry a trailing '*'.
  auto label = [&](std::size_t i) {
    Subset lo = file.universe.empty_set();
    Subset up = file.universe.empty_set();
    dm.closed_sets[i].for_each([&](std::size_t x) {
      lo |= rs[x].lower;
      up |= rs[x].upper;
    });
    const RoughPair pair{lo, opt_upper(p, q, up)};
    return format_pair(file.universe, pair) + (rs.contains(pair) ? "" : " *");
  };
  DotOptions opts;
  opts.graph_name = "dm";
  for (const auto& [k, v] : lines) opts.comments.push_back(k + ": " + v);
  return to_dot(dm.lattice.poset(), label, opts);
}

std::string cmd_report(const Options& o) {
  const auto file = load_input(o);
  const auto [p, q] = pick_pair(file, o);
  const auto fmt = format_or(o, "json");
  if (fmt == "tsv") return pair_report(p, q, ReportFormat::tsv, o.limit);
  require_format(fmt, {"json"});
  return pair_report(p, q, ReportFormat::json, o.limit);
}

std::string cmd_sweep(const Options& o) {
  if (!o.format.empty()) require_format(o.format, {"tsv"});
  if (!o.input.empty() || !o.inline_spec.empty()) throw UsageError("sweep takes no input");
  if (o.max_n > kSweepMaxN && !o.allow_large) {
    throw UsageError("--max-n above " + std::to_string(kSweepMaxN) +
                     " needs --allow-large");
  }
  SweepConfig config;
  config.max_n = o.max_n;
  config.random_pairs = o.random_pairs;
  config.random_max_n = std::max(kSweepMaxN, o.max_n);
  config.seed = o.seed;
  config.threads = o.threads;
  config.limit = o.limit;
  const auto summary = run_sweep(config);
  return format_summary(summary);
}

void add_input(CLI::App* sub, Options& o) {
  sub->add_option("input", o.input, "Relation file");
  sub->add_option("--inline", o.inline_spec, "Relation file text with ';' as line separator");
  sub->add_option("--p", o.p_name, "Name of the first partition (default: first in file)");
  sub->add_option("--q", o.q_name, "Name of the second partition (default: second in file)");
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--out", o.out_path, "Write output to this file");
  sub->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"tsv", "dot", "json"}));
  sub->add_option("--limit-exhaustive", o.limit, "Largest universe enumerated over all subsets");
}

void add_system(CLI::App* sub, Options& o) {
  sub->add_option("--system", o.system, "System kind")
      ->check(CLI::IsMember({"opt", "pess", "equiv", "irs", "tol"}));
  sub->add_option("--tolerance", o.tolerance_name, "Tolerance name for --system tol");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Multigranular rough-set approximations and their lattices"};
  app.name(args.empty() ? "mgrough" : args.front());
  app.require_subcommand(1);

  auto* table = app.add_subcommand("table", "Approximation table of a partition pair (TSV)");
  add_input(table, o);
  add_common(table, o);

  auto* approx = app.add_subcommand("approx", "Approximations of one set");
  add_input(approx, o);
  add_common(approx, o);
  approx->add_option("--set", o.set, "Subset, e.g. ab or '-' for the empty set")->required();
  approx->add_option("--tolerance", o.tolerance_name, "Approximate by this tolerance");

  auto* system = app.add_subcommand("system", "Rough-set system: pair list, DOT or JSON");
  add_input(system, o);
  add_common(system, o);
  add_system(system, o);

  auto* dot = app.add_subcommand("dot", "Hasse diagram of a system or set family (DOT)");
  add_input(dot, o);
  add_common(dot, o);
  add_system(dot, o);
  dot->add_option("--family", o.family, "Draw a set family instead of a system")
      ->check(CLI::IsMember({"interior", "closure", "interior-pess", "closure-pess"}));

  auto* report = app.add_subcommand("report", "Structured analysis of a partition pair");
  add_input(report, o);
  add_common(report, o);

  auto* dm = app.add_subcommand("dm", "Dedekind-MacNeille completion of RS(P+Q) vs IRS(P+Q)");
  add_input(dm, o);
  add_common(dm, o);

  auto* sweep = app.add_subcommand("sweep", "Check every invariant over all partition pairs");
  add_common(sweep, o);
  sweep->add_option("--max-n", o.max_n, "Largest universe swept exhaustively");
  sweep->add_flag("--allow-large", o.allow_large, "Permit --max-n above the default cap");
  sweep->add_option("--random-pairs", o.random_pairs,
                    "Seeded random pairs for each larger n up to the cap");
  sweep->add_option("--seed", o.seed, "Seed for randomized checks");
  sweep->add_option("--threads", o.threads, "Worker threads")->check(CLI::Range(1, 256));

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  int status = kOk;
  std::string text;
  try {
    if (table->parsed()) text = cmd_table(o);
    if (approx->parsed()) text = cmd_approx(o);
    if (system->parsed()) text = cmd_system(o);
    if (dot->parsed()) text = cmd_dot(o);
    if (report->parsed()) text = cmd_report(o);
    if (dm->parsed()) text = cmd_dm(o);
    if (sweep->parsed()) {
      text = cmd_sweep(o);
      if (text.find("\nviolations\t0\n") == std::string::npos) status = kViolation;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const SizeLimitExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kSizeLimit;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  if (o.out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(o.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write '" << o.out_path << "'\n";
      return kUsageError;
    }
    file << text;
  }
  return status;
}

}  // namespace mgrough::cli
