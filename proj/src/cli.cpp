#include "pratt/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "pratt/analysis.hpp"
#include "pratt/closure.hpp"
#include "pratt/constructions.hpp"
#include "pratt/core.hpp"
#include "pratt/crossword.hpp"
#include "pratt/io.hpp"
#include "pratt/lattice.hpp"

namespace pratt {

namespace {

struct UsageError : Error {
  using Error::Error;
};

const char* kUsage = R"(usage: prattlab <command> [options]

commands:
  gen <kind> [params] [-o FILE]   generate a family file
      kinds: chain-down N | chain-up N | chain-updown N | powerset N |
             omega-infty N | coordinate M [--complements] |
             antichain MEMBERS (e.g. "0,1;1,2;0,2")
  check FILE [--budget N] [--bits]      closure condition, witness on failure
  close FILE [--budget N] [-o FILE] [--trace] [--bits]
  solve FILE --diagonal BITS [--budget N] [--bits]
  classify FILE                         separation / discreteness / self-duality
  analyze FILE [--base BITS] [--element K]
  freeness FILE [--blocks SPEC]         SPEC like "0,1;2"
  chains (union|continuum|crossword) --grid RxC
  sunflower FILE --threshold N          tuple file: integers, one tuple per line
  cx (eval|stratum|separate) --list-len L --n-max N --gamma-max G --island-bits M
     --point SPEC [--point2 SPEC] [--n N] [--gamma G] [--beta B]
     point SPEC: "n:g,n:g|BITS"

exit codes: 0 ok, 1 negative result (witness printed), 2 budget exceeded,
3 usage or parse error
)";

class Args {
 public:
  explicit Args(std::vector<std::string> raw) : raw_(std::move(raw)) {}

  bool take_flag(const std::string& name) {
    auto it = std::find(raw_.begin(), raw_.end(), name);
    if (it == raw_.end()) return false;
    raw_.erase(it);
    return true;
  }

  std::optional<std::string> take_option(const std::string& name) {
    auto it = std::find(raw_.begin(), raw_.end(), name);
    if (it == raw_.end()) return std::nullopt;
    auto val = std::next(it);
    if (val == raw_.end()) throw UsageError("option " + name + " needs a value");
    std::string out = *val;
    raw_.erase(it, std::next(val));
    return out;
  }

  std::string require_option(const std::string& name) {
    auto v = take_option(name);
    if (!v) throw UsageError("missing required option " + name);
    return *v;
  }

  std::string take_positional(const std::string& what) {
    for (auto it = raw_.begin(); it != raw_.end(); ++it)
      if (it->empty() || (*it)[0] != '-') {
        std::string out = *it;
        raw_.erase(it);
        return out;
      }
    throw UsageError("missing " + what);
  }

  void expect_empty() const {
    if (!raw_.empty()) throw UsageError("unexpected argument '" + raw_.front() + "'");
  }

 private:
  std::vector<std::string> raw_;
};

long parse_long(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    long v = std::stol(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw UsageError(what + " is not a number: " + s);
  }
}

int parse_int(const std::string& s, const std::string& what) {
  return static_cast<int>(parse_long(s, what));
}

Budget budget_from(Args& args) {
  if (auto v = args.take_option("--budget"))
    return Budget(static_cast<std::uint64_t>(parse_long(*v, "--budget")));
  return Budget();
}

Family load_input(const std::string& path, std::ostream& err) {
  std::vector<std::string> warnings;
  Family f = load_family_file(path, &warnings);
  for (const auto& w : warnings) err << "warning: " << w << "\n";
  return f;
}

void emit_family(const Family& f, const std::optional<std::string>& out_path,
                 std::ostream& out) {
  if (out_path) {
    save_family_file(*out_path, f);
  } else {
    save_family(out, f);
  }
}

std::vector<std::vector<int>> parse_groups(const std::string& spec) {
  std::vector<std::vector<int>> groups;
  std::stringstream outer(spec);
  std::string part;
  while (std::getline(outer, part, ';')) {
    std::vector<int> group;
    std::stringstream inner(part);
    std::string tok;
    while (std::getline(inner, tok, ','))
      if (!tok.empty()) group.push_back(parse_int(tok, "group element"));
    groups.push_back(std::move(group));
  }
  return groups;
}

int cmd_gen(Args& args, std::ostream& out, std::ostream& err) {
  std::string kind = args.take_positional("generator kind");
  auto out_path = args.take_option("-o");

  LabeledFamily made;
  if (kind == "chain-down" || kind == "chain-up" || kind == "chain-updown") {
    int n = parse_int(args.take_positional("chain length"), "chain length");
    args.expect_empty();
    // The file format cannot express words on an empty ground set.
    if (n < 1) throw UsageError("chain length must be at least 1");
    Preorder chain = Preorder::chain(n);
    Family down = order_comonoid(chain, OrderFlavor::down);
    Family up = order_comonoid(chain, OrderFlavor::up);
    Family f = kind == "chain-down" ? down
               : kind == "chain-up"
                   ? up
                   : [&] {
                       std::vector<Word> both(down.begin(), down.end());
                       both.insert(both.end(), up.begin(), up.end());
                       return Family::canonicalize(GroundSet(n), std::move(both));
                     }();
    emit_family(f, out_path, out);
    return kExitOk;
  }
  if (kind == "powerset") {
    int n = parse_int(args.take_positional("ground size"), "ground size");
    args.expect_empty();
    if (n < 1) throw UsageError("ground size must be at least 1");
    emit_family(full_power_set(GroundSet(n)), out_path, out);
    return kExitOk;
  }
  if (kind == "omega-infty") {
    int n = parse_int(args.take_positional("chain length"), "chain length");
    args.expect_empty();
    emit_family(omega_infty(n).family, out_path, out);
    return kExitOk;
  }
  if (kind == "coordinate") {
    bool complements = args.take_flag("--complements");
    int m = parse_int(args.take_positional("coordinate count"), "coordinate count");
    args.expect_empty();
    emit_family(coordinate_family(m, complements ? CoordinateFlavor::with_complements
                                                 : CoordinateFlavor::plain)
                    .family,
                out_path, out);
    return kExitOk;
  }
  if (kind == "antichain") {
    std::string spec = args.take_positional("antichain members");
    args.expect_empty();
    emit_family(antichain_family(parse_groups(spec)).family, out_path, out);
    return kExitOk;
  }
  err << "unknown generator kind '" << kind << "'\n";
  return kExitUsage;
}

int cmd_check(Args& args, std::ostream& out, std::ostream& err) {
  std::string path = args.take_positional("family file");
  Budget budget = budget_from(args);
  bool bits = args.take_flag("--bits");
  args.expect_empty();

  Family f = load_input(path, err);
  ComonoidCheck res = is_comonoid(f, budget);
  switch (res.status) {
    case ComonoidStatus::ok:
      out << "comonoid: certified exhaustively (size " << f.ground_size() << ", words "
          << f.size() << ", nodes " << res.nodes << ")\n";
      return kExitOk;
    case ComonoidStatus::missing_bounds:
      out << "not a comonoid: required word " << res.missing->to_string()
          << " is absent\n";
      return kExitNegative;
    case ComonoidStatus::counterexample:
      if (bits) {
        out << render_crossword(*res.witness);
      } else {
        out << "not a comonoid: diagonal " << res.witness->diagonal().to_string()
            << " is realizable but absent\nwitness crossword (rows):\n"
            << render_crossword(*res.witness);
      }
      return kExitNegative;
    case ComonoidStatus::budget_exceeded:
      out << "budget exceeded after " << res.nodes << " nodes\n";
      return kExitBudget;
  }
  return kExitUsage;
}

int cmd_close(Args& args, std::ostream& out, std::ostream& err) {
  std::string path = args.take_positional("family file");
  Budget budget = budget_from(args);
  auto out_path = args.take_option("-o");
  bool trace = args.take_flag("--trace");
  bool bits = args.take_flag("--bits");
  args.expect_empty();

  Family f = load_input(path, err);
  CloseResult res = close(f, budget);
  if (trace) {
    auto rule_name = [](CloseRule r) {
      switch (r) {
        case CloseRule::seed: return "seed";
        case CloseRule::bounds: return "bounds";
        case CloseRule::meet: return "meet";
        case CloseRule::join: return "join";
        case CloseRule::diag: return "diag";
      }
      return "?";
    };
    for (const auto& entry : res.trace)
      out << "trace " << entry.word.to_string() << " " << rule_name(entry.rule) << "\n";
  }
  if (bits) {
    for (const auto& w : res.family) out << w.to_string() << "\n";
  } else {
    emit_family(res.family, out_path, out);
  }
  if (!res.certified) {
    out << "# closure not certified: budget exhausted after " << res.nodes << " nodes\n";
    return kExitBudget;
  }
  return kExitOk;
}

int cmd_solve(Args& args, std::ostream& out, std::ostream& err) {
  std::string path = args.take_positional("family file");
  std::string target = args.require_option("--diagonal");
  Budget budget = budget_from(args);
  bool bits = args.take_flag("--bits");
  args.expect_empty();

  Family f = load_input(path, err);
  Word z = Word::from_string(target);
  if (z.ground_size() != f.ground_size())
    throw UsageError("diagonal length " + std::to_string(z.ground_size()) +
                     " does not match ground size " + std::to_string(f.ground_size()));
  SolveResult res = solve_diagonal(f, z, budget);
  switch (res.status) {
    case SolveStatus::found:
      if (bits) {
        out << render_crossword(*res.crossword);
      } else {
        out << "crossword with diagonal " << target << " (rows):\n"
            << render_crossword(*res.crossword);
      }
      return kExitOk;
    case SolveStatus::unsat:
      out << "UNSAT (exhaustive)\n";
      return kExitNegative;
    case SolveStatus::budget_exceeded:
      out << "budget exceeded after " << res.nodes << " nodes\n";
      return kExitBudget;
  }
  return kExitUsage;
}

int cmd_classify(Args& args, std::ostream& out, std::ostream& err) {
  std::string path = args.take_positional("family file");
  args.expect_empty();
  Family f = load_input(path, err);
  Classification cls = classify(f);
  out << "t1 " << (cls.t1 ? "true" : "false");
  if (cls.t1_failure)
    out << " (no word holds " << cls.t1_failure->first << " without "
        << cls.t1_failure->second << ")";
  out << "\n";
  out << "discrete " << (cls.discrete ? "true" : "false") << "\n";
  out << "complement-closed " << (cls.complement_closed ? "true" : "false") << "\n";
  return kExitOk;
}

int cmd_analyze(Args& args, std::ostream& out, std::ostream& err) {
  std::string path = args.take_positional("family file");
  auto base_spec = args.take_option("--base");
  auto element_spec = args.take_option("--element");
  args.expect_empty();

  Family f = load_input(path, err);
  Word base = base_spec ? Word::from_string(*base_spec) : Word::empty(f.ground_size());
  if (base.ground_size() != f.ground_size())
    throw UsageError("base length does not match ground size");

  IndecomposableReport rep = strongly_indecomposable(f, base);
  out << "base " << rep.base.to_string() << "\n";
  out << "indecomposables " << rep.indecomposables.size() << "\n";
  for (const auto& w : rep.indecomposables) out << "  " << w.to_string() << "\n";
  out << "classes " << rep.classes.size() << "\n";
  for (const auto& cls : rep.classes) {
    out << "  class:";
    for (const auto& w : cls) out << " " << w.to_string();
    out << "\n";
  }

  if (element_spec) {
    int element = parse_int(*element_spec, "--element");
    DominationReport dom = dominated_classes(element, f);
    out << "element " << element << "\n";
    out << "dominated " << dom.dominated.size() << "\n";
    for (const auto& d : dom.dominated) {
      out << "  class:";
      for (const auto& w : d.members) out << " " << w.to_string();
      out << " meet " << d.meet.to_string() << "\n";
    }
  }
  return kExitOk;
}

int cmd_freeness(Args& args, std::ostream& out, std::ostream& err) {
  std::string path = args.take_positional("family file");
  auto blocks_spec = args.take_option("--blocks");
  args.expect_empty();

  Family f = load_input(path, err);
  FreenessResult res = blocks_spec ? partitioned_freeness(f, parse_groups(*blocks_spec))
                                   : is_free_family(f);
  if (res.free) {
    out << "free\n";
    return kExitOk;
  }
  auto& [join_side, meet_side] = *res.violation;
  out << "not free: join{";
  for (std::size_t i = 0; i < join_side.size(); ++i)
    out << (i ? "," : "") << join_side[i];
  out << "} >= meet{";
  for (std::size_t i = 0; i < meet_side.size(); ++i)
    out << (i ? "," : "") << meet_side[i];
  out << "}\n";
  for (int i : join_side) out << "  join side " << f[static_cast<std::size_t>(i)].to_string() << "\n";
  for (int i : meet_side) out << "  meet side " << f[static_cast<std::size_t>(i)].to_string() << "\n";
  return kExitNegative;
}

std::pair<int, int> parse_grid(const std::string& spec) {
  auto x = spec.find('x');
  if (x == std::string::npos) throw UsageError("--grid expects RxC, e.g. 4x4");
  return {parse_int(spec.substr(0, x), "grid rows"),
          parse_int(spec.substr(x + 1), "grid cols")};
}

int cmd_chains(Args& args, std::ostream& out, std::ostream&) {
  std::string op = args.take_positional("chain operation");
  auto [r, c] = parse_grid(args.require_option("--grid"));
  args.expect_empty();

  GridChains g = grid_chains(r, c);
  if (op == "union") {
    ChainUnionResult res = chain_union(g.xs, g.ys);
    out << "union " << res.result.to_string() << "\n";
    out << "route " << (res.route == ChainUnionRoute::disjoint ? "disjoint" : "dual")
        << "\n";
    out << "max-multiplicity " << res.witness_max_multiplicity << "\n";
    out << "witness (rows):\n" << render_crossword(res.witness);
    return kExitOk;
  }
  if (op == "continuum") {
    ContinuumWitness res = continuum_witness(g.xs, g.ys);
    out << "m";
    for (int m : res.m) out << " " << m;
    out << "\nn";
    for (int n : res.n) out << " " << n;
    out << "\nz " << res.z.to_string() << "\n";
    for (const auto& zi : res.zi) out << "zi " << zi.to_string() << "\n";
    return kExitOk;
  }
  if (op == "crossword") {
    InfiniteCrossword res = infinite_crossword(g.xs, g.ys);
    out << "crossword (rows):\n" << render_crossword(res.crossword);
    out << "distinct rows " << res.distinct_rows.size() << "\n";
    for (const auto& w : res.distinct_rows) out << "  " << w.to_string() << "\n";
    out << "distinct cols " << res.distinct_cols.size() << "\n";
    for (const auto& w : res.distinct_cols) out << "  " << w.to_string() << "\n";
    return kExitOk;
  }
  throw UsageError("unknown chain operation '" + op + "'");
}

int cmd_sunflower(Args& args, std::ostream& out, std::ostream&) {
  std::string path = args.take_positional("tuple file");
  int threshold = parse_int(args.require_option("--threshold"), "--threshold");
  args.expect_empty();

  std::ifstream in(path);
  if (!in) throw Error("cannot open file: " + path);
  std::vector<std::vector<long>> tuples;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::vector<long> t;
    long v;
    while (ss >> v) t.push_back(v);
    if (!t.empty()) tuples.push_back(std::move(t));
  }

  SunflowerResult res = sunflower_extract(tuples, threshold);
  if (!res.ok) {
    out << "no sunflower: " << res.failure << "\n";
    return kExitNegative;
  }
  out << "core-len " << res.core_len << "\n";
  out << "perm";
  for (int p : res.perm) out << " " << p;
  out << "\ncore";
  for (long v : res.core) out << " " << v;
  out << "\n";
  for (std::size_t i = 0; i < res.picked.size(); ++i) {
    out << "tuple " << res.picked[i] << " tail";
    for (long v : res.tails[i]) out << " " << v;
    out << "\n";
  }
  return kExitOk;
}

CxPoint parse_point(const std::string& spec) {
  auto bar = spec.find('|');
  if (bar == std::string::npos)
    throw UsageError("point spec must look like n:g,n:g|BITS");
  CxPoint p;
  std::string pairs = spec.substr(0, bar);
  std::stringstream ss(pairs);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    auto colon = tok.find(':');
    if (colon == std::string::npos)
      throw UsageError("coordinate pair must look like n:g, got " + tok);
    p.coords.emplace_back(parse_int(tok.substr(0, colon), "coordinate n"),
                          parse_long(tok.substr(colon + 1), "coordinate gamma"));
  }
  p.island = Word::from_string(spec.substr(bar + 1));
  return p;
}

int cmd_cx(Args& args, std::ostream& out, std::ostream&) {
  std::string op = args.take_positional("cx operation");
  CxParams params;
  params.list_len = parse_int(args.require_option("--list-len"), "--list-len");
  params.n_max = parse_int(args.require_option("--n-max"), "--n-max");
  params.gamma_max = parse_long(args.require_option("--gamma-max"), "--gamma-max");
  params.island_bits = parse_int(args.require_option("--island-bits"), "--island-bits");
  CxPoint point = parse_point(args.require_option("--point"));

  if (op == "eval") {
    int n = parse_int(args.require_option("--n"), "--n");
    long gamma = parse_long(args.require_option("--gamma"), "--gamma");
    args.expect_empty();
    out << "value " << cx_evaluate(params, n, gamma, point) << "\n";
    return kExitOk;
  }
  if (op == "stratum") {
    long beta = parse_long(args.require_option("--beta"), "--beta");
    args.expect_empty();
    out << (cx_stratum(params, point, beta) ? "true" : "false") << "\n";
    return kExitOk;
  }
  if (op == "separate") {
    CxPoint other = parse_point(args.require_option("--point2"));
    args.expect_empty();
    CxSeparation sep = cx_separate(params, point, other);
    out << "n " << sep.n << "\n";
    out << "beta " << sep.beta << "\n";
    out << "diff-bit " << sep.diff_bit << "\n";
    out << "strata " << sep.stratum1 << " " << sep.stratum2 << "\n";
    return kExitOk;
  }
  throw UsageError("unknown cx operation '" + op + "'");
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  if (args.empty()) {
    err << kUsage;
    return kExitUsage;
  }
  std::string command = args.front();
  Args rest(std::vector<std::string>(args.begin() + 1, args.end()));

  try {
    if (command == "gen") return cmd_gen(rest, out, err);
    if (command == "check") return cmd_check(rest, out, err);
    if (command == "close") return cmd_close(rest, out, err);
    if (command == "solve") return cmd_solve(rest, out, err);
    if (command == "classify") return cmd_classify(rest, out, err);
    if (command == "analyze") return cmd_analyze(rest, out, err);
    if (command == "freeness") return cmd_freeness(rest, out, err);
    if (command == "chains") return cmd_chains(rest, out, err);
    if (command == "sunflower") return cmd_sunflower(rest, out, err);
    if (command == "cx") return cmd_cx(rest, out, err);
    if (command == "help" || command == "--help" || command == "-h") {
      out << kUsage;
      return kExitOk;
    }
    err << "unknown command '" << command << "'\n" << kUsage;
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BudgetError& e) {
    err << "budget: " << e.what() << "\n";
    return kExitBudget;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace pratt
