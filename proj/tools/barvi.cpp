// barvi: count, ehrhart, maximize, minimize
//
//   barvi count [dil n | int | homog | cdd] file
//   barvi ehrhart [simplify | n | numeric n | cdd] file
//   barvi maximize [bbs | cdd] file      (cost vector in file.cost)
//
// Called through a link named count, ehrhart, maximize or minimize the
// command word is taken from the program name.
#include "barvi/ehrhart.hpp"
#include "barvi/ip.hpp"
#include "barvi/polytope.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace barvi;

namespace {

enum Exit { ok = 0, failure = 1, usage = 2, infeasible = 3, unbounded = 4, budget = 5 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Invocation {
  std::string command;
  std::string file;
  std::optional<Integer> dil;
  std::optional<unsigned long> taylor;
  bool interior = false, homog = false, cdd = false, bbs = false, simplify = false;
};

bool is_command(const std::string& s) {
  return s == "count" || s == "ehrhart" || s == "maximize" || s == "minimize";
}

bool all_digits(const std::string& s) {
  return !s.empty() && s.find_first_not_of("0123456789") == std::string::npos;
}

Invocation parse_tokens(std::vector<std::string> tok) {
  Invocation inv;
  if (tok.empty() || !is_command(tok.front())) throw UsageError("expected one of count, ehrhart, maximize, minimize");
  inv.command = tok.front();
  tok.erase(tok.begin());
  if (tok.empty()) throw UsageError("missing input file");
  inv.file = tok.back();
  tok.pop_back();

  auto number = [&](size_t& i, const std::string& what) {
    if (i + 1 >= tok.size() || !all_digits(tok[i + 1])) throw UsageError("'" + what + "' needs a nonnegative integer");
    return tok[++i];
  };
  for (size_t i = 0; i < tok.size(); ++i) {
    const std::string& t = tok[i];
    if (t == "dil") {
      inv.dil = Integer(number(i, t));
    } else if (t == "numeric") {
      inv.taylor = std::stoul(number(i, t));
    } else if (all_digits(t)) {
      inv.taylor = std::stoul(t);
    } else if (t == "int") {
      inv.interior = true;
    } else if (t == "homog") {
      inv.homog = true;
    } else if (t == "cdd") {
      inv.cdd = true;
    } else if (t == "bbs") {
      inv.bbs = true;
    } else if (t == "simplify") {
      inv.simplify = true;
    } else {
      throw UsageError("unknown option '" + t + "'");
    }
  }

  const bool count = inv.command == "count", ehrhart = inv.command == "ehrhart";
  if (inv.dil && !count) throw UsageError("'dil' is a count option");
  if (inv.dil && *inv.dil < 1) throw UsageError("'dil' needs a positive factor");
  if (inv.interior && !count) throw UsageError("'int' is a count option");
  if (inv.interior && inv.dil) throw UsageError("'int' cannot be combined with 'dil'");
  if (inv.homog && !count) throw UsageError("'homog' is a count option");
  if (inv.bbs && (count || ehrhart)) throw UsageError("'bbs' is a maximize/minimize option");
  if ((inv.simplify || inv.taylor) && !ehrhart) throw UsageError("'simplify' and a Taylor degree are ehrhart options");
  if (inv.simplify && inv.taylor) throw UsageError("'simplify' cannot be combined with a Taylor degree");
  return inv;
}

std::string bracket(const IntVector& v) {
  std::ostringstream os;
  os << "[";
  for (Eigen::Index i = 0; i < v.size(); ++i) os << (i ? " " : "") << v(i).get_str();
  os << "]";
  return os.str();
}

// q rounded to three decimals
std::string decimal3(const Rational& q) {
  Integer scaled = floor_of(q * 1000 + Rational(1, 2));
  const bool neg = scaled < 0;
  if (neg) scaled = -scaled;
  std::string s = scaled.get_str();
  if (s.size() < 4) s.insert(0, 4 - s.size(), '0');
  s.insert(s.size() - 3, ".");
  return (neg ? "-" : "") + s;
}

struct Settings {
  uint64_t seed = 0;
  unsigned threads = 1;
  uint64_t max_levels = IPOptions{}.max_levels;
  uint64_t max_frontier = IPOptions{}.max_frontier;
  bool single_cone = false;
};

int run_count(const Invocation& inv, const PolytopeSpec& spec, const CountOptions& copt, std::string& answer) {
  PolytopeSpec s = inv.interior ? interior_transform(spec) : spec;
  Integer n;
  if (inv.homog) {
    if (inv.dil && !inv.dil->fits_ulong_p()) throw UsageError("'dil' factor too large for the homogenized count");
    const unsigned long k = inv.dil ? inv.dil->get_ui() : 1;
    SeriesRational r = ehrhart_series(s, copt);
    n = taylor_expand(r, k)[k];
    std::cout << "Memory Save Mode: Taylor Expansion:\n\n";
    std::cout << "****  Total number of lattice points is: " << n.get_str() << "  ****\n\n";
  } else {
    DilationCounter dc(s, copt);
    n = dc.count(inv.dil ? *inv.dil : Integer(1));
    const DecompositionStats& st = dc.stats();
    std::cout << "Total Unimodular Cones: " << st.unimodular << "\n";
    std::cout << "Maximum number of simplicial cones in memory at once: " << st.max_worklist << "\n\n";
    std::cout << "*****  Total number of lattice points: " << n.get_str() << "  ****\n\n";
  }
  std::cout << "Computation done.\n";
  answer = n.get_str();
  return 0;
}

int run_ehrhart(const Invocation& inv, const PolytopeSpec& spec, const CountOptions& copt, std::string& answer) {
  SeriesRational r = ehrhart_series(spec, copt);
  if (inv.taylor) {
    std::vector<Integer> c = taylor_expand(r, *inv.taylor);
    std::cout << "Memory Save Mode: Taylor Expansion:\n";
    std::ostringstream ans;
    for (size_t k = 0; k < c.size(); ++k) {
      if (k == 0)
        std::cout << c[k].get_str() << "\n";
      else
        std::cout << c[k].get_str() << "t^" << k << "\n";
      ans << (k ? " " : "") << c[k].get_str();
    }
    answer = ans.str();
  } else {
    if (inv.simplify) r = simplify_series(r);
    answer = to_string(r);
    const std::string out = inv.file + ".rat";
    std::ofstream f(out);
    if (!f) throw Error("cannot write " + out);
    f << answer << "\n";
    std::cout << "Rational function written to " << out << "\n\n";
  }
  std::cout << "Computation done.\n";
  return 0;
}

int run_optimize(const Invocation& inv, const PolytopeSpec& spec, const Settings& set, std::string& answer) {
  const std::string cost_path = inv.file + ".cost";
  if (!std::filesystem::exists(cost_path)) throw UsageError("missing cost file " + cost_path);
  OptimizationProblem p{spec, parse_cost(read_file(cost_path)),
                        inv.command == "maximize" ? Sense::maximize : Sense::minimize};
  if (p.cost.size() != spec.dim())
    throw UsageError("cost vector has " + std::to_string(p.cost.size()) + " entries, the polytope has " +
                     std::to_string(spec.dim()) + " variables");
  IPOptions opt;
  opt.seed = set.seed;
  opt.threads = set.threads;
  opt.max_levels = set.max_levels;
  opt.max_frontier = set.max_frontier;

  if (inv.bbs) {
    OptResult r = bbs_optimize(p, opt);
    std::cout << "Total of Iterations: " << r.iterations << "\n";
    std::cout << "The optimal value: " << r.optimal_value.get_str() << "\n\n";
    std::cout << "The number of optimal solutions: " << r.optimal_count.get_str() << "\n";
    answer = r.optimal_value.get_str();
    return 0;
  }
  OptResult r = set.single_cone ? single_cone_digging(p, opt) : digging_optimize(p, opt);
  std::cout << "Finished computing a rational function.\n";
  std::cout << "Total Unimodular Cones: " << r.unimodular_cones << "\n\n";
  if (r.optimal_count == 1)
    std::cout << "There is one optimal solution.\n\n";
  else if (r.optimal_count > 1)
    std::cout << "There are " << r.optimal_count.get_str() << " optimal solutions.\n\n";
  if (r.digging_levels == 0)
    std::cout << "No digging.\n";
  else
    std::cout << "Digging levels: " << r.digging_levels << "\n";
  std::cout << "An optimal solution for " << bracket(p.cost) << " is: " << bracket(*r.optimal_point) << ".\n";
  std::cout << "The optimal value is: " << r.optimal_value.get_str() << ".\n";
  Rational gap = r.lp_value - Rational(r.optimal_value);
  if (p.sense == Sense::minimize) gap = -gap;
  std::cout << "The gap is: " << decimal3(gap) << "\n";
  std::cout << "Computation done.\n";
  answer = r.optimal_value.get_str();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lattice point counting, Ehrhart series and integer optimization over rational polytopes"};
  app.allow_extras(false);
  app.positionals_at_end(false);
  std::vector<std::string> tokens;
  Settings set;
  app.add_option("tokens", tokens, "command, options and input file, e.g. 'count dil 12 magic4x4'");
  app.add_option("--seed", set.seed, "seed for the generic direction and tie-breaking (default 0)");
  app.add_option("--threads", set.threads, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--max-levels", set.max_levels, "digging: give up after this many zero degrees");
  app.add_option("--max-frontier", set.max_frontier, "digging: give up when this many monomials are pending");
  app.add_flag("--single-cone", set.single_cone, "digging: expand only the tangent cone of an LP-optimal vertex");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : Exit::usage;
  }

  const std::string prog = std::filesystem::path(argv[0]).filename().string();
  if (is_command(prog)) tokens.insert(tokens.begin(), prog);

  const auto t0 = std::chrono::steady_clock::now();
  auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(); };
  std::string answer;
  try {
    Invocation inv = parse_tokens(tokens);
    if (!std::filesystem::exists(inv.file)) throw UsageError("no such file: " + inv.file);
    PolytopeSpec spec = read_polytope_file(inv.file, inv.cdd);
    CountOptions copt;
    copt.seed = set.seed;
    copt.threads = set.threads;
    if (inv.command == "count") {
      run_count(inv, spec, copt, answer);
    } else if (inv.command == "ehrhart") {
      run_ehrhart(inv, spec, copt, answer);
    } else {
      run_optimize(inv, spec, set, answer);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n" << app.help();
    return Exit::usage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return Exit::failure;
  } catch (const InfeasibleError& e) {
    std::cout << "The problem is infeasible: " << e.what() << "\n";
    return Exit::infeasible;
  } catch (const UnboundedError& e) {
    std::cout << "The problem is unbounded: " << e.what() << "\n";
    return Exit::unbounded;
  } catch (const BudgetExceeded& e) {
    std::cout << "Budget exceeded: " << e.what() << "\n";
    return Exit::budget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return Exit::failure;
  }
  std::cout << "Time: " << elapsed() << " sec\n";
  std::cout << "ANSWER: " << answer << "\n";
  return Exit::ok;
}
