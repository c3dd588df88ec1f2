// cycdes: exact computations with descent sets, horizontal rotations,
// quasisymmetric generating functions, Schur positivity and the
// straightening action on boxed standard Young tableaux.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cycdes/json_io.hpp"
#include "cycdes/qsym.hpp"
#include "cycdes/straighten.hpp"
#include "cycdes/verify.hpp"

namespace {

using namespace cycdes;

constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;

struct InputSource {
  std::string inline_text;
  std::string file;
  bool use_stdin = false;

  void attach(CLI::App* cmd, const std::string& inline_flag,
              const std::string& inline_desc) {
    cmd->add_option(inline_flag, inline_text, inline_desc);
    cmd->add_option("--file", file, "read input from a file");
    cmd->add_flag("--stdin", use_stdin, "read input from standard input");
  }

  std::string slurp() const {
    if (!inline_text.empty()) return inline_text;
    if (use_stdin) {
      std::ostringstream ss;
      ss << std::cin.rdbuf();
      return ss.str();
    }
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) throw std::invalid_argument("cannot open file \"" + file + "\"");
      std::ostringstream ss;
      ss << in.rdbuf();
      return ss.str();
    }
    throw std::invalid_argument("no input given (use the inline option, --file or --stdin)");
  }
};

PermMultiset parse_multiset(const std::string& text) {
  const size_t start = text.find_first_not_of(" \t\r\n");
  if (start == std::string::npos) {
    throw std::invalid_argument("empty permutation set");
  }
  const std::string trimmed = text.substr(start);
  if (trimmed.front() == '[') {
    return multiset_from_json(json::parse(trimmed));
  }
  PermMultiset out;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string tok = text.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    const size_t lo = tok.find_first_not_of(" \t\r\n");
    const size_t hi = tok.find_last_not_of(" \t\r\n");
    if (lo != std::string::npos) {
      out.add(Permutation::parse(tok.substr(lo, hi - lo + 1)));
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.empty()) throw std::invalid_argument("empty permutation set");
  return out;
}

Tableau parse_tableau(const std::string& text) {
  return tableau_from_json(json::parse(text));
}

struct SetOptions {
  InputSource input;
  int n = 0;
  bool closure = false;
  bool left = false;

  void attach(CLI::App* cmd) {
    input.attach(cmd, "--set",
                 "inline permutations, comma-separated one-line words");
    cmd->add_option("--n", n, "permutation size when it cannot be inferred");
    cmd->add_flag("--closure", closure,
                  "apply the horizontal rotation closure A -> A C_n");
    cmd->add_flag("--left-closure", left,
                  "apply the left closure A -> C_n A instead");
  }

  PermMultiset load() const {
    PermMultiset b = parse_multiset(input.slurp());
    if (n != 0 && b.n() != n) {
      throw std::invalid_argument("input permutations have size " +
                                  std::to_string(b.n()) + ", not " +
                                  std::to_string(n));
    }
    if (closure && left) {
      throw std::invalid_argument("--closure and --left-closure are exclusive");
    }
    if (closure) return horizontal_closure(b);
    if (left) return left_closure(b);
    return b;
  }
};

void print_report(const VerifyReport& report, bool as_json) {
  if (as_json) {
    std::cout << report_to_json(report).dump(2) << "\n";
    return;
  }
  std::cout << report.suite << ": " << report.statement << "\n";
  int failed = 0;
  for (const CheckResult& c : report.checks) {
    if (c.pass) {
      std::cout << "  [PASS] " << c.name << " (" << c.scope << ")\n";
    } else {
      ++failed;
      std::cout << "  [FAIL] " << c.name << " (" << c.scope
                << "): " << c.counterexample << "\n";
    }
  }
  std::cout << report.suite << ": " << report.checks.size() << " checks, "
            << failed << " failed\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact descent combinatorics: quasisymmetric generating functions, "
      "Schur positivity of horizontal rotation closures, and the cyclic "
      "straightening action on boxed tableaux"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "emit JSON instead of text");

  SetOptions qfun_opts;
  auto* qfun = app.add_subcommand(
      "qfun", "quasisymmetric generating function of a set of permutations");
  qfun_opts.attach(qfun);

  SetOptions expand_opts;
  auto* expand = app.add_subcommand(
      "expand", "Schur expansion of the generating function");
  expand_opts.attach(expand);

  SetOptions positivity_opts;
  auto* positivity =
      app.add_subcommand("positivity", "decide Schur positivity");
  positivity_opts.attach(positivity);

  SetOptions closure_opts;
  auto* closure = app.add_subcommand(
      "closure", "horizontal rotation closure of a set of permutations");
  closure_opts.attach(closure);

  InputSource jdt_input;
  bool jdt_trace = false;
  auto* jdt_cmd =
      app.add_subcommand("jdt", "straighten a rotated boxed tableau");
  jdt_input.attach(jdt_cmd, "--tableau", "inline tableau JSON");
  jdt_cmd->add_flag("--trace", jdt_trace, "also print the elementary steps");

  InputSource ijdt_input;
  auto* ijdt_cmd = app.add_subcommand(
      "ijdt", "reverse straightening of a shifted standard boxed tableau");
  ijdt_input.attach(ijdt_cmd, "--tableau", "inline tableau JSON");

  InputSource psi_input;
  int psi_k = 1;
  auto* psi_cmd = app.add_subcommand(
      "psi", "apply the cyclic straightening action to a standard boxed tableau");
  psi_input.attach(psi_cmd, "--tableau", "inline tableau JSON");
  psi_cmd->add_option("--k", psi_k, "number of action steps (default 1)");

  InputSource orbit_input;
  std::string orbit_shape;
  auto* orbit_cmd = app.add_subcommand(
      "orbit", "orbits of the cyclic action with their cyclic descent sets");
  orbit_input.attach(orbit_cmd, "--tableau", "inline tableau JSON");
  orbit_cmd->add_option(
      "--shape", orbit_shape,
      "partition lambda: sweep all standard tableaux of shape lambda^#");

  std::string syt_shape, syt_skew, syt_boxed;
  bool syt_count_only = false;
  auto* syt_cmd =
      app.add_subcommand("syt", "enumerate standard Young tableaux");
  syt_cmd->add_option("--shape", syt_shape, "straight shape, e.g. 3,2");
  syt_cmd->add_option("--skew", syt_skew, "skew shape, e.g. 4,3,2/3");
  syt_cmd->add_option("--boxed", syt_boxed,
                      "boxed shape lambda^#, e.g. 3,2");
  syt_cmd->add_flag("--count-only", syt_count_only, "print only the count");

  std::string rsk_perm;
  auto* rsk_cmd = app.add_subcommand(
      "rsk", "insertion and recording tableaux of a permutation");
  rsk_cmd->add_option("--perm", rsk_perm, "one-line word, e.g. 314256")
      ->required();

  std::string verify_suite;
  int verify_nmax = 6;
  std::uint64_t verify_seed = 1;
  bool allow_large = false;
  auto* verify_cmd =
      app.add_subcommand("verify", "run a named verification suite");
  verify_cmd
      ->add_option("suite", verify_suite,
                   "main-theorem | er-theorem | jdt-bijection | "
                   "des-preservation | extension-axioms | remarks | all")
      ->required();
  verify_cmd->add_option("--nmax", verify_nmax, "size bound (default 6)");
  verify_cmd->add_option("--seed", verify_seed,
                         "seed for the randomized resampling checks");
  verify_cmd->add_flag("--allow-large", allow_large,
                       "permit --nmax above 7 (runtimes grow factorially)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*qfun) {
      const QSymF q = qsym_of(qfun_opts.load());
      if (as_json) {
        std::cout << qsymf_to_json(q).dump() << "\n";
      } else {
        std::cout << q.to_string() << "\n";
      }
      return 0;
    }
    if (*expand) {
      const QSymF q = qsym_of(expand_opts.load());
      try {
        const SchurExpansion e = schur_expand(q);
        if (as_json) {
          std::cout << schur_to_json(e).dump() << "\n";
        } else {
          std::cout << e.to_string() << "\n";
        }
        return 0;
      } catch (const NotSymmetricError&) {
        std::cout << "not symmetric\n";
        return kExitFalse;
      }
    }
    if (*positivity) {
      const QSymF q = qsym_of(positivity_opts.load());
      if (!is_symmetric(q)) {
        std::cout << "not symmetric\n";
        return kExitFalse;
      }
      const SchurExpansion e = schur_expand(q);
      if (e.nonnegative()) {
        std::cout << "Schur-positive: " << e.to_string() << "\n";
        return 0;
      }
      std::cout << "not Schur-positive: " << e.to_string() << "\n";
      return kExitFalse;
    }
    if (*closure) {
      SetOptions opts = closure_opts;
      if (!opts.left) opts.closure = true;
      std::cout << multiset_to_json(opts.load()).dump() << "\n";
      return 0;
    }
    if (*jdt_cmd) {
      const JdtResult result = jdt(parse_tableau(jdt_input.slurp()));
      if (as_json) {
        json out = {{"result", tableau_to_json(result.tableau)}};
        if (jdt_trace) out["trace"] = trace_to_json(result.trace);
        std::cout << out.dump() << "\n";
      } else {
        if (jdt_trace) {
          std::cout << result.trace.initial.ascii();
          Tableau state = result.trace.initial;
          for (const TraceStep& s : result.trace.steps) {
            state = state.with_swapped(s.moved, s.displaced);
            std::cout << "-- moved " << s.moved << " --\n" << state.ascii();
          }
        } else {
          std::cout << result.tableau.ascii();
        }
      }
      return 0;
    }
    if (*ijdt_cmd) {
      const Tableau result = ijdt(parse_tableau(ijdt_input.slurp()));
      if (as_json) {
        std::cout << tableau_to_json(result).dump() << "\n";
      } else {
        std::cout << result.ascii();
      }
      return 0;
    }
    if (*psi_cmd) {
      const Tableau result =
          cyclic_rotate(parse_tableau(psi_input.slurp()), psi_k);
      if (as_json) {
        std::cout << tableau_to_json(result).dump() << "\n";
      } else {
        std::cout << result.ascii();
      }
      return 0;
    }
    if (*orbit_cmd) {
      std::vector<Tableau> starts;
      if (!orbit_shape.empty()) {
        for (const Tableau& t :
             enumerate_syt(boxed_shape(Partition::parse(orbit_shape)))) {
          starts.push_back(t);
        }
      } else {
        starts.push_back(parse_tableau(orbit_input.slurp()));
      }
      std::set<Tableau> seen;
      json orbits = json::array();
      for (const Tableau& start : starts) {
        if (seen.count(start)) continue;
        json orbit = json::array();
        Tableau state = start;
        do {
          seen.insert(state);
          orbit.push_back(
              {{"tableau", tableau_to_json(state)},
               {"cdes", cyclic_descent_set(state).elements()}});
          state = cyclic_rotate(state, 1);
        } while (!(state == start));
        orbits.push_back({{"size", orbit.size()}, {"elements", orbit}});
      }
      if (as_json) {
        std::cout << orbits.dump() << "\n";
      } else {
        for (const auto& orbit : orbits) {
          std::cout << "orbit of size " << orbit["size"] << ":\n";
          for (const auto& elem : orbit["elements"]) {
            std::cout << tableau_from_json(elem["tableau"]).ascii();
            std::cout << "  cDes " << elem["cdes"].dump() << "\n";
          }
        }
      }
      return 0;
    }
    if (*syt_cmd) {
      Shape shape;
      if (!syt_shape.empty()) {
        shape = Shape(Partition::parse(syt_shape));
      } else if (!syt_boxed.empty()) {
        shape = boxed_shape(Partition::parse(syt_boxed));
      } else if (!syt_skew.empty()) {
        const size_t slash = syt_skew.find('/');
        if (slash == std::string::npos) {
          throw std::invalid_argument("skew shape needs the form outer/inner");
        }
        shape = Shape(Partition::parse(syt_skew.substr(0, slash)),
                      Partition::parse(syt_skew.substr(slash + 1)));
      } else {
        throw std::invalid_argument("one of --shape, --skew, --boxed is required");
      }
      const auto tableaux = enumerate_syt(shape);
      if (as_json) {
        json out = {{"shape", shape_to_json(shape)},
                    {"count", tableaux.size()}};
        if (!syt_count_only) {
          json list = json::array();
          for (const Tableau& t : tableaux) list.push_back(tableau_to_json(t));
          out["tableaux"] = list;
        }
        std::cout << out.dump() << "\n";
      } else {
        std::cout << tableaux.size() << " standard tableaux of shape "
                  << shape.to_string() << "\n";
        if (!syt_count_only) {
          for (const Tableau& t : tableaux) std::cout << t.ascii() << "\n";
        }
      }
      return 0;
    }
    if (*rsk_cmd) {
      const RskPair pair = rsk(Permutation::parse(rsk_perm));
      if (as_json) {
        std::cout << json{{"insertion", tableau_to_json(pair.insertion)},
                          {"recording", tableau_to_json(pair.recording)}}
                         .dump()
                  << "\n";
      } else {
        std::cout << "insertion:\n"
                  << pair.insertion.ascii() << "recording:\n"
                  << pair.recording.ascii();
      }
      return 0;
    }
    if (*verify_cmd) {
      if (verify_nmax > 7 && !allow_large) {
        throw std::invalid_argument(
            "--nmax above 7 needs --allow-large (runtimes grow factorially)");
      }
      std::vector<std::string> suites;
      if (verify_suite == "all") {
        suites = suite_names();
      } else {
        suites.push_back(verify_suite);
      }
      bool all_pass = true;
      for (const std::string& name : suites) {
        const VerifyReport report = run_suite(name, verify_nmax, verify_seed);
        print_report(report, as_json);
        all_pass = all_pass && report.all_pass();
      }
      return all_pass ? 0 : kExitFalse;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
