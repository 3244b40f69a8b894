// Command-line front end: solving, revision, derivation display, postulate
// checking, and a randomized postulate fuzzer.
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "unasp/generator.hpp"
#include "unasp/grounder.hpp"
#include "unasp/json_io.hpp"
#include "unasp/parser.hpp"
#include "unasp/postulates.hpp"

namespace {

using namespace unasp;

// 0 = success (no postulate violations); 1 = a postulate violation;
// 2 = usage, parse, or grounding error; 3 = no result (revision or solving failed)
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNoResult = 3;

Program load(const std::string& path) { return ground(parse_file(path)); }

std::string braced(const std::set<std::string>& items) {
  std::string out = "{";
  bool first = true;
  for (const auto& s : items) {
    if (!first) out += ", ";
    out += s;
    first = false;
  }
  return out + "}";
}

int run_solve(const std::string& file, bool json) {
  AnswerSet as = answer_sets(load(file));
  if (json) {
    std::cout << answer_set_json(as) << "\n";
    return 0;
  }
  std::cout << "consistent: " << (as.consistent ? "yes" : "no") << "\n";
  for (const auto& [lit, v] : as.values.values()) {
    std::cout << literal_key(lit) << " = " << to_string(v) << "\n";
  }
  if (!as.consistent) {
    std::cout << "contradictions:";
    for (const auto& a : as.contradiction_atoms) std::cout << " " << a;
    std::cout << "\n";
  }
  return 0;
}

int run_revise(const std::string& base_file, const std::string& incoming_file,
               const RevisionConfig& cfg, bool json) {
  RevisionOutcome o = revise(load(base_file), load(incoming_file), cfg);
  if (json) {
    std::cout << revision_report_json(o) << "\n";
    return 0;
  }
  std::cout << "removed:";
  if (o.removed.rules.empty()) std::cout << " (none)";
  for (const auto& id : o.removed.rules) {
    std::cout << " " << id;
    auto it = o.removed.strategy_step.find(id);
    if (it != o.removed.strategy_step.end()) std::cout << " (step " << it->second << ")";
  }
  std::cout << "\ncontradiction set:";
  if (o.contradiction_atoms.empty()) std::cout << " (none)";
  for (const auto& a : o.contradiction_atoms) std::cout << " " << a;
  std::cout << "\n";
  for (const auto& [atom, sets] : o.candidates) {
    std::cout << "candidates " << atom << ":";
    for (const auto& s : sets) std::cout << " " << braced(s);
    std::cout << "\n";
  }
  std::cout << "distance: " << format_number(o.removed.distance) << "\n";
  std::cout << "result:\n" << to_string(o.result);
  return 0;
}

void print_node(const DerivationNode& n, int depth) {
  std::cout << std::string(static_cast<std::size_t>(depth) * 2, ' ') << literal_key(n.lit);
  if (n.equation) std::cout << " = " << to_string(n.equation->expr);
  if (n.revisit) std::cout << " (revisited)";
  std::cout << "\n";
  for (const auto& c : n.children) print_node(c, depth + 1);
}

int run_explain(const std::string& file, const std::string& atom, bool json) {
  TransformedProgram tp = transform(load(file));
  Literal target = parse_program(atom + ".").rules()[0].head;
  Derivation d = resolution_tree(tp, target);
  if (json) {
    std::cout << derivation_json(d) << "\n";
  } else {
    print_node(d.root, 0);
  }
  return 0;
}

const std::vector<std::pair<std::string, std::string>> kPostulateNames = {
    {"success", "success"},
    {"inclusion", "inclusion"},
    {"nm", "nm-consistency"},
    {"fullness", "fullness"},
    {"uniformity", "uniformity"},
    {"disjunction", "weak-disjunction"},
    {"parallelism", "weak-parallelism"},
};

std::set<std::string> parse_selection(const std::string& spec) {
  std::set<std::string> out;
  std::string token;
  for (std::size_t i = 0; i <= spec.size(); ++i) {
    if (i == spec.size() || spec[i] == ',') {
      if (!token.empty()) out.insert(token);
      token.clear();
    } else if (spec[i] != ' ') {
      token += spec[i];
    }
  }
  return out;
}

int run_check(const std::string& base_file, const std::string& incoming_file,
              const std::string& third_file, const std::string& selection_spec, bool json) {
  std::set<std::string> selection = parse_selection(selection_spec);
  if (selection.count("all")) {
    selection.erase("all");
    for (const auto& [key, _] : kPostulateNames) selection.insert(key);
  }
  for (const auto& name : selection) {
    bool known = false;
    for (const auto& [key, _] : kPostulateNames) known = known || key == name;
    if (!known) {
      std::cerr << "error: unknown postulate '" << name
                << "' (expected all, success, inclusion, nm, fullness, uniformity, "
                   "disjunction, parallelism)\n";
      return kExitUsage;
    }
  }
  if (selection.empty()) {
    std::cerr << "error: --postulates selected nothing\n";
    return kExitUsage;
  }

  Program base = load(base_file);
  Program incoming = load(incoming_file);
  std::optional<Program> third;
  if (!third_file.empty()) third = load(third_file);

  RevisionConfig cfg;
  std::vector<PostulateReport> reports;
  for (const auto& [key, _] : kPostulateNames) {
    if (!selection.count(key)) continue;
    if (key == "success") {
      reports.push_back(check_success(base, incoming, cfg));
    } else if (key == "inclusion") {
      reports.push_back(check_inclusion(base, incoming, cfg));
    } else if (key == "nm") {
      reports.push_back(check_nm_consistency(base, incoming, cfg));
    } else if (key == "fullness") {
      reports.push_back(check_fullness(base, incoming, cfg));
    } else if (key == "uniformity") {
      reports.push_back(check_uniformity(
          base, incoming, third ? *third : rename_private_atoms(incoming, base), cfg));
    } else if (key == "disjunction") {
      auto [b1, b2] = split_by_components(base);
      reports.push_back(check_weak_disjunction(b1, b2, incoming, cfg));
    } else {
      auto [q1, q2] = split_by_components(incoming);
      reports.push_back(check_weak_parallelism(base, q1, q2, cfg));
    }
  }

  if (json) {
    std::cout << postulate_reports_json(reports) << "\n";
  } else {
    for (const auto& r : reports) {
      std::cout << r.postulate << ": " << to_string(r.status);
      if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
      if (r.sampled) std::cout << " [sampled]";
      std::cout << "\n";
    }
  }
  for (const auto& r : reports) {
    if (r.status == PostulateStatus::Violated) return kExitViolation;
  }
  return 0;
}

int run_fuzz(std::uint64_t seed, int cases, int atoms, int rules) {
  GeneratorOptions opts;
  opts.atoms = atoms;
  opts.rules = rules;
  RevisionConfig cfg;

  int violations = 0;
  std::map<std::string, int> tally;
  auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < cases; ++i) {
    std::uint64_t case_seed = seed + static_cast<std::uint64_t>(i);
    Rng rng(case_seed);
    auto [base, incoming] = generate_revision_pair(opts, rng);
    auto reports = check_all(base, incoming, std::nullopt, cfg, case_seed);

    std::cout << "case " << i + 1 << "/" << cases << " (seed " << case_seed << "):";
    bool bad = false;
    for (const auto& r : reports) {
      std::cout << " " << r.postulate << "=" << to_string(r.status);
      ++tally[to_string(r.status)];
      bad = bad || r.status == PostulateStatus::Violated;
    }
    std::cout << "\n";
    if (bad) {
      ++violations;
      std::cout << "replay witness, base program:\n"
                << to_string(base) << "replay witness, incoming program:\n"
                << to_string(incoming);
      for (const auto& r : reports) {
        if (r.status == PostulateStatus::Violated) {
          std::cout << r.postulate << ": " << r.detail << "\n";
        }
      }
    }
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  char elapsed[32];
  std::snprintf(elapsed, sizeof elapsed, "%.1f", secs);
  std::cout << cases << " cases in " << elapsed << "s:";
  for (const auto& [status, count] : tally) std::cout << " " << status << "=" << count;
  std::cout << "\n";
  return violations ? kExitViolation : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"interval-valued answer set programs and belief-base revision"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "unasp 1.0.0");

  std::string solve_file;
  bool solve_json = false;
  auto* solve = app.add_subcommand("solve", "compute a program's answer set");
  solve->add_option("file", solve_file, "program file")->required();
  solve->add_flag("--json", solve_json, "emit the answer set as JSON");

  std::string revise_base;
  std::string revise_incoming;
  double revise_delta = 0.1;
  std::string revise_distance = "corrected";
  int revise_cap = 3;
  bool revise_json = false;
  auto* revise_cmd =
      app.add_subcommand("revise", "revise a base program by an incoming program");
  revise_cmd->add_option("base", revise_base, "base program file")->required();
  revise_cmd->add_option("new", revise_incoming, "incoming program file")->required();
  revise_cmd->add_option("--delta", revise_delta, "weight widening per exception")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  revise_cmd
      ->add_option("--distance", revise_distance,
                   "interval distance: corrected = mean endpoint gap, "
                   "paper-literal = mean of the two widths")
      ->check(CLI::IsMember({"corrected", "paper-literal"}))
      ->capture_default_str();
  revise_cmd->add_option("--cap", revise_cap, "largest removal candidate considered per atom")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  revise_cmd->add_flag("--json", revise_json, "emit the revision report as JSON");

  std::string explain_file;
  std::string explain_atom;
  bool explain_json = false;
  auto* explain = app.add_subcommand("explain", "show how a literal's value is derived");
  explain->add_option("file", explain_file, "program file")->required();
  explain->add_option("--atom", explain_atom, "literal to explain, e.g. p or -p")->required();
  explain->add_flag("--json", explain_json, "emit the derivation as JSON");

  std::string check_base;
  std::string check_incoming;
  std::string check_third;
  std::string check_postulates;
  bool check_json = false;
  auto* check = app.add_subcommand("check", "verify revision postulates on a program pair");
  check->add_option("base", check_base, "base program file")->required();
  check->add_option("new", check_incoming, "incoming program file")->required();
  check->add_option("--third", check_third,
                    "alternative incoming program for the uniformity premise");
  check
      ->add_option("--postulates", check_postulates,
                   "comma-separated: all, success, inclusion, nm, fullness, uniformity, "
                   "disjunction, parallelism")
      ->required();
  check->add_flag("--json", check_json, "emit the reports as JSON");

  std::uint64_t fuzz_seed = 1;
  int fuzz_cases = 100;
  int fuzz_atoms = 6;
  int fuzz_rules = 8;
  auto* fuzz = app.add_subcommand("fuzz", "check postulates on random program pairs");
  fuzz->add_option("--seed", fuzz_seed, "base seed")->capture_default_str();
  fuzz->add_option("--cases", fuzz_cases, "number of program pairs")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  fuzz->add_option("--atoms", fuzz_atoms, "atoms per program")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  fuzz->add_option("--rules", fuzz_rules, "rules per base program")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (solve->parsed()) return run_solve(solve_file, solve_json);
    if (revise_cmd->parsed()) {
      RevisionConfig cfg;
      cfg.delta = revise_delta;
      cfg.distance = revise_distance == "paper-literal" ? DistanceVariant::WidthMean
                                                        : DistanceVariant::EndpointMean;
      cfg.max_candidate_size = revise_cap;
      return run_revise(revise_base, revise_incoming, cfg, revise_json);
    }
    if (explain->parsed()) return run_explain(explain_file, explain_atom, explain_json);
    if (check->parsed()) {
      return run_check(check_base, check_incoming, check_third, check_postulates, check_json);
    }
    return run_fuzz(fuzz_seed, fuzz_cases, fuzz_atoms, fuzz_rules);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const GroundError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const RevisionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNoResult;
  } catch (const SolveError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNoResult;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
