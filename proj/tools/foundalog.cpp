#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "foundalog/depgraph.hpp"
#include "foundalog/errors.hpp"
#include "foundalog/oracle.hpp"
#include "foundalog/parser.hpp"
#include "foundalog/printer.hpp"
#include "foundalog/report.hpp"
#include "foundalog/semantics.hpp"
#include "foundalog/transform.hpp"
#include "foundalog/validate.hpp"

namespace {

using namespace foundalog;

constexpr int kExitInput = 1;    // parse or validation failure
constexpr int kExitBudget = 2;   // enumeration budget / oracle scale
constexpr int kExitOracle = 3;   // engine and oracle disagree

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Parses, applies --declare overrides, validates.
Program load(const std::string& path, const std::vector<std::string>& declares) {
  Program prog = parse(read_file(path));
  for (const std::string& d : declares) {
    Declaration decl = parse_declaration_override(d);
    std::erase_if(prog.declarations,
                  [&](const Declaration& x) { return x.pred == decl.pred; });
    prog.declarations.push_back(decl);
  }
  return validate(prog);
}

struct EvalConfig {
  std::string input;
  bool founded_only = false;
  bool constraint_only = false;
  std::string format = "text";
  bool show_false = false;
  std::size_t max_models = 64;
  std::size_t budget = 20;
  std::vector<std::string> declares;
  bool dump_ground = false;
  bool dump_completed = false;
  bool dump_depgraph = false;
  bool oracle = false;
};

void dump_artifacts(const Program& prog, const EvalConfig& cfg) {
  if (cfg.dump_completed) {
    std::cout << "% completed program\n" << print(cmpl(prog)) << "\n";
  }
  if (cfg.dump_ground) {
    std::cout << "% ground instances of the completed program\n";
    std::vector<Constant> domain = constants_of(prog);
    for (const GroundRule& r : ground_rules(cmpl(prog).clauses, domain)) {
      std::cout << print(r.head);
      if (r.body) std::cout << " :- " << print(*r.body);
      std::cout << ".\n";
    }
    std::cout << "\n";
  }
  if (cfg.dump_depgraph) {
    std::cout << "% dependency graph (completed, negation-renamed)\n";
    DependencyGraph dg = DependencyGraph::build(name_neg(cmpl(prog)));
    for (const PredKey& p : dg.nodes())
      for (const auto& [q, lbl] : dg.edges_from(p))
        std::cout << p.name << "/" << p.arity << " -> " << q.name << "/"
                  << q.arity
                  << (lbl == OccLabel::Positive ? "" : " [non-positive]")
                  << "\n";
    std::cout << "\n";
  }
}

int cmd_eval(const EvalConfig& cfg) {
  Program prog = load(cfg.input, cfg.declares);
  dump_artifacts(prog, cfg);

  bool want_founded = !cfg.constraint_only;
  bool want_constraint = !cfg.founded_only;

  Interpretation F = founded(prog);
  ConstraintModels cm;
  if (want_constraint) cm = constraint_models(prog, cfg.max_models, cfg.budget);

  if (cfg.oracle) {
    ConstraintModels ref = oracle::enumerate_constraint_models_bruteforce(
        prog, F, cfg.max_models);
    if (!want_constraint) cm = constraint_models(prog, cfg.max_models, cfg.budget);
    if (cm.models != ref.models) {
      std::cerr << "oracle mismatch\nengine:\n"
                << models_text(cm) << "oracle:\n"
                << models_text(ref);
      return kExitOracle;
    }
  }

  if (cfg.format == "json") {
    nlohmann::json out;
    if (want_founded) out["founded"] = founded_to_json(prog, F);
    if (want_constraint) {
      out["constraint_models"] = models_to_json(cm);
      out["truncated"] = cm.truncated;
    }
    std::cout << out.dump(2) << "\n";
  } else {
    if (want_founded) std::cout << founded_text(prog, F, cfg.show_false);
    if (want_constraint) std::cout << models_text(cm);
  }
  return 0;
}

int cmd_check(const std::string& input, const std::vector<std::string>& declares) {
  Program prog = load(input, declares);
  for (const auto& [p, info] : prog.resolved) {
    std::cout << p.name << "/" << p.arity << ": "
              << (info.certainty == Certainty::Certain ? "certain" : "uncertain");
    if (info.certainty == Certainty::Uncertain)
      std::cout << (info.complete ? ", complete" : ", not complete")
                << (info.closed ? ", closed" : "");
    std::cout << "\n";
  }
  return 0;
}

nlohmann::json eval_to_json(const Program& prog, std::size_t max_models,
                            std::size_t budget) {
  Interpretation F = founded(prog);
  ConstraintModels cm = constraint_models(prog, max_models, budget);
  nlohmann::json out;
  out["founded"] = founded_to_json(prog, F);
  out["constraint_models"] = models_to_json(cm);
  out["truncated"] = cm.truncated;
  return out;
}

int cmd_corpus(const std::string& dir, std::size_t max_models,
               std::size_t budget) {
  namespace fs = std::filesystem;
  std::vector<fs::path> manifests;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.path().extension() == ".json") manifests.push_back(e.path());
  std::sort(manifests.begin(), manifests.end());
  if (manifests.empty()) {
    std::cerr << "no corpus manifests in " << dir << "\n";
    return kExitInput;
  }

  int failures = 0;
  for (const fs::path& mf : manifests) {
    nlohmann::json manifest = nlohmann::json::parse(read_file(mf.string()));
    std::string program_file =
        (mf.parent_path() / manifest.at("program").get<std::string>()).string();
    for (const auto& kase : manifest.at("cases")) {
      std::string name = mf.stem().string() + "/" +
                         kase.at("name").get<std::string>();
      std::vector<std::string> declares;
      if (kase.contains("declare"))
        for (const auto& d : kase.at("declare"))
          declares.push_back(d.get<std::string>());
      std::size_t case_max =
          kase.contains("max_models") ? kase.at("max_models").get<std::size_t>()
                                      : max_models;
      try {
        Program prog = load(program_file, declares);
        nlohmann::json got = eval_to_json(prog, case_max, budget);
        const nlohmann::json& want = kase.at("expected");
        if (got == want) {
          std::cout << "PASS " << name << "\n";
        } else {
          ++failures;
          std::cout << "FAIL " << name << "\n";
          for (const char* key : {"true", "false", "undefined"}) {
            if (got["founded"][key] != want["founded"][key])
              std::cout << "  founded." << key << ": got "
                        << got["founded"][key].dump() << " want "
                        << want["founded"][key].dump() << "\n";
          }
          if (got["constraint_models"] != want["constraint_models"])
            std::cout << "  constraint_models: got "
                      << got["constraint_models"].dump() << " want "
                      << want["constraint_models"].dump() << "\n";
          if (got["truncated"] != want["truncated"])
            std::cout << "  truncated: got " << got["truncated"].dump()
                      << " want " << want["truncated"].dump() << "\n";
        }
      } catch (const std::exception& e) {
        ++failures;
        std::cout << "FAIL " << name << " (error: " << e.what() << ")\n";
      }
    }
  }
  std::cout << (failures ? "corpus: FAILURES: " : "corpus: all passed")
            << (failures ? std::to_string(failures) : "") << "\n";
  return failures ? kExitInput : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"foundalog: rule evaluation under founded and constraint semantics"};
  app.require_subcommand(1);

  EvalConfig cfg;
  if (const char* env = std::getenv("FOUNDALOG_MAX_MODELS"))
    cfg.budget = std::strtoull(env, nullptr, 10);

  CLI::App* eval = app.add_subcommand("eval", "evaluate a program");
  eval->add_option("input", cfg.input, "program file (.fl)")->required();
  eval->add_flag("--founded", cfg.founded_only, "founded model only");
  eval->add_flag("--constraint", cfg.constraint_only, "constraint models only");
  eval->add_option("--format", cfg.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  eval->add_flag("--show-false", cfg.show_false,
                 "show false atoms of certain predicates in text output");
  eval->add_option("--max-models", cfg.max_models, "model list cap")
      ->check(CLI::PositiveNumber);
  eval->add_option("--budget", cfg.budget, "undefined-atom enumeration budget");
  eval->add_option("--declare", cfg.declares,
                   "override a declaration, e.g. p/1=uncertain,complete");
  eval->add_flag("--dump-ground", cfg.dump_ground, "print ground instances");
  eval->add_flag("--dump-completed", cfg.dump_completed,
                 "print the completed program");
  eval->add_flag("--dump-depgraph", cfg.dump_depgraph,
                 "print the dependency graph");
  eval->add_flag("--oracle", cfg.oracle,
                 "cross-check constraint models with the brute-force oracle");

  std::string check_input;
  std::vector<std::string> check_declares;
  CLI::App* check = app.add_subcommand("check", "parse and validate only");
  check->add_option("input", check_input, "program file (.fl)")->required();
  check->add_option("--declare", check_declares, "override a declaration");

  std::string corpus_dir = "corpus";
  CLI::App* corpus = app.add_subcommand("corpus", "run the bundled examples");
  corpus->add_option("--dir", corpus_dir, "corpus directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (eval->parsed()) return cmd_eval(cfg);
    if (check->parsed()) return cmd_check(check_input, check_declares);
    return cmd_corpus(corpus_dir, cfg.max_models, cfg.budget);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitInput;
  } catch (const BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const OracleScaleError& e) {
    std::cerr << "oracle scale exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
