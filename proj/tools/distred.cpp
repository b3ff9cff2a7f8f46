#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "distred/io.hpp"

using namespace distred;
using nlohmann::json;

namespace {

constexpr int kExitValid = 0;
constexpr int kExitNot = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitParse = 3;
constexpr int kExitError = 4;

std::size_t env_or(const char* name, std::size_t fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  return static_cast<std::size_t>(std::strtoull(v, nullptr, 10));
}

struct Timer {
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start)
        .count();
  }
};

int verdict_exit(const Verdict& v) {
  switch (v.outcome) {
    case Outcome::ValidReduction: return kExitValid;
    case Outcome::NotReduction: return kExitNot;
    case Outcome::Unknown: return kExitUnknown;
  }
  return kExitUnknown;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"reduction toolkit for distributions of an alphabet"};
  app.require_subcommand(1);

  bool json_input = false;
  bool parallel = false;
  std::size_t seed = 0;
  std::size_t size_cap = env_or("DISTRED_SIZE_CAP", 9);
  std::size_t word_cap = env_or("DISTRED_WORD_CAP", kDefaultWordCap);
  std::size_t budget = env_or("DISTRED_SAT_BUDGET", kDefaultSaturationBudget);
  std::size_t time_cap_ms = env_or("DISTRED_TIME_CAP_MS", 0);
  app.add_flag("--json", json_input, "inputs are JSON documents");
  app.add_flag("--parallel", parallel, "race refutation and validation");
  app.add_option("--seed", seed, "seed for randomized tooling");
  app.add_option("--size-cap", size_cap, "max parts for merge enumeration");
  app.add_option("--word-cap", word_cap, "max materialized words");
  app.add_option("--budget", budget, "max derived distributions");
  app.add_option("--time-cap-ms", time_cap_ms, "saturation wall-clock cap");

  std::string dist_path, cand_path, lang_path;

  auto* verify = app.add_subcommand("verify",
                                    "verify a candidate reduction");
  verify->add_option("dist-file", dist_path, "source distribution")
      ->required();
  verify->add_option("candidate-file", cand_path, "candidate members")
      ->required();

  auto* exists = app.add_subcommand("exists",
                                    "decide whether a reduction exists");
  exists->add_option("dist-file", dist_path)->required();

  auto* reduce = app.add_subcommand("reduce", "generate a reduction");
  std::string strategy = "incremental";
  std::size_t max_width = 0;
  bool all = false, progress = false;
  reduce->add_option("dist-file", dist_path)->required();
  reduce->add_option("--strategy", strategy, "incremental or recursive")
      ->check(CLI::IsMember({"incremental", "recursive"}));
  reduce->add_option("--max-width", max_width, "cap member sizes");
  reduce->add_flag("--all", all, "collect every validated reduction");
  reduce->add_flag("--progress", progress, "stream search events to stderr");

  auto* lcand_cmd = app.add_subcommand("lcand",
                                       "counterexample language template");
  bool materialize_flag = false;
  lcand_cmd->add_option("dist-file", dist_path)->required();
  lcand_cmd->add_flag("--materialize", materialize_flag,
                      "list words instead of exponent vectors");

  auto* decomp = app.add_subcommand("decomposable",
                                    "finite-language decomposability");
  decomp->add_option("lang-file", lang_path, "one word per line")->required();
  decomp->add_option("dist-file", dist_path)->required();

  auto* graph = app.add_subcommand("graph", "DOT export of symbol graphs");
  std::string kind = "dep";
  graph->add_option("dist-file", dist_path)->required();
  graph->add_option("--kind", kind, "dep or indep")
      ->check(CLI::IsMember({"dep", "indep"}));

  CLI11_PARSE(app, argc, argv);

  Timer timer;
  try {
    VerifyOptions vopts;
    vopts.budget = budget;
    vopts.size_cap = size_cap;
    vopts.time_cap_ms = time_cap_ms;
    vopts.parallel = parallel;

    if (verify->parsed()) {
      ParsedInput src = load_distribution_file(dist_path, json_input);
      ParsedInput cand = load_distribution_file(cand_path, json_input);
      CandidateReduction p(src.distributions.front(), cand.distributions);
      Verdict v = verify_reduction(src.distributions.front(), p, vopts);
      std::cout << result_document("verify", verdict_to_json(v), timer.ms())
                       .dump(2)
                << '\n';
      return verdict_exit(v);
    }
    if (exists->parsed()) {
      ParsedInput src = load_distribution_file(dist_path, json_input);
      Verdict v = exists_reduction(src.distributions.front(), vopts);
      std::cout << result_document("exists", verdict_to_json(v), timer.ms())
                       .dump(2)
                << '\n';
      return verdict_exit(v);
    }
    if (reduce->parsed()) {
      ParsedInput src = load_distribution_file(dist_path, json_input);
      const Distribution& d = src.distributions.front();
      GenerateOptions gopts;
      gopts.budget = budget;
      gopts.size_cap = size_cap;
      gopts.time_cap_ms = time_cap_ms;
      gopts.max_width = max_width;
      if (progress)
        gopts.progress = [](const std::string& line) {
          std::cerr << line << '\n';
        };
      json body;
      int code;
      if (all) {
        auto found = collect_all_validated(d, gopts);
        body["reductions"] = json::array();
        for (std::size_t i = 0; i < found.size(); ++i) {
          json r;
          r["members"] = json::array();
          for (const auto& m : found[i].first.members())
            r["members"].push_back(distribution_to_json(m));
          r["dimension"] = {{"height", found[i].second.height},
                            {"width", found[i].second.width}};
          r["optimal_in_collection"] = i == 0;
          body["reductions"].push_back(std::move(r));
        }
        body["note"] =
            "validated, compact; optimal within the explored set only";
        code = found.empty() ? kExitNot : kExitValid;
      } else {
        GenerateResult g = strategy == "recursive"
                               ? recursive_generate(d, gopts)
                               : incremental_generate(d, gopts);
        switch (g.status) {
          case GenerateStatus::Found: body["status"] = "found"; break;
          case GenerateStatus::NoReduction:
            body["status"] = "no_reduction";
            break;
          case GenerateStatus::Exhausted: body["status"] = "exhausted"; break;
        }
        body["mechanism"] = g.mechanism;
        body["candidates_tested"] = g.candidates_tested;
        if (g.reduction) {
          body["members"] = json::array();
          for (const auto& m : g.reduction->members())
            body["members"].push_back(distribution_to_json(m));
          auto dim = g.reduction->dimension();
          body["dimension"] = {{"height", dim.height}, {"width", dim.width}};
          body["note"] =
              "validated, compact; optimal within the explored set only";
        }
        if (g.trace) body["trace"] = trace_to_json(*g.trace);
        code = g.status == GenerateStatus::Found
                   ? kExitValid
                   : (g.status == GenerateStatus::NoReduction ? kExitNot
                                                              : kExitUnknown);
      }
      std::cout << result_document("reduce", body, timer.ms()).dump(2) << '\n';
      return code;
    }
    if (lcand_cmd->parsed()) {
      ParsedInput src = load_distribution_file(dist_path, json_input);
      const Distribution& d = src.distributions.front();
      ParikhUnion l = build_lcand(d);
      json body;
      body["classes"] = json::array();
      for (const auto& c : l.classes)
        body["classes"].push_back(c.to_string(l.alphabet));
      if (materialize_flag) {
        FiniteLanguage lang = materialize(l, word_cap);
        body["words"] = json::array();
        for (const Word& w : lang.words) {
          std::string s;
          for (Symbol sym : w) {
            if (!s.empty()) s += ' ';
            s += l.alphabet.name(sym);
          }
          body["words"].push_back(s.empty() ? "epsilon" : s);
        }
      }
      std::cout << result_document("lcand", body, timer.ms()).dump(2) << '\n';
      return kExitValid;
    }
    if (decomp->parsed()) {
      ParsedInput src = load_distribution_file(dist_path, json_input);
      const Distribution& d = src.distributions.front();
      FiniteLanguage lang = load_language_file(d.alphabet(), lang_path);
      bool yes = is_decomposable(lang, d, word_cap);
      json body;
      body["decomposable"] = yes;
      std::cout << result_document("decomposable", body, timer.ms()).dump(2)
                << '\n';
      return yes ? kExitValid : kExitNot;
    }
    if (graph->parsed()) {
      ParsedInput src = load_distribution_file(dist_path, json_input);
      const Distribution& d = src.distributions.front();
      DependenceGraph g =
          kind == "dep" ? dependence_graph(d) : independence_graph(d);
      auto nmap = distinctive_indices(d);
      std::cout << dot_graph(g, &nmap, kind);
      return kExitValid;
    }
  } catch (const Error& e) {
    std::cerr << "error (" << error_code_name(e.code()) << "): " << e.what()
              << '\n';
    return e.code() == ErrorCode::ParseError ? kExitParse : kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
