#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "distred/generator.hpp"
#include "distred/language.hpp"
#include "distred/lcand.hpp"
#include "distred/structural.hpp"
#include "distred/verifier.hpp"

namespace distred {

/// One parsed input document: an alphabet plus one or more distributions
/// over it.
struct ParsedInput {
  Alphabet alphabet;
  std::vector<Distribution> distributions;
};

/// Text format:
///   alphabet: a b c
///   distribution: {a,b} {b,c}
/// Blank lines and `#` comments allowed. Errors carry line and column.
ParsedInput parse_distribution_text(const std::string& text);

/// JSON format: {"alphabet": ["a","b"], "distributions": [[["a","b"], ...]]}
ParsedInput parse_distribution_json(const std::string& text);

ParsedInput load_distribution_file(const std::string& path, bool json_input);

std::string print_distribution_file(const ParsedInput& in);

/// One word per line, symbols separated by spaces (or juxtaposed for
/// one-character symbol names); the bare keyword `epsilon` is the empty
/// word. `#` comments allowed.
FiniteLanguage parse_language_text(const Alphabet& a, const std::string& text);
FiniteLanguage load_language_file(const Alphabet& a, const std::string& path);

nlohmann::json distribution_to_json(const Distribution& d);
Distribution distribution_from_json(const Alphabet& a,
                                    const nlohmann::json& j);

nlohmann::json trace_to_json(const ProofTrace& t);
ProofTrace trace_from_json(const Alphabet& a, const nlohmann::json& j);

nlohmann::json verdict_to_json(const Verdict& v);

/// Schema-versioned envelope around one command's outcome. `timings` live
/// under their own key so comparisons can strip them.
nlohmann::json result_document(const std::string& command,
                               const nlohmann::json& body, double total_ms);

/// Undirected DOT with one vertex per symbol; when `nmap` is given, vertex
/// labels carry the distinctive part indices (1-based).
std::string dot_graph(const DependenceGraph& g,
                      const std::vector<IndexSet>* nmap,
                      const std::string& name);

std::string read_file(const std::string& path);

}  // namespace distred
