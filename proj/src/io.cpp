#include "distred/io.hpp"

#include <fstream>
#include <sstream>

#include "distred/errors.hpp"

namespace distred {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(std::size_t line, std::size_t col,
                             const std::string& what) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) +
                                         ", column " + std::to_string(col) +
                                         ": " + what);
}

std::vector<std::string> tokens_of(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

// Parse "{a,b} {b,c}" into part masks.
std::vector<Mask> parse_parts(const Alphabet& a, const std::string& body,
                              std::size_t line_no, std::size_t col_base) {
  std::vector<Mask> parts;
  std::size_t i = 0;
  auto col = [&] { return col_base + i + 1; };
  while (i < body.size()) {
    if (std::isspace(static_cast<unsigned char>(body[i]))) {
      ++i;
      continue;
    }
    if (body[i] != '{') parse_fail(line_no, col(), "expected '{'");
    std::size_t close = body.find('}', i);
    if (close == std::string::npos)
      parse_fail(line_no, col(), "unterminated part");
    std::string inner = body.substr(i + 1, close - i - 1);
    Mask part = 0;
    std::istringstream in(inner);
    std::string name;
    bool any = false;
    while (std::getline(in, name, ',')) {
      // Trim surrounding spaces.
      auto b = name.find_first_not_of(" \t");
      auto e = name.find_last_not_of(" \t");
      if (b == std::string::npos)
        parse_fail(line_no, col(), "empty symbol name in part");
      name = name.substr(b, e - b + 1);
      auto idx = a.index(name);
      if (!idx)
        parse_fail(line_no, col(), "unknown symbol '" + name + "'");
      part |= mask_of(*idx);
      any = true;
    }
    if (!any) parse_fail(line_no, col(), "empty part '{}'");
    parts.push_back(part);
    i = close + 1;
  }
  return parts;
}

}  // namespace

ParsedInput parse_distribution_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  std::optional<Alphabet> alphabet;
  std::vector<std::vector<Mask>> dists;
  std::vector<std::size_t> dist_lines;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_comment(line);
    auto toks = tokens_of(line);
    if (toks.empty()) continue;
    if (toks[0] == "alphabet:") {
      if (alphabet) parse_fail(line_no, 1, "duplicate alphabet line");
      std::vector<std::string> names(toks.begin() + 1, toks.end());
      if (names.empty()) parse_fail(line_no, 1, "alphabet line has no symbols");
      try {
        alphabet.emplace(std::move(names));
      } catch (const Error& e) {
        parse_fail(line_no, 1, e.what());
      }
    } else if (toks[0] == "distribution:") {
      if (!alphabet)
        parse_fail(line_no, 1, "distribution before alphabet line");
      auto key_end = line.find("distribution:") + 13;
      dists.push_back(parse_parts(*alphabet, line.substr(key_end), line_no,
                                  key_end));
      dist_lines.push_back(line_no);
    } else {
      parse_fail(line_no, 1, "expected 'alphabet:' or 'distribution:'");
    }
  }
  if (!alphabet) parse_fail(line_no, 1, "missing alphabet line");
  if (dists.empty()) parse_fail(line_no, 1, "missing distribution line");
  ParsedInput out{*alphabet, {}};
  for (std::size_t k = 0; k < dists.size(); ++k) {
    try {
      out.distributions.emplace_back(*alphabet, std::move(dists[k]));
    } catch (const Error& e) {
      parse_fail(dist_lines[k], 1, e.what());
    }
  }
  return out;
}

ParsedInput parse_distribution_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  if (!j.contains("alphabet") || !j["alphabet"].is_array())
    throw Error(ErrorCode::ParseError, "missing 'alphabet' array");
  std::vector<std::string> names;
  for (const auto& n : j["alphabet"]) names.push_back(n.get<std::string>());
  Alphabet a(std::move(names));
  if (!j.contains("distributions") || !j["distributions"].is_array())
    throw Error(ErrorCode::ParseError, "missing 'distributions' array");
  ParsedInput out{a, {}};
  for (const auto& dj : j["distributions"])
    out.distributions.push_back(distribution_from_json(a, dj));
  return out;
}

ParsedInput load_distribution_file(const std::string& path, bool json_input) {
  std::string text = read_file(path);
  return json_input ? parse_distribution_json(text)
                    : parse_distribution_text(text);
}

std::string print_distribution_file(const ParsedInput& in) {
  std::ostringstream out;
  out << "alphabet:";
  for (std::size_t s = 0; s < in.alphabet.size(); ++s)
    out << ' ' << in.alphabet.name(static_cast<Symbol>(s));
  out << '\n';
  for (const auto& d : in.distributions) {
    out << "distribution:";
    for (Mask p : d.parts()) out << ' ' << in.alphabet.mask_to_string(p);
    out << '\n';
  }
  return out.str();
}

FiniteLanguage parse_language_text(const Alphabet& a,
                                   const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  std::set<Word> words;
  bool single_char = true;
  for (std::size_t s = 0; s < a.size(); ++s)
    if (a.name(static_cast<Symbol>(s)).size() != 1) single_char = false;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_comment(line);
    auto toks = tokens_of(line);
    if (toks.empty()) continue;
    if (toks.size() == 1 && toks[0] == "epsilon") {
      words.insert(Word{});
      continue;
    }
    Word w;
    for (const auto& t : toks) {
      if (auto idx = a.index(t)) {
        w.push_back(*idx);
        continue;
      }
      if (!single_char)
        parse_fail(line_no, 1, "unknown symbol '" + t + "'");
      for (char ch : t) {
        auto idx = a.index(std::string(1, ch));
        if (!idx)
          parse_fail(line_no, 1,
                     "unknown symbol '" + std::string(1, ch) + "'");
        w.push_back(*idx);
      }
    }
    words.insert(std::move(w));
  }
  return FiniteLanguage(a, std::move(words));
}

FiniteLanguage load_language_file(const Alphabet& a, const std::string& path) {
  return parse_language_text(a, read_file(path));
}

json distribution_to_json(const Distribution& d) {
  json parts = json::array();
  for (Mask p : d.parts()) {
    json part = json::array();
    for_each_symbol(p, [&](Symbol s) { part.push_back(d.alphabet().name(s)); });
    parts.push_back(std::move(part));
  }
  return parts;
}

Distribution distribution_from_json(const Alphabet& a, const json& j) {
  if (!j.is_array())
    throw Error(ErrorCode::ParseError, "distribution must be an array");
  std::vector<Mask> parts;
  for (const auto& pj : j) {
    if (!pj.is_array())
      throw Error(ErrorCode::ParseError, "part must be an array");
    Mask p = 0;
    for (const auto& nj : pj) {
      auto idx = a.index(nj.get<std::string>());
      if (!idx)
        throw Error(ErrorCode::ParseError,
                    "unknown symbol '" + nj.get<std::string>() + "'");
      p |= mask_of(*idx);
    }
    parts.push_back(p);
  }
  return Distribution(a, std::move(parts));
}

json trace_to_json(const ProofTrace& t) {
  json j;
  j["premises"] = json::array();
  for (const auto& p : t.premises) j["premises"].push_back(distribution_to_json(p));
  j["steps"] = json::array();
  for (const auto& s : t.steps)
    j["steps"].push_back({{"left", distribution_to_json(s.left)},
                          {"right", distribution_to_json(s.right)},
                          {"position", s.position},
                          {"result", distribution_to_json(s.result)}});
  j["conclusion"] = distribution_to_json(t.conclusion);
  return j;
}

ProofTrace trace_from_json(const Alphabet& a, const json& j) {
  std::vector<Distribution> premises;
  for (const auto& pj : j.at("premises"))
    premises.push_back(distribution_from_json(a, pj));
  std::vector<SubstitutionStep> steps;
  for (const auto& sj : j.at("steps"))
    steps.push_back({distribution_from_json(a, sj.at("left")),
                     distribution_from_json(a, sj.at("right")),
                     sj.at("position").get<std::size_t>(),
                     distribution_from_json(a, sj.at("result"))});
  return ProofTrace{std::move(premises), std::move(steps),
                    distribution_from_json(a, j.at("conclusion"))};
}

json verdict_to_json(const Verdict& v) {
  json j;
  j["outcome"] = outcome_name(v.outcome);
  j["mechanism"] = v.mechanism;
  json evidence;
  if (v.trace) evidence["trace"] = trace_to_json(*v.trace);
  if (v.refutation) {
    json certs = json::array();
    for (const auto& c : v.refutation->certificates)
      certs.push_back({{"member", distribution_to_json(c.member)},
                       {"method", c.method}});
    evidence["certificates"] = std::move(certs);
  }
  if (v.meet_result)
    evidence["meet"] = distribution_to_json(*v.meet_result);
  if (!v.diagnostics.empty()) evidence["diagnostics"] = v.diagnostics;
  j["evidence"] = std::move(evidence);
  return j;
}

json result_document(const std::string& command, const json& body,
                     double total_ms) {
  json j;
  j["schema"] = "distred-result/1";
  j["tool"] = {{"name", "distred"}, {"version", "0.1.0"}};
  j["command"] = command;
  j["result"] = body;
  j["timings"] = {{"total_ms", total_ms}};
  return j;
}

std::string dot_graph(const DependenceGraph& g,
                      const std::vector<IndexSet>* nmap,
                      const std::string& name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (std::size_t s = 0; s < g.alphabet.size(); ++s) {
    out << "  " << g.alphabet.name(static_cast<Symbol>(s));
    if (nmap) {
      out << " [label=\"" << g.alphabet.name(static_cast<Symbol>(s))
          << " N={";
      bool first = true;
      for_each_symbol((*nmap)[s], [&](Symbol i) {
        if (!first) out << ',';
        first = false;
        out << (i + 1);
      });
      out << "}\"]";
    }
    out << ";\n";
  }
  for (std::size_t s = 0; s < g.alphabet.size(); ++s)
    for_each_symbol(g.adj[s], [&](Symbol t) {
      if (static_cast<Symbol>(s) < t)
        out << "  " << g.alphabet.name(static_cast<Symbol>(s)) << " -- "
            << g.alphabet.name(t) << ";\n";
    });
  out << "}\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorCode::ParseError, "cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace distred
