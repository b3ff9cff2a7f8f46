#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "distred/io.hpp"

namespace py = pybind11;
using namespace distred;

namespace {

Distribution make_distribution(const Alphabet& a,
                               const std::vector<std::vector<std::string>>&
                                   parts) {
  std::vector<Mask> masks;
  for (const auto& part : parts) masks.push_back(a.mask_from_names(part));
  return Distribution(a, std::move(masks));
}

std::vector<std::vector<std::string>> parts_out(const Distribution& d) {
  std::vector<std::vector<std::string>> out;
  for (Mask p : d.parts()) {
    std::vector<std::string> part;
    for_each_symbol(p, [&](Symbol s) { part.push_back(d.alphabet().name(s)); });
    out.push_back(std::move(part));
  }
  return out;
}

py::object json_to_py(const nlohmann::json& j) {
  auto loads = py::module_::import("json").attr("loads");
  return loads(j.dump());
}

CandidateReduction make_candidate(
    const Distribution& d,
    const std::vector<std::vector<std::vector<std::string>>>& members) {
  std::vector<Distribution> ms;
  for (const auto& m : members)
    ms.push_back(make_distribution(d.alphabet(), m));
  return CandidateReduction(d, std::move(ms));
}

}  // namespace

PYBIND11_MODULE(_distred, m) {
  m.doc() = "reduction toolkit for distributions of an alphabet";

  py::register_exception<Error>(m, "DistredError");

  py::class_<Alphabet>(m, "Alphabet")
      .def(py::init<std::vector<std::string>>())
      .def("__len__", &Alphabet::size)
      .def("names", [](const Alphabet& a) {
        std::vector<std::string> out;
        for (std::size_t s = 0; s < a.size(); ++s)
          out.push_back(a.name(static_cast<Symbol>(s)));
        return out;
      });

  py::class_<Distribution>(m, "Distribution")
      .def(py::init([](const std::vector<std::string>& alphabet,
                       const std::vector<std::vector<std::string>>& parts) {
             return make_distribution(Alphabet(alphabet), parts);
           }),
           py::arg("alphabet"), py::arg("parts"))
      .def(py::init(&make_distribution), py::arg("alphabet"),
           py::arg("parts"))
      .def_property_readonly("alphabet", &Distribution::alphabet)
      .def_property_readonly("parts", &parts_out)
      .def("__len__", &Distribution::size)
      .def("__str__", &Distribution::to_string)
      .def("__repr__", &Distribution::to_string)
      .def("__eq__", [](const Distribution& a, const Distribution& b) {
        return a == b;
      });

  m.def("meet", &meet);
  m.def("join", &join);
  m.def("leq_sigma", &leq_sigma);
  m.def("minimal_merges", &minimal_merges);
  m.def("all_merges", &all_merges, py::arg("d"), py::arg("size_cap") = 9);

  m.def(
      "verify",
      [](const Distribution& d,
         const std::vector<std::vector<std::vector<std::string>>>& members,
         bool parallel) {
        VerifyOptions opts;
        opts.parallel = parallel;
        Verdict v = verify_reduction(d, make_candidate(d, members), opts);
        return json_to_py(verdict_to_json(v));
      },
      py::arg("d"), py::arg("members"), py::arg("parallel") = false);

  m.def("exists", [](const Distribution& d) {
    return json_to_py(verdict_to_json(exists_reduction(d)));
  });

  m.def(
      "reduce",
      [](const Distribution& d, const std::string& strategy,
         std::size_t max_width) {
        GenerateOptions opts;
        opts.max_width = max_width;
        GenerateResult g = strategy == "recursive"
                               ? recursive_generate(d, opts)
                               : incremental_generate(d, opts);
        nlohmann::json body;
        body["status"] = g.status == GenerateStatus::Found
                             ? "found"
                             : (g.status == GenerateStatus::NoReduction
                                    ? "no_reduction"
                                    : "exhausted");
        body["mechanism"] = g.mechanism;
        if (g.reduction) {
          body["members"] = nlohmann::json::array();
          for (const auto& mm : g.reduction->members())
            body["members"].push_back(distribution_to_json(mm));
        }
        if (g.trace) body["trace"] = trace_to_json(*g.trace);
        return json_to_py(body);
      },
      py::arg("d"), py::arg("strategy") = "incremental",
      py::arg("max_width") = 0);

  m.def("lcand_classes", [](const Distribution& d) {
    ParikhUnion l = build_lcand(d);
    std::vector<std::map<std::string, unsigned>> out;
    for (const auto& c : l.classes) {
      std::map<std::string, unsigned> counts;
      for (std::size_t s = 0; s < c.counts.size(); ++s)
        counts[l.alphabet.name(static_cast<Symbol>(s))] = c.counts[s];
      out.push_back(std::move(counts));
    }
    return out;
  });

  m.def("no_reduction_check", &no_reduction_check);
  m.def("theorem7_decomposable", &theorem7_decomposable);
  m.def("appendixA_decomposable", &appendixA_decomposable);

  m.def(
      "decomposable",
      [](const std::vector<std::vector<std::string>>& words,
         const Distribution& d) {
        std::set<Word> ws;
        for (const auto& w : words) {
          Word word;
          for (const auto& name : w) {
            auto idx = d.alphabet().index(name);
            if (!idx)
              throw Error(ErrorCode::ParseError,
                          "unknown symbol '" + name + "'");
            word.push_back(*idx);
          }
          ws.insert(std::move(word));
        }
        return is_decomposable(FiniteLanguage(d.alphabet(), std::move(ws)),
                               d);
      },
      py::arg("words"), py::arg("d"));
}
