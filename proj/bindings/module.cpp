#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "walkmin/engine.hpp"
#include "walkmin/error.hpp"
#include "walkmin/graph.hpp"
#include "walkmin/nfa.hpp"
#include "walkmin/reduction.hpp"
#include "walkmin/regex.hpp"
#include "walkmin/semantics.hpp"
#include "walkmin/verify.hpp"

namespace py = pybind11;
using namespace walkmin;

namespace {

py::object json_to_py(const nlohmann::json& j) {
  py::object loads = py::module_::import("json").attr("loads");
  return loads(j.dump());
}

std::vector<Step> steps_from_pairs(const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::vector<Step> steps;
  for (const auto& [label, tgt] : pairs) steps.push_back({label, tgt});
  return steps;
}

std::vector<std::pair<std::string, std::string>> steps_to_pairs(const Walk& w) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const Step& s : w.steps()) out.emplace_back(s.label, s.tgt);
  return out;
}

Literal literal_from_int(int lit) {
  if (lit == 0) throw Error("literal must be nonzero");
  return {lit > 0 ? lit : -lit, lit > 0};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Walk enumeration under minimal-multiset and minimal-set semantics";

  py::register_exception<Error>(m, "WalkminError");

  py::class_<RegExp>(m, "Regex")
      .def_static("parse", [](const std::string& text) { return parse(text); })
      .def("__str__", [](const RegExp& r) { return to_string(r); })
      .def("__eq__", [](const RegExp& a, const RegExp& b) { return a == b; })
      .def_property_readonly("star_height", [](const RegExp& r) { return star_height(r); });
  m.def("parse", [](const std::string& text) { return parse(text); });
  m.def("star_height", [](const RegExp& r) { return star_height(r); });

  py::class_<Nfa>(m, "Nfa")
      .def_property_readonly("state_count", [](const Nfa& n) { return n.state_count; })
      .def("accepts", [](const Nfa& n, const std::vector<std::string>& word) {
        return accepts(n, word);
      });
  m.def("to_nfa", [](const RegExp& r) { return to_nfa(r); });
  m.def("accepts", [](const RegExp& r, const std::vector<std::string>& word) {
    return accepts(to_nfa(r), word);
  });

  py::class_<Walk>(m, "Walk")
      .def(py::init([](const std::string& source,
                       const std::vector<std::pair<std::string, std::string>>& steps) {
             return Walk(source, steps_from_pairs(steps));
           }),
           py::arg("source"), py::arg("steps") = std::vector<std::pair<std::string, std::string>>{})
      .def_property_readonly("source", [](const Walk& w) { return w.source(); })
      .def_property_readonly("target", [](const Walk& w) { return w.target(); })
      .def_property_readonly("steps", &steps_to_pairs)
      .def("__len__", [](const Walk& w) { return w.length(); })
      .def("__eq__", [](const Walk& a, const Walk& b) { return a == b; })
      .def("label_word", [](const Walk& w) { return w.label_word(); })
      .def("to_json", [](const Walk& w) { return w.to_json().dump(); })
      .def_static("from_json", [](const std::string& text) {
        return Walk::from_json(nlohmann::json::parse(text));
      });

  py::class_<Graph>(m, "Graph")
      .def_static("from_json", [](const std::string& text) {
        return Graph::from_json(nlohmann::json::parse(text));
      })
      .def("to_json", [](const Graph& g) { return g.to_json().dump(2); })
      .def("to_dot", [](const Graph& g) { return g.to_dot(); })
      .def_property_readonly("vertices", [](const Graph& g) { return g.vertices(); })
      .def_property_readonly("labels", [](const Graph& g) { return g.labels(); })
      .def_property_readonly("edges", [](const Graph& g) {
        std::vector<std::tuple<std::string, std::string, std::string>> out;
        for (const Edge& e : g.edges()) out.emplace_back(e.src, e.label, e.tgt);
        return out;
      });

  m.def("validate_walk", &validate_walk);
  m.def("concat", [](const Walk& a, const Walk& b) { return concat(a, b); });
  m.def("is_trail", &is_trail);
  m.def("bag_lt", &bag_lt);
  m.def("set_lt", &set_lt);
  m.def("edge_bag", [](const Walk& w) {
    std::map<std::tuple<std::string, std::string, std::string>, int> out;
    for (const auto& [e, count] : edge_bag(w)) out[{e.src, e.label, e.tgt}] = count;
    return out;
  });

  m.def("nonempty", &nonempty);
  m.def("shortest_matches", &shortest_matches);
  m.def("enumerate_matches", &enumerate_matches);
  m.def("enumerate_product_simple", &enumerate_product_simple);
  m.def("enumerate_trail_matches", &enumerate_trail_matches);

  m.def("mm_set", &mm_set);
  m.def("sms_set", &sms_set);
  m.def("mm_set_all", &mm_set_all);
  m.def("sms_set_all", &sms_set_all);
  m.def("trail_set", &trail_set);
  m.def("shortest_set", &shortest_set);
  m.def("match_set", &match_set);
  m.def("mm_membership", &mm_membership);
  m.def("sms_membership", &sms_membership);
  m.def("mm_membership_check", [](const Graph& g, const RegExp& r, const Walk& w) {
    MembershipResult res = mm_membership_check(g, r, w);
    return py::make_tuple(res.member, res.is_match,
                          res.certificate ? py::cast(*res.certificate) : py::none());
  });
  m.def("sms_membership_check", [](const Graph& g, const RegExp& r, const Walk& w) {
    MembershipResult res = sms_membership_check(g, r, w);
    return py::make_tuple(res.member, res.is_match,
                          res.certificate ? py::cast(*res.certificate) : py::none());
  });

  py::class_<SatInstance>(m, "SatInstance")
      .def_property_readonly("var_count", [](const SatInstance& i) { return i.var_count; })
      .def_property_readonly("clause_count", [](const SatInstance& i) { return i.clause_count(); })
      .def_property_readonly("clauses", [](const SatInstance& i) {
        std::vector<std::vector<int>> out;
        for (const auto& clause : i.clauses) {
          std::vector<int> c;
          for (const Literal& lit : clause) c.push_back(lit.positive ? lit.var : -lit.var);
          out.push_back(c);
        }
        return out;
      });
  m.def("parse_dimacs", [](const std::string& text) { return parse_dimacs(text); });
  m.def("sat_oracle", &sat_oracle);
  m.def("random_instance", [](int k, int l, std::uint64_t seed) {
    InstanceSampler sampler(seed);
    return sampler.sample(k, l);
  });

  py::class_<ReductionInstance>(m, "ReductionInstance")
      .def_property_readonly("graph", [](const ReductionInstance& ri) { return ri.graph; })
      .def_property_readonly("variant",
                             [](const ReductionInstance& ri) { return variant_name(ri.variant); })
      .def_property_readonly("r1", [](const ReductionInstance& ri) { return to_string(ri.r1); })
      .def_property_readonly("r2", [](const ReductionInstance& ri) { return to_string(ri.r2); })
      .def_property_readonly("r3",
                             [](const ReductionInstance& ri) -> py::object {
                               return ri.r3 ? py::cast(to_string(*ri.r3)) : py::none();
                             })
      .def_property_readonly("r", [](const ReductionInstance& ri) { return to_string(ri.r); })
      .def_property_readonly("source", [](const ReductionInstance& ri) { return ri.source; })
      .def_property_readonly("target", [](const ReductionInstance& ri) { return ri.target; })
      .def_property_readonly("witness",
                             [](const ReductionInstance& ri) -> py::object {
                               return ri.witness ? py::cast(*ri.witness) : py::none();
                             })
      .def("manifest", [](const ReductionInstance& ri) { return json_to_py(ri.manifest()); });

  m.def("build_enum_instance", &build_enum_instance);
  m.def("build_membership_instance", &build_membership_instance);
  m.def("build_sms_instance", &build_sms_instance);
  m.def("canonical_r2_walk", [](const ReductionInstance& ri, int literal, int j) {
    return canonical_r2_walk(ri, literal_from_int(literal), j);
  });
  m.def("canonical_r3_walk", &canonical_r3_walk);
  m.def("valuation_of", [](const ReductionInstance& ri, const Walk& w) {
    Valuation v = valuation_of(ri, w);
    return std::vector<bool>(v.value.begin() + 1, v.value.end());
  });

  m.def(
      "check_all",
      [](const SatInstance& inst, bool force, const std::vector<std::string>& only) {
        CheckOptions options;
        options.force = force;
        options.only = only;
        return json_to_py(check_all(inst, options).to_json());
      },
      py::arg("instance"), py::arg("force") = false,
      py::arg("only") = std::vector<std::string>{});
  m.def("delay_profile",
        [](const SatInstance& inst) { return json_to_py(delay_profile(inst).to_json()); });
}
