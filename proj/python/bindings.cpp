#include "intramorph/ast.hpp"
#include "intramorph/budget.hpp"
#include "intramorph/harness.hpp"
#include "intramorph/knapsack.hpp"
#include "intramorph/montecarlo.hpp"
#include "intramorph/report.hpp"
#include "intramorph/sorting.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace intramorph;

namespace {

py::object to_python(const nlohmann::ordered_json& doc) {
  return py::module_::import("json").attr("loads")(doc.dump());
}

SortSuite suite_for(const std::optional<std::string>& mutant) {
  return mutant ? inject_sorting_mutant(*mutant) : reference_sort_suite();
}

KnapsackSolvers solvers_for(const std::optional<std::string>& mutant) {
  return mutant ? inject_knapsack_mutant(*mutant) : reference_knapsack_solvers();
}

py::dict descriptor_dict(const CampaignInfo& info) {
  const auto& d = info.descriptor;
  py::dict out;
  out["granularity"] = std::string(to_string(d.granularity));
  out["application_mode"] = std::string(to_string(d.application_mode));
  out["automation"] = std::string(to_string(d.automation));
  out["relation_complete"] = d.relation_complete;
  out["false_alarm_possible"] = d.false_alarm_possible;
  return out;
}

} // namespace

PYBIND11_MODULE(intramorph, m) {
  m.doc() = "Seeded random-testing campaigns with intramorphic relations";

  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_TimeoutError);
  py::register_exception<SearchBudgetExceeded>(m, "SearchBudgetExceeded", PyExc_RuntimeError);

  // Sorting.
  m.def("bubble_sort", [](std::vector<int> arr, std::optional<std::string> mutant) {
    return suite_for(mutant).bubble_sort(std::move(arr));
  }, py::arg("arr"), py::arg("mutant") = py::none());
  m.def("bubble_sort_reverse", [](std::vector<int> arr, std::optional<std::string> mutant) {
    return suite_for(mutant).bubble_sort_reverse(std::move(arr));
  }, py::arg("arr"), py::arg("mutant") = py::none());
  m.def("insertion_sort", &insertion_sort, py::arg("arr"));
  m.def("merge_sort", &merge_sort, py::arg("arr"));
  m.def("reverse_relation", &reverse_relation, py::arg("ascending"), py::arg("descending"));

  // Expression trees.
  py::class_<Expr>(m, "Expr")
      .def_static("operation", [](const std::string& op, const Expr& l, const Expr& r) {
        if (op.size() != 1) {
          throw ConfigurationError("operator must be '+' or '*'");
        }
        return make_operation(op[0], l, r);
      }, py::arg("op"), py::arg("left"), py::arg("right"))
      .def_static("variable", &make_variable, py::arg("name"))
      .def_static("constant", &make_constant, py::arg("value"))
      .def("infix", [](const Expr& e, std::optional<std::string> mutant) {
        return mutant ? inject_ast_mutant(*mutant)(e) : as_string_infix(e);
      }, py::arg("mutant") = py::none())
      .def("prefix", &as_string_prefix)
      .def("postfix", &as_string_postfix)
      .def("node_count", &node_count)
      .def("depth", &depth)
      .def("tokens_agree", [](const Expr& e, std::optional<std::string> mutant) {
        return mutant ? token_multiset_relation(e, inject_ast_mutant(*mutant)) : token_multiset_relation(e);
      }, py::arg("mutant") = py::none())
      .def("__eq__", [](const Expr& a, const Expr& b) { return a == b; })
      .def("__repr__", [](const Expr& e) { return render(e); });
  m.def("sorted_tokens", &sorted_tokens, py::arg("text"), py::arg("strip_parentheses"));

  // Monte Carlo.
  m.def("pi_approximation", [](std::uint64_t n, std::uint64_t seed, std::optional<std::string> mutant) {
    SeededSource src(seed);
    return mutant ? inject_montecarlo_mutant(*mutant)(n, src) : pi_approximation(n, src);
  }, py::arg("n"), py::arg("seed"), py::arg("mutant") = py::none());

  // Knapsack.
  py::class_<KnapsackItem>(m, "KnapsackItem")
      .def(py::init([](std::string name, std::int64_t value, std::int64_t weight) {
        return KnapsackItem{std::move(name), value, weight};
      }), py::arg("name"), py::arg("value"), py::arg("weight"))
      .def_readwrite("name", &KnapsackItem::name)
      .def_readwrite("value", &KnapsackItem::value)
      .def_readwrite("weight", &KnapsackItem::weight);
  py::class_<KnapsackInstance>(m, "KnapsackInstance")
      .def(py::init([](std::vector<KnapsackItem> items, std::int64_t capacity) {
        KnapsackInstance instance{std::move(items), capacity};
        instance.validate();
        return instance;
      }), py::arg("items"), py::arg("capacity"))
      .def_readonly("items", &KnapsackInstance::items)
      .def_readonly("capacity", &KnapsackInstance::capacity)
      .def("__repr__", [](const KnapsackInstance& i) { return render(i); });
  py::class_<KnapsackSolution>(m, "KnapsackSolution")
      .def_readonly("packed", &KnapsackSolution::packed)
      .def_readonly("cum_value", &KnapsackSolution::cum_value)
      .def_readonly("cum_weight", &KnapsackSolution::cum_weight)
      .def("__repr__", [](const KnapsackSolution& s) { return render(s); });
  m.def("knapsack_greedy", [](const KnapsackInstance& instance, std::optional<std::string> mutant) {
    return solvers_for(mutant).greedy(instance);
  }, py::arg("instance"), py::arg("mutant") = py::none());
  m.def("knapsack_exhaustive", [](const KnapsackInstance& instance, std::optional<std::string> mutant) {
    return solvers_for(mutant).exhaustive(instance);
  }, py::arg("instance"), py::arg("mutant") = py::none());
  m.def("dp_reference", &dp_reference, py::arg("instance"));

  // Campaigns.
  m.def("campaigns", [] {
    py::list out;
    for (const Campaign* campaign : builtin_campaigns().all()) {
      const auto& info = campaign->info();
      py::dict entry;
      entry["name"] = info.name;
      entry["case_study"] = info.case_study;
      entry["technique"] = std::string(to_string(info.technique));
      entry["stochastic"] = info.stochastic;
      entry["descriptor"] = descriptor_dict(info);
      out.append(std::move(entry));
    }
    return out;
  });
  m.def("mutants", [](const std::string& campaign) {
    py::list out;
    for (const auto& mutant : builtin_campaigns().get(campaign).info().mutants) {
      py::dict entry;
      entry["name"] = mutant.name;
      entry["description"] = mutant.description;
      entry["blind_spot"] = mutant.blind_spot;
      out.append(std::move(entry));
    }
    return out;
  }, py::arg("campaign"));
  m.def("run_campaign",
        [](const std::string& campaign, std::uint64_t seed, std::uint64_t iterations,
           std::optional<std::string> mutant, std::optional<unsigned> k, bool continue_after_violation) {
          CampaignConfig config;
          config.campaign = campaign;
          config.seed = seed;
          config.iterations = iterations;
          config.mutant = std::move(mutant);
          config.repetitions = k;
          config.continue_after_violation = continue_after_violation;
          CampaignReport report;
          {
            py::gil_scoped_release release;
            report = run_campaign(config);
          }
          return to_python(to_json(report));
        },
        py::arg("campaign"), py::arg("seed") = 42, py::arg("iterations") = 1, py::arg("mutant") = py::none(),
        py::arg("k") = py::none(), py::arg("continue_after_violation") = false);
  m.def("detection_matrix", [](std::uint64_t seed, std::uint64_t iterations) {
    DetectionMatrix matrix;
    {
      py::gil_scoped_release release;
      matrix = run_detection_matrix(builtin_campaigns(), seed, iterations);
    }
    return to_python(to_json(matrix));
  }, py::arg("seed") = 42, py::arg("iterations") = 100);
}
