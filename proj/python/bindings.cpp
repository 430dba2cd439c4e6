#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "dwmds/local_part.hpp"
#include "dwmds/oracle.hpp"

namespace py = pybind11;
using namespace dwmds;

namespace {

// Results cross the boundary as canonical JSON text; the Python side parses it.
std::string local_part_json(int rank, const std::vector<int>& twist, int n, std::optional<WeightVector> weight,
                            unsigned jobs) {
  LocalPartOptions options;
  options.weight_filter = std::move(weight);
  options.jobs = jobs;
  return compute_local_part(RootSystemD(rank), HighestWeight::from_twist(twist), n, options).to_json().dump();
}

py::dict coefficient(int rank, const std::vector<int>& twist, int n, const WeightVector& lambda) {
  LocalPartStats stats;
  const RingElem a = coefficient_at(RootSystemD(rank), HighestWeight::from_twist(twist), n, lambda, &stats);
  py::dict out;
  out["text"] = a.to_string();
  out["json"] = a.to_json().dump();
  out["patterns"] = stats.patterns;
  out["nonstrict"] = stats.nonstrict;
  out["nonzero"] = stats.nonzero;
  return out;
}

py::dict count_patterns(int rank, const std::vector<int>& twist, std::optional<WeightVector> weight) {
  const auto hw = HighestWeight::from_twist(twist);
  std::uint64_t total = 0;
  std::uint64_t nonstrict = 0;
  PatternEnumerator(RootSystemD(rank), hw, std::move(weight)).enumerate([&](const LittelmannPattern& t) {
    ++total;
    const DecoratedGraph g = decorate_with_mask(t, critical_mask(t, hw));
    if (!is_strict(g, classify_components(g))) ++nonstrict;
  });
  py::dict out;
  out["total"] = total;
  out["nonstrict"] = nonstrict;
  out["strict"] = total - nonstrict;
  return out;
}

std::vector<std::string> list_patterns(int rank, const std::vector<int>& twist, std::optional<WeightVector> weight) {
  std::vector<std::string> out;
  PatternEnumerator(RootSystemD(rank), HighestWeight::from_twist(twist), std::move(weight))
      .enumerate([&](const LittelmannPattern& t) { out.push_back(t.to_string()); });
  return out;
}

py::dict explain(const std::string& pattern, const std::vector<int>& twist, int n) {
  const LittelmannPattern t = LittelmannPattern::parse(pattern);
  const ContributionBreakdown b = explain_contribution(t, HighestWeight::from_twist(twist), n);
  py::list factors;
  for (const auto& f : b.factors) {
    py::dict d;
    d["class"] = to_string(f.component.cls);
    d["value"] = f.component.value;
    d["rule"] = f.rule;
    d["factor"] = f.value.to_string();
    factors.append(d);
  }
  py::dict out;
  out["graph"] = render_ascii(b.graph);
  out["weight"] = b.weight;
  out["strict"] = b.strict;
  out["factors"] = factors;
  out["total"] = b.total.to_string();
  return out;
}

std::string verify(const std::string& suite, int rank, int max_rank, int max_twist, int max_n) {
  VerificationReport report;
  if (suite == "example2") {
    report = check_example2();
  } else if (suite == "tokuyama") {
    report = check_tokuyama(rank);
  } else if (suite == "dimension") {
    report = check_dimension(max_rank, max_twist);
  } else if (suite == "rank2") {
    report = check_rank2(max_twist, max_n);
  } else if (suite == "normalization") {
    std::vector<std::pair<int, std::vector<int>>> grid;
    for (int r = 2; r <= max_rank; ++r) {
      for (auto& tw : twist_grid(r, max_twist)) grid.emplace_back(r, std::move(tw));
    }
    report = check_normalization(grid, max_n);
  } else {
    throw py::value_error("unknown suite: " + suite);
  }
  return report.to_json().dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Local parts of type D Weyl group multiple Dirichlet series";

  m.def("local_part_json", &local_part_json, py::arg("rank"), py::arg("twist"), py::arg("n") = 1,
        py::arg("weight") = py::none(), py::arg("jobs") = 0u, py::call_guard<py::gil_scoped_release>());
  m.def("coefficient", &coefficient, py::arg("rank"), py::arg("twist"), py::arg("n"), py::arg("weight"));
  m.def("count_patterns", &count_patterns, py::arg("rank"), py::arg("twist"), py::arg("weight") = py::none());
  m.def("list_patterns", &list_patterns, py::arg("rank"), py::arg("twist"), py::arg("weight") = py::none());
  m.def("explain", &explain, py::arg("pattern"), py::arg("twist"), py::arg("n") = 1);
  m.def("verify_json", &verify, py::arg("suite"), py::arg("rank") = 4, py::arg("max_rank") = 4,
        py::arg("max_twist") = 2, py::arg("max_n") = 4, py::call_guard<py::gil_scoped_release>());
  m.def(
      "weyl_dimension",
      [](const std::vector<int>& m_coeffs) {
        const auto hw = HighestWeight::from_m(m_coeffs);
        return py::int_(py::str(weyl_dimension(RootSystemD(hw.rank()), hw).str()));
      },
      py::arg("m"));
  m.def(
      "positive_roots", [](int rank) { return RootSystemD(rank).positive_roots(); }, py::arg("rank"));

  m.attr("__version__") = "0.1.0";
}
