// Python bindings for the main operations: graph IO, generators, exact
// census, the guess-driven estimator and the guess-free search.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "subclique/baseline.hpp"
#include "subclique/estimator.hpp"
#include "subclique/parallel.hpp"
#include "subclique/search.hpp"

namespace py = pybind11;
using namespace subclique;

namespace {

Constants make_constants(std::optional<double> s_const,
                         std::optional<double> q_const) {
    Constants c;
    if (s_const) c.s_const = *s_const;
    if (q_const) c.q_const = *q_const;
    return c;
}

py::dict counts_dict(const QueryCounts& c) {
    py::dict d;
    d["degree"] = c.degree;
    d["neighbor"] = c.neighbor;
    d["pair"] = c.pair;
    d["uniform"] = c.uniform_vertex;
    return d;
}

py::dict report_dict(const EstimateReport& r) {
    py::dict d;
    d["estimate"] = r.estimate;
    d["outcome"] = r.ok() ? "ok" : "fail";
    d["chi_sum"] = r.chi_sum;
    d["q_used"] = r.q_used;
    d["s_used"] = r.s_used;
    d["queries"] = counts_dict(r.queries);
    d["wallclock_ms"] = r.wallclock_ms;
    py::list flags;
    if (r.typical_failed) flags.append("typical_failed");
    if (r.budget_exceeded) flags.append("budget_exceeded");
    if (r.upfront_mode) flags.append("upfront_mode");
    if (r.exact_route) flags.append("exact_route");
    if (r.search_exhausted) flags.append("search_exhausted");
    if (r.no_cliques_detectable) flags.append("no_cliques_detectable");
    d["flags"] = flags;
    return d;
}

std::vector<py::dict> run_trials(
    uint64_t trials, const std::function<EstimateReport(uint64_t)>& one) {
    std::vector<EstimateReport> reports(trials);
    {
        py::gil_scoped_release release;
        parallel_for_index(trials, [&](uint64_t i) { reports[i] = one(i); });
    }
    std::vector<py::dict> out;
    out.reserve(trials);
    for (const auto& r : reports) out.push_back(report_dict(r));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "sublinear k-clique count estimation";

    py::class_<Graph>(m, "Graph")
        .def_property_readonly("n", &Graph::n)
        .def_property_readonly("m", &Graph::m, "ordered edge count (sum of degrees)")
        .def("degree", &Graph::degree, py::arg("v"))
        .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
        .def("neighbors",
             [](const Graph& g, VertexId v) {
                 const auto nb = g.neighbors_of(v);
                 return std::vector<VertexId>(nb.begin(), nb.end());
             },
             py::arg("v"))
        .def("save", [](const Graph& g, const std::string& path) {
            save_edge_list_file(g, path);
        })
        .def("__repr__", [](const Graph& g) {
            std::ostringstream s;
            s << "Graph(n=" << g.n() << ", m=" << g.m() << ")";
            return s.str();
        });

    m.def("load_graph",
          [](const std::string& path, bool lenient) {
              return load_edge_list_file(
                  path, lenient ? LoadMode::lenient : LoadMode::strict);
          },
          py::arg("path"), py::arg("lenient") = false,
          "load an edge-list file");

    m.def("parse_graph",
          [](const std::string& text, bool lenient) {
              std::istringstream in(text);
              return load_edge_list(in,
                                    lenient ? LoadMode::lenient : LoadMode::strict);
          },
          py::arg("text"), py::arg("lenient") = false,
          "parse an edge list from a string");

    m.def("gen_path_plus_clique", &gen_path_plus_clique, py::arg("n"),
          py::arg("t"), "disjoint path on n-t vertices plus a t-clique");
    m.def("gen_gnm", &gen_gnm, py::arg("n"), py::arg("m_edges"), py::arg("seed"),
          "uniform simple graph with exactly m_edges undirected edges");

    m.def("count_cliques_exact",
          [](const Graph& g, uint32_t k) {
              const auto census = count_cliques_exact(g, k);
              py::dict d;
              d["total"] = census.total;
              d["per_vertex"] = census.per_vertex;
              return d;
          },
          py::arg("graph"), py::arg("k"),
          "exact total and per-vertex k-clique counts");

    m.def("count_cliques_naive",
          [](const Graph& g, uint32_t k) { return count_cliques_naive(g, k); },
          py::arg("graph"), py::arg("k"),
          "subset-enumeration cross check (n <= 30)");

    m.def(
        "estimate",
        [](const Graph& g, uint32_t k, double eps, double delta, double ckbar,
           std::optional<double> mbar, uint64_t seed, uint64_t trials,
           std::optional<double> s_const, std::optional<double> q_const,
           bool no_upfront) {
            const double mbar_eff =
                mbar ? *mbar
                     : (1.0 - eps / 5.0) * static_cast<double>(g.m());
            const Constants consts = make_constants(s_const, q_const);
            const Params base =
                derive_params(g.n(), k, mbar_eff, ckbar, eps, delta, seed, consts);
            return run_trials(trials, [&](uint64_t i) {
                Params p = base;
                p.seed = seed + i;
                p.disable_upfront = no_upfront;
                QueryOracle oracle(g);
                return approximate_cliques(oracle, p);
            });
        },
        py::arg("graph"), py::arg("k"), py::arg("eps") = 0.5,
        py::arg("delta") = 0.1, py::arg("ckbar") = 1.0,
        py::arg("mbar") = std::nullopt, py::arg("seed") = 1,
        py::arg("trials") = 1, py::arg("s_const") = std::nullopt,
        py::arg("q_const") = std::nullopt, py::arg("no_upfront") = false,
        "run the estimator; mbar=None computes m and deflates by (1-eps/5)");

    m.def(
        "estimate_auto",
        [](const Graph& g, uint32_t k, double eps, std::optional<double> mbar,
           uint64_t seed, uint64_t trials, std::optional<double> s_const,
           std::optional<double> q_const) {
            const Constants consts = make_constants(s_const, q_const);
            const double mbar_opt = mbar ? *mbar : -1.0;
            return run_trials(trials, [&](uint64_t i) {
                QueryOracle oracle(g);
                return approximate_cliques_auto(oracle, k, eps, mbar_opt,
                                                seed + i, consts);
            });
        },
        py::arg("graph"), py::arg("k"), py::arg("eps") = 0.5,
        py::arg("mbar") = std::nullopt, py::arg("seed") = 1,
        py::arg("trials") = 1, py::arg("s_const") = std::nullopt,
        py::arg("q_const") = std::nullopt,
        "guess-free estimation via the halving search");

    py::register_exception<ParamError>(m, "ParamError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
}
