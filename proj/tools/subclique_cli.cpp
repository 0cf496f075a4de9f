// Command-line front end: generate instances, count exactly, estimate with
// a clique-count guess, run the guess-free search, and sweep benchmark
// families into CSV/JSON reports.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "subclique/baseline.hpp"
#include "subclique/estimator.hpp"
#include "subclique/parallel.hpp"
#include "subclique/search.hpp"

using json = nlohmann::ordered_json;
using namespace subclique;

namespace {

constexpr int kSchemaVersion = 1;

struct CliError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json counts_to_json(const QueryCounts& c) {
    return json{{"degree", c.degree},
                {"neighbor", c.neighbor},
                {"pair", c.pair},
                {"uniform", c.uniform_vertex}};
}

json params_to_json(const Params& p) {
    return json{{"n", p.n},
                {"k", p.k},
                {"mbar", p.mbar},
                {"ckbar", p.ckbar},
                {"eps", p.eps},
                {"eps_bar", p.eps_bar},
                {"delta", p.delta},
                {"delta_bar", p.delta_bar},
                {"theta_deg", p.theta_deg},
                {"tau_c", p.tau_c},
                {"tau_d", p.tau_d},
                {"gamma", p.gamma},
                {"s", p.s},
                {"t", p.t},
                {"s_clamped", p.s_clamped},
                {"t_clamped", p.t_clamped},
                {"typical_attempts", p.typical_attempts()},
                {"exact_route", p.exact_route},
                {"s_const", p.consts.s_const},
                {"q_const", p.consts.q_const},
                {"t_const", p.consts.t_const},
                {"r_const", p.consts.r_const},
                {"tau_c_const", p.consts.tau_c_const},
                {"tau_d_const", p.consts.tau_d_const}};
}

std::vector<std::string> report_flags(const EstimateReport& r) {
    std::vector<std::string> flags;
    if (r.typical_failed) flags.push_back("typical_failed");
    if (r.budget_exceeded) flags.push_back("budget_exceeded");
    if (r.upfront_mode) flags.push_back("upfront_mode");
    if (r.exact_route) flags.push_back("exact_route");
    if (r.search_exhausted) flags.push_back("search_exhausted");
    if (r.no_cliques_detectable) flags.push_back("no_cliques_detectable");
    return flags;
}

json trial_to_json(uint64_t index, const EstimateReport& r, bool timing) {
    json t{{"trial", index},
           {"estimate", r.estimate},
           {"outcome", r.ok() ? "ok" : "fail"},
           {"chi_sum", r.chi_sum},
           {"queries", counts_to_json(r.queries)},
           {"wallclock_ms", timing ? r.wallclock_ms : 0.0}};
    t["q_used"] = r.q_used;
    t["s_used"] = r.s_used;
    t["flags"] = report_flags(r);
    return t;
}

json trajectory_to_json(const std::vector<SearchStep>& steps) {
    json arr = json::array();
    for (const auto& s : steps) {
        arr.push_back(json{{"atilde", s.atilde},
                           {"abar", s.abar},
                           {"ckbar", s.ckbar},
                           {"r", s.r},
                           {"delta_inner", s.delta_inner},
                           {"x_min", s.x_min},
                           {"fails", s.fails},
                           {"stopped", s.stopped}});
    }
    return arr;
}

json summarize(const std::vector<EstimateReport>& reports,
               std::optional<uint64_t> exact, double eps) {
    uint64_t ok_count = 0;
    double mean = 0;
    for (const auto& r : reports) {
        if (r.ok()) {
            ++ok_count;
            mean += r.estimate;
        }
    }
    if (ok_count > 0) mean /= static_cast<double>(ok_count);
    double var = 0;
    for (const auto& r : reports) {
        if (r.ok()) var += (r.estimate - mean) * (r.estimate - mean);
    }
    if (ok_count > 0) var /= static_cast<double>(ok_count);

    json s{{"mean", ok_count ? mean : 0.0},
           {"stdev", ok_count ? std::sqrt(var) : 0.0},
           {"ok_trials", ok_count},
           {"success_rate", 0.0}};
    if (exact) {
        s["exact"] = *exact;
        double rel = 0;
        uint64_t within = 0;
        for (const auto& r : reports) {
            if (!r.ok()) continue;
            const double c = static_cast<double>(*exact);
            if (c > 0) rel += std::abs(r.estimate - c) / c;
            if (std::abs(r.estimate - c) <= eps * c) ++within;
        }
        s["mean_rel_error"] = ok_count ? rel / static_cast<double>(ok_count) : 0.0;
        s["success_rate"] =
            static_cast<double>(within) / static_cast<double>(reports.size());
    } else {
        s["success_rate"] = static_cast<double>(ok_count) /
                            static_cast<double>(std::max<size_t>(1, reports.size()));
    }
    return s;
}

void emit(const json& report, const std::string& path) {
    if (path.empty()) {
        std::cout << report.dump(2) << "\n";
    } else {
        std::ofstream out(path);
        if (!out) throw CliError("cannot open " + path);
        out << report.dump(2) << "\n";
    }
}

double parse_mbar(const std::string& text) {
    if (text == "exact") return -1.0;
    try {
        size_t pos = 0;
        const double v = std::stod(text, &pos);
        if (pos != text.size() || !(v >= 1)) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw CliError("--mbar expects 'exact' or a number >= 1");
    }
}

double effective_mbar(double mbar_opt, const Graph& g, double eps) {
    if (mbar_opt >= 0) return mbar_opt;
    // exact mode: m from the loaded graph, deflated to a conservative
    // underestimate
    return (1.0 - eps / 5.0) * static_cast<double>(g.m());
}

struct CommonOpts {
    std::string graph_path;
    uint32_t k = 3;
    double eps = 0.5;
    double delta = 0.1;
    std::string mbar_text = "exact";
    uint64_t trials = 1;
    uint64_t seed = 1;
    bool with_exact = false;
    bool dry_run = false;
    bool no_timing = false;
    bool no_upfront = false;
    bool lenient = false;
    std::string json_out;
    Constants consts;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool needs_graph = true) {
    if (needs_graph)
        cmd->add_option("--graph", o.graph_path, "edge-list file")->required();
    cmd->add_option("--k", o.k, "clique size")->required();
    cmd->add_option("--eps", o.eps, "approximation parameter");
    cmd->add_option("--mbar", o.mbar_text,
                    "ordered-edge estimate: 'exact' or a value");
    cmd->add_option("--trials", o.trials, "independent runs");
    cmd->add_option("--seed", o.seed, "base RNG seed (trial i uses seed+i)");
    cmd->add_flag("--with-exact", o.with_exact,
                  "also compute the exact count for error columns");
    cmd->add_flag("--dry-run", o.dry_run, "derive parameters only, no queries");
    cmd->add_flag("--no-timing", o.no_timing,
                  "zero wallclock fields for byte-stable reports");
    cmd->add_flag("--no-upfront", o.no_upfront,
                  "keep per-query charging even when q exceeds mbar");
    cmd->add_flag("--lenient", o.lenient, "skip self-loops instead of failing");
    cmd->add_option("--json-out", o.json_out, "write the JSON report here");
    cmd->add_option("--s-const", o.consts.s_const, "S-size slack constant");
    cmd->add_option("--q-const", o.consts.q_const, "loop-length slack constant");
}

json config_to_json(const CommonOpts& o, const char* command) {
    return json{{"command", command},
                {"graph", o.graph_path},
                {"k", o.k},
                {"eps", o.eps},
                {"delta", o.delta},
                {"mbar", o.mbar_text},
                {"trials", o.trials},
                {"seed", o.seed},
                {"with_exact", o.with_exact},
                {"no_upfront", o.no_upfront},
                {"threads", worker_count(o.trials)},
                {"s_const", o.consts.s_const},
                {"q_const", o.consts.q_const}};
}

int cmd_gen(const std::string& family, uint32_t n, uint32_t t, uint64_t m_edges,
            uint64_t seed, const std::string& out_path) {
    Graph g;
    if (family == "path-clique") {
        g = gen_path_plus_clique(n, t);
    } else if (family == "gnm") {
        g = gen_gnm(n, m_edges, seed);
    } else {
        throw CliError("unknown family '" + family + "' (path-clique, gnm)");
    }
    if (out_path.empty()) {
        save_edge_list(g, std::cout);
    } else {
        save_edge_list_file(g, out_path);
    }
    return 0;
}

int cmd_exact(const CommonOpts& o, bool naive_check) {
    const Graph g = load_edge_list_file(
        o.graph_path, o.lenient ? LoadMode::lenient : LoadMode::strict);
    const auto census = count_cliques_exact(g, o.k);
    json report{{"version", kSchemaVersion},
                {"command", "exact"},
                {"graph", o.graph_path},
                {"n", g.n()},
                {"m", g.m()},
                {"k", o.k},
                {"count", census.total}};
    if (naive_check) {
        report["naive_count"] = count_cliques_naive(g, o.k);
        report["naive_matches"] = report["naive_count"] == census.total;
    }
    emit(report, o.json_out);
    return 0;
}

int run_trials(const CommonOpts& o, const Graph& g,
               const std::function<EstimateReport(uint64_t)>& one_trial,
               std::vector<EstimateReport>& out) {
    out.resize(o.trials);
    parallel_for_index(o.trials, [&](uint64_t i) { out[i] = one_trial(i); });
    uint64_t ok = 0;
    for (const auto& r : out) ok += r.ok() ? 1 : 0;
    (void)g;
    return ok == 0 ? 1 : 0;
}

int cmd_estimate(const CommonOpts& o, double ckbar) {
    const Graph g = load_edge_list_file(
        o.graph_path, o.lenient ? LoadMode::lenient : LoadMode::strict);
    const double mbar = effective_mbar(parse_mbar(o.mbar_text), g, o.eps);
    const Params base = derive_params(g.n(), o.k, mbar, ckbar, o.eps, o.delta,
                                      o.seed, o.consts);

    json report{{"version", kSchemaVersion}};
    report["config"] = config_to_json(o, "estimate");
    report["config"]["ckbar"] = ckbar;
    report["params"] = params_to_json(base);
    if (o.dry_run) {
        emit(report, o.json_out);
        return 0;
    }

    std::vector<EstimateReport> reports;
    const int rc = run_trials(o, g, [&](uint64_t i) {
        Params p = base;
        p.seed = o.seed + i;
        p.disable_upfront = o.no_upfront;
        QueryOracle oracle(g);
        return approximate_cliques(oracle, p);
    }, reports);

    json trials = json::array();
    for (uint64_t i = 0; i < reports.size(); ++i)
        trials.push_back(trial_to_json(i, reports[i], !o.no_timing));
    report["trials"] = std::move(trials);

    std::optional<uint64_t> exact;
    if (o.with_exact) exact = count_cliques_exact(g, o.k).total;
    report["summary"] = summarize(reports, exact, o.eps);
    emit(report, o.json_out);
    return rc;
}

int cmd_auto(CommonOpts& o) {
    const Graph g = load_edge_list_file(
        o.graph_path, o.lenient ? LoadMode::lenient : LoadMode::strict);
    const double mbar_opt = parse_mbar(o.mbar_text);

    json report{{"version", kSchemaVersion}};
    report["config"] = config_to_json(o, "auto");
    const double mbar = effective_mbar(mbar_opt, g, o.eps);
    report["config"]["mbar_effective"] = mbar;
    if (mbar >= 1.0) {
        const double upper = std::min(
            std::pow(static_cast<double>(g.n()), static_cast<double>(o.k)),
            std::pow(mbar, static_cast<double>(o.k) / 2.0));
        const SearchConfig cfg = make_search_config(std::max(1.0, upper), o.eps);
        report["search"] = json{{"B", cfg.B},
                                {"ell", cfg.ell},
                                {"eps", cfg.eps},
                                {"eps_user", cfg.eps_user},
                                {"delta_prime", cfg.delta_prime},
                                {"r_search", cfg.r_search},
                                {"delta_inner", cfg.delta_inner}};
    }
    if (o.dry_run) {
        emit(report, o.json_out);
        return 0;
    }

    std::vector<EstimateReport> reports;
    const int rc = run_trials(o, g, [&](uint64_t i) {
        QueryOracle oracle(g);
        return approximate_cliques_auto(oracle, o.k, o.eps, mbar_opt,
                                        o.seed + i, o.consts, o.no_upfront);
    }, reports);

    json trials = json::array();
    for (uint64_t i = 0; i < reports.size(); ++i) {
        json t = trial_to_json(i, reports[i], !o.no_timing);
        t["trajectory"] = trajectory_to_json(reports[i].trajectory);
        trials.push_back(std::move(t));
    }
    report["trials"] = std::move(trials);

    std::optional<uint64_t> exact;
    if (o.with_exact) exact = count_cliques_exact(g, o.k).total;
    report["summary"] = summarize(reports, exact, o.eps);
    emit(report, o.json_out);
    return rc;
}

int cmd_bench(CommonOpts& o, const std::string& family, uint32_t n,
              const std::vector<uint32_t>& t_list,
              const std::vector<uint64_t>& m_list, double ckbar_frac,
              const std::string& csv_out) {
    struct Row {
        std::string label;
        uint32_t n;
        uint64_t m;
        uint64_t c_k;
        double mean_queries;
        double mean_rel_error;
        double success_rate;
        double target;
    };

    std::vector<Graph> graphs;
    std::vector<std::string> labels;
    if (family == "path-clique") {
        for (uint32_t t : t_list) {
            graphs.push_back(gen_path_plus_clique(n, t));
            labels.push_back("path-clique/t=" + std::to_string(t));
        }
    } else if (family == "gnm") {
        for (uint64_t m_edges : m_list) {
            graphs.push_back(gen_gnm(n, m_edges, o.seed));
            labels.push_back("gnm/m=" + std::to_string(m_edges));
        }
    } else {
        throw CliError("unknown family '" + family + "' (path-clique, gnm)");
    }
    if (graphs.empty()) throw CliError("no instances");

    json report{{"version", kSchemaVersion}};
    report["config"] = config_to_json(o, "bench");
    report["config"]["family"] = family;
    report["config"]["n"] = n;
    report["config"]["ckbar_frac"] = ckbar_frac;

    if (o.dry_run) {
        json rows = json::array();
        for (size_t i = 0; i < graphs.size(); ++i) {
            const auto census = count_cliques_exact(graphs[i], o.k);
            const double mbar = effective_mbar(parse_mbar(o.mbar_text), graphs[i], o.eps);
            const double ckbar =
                std::max(1.0, ckbar_frac * static_cast<double>(census.total));
            const Params p = derive_params(graphs[i].n(), o.k, mbar, ckbar,
                                           o.eps, o.delta, o.seed, o.consts);
            rows.push_back(json{{"instance", labels[i]},
                                {"c_k", census.total},
                                {"params", params_to_json(p)}});
        }
        report["instances"] = std::move(rows);
        emit(report, o.json_out);
        return 0;
    }

    std::vector<Row> rows;
    for (size_t i = 0; i < graphs.size(); ++i) {
        const Graph& g = graphs[i];
        const auto census = count_cliques_exact(g, o.k);
        if (census.total == 0)
            throw CliError("instance " + labels[i] + " has no " +
                           std::to_string(o.k) + "-cliques");
        const double mbar = effective_mbar(parse_mbar(o.mbar_text), g, o.eps);
        const double ckbar =
            std::max(1.0, ckbar_frac * static_cast<double>(census.total));
        const Params base =
            derive_params(g.n(), o.k, mbar, ckbar, o.eps, o.delta, o.seed, o.consts);

        std::vector<EstimateReport> reports(o.trials);
        parallel_for_index(o.trials, [&](uint64_t t) {
            Params p = base;
            p.seed = o.seed + t;
            p.disable_upfront = o.no_upfront;
            QueryOracle oracle(g);
            reports[t] = approximate_cliques(oracle, p);
        });

        Row row;
        row.label = labels[i];
        row.n = g.n();
        row.m = g.m();
        row.c_k = census.total;
        double queries = 0, rel = 0;
        uint64_t within = 0;
        for (const auto& r : reports) {
            queries += static_cast<double>(r.queries.total());
            const double c = static_cast<double>(census.total);
            if (r.ok() && std::abs(r.estimate - c) <= o.eps * c) ++within;
            if (r.ok()) rel += std::abs(r.estimate - c) / c;
        }
        row.mean_queries = queries / static_cast<double>(o.trials);
        row.mean_rel_error = rel / static_cast<double>(o.trials);
        row.success_rate = static_cast<double>(within) / static_cast<double>(o.trials);
        const double c = static_cast<double>(census.total);
        row.target = static_cast<double>(g.n()) /
                         std::pow(c, 1.0 / static_cast<double>(o.k)) +
                     std::pow(static_cast<double>(g.m()),
                              static_cast<double>(o.k) / 2.0) /
                         c;
        rows.push_back(row);
    }

    json jrows = json::array();
    for (const auto& r : rows) {
        jrows.push_back(json{{"instance", r.label},
                             {"n", r.n},
                             {"m", r.m},
                             {"c_k", r.c_k},
                             {"trials", o.trials},
                             {"mean_queries", r.mean_queries},
                             {"mean_rel_error", r.mean_rel_error},
                             {"success_rate", r.success_rate},
                             {"target", r.target},
                             {"fitted_const", r.mean_queries / r.target}});
    }
    report["rows"] = std::move(jrows);
    emit(report, o.json_out);

    if (!csv_out.empty()) {
        std::ofstream csv(csv_out);
        if (!csv) throw CliError("cannot open " + csv_out);
        csv << "instance,n,m,k,c_k,trials,mean_queries,mean_rel_error,"
               "success_rate,target,fitted_const\n";
        for (const auto& r : rows) {
            csv << r.label << "," << r.n << "," << r.m << "," << o.k << ","
                << r.c_k << "," << o.trials << "," << r.mean_queries << ","
                << r.mean_rel_error << "," << r.success_rate << "," << r.target
                << "," << r.mean_queries / r.target << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sublinear k-clique count estimation"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a benchmark graph");
    std::string gen_family = "path-clique", gen_out;
    uint32_t gen_n = 100, gen_t = 8;
    uint64_t gen_m = 0, gen_seed = 1;
    gen->add_option("--family", gen_family, "path-clique or gnm");
    gen->add_option("--n", gen_n, "vertex count")->required();
    gen->add_option("--t", gen_t, "clique size (path-clique)");
    gen->add_option("--m-edges", gen_m, "undirected edge count (gnm)");
    gen->add_option("--seed", gen_seed, "generator seed");
    gen->add_option("--out", gen_out, "output edge-list path");

    // exact
    auto* exact = app.add_subcommand("exact", "exact clique census");
    CommonOpts exact_opts;
    bool naive_check = false;
    add_common(exact, exact_opts);
    exact->add_flag("--naive-check", naive_check,
                    "cross-check against subset enumeration (n <= 30)");

    // estimate
    auto* estimate = app.add_subcommand("estimate", "query-model estimator");
    CommonOpts est_opts;
    double ckbar = 0;
    add_common(estimate, est_opts);
    estimate->add_option("--delta", est_opts.delta, "failure probability");
    estimate->add_option("--ckbar", ckbar, "clique-count guess")->required();

    // auto
    auto* auto_cmd = app.add_subcommand("auto", "guess-free search estimator");
    CommonOpts auto_opts;
    add_common(auto_cmd, auto_opts);

    // bench
    auto* bench = app.add_subcommand("bench", "family sweep with CSV output");
    CommonOpts bench_opts;
    std::string bench_family = "path-clique", csv_out;
    uint32_t bench_n = 2000;
    std::vector<uint32_t> t_list;
    std::vector<uint64_t> m_list;
    double ckbar_frac = 0.5;
    add_common(bench, bench_opts, /*needs_graph=*/false);
    bench->add_option("--delta", bench_opts.delta, "failure probability");
    bench->add_option("--family", bench_family, "path-clique or gnm");
    bench->add_option("--n", bench_n, "vertex count per instance");
    bench->add_option("--t-list", t_list, "clique sizes for the path-clique sweep")
        ->delimiter(',');
    bench->add_option("--m-list", m_list, "edge counts for the gnm sweep")
        ->delimiter(',');
    bench->add_option("--ckbar-frac", ckbar_frac,
                      "ckbar as a fraction of the exact count");
    bench->add_option("--csv-out", csv_out, "write per-instance rows as CSV");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (gen->parsed())
            return cmd_gen(gen_family, gen_n, gen_t, gen_m, gen_seed, gen_out);
        if (exact->parsed()) return cmd_exact(exact_opts, naive_check);
        if (estimate->parsed()) return cmd_estimate(est_opts, ckbar);
        if (auto_cmd->parsed()) return cmd_auto(auto_opts);
        if (bench->parsed()) {
            bench_opts.graph_path = "";
            return cmd_bench(bench_opts, bench_family, bench_n, t_list, m_list,
                             ckbar_frac, csv_out);
        }
    } catch (const ParamError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const CliError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
