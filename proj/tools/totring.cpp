// totring: build finite rings, inspect their total graphs, construct
// verified Hamiltonian cycles, and solve exact domination.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <totring/corpus.hpp>
#include <totring/dominate.hpp>
#include <totring/hamilton.hpp>
#include <totring/parse.hpp>
#include <totring/selfcheck.hpp>
#include <totring/total_graph.hpp>
#include <totring/version.hpp>

using namespace totring;
using ojson = nlohmann::ordered_json;
using clock_type = std::chrono::steady_clock;

namespace {

struct GlobalOpts {
    std::uint64_t max_order = 4096;
    bool slow = false;
    bool parallel = false;
    bool json = false;

    MakeOptions make() const { return MakeOptions{max_order, true}; }
    SolveOptions solve() const {
        SolveOptions s;
        s.slow = slow;
        return s;
    }
};

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const order_guard_error*>(&e)) return 3;
    if (dynamic_cast<const solve_guard_error*>(&e)) return 3;
    if (dynamic_cast<const syntax_error*>(&e)) return 2;
    if (dynamic_cast<const spec_error*>(&e)) return 2;
    if (dynamic_cast<const invalid_input_error*>(&e)) return 2;
    return 1;
}

ojson report_shell(const std::string& command, const std::string& ring_text, const GlobalOpts& g) {
    ojson rep;
    rep["schema"] = kReportSchema;
    rep["version"] = kVersion;
    rep["command"] = command;
    if (!ring_text.empty()) rep["ring"] = ring_text;
    rep["config"] = {{"max_order", g.max_order}, {"slow", g.slow}, {"parallel", g.parallel}};
    return rep;
}

void emit(ojson& rep, const GlobalOpts& g, clock_type::time_point t0) {
    auto ms = std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
    rep["timing"] = {{"elapsed_ms", ms}};
    if (g.json) {
        std::cout << rep.dump(2) << "\n";
        return;
    }
    // compact human rendering of the same report
    std::cout << rep["command"].get<std::string>();
    if (rep.contains("ring")) std::cout << " " << rep["ring"].get<std::string>();
    std::cout << "\n";
    if (rep.contains("results"))
        std::cout << rep["results"].dump(2) << "\n";
    if (rep.contains("errors"))
        for (const auto& e : rep["errors"])
            std::cout << "error: " << e.get<std::string>() << "\n";
}

ojson shape_json(const Ring& r) {
    auto shape = semisimple_shape(r);
    if (!shape.known) return "unknown";
    ojson arr = ojson::array();
    for (auto [n, q] : shape.factors) arr.push_back({n, q});
    return arr;
}

ojson profile_json(const ComponentProfile& p) {
    ojson arr = ojson::array();
    for (const auto& e : p.entries) {
        ojson j;
        j["kind"] = e.kind == ComponentProfile::Kind::Complete
                        ? "complete"
                        : e.kind == ComponentProfile::Kind::Biclique ? "biclique" : "other";
        j["size"] = e.size;
        j["count"] = e.count;
        arr.push_back(std::move(j));
    }
    return arr;
}

ojson graph_metrics_json(const Ring& r, const TotalGraph& g) {
    ojson m;
    m["order"] = r.order;
    m["zsize"] = r.zero_divisors().size();
    m["connected"] = is_connected(g);
    auto d = diameter(g);
    if (d) m["diameter"] = *d;
    else m["diameter"] = "infinite";
    bool regular = true;
    for (auto deg : g.degree)
        if (deg != g.degree[0]) { regular = false; break; }
    m["regular"] = regular;
    if (regular) m["degree"] = g.degree.empty() ? 0 : g.degree[0];
    m["eulerian"] = is_eulerian(g);
    m["profile"] = profile_json(component_profile(g));
    return m;
}

std::vector<std::string> labels_of(const Ring& r, const std::vector<elem>& ids) {
    std::vector<std::string> out;
    out.reserve(ids.size());
    for (elem x : ids) out.push_back(r.label(x));
    return out;
}

int run_analyze(const std::string& expr, const GlobalOpts& g) {
    auto t0 = clock_type::now();
    ojson rep = report_shell("analyze", expr, g);
    Ring r = make_ring(parse_ring_expr(expr), g.make());
    TotalGraph tg = build_total_graph(r);
    ojson res;
    res["order"] = r.order;
    res["char"] = r.characteristic;
    res["zsize"] = r.zero_divisors().size();
    res["units"] = r.units().size();
    res["radical_size"] = r.radical().size();
    res["local"] = is_local(r);
    res["shape"] = shape_json(r);
    res["connected"] = is_connected(tg);
    auto d = diameter(tg);
    if (d) res["diameter"] = *d;
    else res["diameter"] = "infinite";
    res["eulerian"] = is_eulerian(tg);
    res["profile"] = profile_json(component_profile(tg));
    rep["results"] = std::move(res);
    emit(rep, g, t0);
    return 0;
}

int run_graph(const std::string& expr, const std::string& dot_path, const GlobalOpts& g) {
    auto t0 = clock_type::now();
    ojson rep = report_shell("graph", expr, g);
    Ring r = make_ring(parse_ring_expr(expr), g.make());
    TotalGraph tg = build_total_graph(r);
    rep["results"] = graph_metrics_json(r, tg);
    if (!dot_path.empty()) {
        export_dot_file(tg, dot_path);
        rep["results"]["dot"] = dot_path;
    }
    emit(rep, g, t0);
    return 0;
}

int run_hamilton(const std::string& expr, const std::string& overlay_path, const GlobalOpts& g) {
    auto t0 = clock_type::now();
    ojson rep = report_shell("hamilton", expr, g);
    Ring r = make_ring(parse_ring_expr(expr), g.make());
    auto ham = ham_cycle(r, g.make());
    auto ver = verify_cycle(r, ham.cycle.seq);
    ojson res;
    res["order"] = r.order;
    res["method"] = ham.method;
    res["length"] = ham.cycle.seq.size();
    res["verified"] = ver.ok;
    if (!ver.ok) res["violation"] = ver.violation;
    res["notes"] = ham.notes;
    res["cycle"] = labels_of(r, ham.cycle.seq);
    rep["results"] = std::move(res);
    if (!overlay_path.empty()) {
        TotalGraph tg = build_total_graph(r);
        export_dot_file(tg, overlay_path, &ham.cycle.seq);
        rep["results"]["dot"] = overlay_path;
    }
    emit(rep, g, t0);
    return ver.ok ? 0 : 1;
}

int run_dominate(const std::string& expr, bool f_exact, bool f_bound, bool f_set,
                 bool f_conjecture, const GlobalOpts& g) {
    auto t0 = clock_type::now();
    ojson rep = report_shell("dominate", expr, g);
    Ring r = make_ring(parse_ring_expr(expr), g.make());
    TotalGraph tg = build_total_graph(r);
    const bool everything = !f_exact && !f_bound && !f_set && !f_conjecture;
    ojson res;
    res["order"] = r.order;
    int code = 0;

    if (everything || f_exact) {
        GammaReport gr = gamma_report(r, tg, g.solve(), /*graceful=*/!f_exact);
        if (gr.exact) {
            res["exact"] = *gr.exact;
            res["witness"] = labels_of(r, gr.witness);
            res["witness_verified"] = gr.witness_ok;
            res["lower_bound"] = gr.lower_bound;
        } else {
            res["exact"] = nullptr;
            res["skip_reason"] = gr.skip_reason;
        }
        if (gr.local_formula) res["local_formula"] = *gr.local_formula;
        else res["local_formula"] = "not_local";
        if (gr.profile_gamma) res["profile_gamma"] = *gr.profile_gamma;
        else res["profile_gamma"] = "not_local";
        ojson flags;
        if (gr.within_upper) flags["within_upper"] = *gr.within_upper;
        if (gr.formula_agrees) flags["formula_agrees"] = *gr.formula_agrees;
        if (gr.profile_agrees) flags["profile_agrees"] = *gr.profile_agrees;
        res["flags"] = std::move(flags);
        if (gr.exact && !gr.witness_ok) code = 1;
    }
    if (everything || f_bound || f_exact) {
        auto ub = gamma_upper(r);
        if (ub) res["upper_bound"] = *ub;
        else res["upper_bound"] = "unknown";
    }
    if (f_set) {
        auto d = matrix_dominating_set(r);
        res["set"] = labels_of(r, d.members);
        res["set_size"] = d.members.size();
    }
    if (f_conjecture) {
        auto c = conjecture_check(r, tg, g.solve());
        ojson cj;
        cj["status"] = c.status == ConjectureStatus::Confirmed
                           ? "confirmed"
                           : c.status == ConjectureStatus::Refuted ? "refuted" : "inapplicable";
        if (!c.reason.empty()) cj["reason"] = c.reason;
        if (c.bound) cj["bound"] = *c.bound;
        if (c.exact) cj["exact"] = *c.exact;
        if (!c.witness.empty()) cj["witness"] = labels_of(r, c.witness);
        res["conjecture"] = std::move(cj);
        if (c.status == ConjectureStatus::Refuted) code = 1;
    }
    rep["results"] = std::move(res);
    emit(rep, g, t0);
    return code;
}

int run_quotient(const std::string& expr, const GlobalOpts& g) {
    auto t0 = clock_type::now();
    ojson rep = report_shell("quotient", expr, g);
    Ring r = make_ring(parse_ring_expr(expr), g.make());
    QuotientRing q = quotient_mod_radical(r, g.make());
    bool corr = true;
    for (std::size_t a = 0; a < r.order && corr; ++a)
        for (std::size_t b = 0; b < r.order; ++b) {
            bool in_r = r.is_zero_divisor(r.add(static_cast<elem>(a), static_cast<elem>(b)));
            bool in_q = q.quotient.is_zero_divisor(q.quotient.add(q.project[a], q.project[b]));
            if (in_r != in_q) { corr = false; break; }
        }
    ojson res;
    res["order"] = r.order;
    res["radical_size"] = r.radical().size();
    res["radical"] = labels_of(r, r.radical());
    res["quotient_order"] = q.quotient.order;
    res["quotient_local"] = is_local(q.quotient);
    {
        std::vector<std::string> reps;
        for (elem c : q.section) reps.push_back(r.label(c));
        res["coset_representatives"] = reps;
    }
    res["correspondence_verified"] = corr;
    rep["results"] = std::move(res);
    emit(rep, g, t0);
    return corr ? 0 : 1;
}

int run_check(const std::string& expr, const GlobalOpts& g) {
    auto t0 = clock_type::now();
    ojson rep = report_shell("check", expr, g);
    Ring r = make_ring(parse_ring_expr(expr), g.make());
    CheckOptions copt;
    copt.slow = g.slow;
    copt.parallel = g.parallel;
    copt.make = g.make();
    copt.solve = g.solve();
    auto checks = run_ring_checks(r, copt);
    rep["results"]["order"] = r.order;
    rep["results"]["local"] = is_local(r);
    rep["results"]["checks"] = checks_to_json(checks);
    bool failed = false;
    for (const auto& c : checks)
        if (c.status == "FAIL") failed = true;
    emit(rep, g, t0);
    return failed ? 1 : 0;
}

int run_conjecture(const std::string& expr, const GlobalOpts& g) {
    return run_dominate(expr, false, false, false, true, g);
}

std::vector<CorpusEntry> load_corpus_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_input_error("cannot open corpus file: " + path);
    std::vector<CorpusEntry> out;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        std::size_t b = line.find_last_not_of(" \t\r");
        std::string expr = line.substr(a, b - a + 1);
        CorpusEntry e;
        e.name = expr;
        e.expr = expr;
        e.spec = parse_ring_expr(expr);
        out.push_back(std::move(e));
    }
    if (out.empty()) throw invalid_input_error("corpus file has no ring expressions: " + path);
    return out;
}

int run_selfcheck_cmd(const std::string& corpus_path, const GlobalOpts& g) {
    auto t0 = clock_type::now();
    ojson rep;
    std::vector<CorpusEntry> corpus =
        corpus_path.empty() ? builtin_corpus() : load_corpus_file(corpus_path);
    CheckOptions copt;
    copt.slow = g.slow;
    copt.parallel = g.parallel;
    copt.make = g.make();
    copt.solve = g.solve();
    rep = run_selfcheck(corpus, copt);
    auto ms = std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
    rep["timing"] = {{"elapsed_ms", ms}};
    const auto failures = rep["summary"]["fail"].get<std::size_t>();
    if (g.json) {
        std::cout << rep.dump(2) << "\n";
    } else {
        for (const auto& ring : rep["rings"]) {
            std::cout << ring["name"].get<std::string>() << ":";
            if (ring.contains("checks")) {
                std::size_t p = 0, f = 0, w = 0, s = 0;
                for (const auto& c : ring["checks"]) {
                    auto st = c["status"].get<std::string>();
                    if (st == "PASS") ++p;
                    else if (st == "FAIL") ++f;
                    else if (st == "WARN") ++w;
                    else ++s;
                }
                std::cout << " pass=" << p << " fail=" << f << " warn=" << w << " skip=" << s;
                for (const auto& c : ring["checks"]) {
                    auto st = c["status"].get<std::string>();
                    if (st == "FAIL" || st == "WARN")
                        std::cout << "\n    [" << st << "] " << c["name"].get<std::string>() << ": "
                                  << (c.contains("detail") ? c["detail"].get<std::string>() : "");
                }
            } else {
                std::cout << " " << ring["status"].get<std::string>();
            }
            std::cout << "\n";
        }
        for (const auto& c : rep["cross"]) {
            std::cout << c["name"].get<std::string>() << ": " << c["status"].get<std::string>()
                      << " (" << c["pairs"].get<std::size_t>() << " pairs)";
            if (c.contains("counterexamples"))
                for (const auto& ce : c["counterexamples"])
                    std::cout << "\n    [WARN] " << ce.get<std::string>();
            std::cout << "\n";
        }
        std::cout << "summary: " << rep["summary"].dump() << "\n";
    }
    return failures ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"total graphs of finite rings"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--max-order", g.max_order, "carrier size guard (default 4096)")
        ->envname("TOTRING_MAX_ORDER");
    app.add_flag("--slow", g.slow, "enable long-running exact solves");
    app.add_flag("--parallel", g.parallel, "run corpus entries concurrently");
    app.add_flag("--json", g.json, "machine-readable JSON report");

    std::string expr, dot_path, overlay_path, corpus_path;
    bool f_exact = false, f_bound = false, f_set = false, f_conj = false;

    auto* analyze = app.add_subcommand("analyze", "ring + graph summary");
    analyze->add_option("expr", expr, "ring expression")->required();

    auto* graph = app.add_subcommand("graph", "total graph metrics");
    graph->add_option("expr", expr, "ring expression")->required();
    graph->add_option("--dot", dot_path, "write the graph in DOT format");

    auto* hamilton = app.add_subcommand("hamilton", "construct a verified Hamiltonian cycle");
    hamilton->add_option("expr", expr, "ring expression")->required();
    hamilton->add_option("--emit-edges", overlay_path, "DOT overlay of the cycle on tau(R)");

    auto* dominate = app.add_subcommand("dominate", "domination number report");
    dominate->add_option("expr", expr, "ring expression")->required();
    dominate->add_flag("--exact", f_exact, "exact solver only");
    dominate->add_flag("--bound", f_bound, "shape upper bound only");
    dominate->add_flag("--set", f_set, "explicit first-row dominating set (matrix rings)");
    dominate->add_flag("--conjecture", f_conj, "compare exact value against the shape bound");

    auto* quotient = app.add_subcommand("quotient", "R/J and the coset correspondence");
    quotient->add_option("expr", expr, "ring expression")->required();

    auto* check = app.add_subcommand("check", "run the law matrix on one ring");
    check->add_option("expr", expr, "ring expression")->required();

    auto* conjecture = app.add_subcommand("conjecture", "conjecture status for one ring");
    conjecture->add_option("expr", expr, "ring expression")->required();

    auto* selfcheck = app.add_subcommand("selfcheck", "run the law matrix over the corpus");
    selfcheck->add_option("corpus", corpus_path, "corpus file (one ring expression per line)");

    for (auto* sub : {analyze, graph, hamilton, dominate, quotient, check, conjecture, selfcheck})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        if (analyze->parsed()) return run_analyze(expr, g);
        if (graph->parsed()) return run_graph(expr, dot_path, g);
        if (hamilton->parsed()) return run_hamilton(expr, overlay_path, g);
        if (dominate->parsed()) return run_dominate(expr, f_exact, f_bound, f_set, f_conj, g);
        if (quotient->parsed()) return run_quotient(expr, g);
        if (check->parsed()) return run_check(expr, g);
        if (conjecture->parsed()) return run_conjecture(expr, g);
        if (selfcheck->parsed()) return run_selfcheck_cmd(corpus_path, g);
    } catch (const std::exception& e) {
        ojson rep = report_shell("error", expr, g);
        rep["errors"] = ojson::array({e.what()});
        if (g.json) std::cout << rep.dump(2) << "\n";
        else std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
    return 2;
}
