// Command-line surface for the exchanged 3-ary n-cube library: graph export,
// brute-force metrics, routing queries, construction verification sweeps,
// and fault experiments.
//
// Exit codes: 0 success/PASS, 1 verification failure, 2 usage error,
// 3 resource budget exceeded.

#include <CLI11.hpp>
#include <algorithm>
#include <array>
#include <chrono>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <map>
#include <random>
#include <set>
#include <string>

#include "e3c/oracles.hpp"

using json = nlohmann::ordered_json;
using namespace e3c;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json params_json(const E3CParams& p) {
    return json{{"r", p.r}, {"s", p.s}, {"t", p.t}, {"n", p.n()}};
}

json paths_json(const E3CParams& p, const std::vector<EPath>& paths) {
    json out = json::array();
    for (const auto& path : paths) {
        json jp = json::array();
        for (const auto& w : path) jp.push_back(vertex_to_string(p, w));
        out.push_back(std::move(jp));
    }
    return out;
}

void emit(const json& doc, const std::string& output) {
    if (output.empty()) {
        std::cout << doc.dump(2) << "\n";
    } else {
        std::ofstream file(output);
        if (!file) throw std::runtime_error("cannot open " + output);
        file << doc.dump(2) << "\n";
    }
}

std::ostream& open_sink(std::ofstream& file, const std::string& output) {
    if (output.empty()) return std::cout;
    file.open(output);
    if (!file) throw std::runtime_error("cannot open " + output);
    return file;
}

// Undirected edge list with each edge listed once, lexicographically smaller
// flat string first; rows themselves sorted for reproducible output.
std::vector<std::tuple<std::string, std::string, EdgeClass>> edge_rows(
    const E3CParams& p) {
    std::vector<std::tuple<std::string, std::string, EdgeClass>> rows;
    for (long long i = 0; i < p.vertex_count(); ++i) {
        auto u = vertex_from_index(p, i);
        auto us = vertex_to_string(p, u);
        for (const auto& [w, cls] : e3c_neighbors(p, u)) {
            auto ws = vertex_to_string(p, w);
            if (us < ws) rows.emplace_back(us, ws, cls);
        }
    }
    std::sort(rows.begin(), rows.end());
    return rows;
}

int cmd_gen(const E3CParams& p, const std::string& format,
            const std::string& output) {
    std::ofstream file;
    std::ostream& os = open_sink(file, output);
    auto rows = edge_rows(p);
    if (format == "edge-list") {
        for (const auto& [us, ws, cls] : rows)
            os << us << " " << ws << " " << edge_class_name(cls) << "\n";
    } else if (format == "dot") {
        static const std::map<EdgeClass, const char*> color{
            {EdgeClass::E0, "black"},
            {EdgeClass::E1, "red"},
            {EdgeClass::E2, "green"},
            {EdgeClass::E3, "blue"}};
        os << "graph e3c {\n";
        for (const auto& [us, ws, cls] : rows)
            os << "  \"" << us << "\" -- \"" << ws << "\" [color="
               << color.at(cls) << "];\n";
        os << "}\n";
    } else {
        throw usage_error("unknown format: " + format);
    }
    return kExitOk;
}

SweepMode make_mode(const std::string& mode, std::uint64_t seed,
                    long long trials) {
    if (mode == "exhaustive") return SweepMode::Exhaustive();
    if (mode == "sampled") {
        if (trials <= 0)
            throw usage_error("sampled mode requires --trials > 0");
        return SweepMode::Sampled(seed, trials);
    }
    throw usage_error("unknown mode: " + mode);
}

int cmd_metrics(const E3CParams& p, const SweepMode& mode, long long budget,
                const std::string& output) {
    auto start = std::chrono::steady_clock::now();
    auto rep = graph_metrics(p, mode, budget);
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    json hist = json::object();
    for (const auto& [deg, count] : rep.degree_histogram)
        hist[std::to_string(deg)] = count;
    json doc{
        {"params", params_json(p)},
        {"vertices", rep.vertices},
        {"edges", rep.edges},
        {"diameter",
         {{"value", rep.diameter},
          {"witness",
           {vertex_to_string(p, rep.diameter_u),
            vertex_to_string(p, rep.diameter_v)}}}},
        {"min_degree",
         {{"value", rep.min_degree},
          {"witness", vertex_to_string(p, rep.min_degree_vertex)}}},
        {"degree_histogram", hist},
        {"min_pair_connectivity",
         {{"value", rep.min_connectivity},
          {"witness",
           {vertex_to_string(p, rep.connectivity_u),
            vertex_to_string(p, rep.connectivity_v)}}}},
        {"mode", rep.connectivity_exhaustive ? "exhaustive" : "sampled"},
        {"seed", rep.seed},
        {"wall_time_ms", elapsed},
    };
    emit(doc, output);
    return kExitOk;
}

// Routing accepts unordered parameters: the query is transported through the
// role relabeling onto the normalized graph, constructed there, and pulled
// back; the pulled-back system is re-checked for validity and disjointness.
int cmd_route(int r, int s, int t, const std::string& us,
              const std::string& vs, const std::string& output) {
    E3CParams given(r, s, t);
    auto u = vertex_from_string(given, us);
    auto v = vertex_from_string(given, vs);
    if (u == v) throw usage_error("endpoints must be distinct");

    // Choose the role permutation sorting (r, s, t); identity when already
    // sorted, so the normalized report is stable.
    std::array<int, 3> dims{r, s, t};
    std::array<int, 3> roles{0, 1, 2};
    std::stable_sort(roles.begin(), roles.end(),
                     [&](int a, int b) { return dims[static_cast<std::size_t>(
                                                    a)] <
                                                dims[static_cast<std::size_t>(
                                                    b)]; });
    bool normalized = roles != std::array<int, 3>{0, 1, 2};
    auto iso = block_isomorphism(given, roles);
    E3CParams norm = iso.image_params();

    auto sys = construct_path_system(norm, iso.map(u), iso.map(v));
    std::vector<EPath> paths;
    for (const auto& path : sys.paths) {
        EPath back;
        for (const auto& w : path) back.push_back(iso.unmap(w));
        paths.push_back(std::move(back));
    }
    // Re-validate the pulled-back system in the original graph.
    std::set<E3CVertex> interior;
    for (const auto& path : paths) {
        if (path.front() != u || path.back() != v)
            throw construction_error("transported path has wrong endpoints");
        for (std::size_t i = 1; i < path.size(); ++i) {
            auto nbs = e3c_neighbors(given, path[i - 1]);
            if (!std::any_of(nbs.begin(), nbs.end(), [&](const auto& e) {
                    return e.first == path[i];
                }))
                throw construction_error("transported path has a non-edge");
        }
        for (std::size_t i = 1; i + 1 < path.size(); ++i)
            if (!interior.insert(path[i]).second)
                throw construction_error("transported paths intersect");
    }
    json doc{
        {"params", params_json(given)},
        {"source", us},
        {"target", vs},
        {"case", {{"index", sys.label.lemma}, {"subcase", sys.label.subcase}}},
        {"bound", sys.label.bound},
        {"path_count", paths.size()},
        {"paths", paths_json(given, paths)},
    };
    if (normalized)
        doc["normalized"] = {
            {"params", params_json(norm)},
            {"block_roles", roles},
        };
    emit(doc, output);
    return kExitOk;
}

int cmd_verify(const E3CParams& p, int lemma_filter, long long budget,
               int corrupt_bounds, const std::string& output) {
    long long nv = p.vertex_count();
    if (nv * (nv - 1) > budget)
        throw resource_error("pair count exceeds --budget");
    struct Tally {
        long long pairs = 0;
        int max_length = 0;
        int bound = 0;
        long long violations = 0;
    };
    std::map<std::pair<int, int>, Tally> tallies;
    long long total_pairs = 0, total_violations = 0;
    for (long long i = 0; i < nv; ++i) {
        auto u = vertex_from_index(p, i);
        for (long long j = 0; j < nv; ++j) {
            if (i == j) continue;
            auto v = vertex_from_index(p, j);
            auto label = classify_pair(p, u, v);
            if (lemma_filter != 0 && label.lemma != lemma_filter) continue;
            // The check bound may be artificially lowered (test fixture) to
            // exercise the failure path.
            int check_bound = label.bound - corrupt_bounds;
            auto& tally = tallies[{label.lemma, label.subcase}];
            tally.bound = check_bound;
            ++tally.pairs;
            ++total_pairs;
            try {
                auto sys = construct_path_system(p, u, v);
                std::set<E3CVertex> interior;
                bool bad = static_cast<int>(sys.paths.size()) != 2 * p.r + 2;
                for (const auto& path : sys.paths) {
                    int len = static_cast<int>(path.size()) - 1;
                    tally.max_length = std::max(tally.max_length, len);
                    if (len > check_bound) bad = true;
                    for (std::size_t k = 1; k + 1 < path.size(); ++k)
                        if (!interior.insert(path[k]).second) bad = true;
                }
                if (bad) {
                    ++tally.violations;
                    ++total_violations;
                }
            } catch (const construction_error&) {
                ++tally.violations;
                ++total_violations;
            }
        }
    }
    json cases = json::array();
    for (const auto& [key, tally] : tallies)
        cases.push_back(json{{"case", key.first},
                             {"subcase", key.second},
                             {"pairs", tally.pairs},
                             {"max_length", tally.max_length},
                             {"bound", tally.bound},
                             {"violations", tally.violations}});
    json doc{{"params", params_json(p)},
             {"pairs_checked", total_pairs},
             {"violations", total_violations},
             {"cases", cases}};
    emit(doc, output);
    return total_violations == 0 ? kExitOk : kExitVerification;
}

int cmd_fault(const E3CParams& p, int f, const SweepMode& mode,
              long long pairs, long long budget, const std::string& output) {
    int min_degree = 2 * p.r + 2;
    if (f < 0) f = 2 * p.r + 1;
    if (f > min_degree - 1)
        throw usage_error("fault count must be at most min degree - 1");
    int n = p.n();
    auto w = fault_witness(p);
    auto witness_distance = bfs_distance(p, w.u, w.v, w.faults);
    if (!witness_distance)
        throw construction_error("witness fault set disconnected the pair");

    // Observed maximum: fault sweep on the witness pair, plus seeded random
    // pairs when requested.
    int observed = *witness_distance;
    bool disconnected = false;
    json sweeps = json::array();
    auto run_sweep = [&](const E3CVertex& a, const E3CVertex& b) {
        auto res = fault_distance_max(p, a, b, f, mode, budget);
        disconnected = disconnected || res.disconnected;
        observed = std::max(observed, res.max_distance);
        sweeps.push_back(json{{"pair",
                               {vertex_to_string(p, a),
                                vertex_to_string(p, b)}},
                              {"max_distance", res.max_distance},
                              {"disconnected", res.disconnected}});
    };
    run_sweep(w.u, w.v);
    if (pairs > 0) {
        std::mt19937_64 rng(mode.seed);
        std::uniform_int_distribution<long long> pick(0,
                                                      p.vertex_count() - 1);
        for (long long k = 0; k < pairs; ++k) {
            long long i = pick(rng), j = pick(rng);
            if (i == j) continue;
            run_sweep(vertex_from_index(p, i), vertex_from_index(p, j));
        }
    }
    auto wide = wide_upper_from_router(
        p, mode.exhaustive && p.vertex_count() <= 81
               ? SweepMode::Exhaustive()
               : SweepMode::Sampled(mode.seed,
                                    mode.trials > 0 ? mode.trials : 2000));
    bool pass = !disconnected && n + 3 <= *witness_distance &&
                *witness_distance <= observed && observed <= n + 5 &&
                wide.max_length <= n + 5;
    json doc{{"params", params_json(p)},
             {"fault_count", f},
             {"witness",
              {{"source", vertex_to_string(p, w.u)},
               {"target", vertex_to_string(p, w.v)},
               {"faults", [&] {
                    json jf = json::array();
                    for (const auto& x : w.faults)
                        jf.push_back(vertex_to_string(p, x));
                    return jf;
                }()},
               {"distance", *witness_distance}}},
             {"observed_max", observed},
             {"sweeps", sweeps},
             {"wide_upper", wide.max_length},
             {"mode", mode.exhaustive ? "exhaustive" : "sampled"},
             {"seed", mode.seed},
             {"verdict", pass ? "PASS" : "FAIL"}};
    emit(doc, output);
    return pass ? kExitOk : kExitVerification;
}

int cmd_connectivity(int r, int s, int t, const std::string& us,
                     const std::string& vs, const std::string& output) {
    E3CParams p(r, s, t);
    auto u = vertex_from_string(p, us);
    auto v = vertex_from_string(p, vs);
    if (u == v) throw usage_error("endpoints must be distinct");
    auto res = pair_connectivity(p, u, v);
    json doc{{"params", params_json(p)},
             {"source", us},
             {"target", vs},
             {"connectivity", res.count},
             {"paths", paths_json(p, res.paths)}};
    emit(doc, output);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exchanged 3-ary n-cube toolkit"};
    app.require_subcommand(1);

    int r = 1, s = 1, t = 1;
    std::string u_str, v_str, output;
    std::string format = "edge-list";
    std::string mode = "exhaustive";
    std::uint64_t seed = 0;
    long long trials = 0, budget = 10'000'000, pairs = 0;
    int lemma = 0, fault_count = -1, corrupt_bounds = 0;

    auto add_params = [&](CLI::App* cmd) {
        cmd->add_option("r", r, "first block length")->required();
        cmd->add_option("s", s, "second block length")->required();
        cmd->add_option("t", t, "third block length")->required();
        cmd->add_option("--output", output, "write to file instead of stdout");
    };
    auto add_mode = [&](CLI::App* cmd) {
        cmd->add_option("--mode", mode,
                        "sweep mode: exhaustive or sampled");
        cmd->add_option("--seed", seed, "seed for sampled mode");
        cmd->add_option("--trials", trials, "trial count for sampled mode");
        cmd->add_option("--budget", budget, "work budget before refusing");
    };

    auto* gen = app.add_subcommand("gen", "export the graph");
    add_params(gen);
    gen->add_option("--format", format, "edge-list or dot");

    auto* metrics =
        app.add_subcommand("metrics", "brute-force metric report");
    add_params(metrics);
    add_mode(metrics);

    auto* route = app.add_subcommand("route", "construct a path system");
    add_params(route);
    route->add_option("u", u_str, "source vertex")->required();
    route->add_option("v", v_str, "target vertex")->required();

    auto* verify =
        app.add_subcommand("verify", "verify constructions against bounds");
    add_params(verify);
    verify->add_option("--lemma", lemma,
                       "restrict the sweep to one case index");
    verify->add_option("--budget", budget, "maximum pair count");
    verify
        ->add_option("--corrupt-bounds", corrupt_bounds,
                     "test fixture: tighten every bound by this amount")
        ->group("");  // hidden

    auto* fault = app.add_subcommand("fault", "fault distance experiment");
    add_params(fault);
    add_mode(fault);
    fault->add_option("--faults", fault_count,
                      "deleted vertex count (default 2r+1)");
    fault->add_option("--pairs", pairs, "additional seeded random pairs");

    auto* connectivity =
        app.add_subcommand("connectivity", "pair connectivity oracle");
    add_params(connectivity);
    connectivity->add_option("u", u_str, "source vertex")->required();
    connectivity->add_option("v", v_str, "target vertex")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (r < 1 || s < 1 || t < 1)
            throw usage_error("block lengths must be at least 1");
        if (gen->parsed()) return cmd_gen(E3CParams(r, s, t), format, output);
        if (metrics->parsed())
            return cmd_metrics(E3CParams(r, s, t),
                               make_mode(mode, seed, trials), budget, output);
        if (route->parsed()) return cmd_route(r, s, t, u_str, v_str, output);
        if (verify->parsed()) {
            E3CParams p(r, s, t);
            if (!(p.r <= p.s && p.s <= p.t))
                throw usage_error("verify requires r <= s <= t");
            return cmd_verify(p, lemma, budget, corrupt_bounds, output);
        }
        if (fault->parsed()) {
            E3CParams p(r, s, t);
            if (!(p.r <= p.s && p.s <= p.t))
                throw usage_error("fault requires r <= s <= t");
            return cmd_fault(p, fault_count, make_mode(mode, seed, trials),
                             pairs, budget, output);
        }
        if (connectivity->parsed())
            return cmd_connectivity(r, s, t, u_str, v_str, output);
        throw usage_error("no subcommand given");
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const parse_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const codec_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const domain_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const resource_error& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return kExitResource;
    } catch (const construction_error& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return kExitVerification;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerification;
    }
}
