#include "e3c/oracles.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>

namespace e3c {
namespace {

int index_of(const E3CParams& p, const E3CVertex& u) {
    return static_cast<int>(vertex_to_index(p, u));
}

// BFS distance on a prebuilt adjacency, honoring a deleted-vertex mask.
// Returns -1 when v is unreachable from u.
int bfs_on(const std::vector<std::vector<int>>& adj, int ui, int vi,
           const std::vector<char>& blocked) {
    if (ui == vi) return 0;
    std::vector<int> dist(adj.size(), -1);
    dist[static_cast<std::size_t>(ui)] = 0;
    std::deque<int> frontier{ui};
    while (!frontier.empty()) {
        int cur = frontier.front();
        frontier.pop_front();
        for (int nb : adj[static_cast<std::size_t>(cur)]) {
            if (blocked[static_cast<std::size_t>(nb)]) continue;
            if (dist[static_cast<std::size_t>(nb)] != -1) continue;
            dist[static_cast<std::size_t>(nb)] =
                dist[static_cast<std::size_t>(cur)] + 1;
            if (nb == vi) return dist[static_cast<std::size_t>(nb)];
            frontier.push_back(nb);
        }
    }
    return -1;
}

// Unit-capacity vertex-split max-flow core shared by pair_connectivity.
// Deterministic: augmenting searches are BFS in sorted-adjacency order.
struct FlowEdge {
    int to, cap, orig, rev;
};

struct FlowNet {
    std::vector<std::vector<FlowEdge>> g;
    explicit FlowNet(int nodes) : g(static_cast<std::size_t>(nodes)) {}
    void add(int a, int b, int cap) {
        g[static_cast<std::size_t>(a)].push_back(
            {b, cap, cap,
             static_cast<int>(g[static_cast<std::size_t>(b)].size())});
        g[static_cast<std::size_t>(b)].push_back(
            {a, 0, 0,
             static_cast<int>(g[static_cast<std::size_t>(a)].size()) - 1});
    }
    // One BFS augmenting step; returns false when the sink is unreachable.
    bool augment(int src, int sink) {
        std::vector<int> prev_node(g.size(), -1), prev_edge(g.size(), -1);
        std::vector<int> queue{src};
        prev_node[static_cast<std::size_t>(src)] = src;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int a = queue[qi];
            for (std::size_t e = 0; e < g[static_cast<std::size_t>(a)].size();
                 ++e) {
                const FlowEdge& ed = g[static_cast<std::size_t>(a)][e];
                if (ed.cap <= 0 ||
                    prev_node[static_cast<std::size_t>(ed.to)] != -1)
                    continue;
                prev_node[static_cast<std::size_t>(ed.to)] = a;
                prev_edge[static_cast<std::size_t>(ed.to)] =
                    static_cast<int>(e);
                queue.push_back(ed.to);
            }
        }
        if (prev_node[static_cast<std::size_t>(sink)] == -1) return false;
        for (int a = sink; a != src;) {
            int b = prev_node[static_cast<std::size_t>(a)];
            FlowEdge& ed =
                g[static_cast<std::size_t>(b)][static_cast<std::size_t>(
                    prev_edge[static_cast<std::size_t>(a)])];
            --ed.cap;
            ++g[static_cast<std::size_t>(ed.to)]
                  [static_cast<std::size_t>(ed.rev)]
                      .cap;
            a = b;
        }
        return true;
    }
};

void require_r_le_s_le_t(const E3CParams& p) {
    if (!(p.r <= p.s && p.s <= p.t))
        throw domain_error("parameters must satisfy r <= s <= t");
}

std::vector<char> fault_mask(const E3CParams& p, const FaultSet& faults,
                             int ui, int vi) {
    std::vector<char> blocked(static_cast<std::size_t>(p.vertex_count()), 0);
    for (const auto& f : faults) {
        int fi = index_of(p, f);
        if (fi == ui || fi == vi)
            throw domain_error("fault set contains a query endpoint");
        blocked[static_cast<std::size_t>(fi)] = 1;
    }
    return blocked;
}

}  // namespace

std::optional<int> bfs_distance(const E3CParams& p, const E3CVertex& u,
                                const E3CVertex& v, const FaultSet& faults) {
    auto adj = build_adjacency(p);
    int ui = index_of(p, u), vi = index_of(p, v);
    int d = bfs_on(adj, ui, vi, fault_mask(p, faults, ui, vi));
    if (d < 0) return std::nullopt;
    return d;
}

ConnectivityResult pair_connectivity(const E3CParams& p, const E3CVertex& u,
                                     const E3CVertex& v) {
    if (u == v) throw domain_error("endpoints must be distinct");
    auto adj = build_adjacency(p);
    int nv = static_cast<int>(adj.size());
    int ui = index_of(p, u), vi = index_of(p, v);
    // Node 2i is vertex i's in-side, 2i+1 its out-side; endpoints uncapped.
    int big = nv;  // more than any possible vertex connectivity
    FlowNet net(2 * nv);
    for (int i = 0; i < nv; ++i)
        net.add(2 * i, 2 * i + 1, (i == ui || i == vi) ? big : 1);
    for (int i = 0; i < nv; ++i)
        for (int j : adj[static_cast<std::size_t>(i)])
            net.add(2 * i + 1, 2 * j, 1);
    int src = 2 * ui + 1, sink = 2 * vi;
    ConnectivityResult out;
    while (net.augment(src, sink)) ++out.count;
    // Decompose the integral flow into vertex paths.  Unit vertex capacities
    // make every walk simple, so each extraction terminates at the sink.
    for (int unit = 0; unit < out.count; ++unit) {
        EPath path{u};
        int a = src;
        while (a != sink) {
            for (FlowEdge& ed : net.g[static_cast<std::size_t>(a)]) {
                if (ed.orig > 0 && ed.cap < ed.orig) {
                    ++ed.cap;
                    a = ed.to;
                    if (a % 2 == 0 && a != 2 * ui)
                        path.push_back(vertex_from_index(p, a / 2));
                    break;
                }
            }
        }
        out.paths.push_back(std::move(path));
    }
    return out;
}

FaultDistanceResult fault_distance_max(const E3CParams& p, const E3CVertex& u,
                                       const E3CVertex& v, int f,
                                       const SweepMode& mode,
                                       long long budget) {
    if (u == v) throw domain_error("endpoints must be distinct");
    if (f < 0) throw domain_error("fault count must be nonnegative");
    auto adj = build_adjacency(p);
    int nv = static_cast<int>(adj.size());
    int ui = index_of(p, u), vi = index_of(p, v);
    // Candidate fault vertices: everything except the endpoints.
    std::vector<int> candidates;
    candidates.reserve(static_cast<std::size_t>(nv - 2));
    for (int i = 0; i < nv; ++i)
        if (i != ui && i != vi) candidates.push_back(i);
    if (f > static_cast<int>(candidates.size()))
        throw domain_error("fault count exceeds available vertices");

    FaultDistanceResult res;
    res.max_distance = -1;
    std::vector<char> blocked(static_cast<std::size_t>(nv), 0);
    auto evaluate = [&](const std::vector<int>& chosen) {
        for (int c : chosen) blocked[static_cast<std::size_t>(c)] = 1;
        int d = bfs_on(adj, ui, vi, blocked);
        for (int c : chosen) blocked[static_cast<std::size_t>(c)] = 0;
        bool better = false;
        if (d < 0) {
            if (!res.disconnected) better = true;
            res.disconnected = true;
        } else if (!res.disconnected && d > res.max_distance) {
            better = true;
            res.max_distance = d;
        }
        if (better) {
            res.witness.clear();
            for (int c : chosen)
                res.witness.push_back(vertex_from_index(p, c));
        }
    };

    if (mode.exhaustive) {
        // Count C(|candidates|, f) against the BFS budget before starting.
        long long runs = 1;
        for (int i = 0; i < f; ++i) {
            runs = runs * (static_cast<long long>(candidates.size()) - i) /
                   (i + 1);
            if (runs > budget)
                throw resource_error(
                    "exhaustive fault enumeration exceeds the budget; use "
                    "sampled mode");
        }
        std::vector<int> idx(static_cast<std::size_t>(f));
        for (int i = 0; i < f; ++i) idx[static_cast<std::size_t>(i)] = i;
        std::vector<int> chosen(static_cast<std::size_t>(f));
        while (true) {
            for (int i = 0; i < f; ++i)
                chosen[static_cast<std::size_t>(i)] =
                    candidates[static_cast<std::size_t>(
                        idx[static_cast<std::size_t>(i)])];
            evaluate(chosen);
            // Advance the combination (lexicographic successor).
            int i = f - 1;
            while (i >= 0 &&
                   idx[static_cast<std::size_t>(i)] ==
                       static_cast<int>(candidates.size()) - f + i)
                --i;
            if (i < 0) break;
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < f; ++j)
                idx[static_cast<std::size_t>(j)] =
                    idx[static_cast<std::size_t>(j - 1)] + 1;
        }
        if (f == 0) evaluate({});
    } else {
        std::mt19937_64 rng(mode.seed);
        std::uniform_int_distribution<std::size_t> pick(
            0, candidates.size() - 1);
        for (long long trial = 0; trial < mode.trials; ++trial) {
            std::set<int> draw;
            while (static_cast<int>(draw.size()) < f)
                draw.insert(candidates[pick(rng)]);
            evaluate(std::vector<int>(draw.begin(), draw.end()));
        }
        if (f == 0 || mode.trials == 0) evaluate({});
    }
    return res;
}

WideUpperResult wide_upper_from_router(const E3CParams& p,
                                       const SweepMode& mode) {
    require_r_le_s_le_t(p);
    long long nv = p.vertex_count();
    WideUpperResult res;
    auto consider = [&](long long i, long long j) {
        auto u = vertex_from_index(p, i), v = vertex_from_index(p, j);
        auto sys = construct_path_system(p, u, v);
        int longest = 0;
        for (const auto& path : sys.paths)
            longest =
                std::max(longest, static_cast<int>(path.size()) - 1);
        if (longest > res.max_length) {
            res.max_length = longest;
            res.u = u;
            res.v = v;
        }
    };
    if (mode.exhaustive) {
        for (long long i = 0; i < nv; ++i)
            for (long long j = i + 1; j < nv; ++j) consider(i, j);
    } else {
        std::mt19937_64 rng(mode.seed);
        std::uniform_int_distribution<long long> pick(0, nv - 1);
        for (long long trial = 0; trial < mode.trials; ++trial) {
            long long i = pick(rng), j = pick(rng);
            if (i == j) continue;
            consider(i, j);
        }
    }
    return res;
}

MetricReport graph_metrics(const E3CParams& p,
                           const SweepMode& connectivity_mode,
                           long long vertex_budget) {
    if (p.vertex_count() > vertex_budget)
        throw resource_error("vertex count exceeds the metrics budget");
    MetricReport rep;
    rep.params = p;
    auto census = graph_census(p);
    rep.vertices = census.vertices;
    rep.edges = census.edges;
    auto adj = build_adjacency(p);
    int nv = static_cast<int>(adj.size());

    // Degrees, histogram, and the census/degree-sum cross-check.
    long long degree_sum = 0;
    std::vector<std::pair<int, long long>> hist;
    rep.min_degree = nv;
    for (int i = 0; i < nv; ++i) {
        int deg = static_cast<int>(adj[static_cast<std::size_t>(i)].size());
        degree_sum += deg;
        auto it = std::find_if(hist.begin(), hist.end(),
                               [&](const auto& e) { return e.first == deg; });
        if (it == hist.end())
            hist.emplace_back(deg, 1);
        else
            ++it->second;
        if (deg < rep.min_degree) {
            rep.min_degree = deg;
            rep.min_degree_vertex = vertex_from_index(p, i);
        }
    }
    if (degree_sum != 2 * rep.edges)
        throw construction_error("census/degree-sum cross-check failed");
    std::sort(hist.begin(), hist.end());
    rep.degree_histogram = std::move(hist);

    // Diameter by all-sources BFS with witnesses.
    std::vector<char> no_faults(static_cast<std::size_t>(nv), 0);
    for (int i = 0; i < nv; ++i) {
        std::vector<int> dist(static_cast<std::size_t>(nv), -1);
        dist[static_cast<std::size_t>(i)] = 0;
        std::deque<int> frontier{i};
        int far = i;
        while (!frontier.empty()) {
            int cur = frontier.front();
            frontier.pop_front();
            for (int nb : adj[static_cast<std::size_t>(cur)]) {
                if (dist[static_cast<std::size_t>(nb)] != -1) continue;
                dist[static_cast<std::size_t>(nb)] =
                    dist[static_cast<std::size_t>(cur)] + 1;
                frontier.push_back(nb);
                if (dist[static_cast<std::size_t>(nb)] >
                    dist[static_cast<std::size_t>(far)])
                    far = nb;
            }
        }
        if (dist[static_cast<std::size_t>(far)] > rep.diameter) {
            rep.diameter = dist[static_cast<std::size_t>(far)];
            rep.diameter_u = vertex_from_index(p, i);
            rep.diameter_v = vertex_from_index(p, far);
        }
    }

    // Pair-connectivity minimum with witnesses.
    rep.connectivity_exhaustive = connectivity_mode.exhaustive;
    rep.seed = connectivity_mode.seed;
    rep.min_connectivity = nv;
    auto consider = [&](int i, int j) {
        auto u = vertex_from_index(p, i), v = vertex_from_index(p, j);
        int c = pair_connectivity(p, u, v).count;
        if (c < rep.min_connectivity) {
            rep.min_connectivity = c;
            rep.connectivity_u = u;
            rep.connectivity_v = v;
        }
    };
    if (connectivity_mode.exhaustive) {
        for (int i = 0; i < nv; ++i)
            for (int j = i + 1; j < nv; ++j) consider(i, j);
    } else {
        std::mt19937_64 rng(connectivity_mode.seed);
        std::uniform_int_distribution<int> pick(0, nv - 1);
        for (long long trial = 0; trial < connectivity_mode.trials; ++trial) {
            int i = pick(rng), j = pick(rng);
            if (i != j) consider(i, j);
        }
    }
    return rep;
}

}  // namespace e3c
