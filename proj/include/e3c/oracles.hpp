#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "e3c/router.hpp"

namespace e3c {

// Raised when an exhaustive sweep would exceed its configured budget; the
// caller should switch to sampled mode instead.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A set of deleted vertices for fault queries.  Never contains the query
// endpoints; operations taking one throw domain_error otherwise.
using FaultSet = std::vector<E3CVertex>;

// Exact shortest-path length in the graph with the fault vertices deleted.
// Unreachability is a distinct result (empty optional), never a sentinel.
std::optional<int> bfs_distance(const E3CParams& p, const E3CVertex& u,
                                const E3CVertex& v,
                                const FaultSet& faults = {});

// Maximum number of internally disjoint u-v paths together with one
// witnessing path set, computed by unit-capacity vertex-split max-flow with
// breadth-first augmenting searches in fixed neighbor order (deterministic).
// The witness paths carry no length guarantee.
struct ConnectivityResult {
    int count = 0;
    std::vector<EPath> paths;
};
ConnectivityResult pair_connectivity(const E3CParams& p, const E3CVertex& u,
                                     const E3CVertex& v);

// Enumeration mode for fault and wide-diameter sweeps.  Exhaustive mode
// visits every candidate; sampled mode draws `trials` candidates from a
// seeded deterministic generator and yields a lower bound on the maximum.
struct SweepMode {
    bool exhaustive = true;
    std::uint64_t seed = 0;
    long long trials = 0;

    static SweepMode Exhaustive() { return SweepMode{}; }
    static SweepMode Sampled(std::uint64_t seed, long long trials) {
        return SweepMode{false, seed, trials};
    }
};

// Maximum of bfs_distance(u, v, F) over fault sets F of the given size drawn
// from V \ {u, v}, with the achieving fault set.  Exhaustive mode refuses
// (resource_error) when the number of BFS runs would exceed `budget`.
struct FaultDistanceResult {
    int max_distance = -1;      // max over fault sets leaving v reachable
    bool disconnected = false;  // true when any enumerated set disconnects
    FaultSet witness;           // achieves the max (or the disconnection)
};
FaultDistanceResult fault_distance_max(const E3CParams& p, const E3CVertex& u,
                                       const E3CVertex& v, int f,
                                       const SweepMode& mode,
                                       long long budget = 10'000'000);

// Upper bound on the (2r+2)-wide diameter from the constructive router: the
// longest path of the constructed system, maximized over (all or sampled)
// vertex pairs, with the achieving pair.
struct WideUpperResult {
    int max_length = 0;
    E3CVertex u, v;
};
WideUpperResult wide_upper_from_router(const E3CParams& p,
                                       const SweepMode& mode);

// Aggregated brute-force metrics with witnesses for every extremum.
struct MetricReport {
    E3CParams params{1, 1, 1};
    long long vertices = 0;
    long long edges = 0;
    int diameter = 0;
    E3CVertex diameter_u, diameter_v;
    int min_degree = 0;
    E3CVertex min_degree_vertex;
    std::vector<std::pair<int, long long>> degree_histogram;
    int min_connectivity = 0;  // minimum pair connectivity over checked pairs
    E3CVertex connectivity_u, connectivity_v;
    bool connectivity_exhaustive = true;
    std::uint64_t seed = 0;
};

// Populate a MetricReport by BFS over every vertex and a pair-connectivity
// sweep (exhaustive when the pair count is small, otherwise sampled with the
// given mode).  Enforces the census/degree-sum cross-check internally and
// refuses (resource_error) when 3^n exceeds `vertex_budget`.
MetricReport graph_metrics(const E3CParams& p,
                           const SweepMode& connectivity_mode =
                               SweepMode::Exhaustive(),
                           long long vertex_budget = 1'000'000);

}  // namespace e3c
