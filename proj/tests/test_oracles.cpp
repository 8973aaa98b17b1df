#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "e3c/oracles.hpp"

using namespace e3c;

static E3CVertex vx(const E3CParams& p, const char* text) {
    return vertex_from_string(p, text);
}

TEST_CASE("bfs distance basics") {
    E3CParams p(1, 1, 1);
    CHECK(bfs_distance(p, vx(p, "0000"), vx(p, "0001")) == 1);
    CHECK(bfs_distance(p, vx(p, "0000"), vx(p, "0000")) == 0);

    // Deleting vertices can only lengthen the route.
    auto base = bfs_distance(p, vx(p, "0000"), vx(p, "1110"));
    auto faulty = bfs_distance(p, vx(p, "0000"), vx(p, "1110"),
                               {vx(p, "0001")});
    REQUIRE(base.has_value());
    REQUIRE(faulty.has_value());
    CHECK(*faulty >= *base);

    CHECK_THROWS_AS(
        bfs_distance(p, vx(p, "0000"), vx(p, "0001"), {vx(p, "0000")}),
        domain_error);
}

TEST_CASE("bfs distance agrees with an adjacency-power oracle on E3C(1,1,1)") {
    // Second, structurally different distance computation: repeated
    // neighborhood expansion over the raw neighbor lists.
    E3CParams p(1, 1, 1);
    long long nv = p.vertex_count();
    for (long long i = 0; i < nv; i += 5) {
        auto u = vertex_from_index(p, i);
        std::set<long long> reached{i};
        std::set<long long> frontier{i};
        int level = 0;
        std::vector<int> dist(static_cast<std::size_t>(nv), -1);
        dist[static_cast<std::size_t>(i)] = 0;
        while (!frontier.empty()) {
            ++level;
            std::set<long long> next;
            for (long long a : frontier)
                for (const auto& [w, cls] :
                     e3c_neighbors(p, vertex_from_index(p, a))) {
                    long long b = vertex_to_index(p, w);
                    if (reached.insert(b).second) {
                        next.insert(b);
                        dist[static_cast<std::size_t>(b)] = level;
                    }
                }
            frontier = std::move(next);
        }
        for (long long j = 0; j < nv; ++j)
            CHECK(bfs_distance(p, u, vertex_from_index(p, j)) ==
                  dist[static_cast<std::size_t>(j)]);
    }
}

TEST_CASE("diameter equals n + 2") {
    CHECK(graph_metrics(E3CParams(1, 1, 1)).diameter == 6);
    auto rep = graph_metrics(E3CParams(1, 1, 2),
                             SweepMode::Sampled(7, 200));
    CHECK(rep.diameter == 7);
    CHECK(rep.min_degree == 4);
    // The witness pair really achieves the diameter.
    CHECK(bfs_distance(rep.params, rep.diameter_u, rep.diameter_v) == 7);
}

TEST_CASE("pair connectivity") {
    E3CParams p(1, 1, 1);
    auto res = pair_connectivity(p, vx(p, "0000"), vx(p, "1110"));
    CHECK(res.count >= 4);
    REQUIRE(static_cast<int>(res.paths.size()) == res.count);
    // Witness paths are valid and internally disjoint.
    std::set<E3CVertex> interior;
    for (const auto& path : res.paths) {
        CHECK(path.front() == vx(p, "0000"));
        CHECK(path.back() == vx(p, "1110"));
        for (std::size_t i = 1; i < path.size(); ++i) {
            auto nbs = e3c_neighbors(p, path[i - 1]);
            CHECK(std::any_of(nbs.begin(), nbs.end(), [&](const auto& e) {
                return e.first == path[i];
            }));
        }
        for (std::size_t i = 1; i + 1 < path.size(); ++i)
            CHECK(interior.insert(path[i]).second);
    }
    // An adjacent pair additionally uses the direct edge.
    CHECK(pair_connectivity(p, vx(p, "0000"), vx(p, "0001")).count == 4);
    CHECK_THROWS_AS(pair_connectivity(p, vx(p, "0000"), vx(p, "0000")),
                    domain_error);
}

TEST_CASE("minimum pair connectivity of E3C(1,1,1) is 2r + 2") {
    auto rep = graph_metrics(E3CParams(1, 1, 1));
    CHECK(rep.min_connectivity == 4);
    CHECK(pair_connectivity(rep.params, rep.connectivity_u,
                            rep.connectivity_v)
              .count == 4);
}

TEST_CASE("fault distance maxima") {
    E3CParams p(1, 1, 1);
    auto w = fault_witness(p);

    // The canonical witness fault set forces distance n + 3 = 7.
    CHECK(bfs_distance(p, w.u, w.v, w.faults) == 7);

    // f = 0 degenerates to the plain distance.
    auto plain = fault_distance_max(p, w.u, w.v, 0, SweepMode::Exhaustive());
    CHECK(plain.max_distance == *bfs_distance(p, w.u, w.v));
    CHECK_FALSE(plain.disconnected);

    // An adjacent pair keeps distance 1 under any vertex faults.
    auto adj = fault_distance_max(p, vx(p, "0000"), vx(p, "0001"), 3,
                                  SweepMode::Sampled(1, 50));
    CHECK(adj.max_distance == 1);

    // Monotonicity in f on a fixed pair (sampled lower bounds).
    int prev = -1;
    for (int f = 0; f <= 3; ++f) {
        auto res = fault_distance_max(p, w.u, w.v, f,
                                      f <= 1 ? SweepMode::Exhaustive()
                                             : SweepMode::Sampled(3, 300));
        CHECK_FALSE(res.disconnected);
        CHECK(res.max_distance >= prev);
        prev = res.max_distance;
    }

    // The witness fault set reproduces the reported maximum.
    auto res = fault_distance_max(p, w.u, w.v, 3, SweepMode::Sampled(9, 500));
    CHECK(bfs_distance(p, w.u, w.v, res.witness) == res.max_distance);

    CHECK_THROWS_AS(fault_distance_max(p, w.u, w.v, 3,
                                       SweepMode::Exhaustive(), 100),
                    resource_error);
}

TEST_CASE("exhaustive fault sweep on the witness pair") {
    // Full enumeration at f = 3: distance peaks at 7 within [7, 9], and no
    // fault set of size kappa - 1 can disconnect the pair.
    E3CParams p(1, 1, 1);
    auto w = fault_witness(p);
    auto res = fault_distance_max(p, w.u, w.v, 3, SweepMode::Exhaustive());
    CHECK_FALSE(res.disconnected);
    CHECK(res.max_distance >= 7);
    CHECK(res.max_distance <= 9);
    CHECK(bfs_distance(p, w.u, w.v, res.witness) == res.max_distance);
}

TEST_CASE("wide upper bound from the router") {
    auto res = wide_upper_from_router(E3CParams(1, 1, 1),
                                      SweepMode::Exhaustive());
    CHECK(res.max_length >= 7);
    CHECK(res.max_length <= 9);

    auto sampled = wide_upper_from_router(E3CParams(1, 1, 2),
                                          SweepMode::Sampled(42, 300));
    CHECK(sampled.max_length <= 10);  // n + 5
}

TEST_CASE("oracle and construction agree") {
    E3CParams p(1, 1, 1);
    long long nv = p.vertex_count();
    for (long long i = 0; i < nv; i += 11) {
        for (long long j = 1; j < nv; j += 13) {
            if (i == j) continue;
            auto u = vertex_from_index(p, i), v = vertex_from_index(p, j);
            auto sys = construct_path_system(p, u, v);
            CHECK(pair_connectivity(p, u, v).count >= 4);
            std::size_t shortest = sys.paths.front().size();
            for (const auto& path : sys.paths)
                shortest = std::min(shortest, path.size());
            CHECK(*bfs_distance(p, u, v) <=
                  static_cast<int>(shortest) - 1);
        }
    }
}

TEST_CASE("metric report details") {
    auto rep = graph_metrics(E3CParams(1, 1, 1));
    CHECK(rep.vertices == 81);
    CHECK(rep.edges == 162);
    CHECK(rep.diameter == 6);
    CHECK(rep.min_degree == 4);
    CHECK(rep.degree_histogram ==
          std::vector<std::pair<int, long long>>{{4, 81}});

    auto rep123 = graph_metrics(E3CParams(1, 2, 3),
                                SweepMode::Sampled(11, 50));
    CHECK(rep123.degree_histogram ==
          std::vector<std::pair<int, long long>>{
              {4, 729}, {6, 729}, {8, 729}});

    CHECK_THROWS_AS(graph_metrics(E3CParams(3, 3, 3),
                                  SweepMode::Exhaustive(), 1000),
                    resource_error);
}
