#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "e3c/qn3.hpp"

using namespace e3c;

static QVertex q(const char* text) { return parse_trits(text, 3); }

static std::vector<QVertex> all_vertices(int n) {
    std::vector<QVertex> out;
    long long total = 1;
    for (int i = 0; i < n; ++i) total *= 3;
    for (long long code = 0; code < total; ++code) {
        std::vector<std::uint8_t> digits(n);
        long long c = code;
        for (int i = 0; i < n; ++i) {
            digits[i] = static_cast<std::uint8_t>(c % 3);
            c /= 3;
        }
        out.emplace_back(std::move(digits), 3);
    }
    return out;
}

// Independent distance oracle: plain BFS over an adjacency relation read
// straight off the definition (one digit differs by +-1 mod 3).
static int bfs_distance(const QVertex& u, const QVertex& v) {
    std::map<QVertex, int> dist{{u, 0}};
    std::deque<QVertex> frontier{u};
    while (!frontier.empty()) {
        QVertex cur = frontier.front();
        frontier.pop_front();
        if (cur == v) return dist[cur];
        for (std::size_t i = 0; i < cur.size(); ++i) {
            for (int step : {1, 2}) {
                QVertex nb = cur;
                nb.digits[i] = static_cast<std::uint8_t>((cur.digits[i] + step) % 3);
                if (!dist.count(nb)) {
                    dist[nb] = dist[cur] + 1;
                    frontier.push_back(nb);
                }
            }
        }
    }
    return -1;
}

static bool is_valid_path(const QPath& path) {
    std::set<QVertex> seen(path.begin(), path.end());
    if (seen.size() != path.size()) return false;
    for (std::size_t i = 1; i < path.size(); ++i) {
        auto nbs = qnk_neighbors(path[i - 1]);
        if (std::find(nbs.begin(), nbs.end(), path[i]) == nbs.end()) return false;
    }
    return true;
}

TEST_CASE("neighbors") {
    auto got = qnk_neighbors(q("00"));
    std::vector<QVertex> want{q("01"), q("02"), q("10"), q("20")};
    std::sort(want.begin(), want.end());
    CHECK(got == want);

    auto got1 = qnk_neighbors(q("0"));
    CHECK(got1 == std::vector<QVertex>{q("1"), q("2")});

    for (const auto& v : all_vertices(2))
        CHECK(qnk_neighbors(v).size() == 4);
}

TEST_CASE("shortest path") {
    CHECK(shortest_path_q3(q("00"), q("11")).size() == 3);
    CHECK(shortest_path_q3(q("12"), q("12")) == QPath{q("12")});
    // Lowest-dimension-first correction order.
    QPath want{q("000"), q("001"), q("011"), q("111")};
    CHECK(shortest_path_q3(q("000"), q("111")) == want);
}

TEST_CASE("shortest path with avoid set") {
    // Block the canonical route; a minimal detour must still be found.
    QPath path = shortest_path_q3(q("000"), q("111"), {q("001"), q("011")});
    CHECK(path.size() == 4);
    CHECK(is_valid_path(path));
    CHECK(std::find(path.begin(), path.end(), q("001")) == path.end());
    CHECK(std::find(path.begin(), path.end(), q("011")) == path.end());

    // Endpoints are never restricted.
    CHECK(shortest_path_q3(q("00"), q("01"), {q("01")}).size() == 2);

    // Blocking every minimal route is a misuse.
    CHECK_THROWS_AS(shortest_path_q3(q("00"), q("11"), {q("01"), q("10")}),
                    construction_error);
}

TEST_CASE("shortest path length equals Lee distance on Q_2^3 and Q_3^3") {
    for (int n : {2, 3}) {
        auto vertices = all_vertices(n);
        int diameter = 0;
        for (const auto& u : vertices) {
            for (const auto& v : vertices) {
                int l = lee_distance(u, v);
                CHECK(bfs_distance(u, v) == l);
                auto path = shortest_path_q3(u, v);
                CHECK(static_cast<int>(path.size()) - 1 == l);
                CHECK(is_valid_path(path));
                diameter = std::max(diameter, l);
            }
        }
        CHECK(diameter == n);
    }
}

TEST_CASE("disjoint paths in a triangle") {
    auto paths = disjoint_paths_q3(q("0"), q("1"));
    REQUIRE(paths.size() == 2);
    std::sort(paths.begin(), paths.end(),
              [](const QPath& a, const QPath& b) { return a.size() < b.size(); });
    CHECK(paths[0] == QPath{q("0"), q("1")});
    CHECK(paths[1] == QPath{q("0"), q("2"), q("1")});
}

// Checks the full contract of the 2n-path system for a pair.
static void check_system(const QVertex& u, const QVertex& v) {
    auto paths = disjoint_paths_q3(u, v);
    int n = static_cast<int>(u.size());
    int h = hamming_distance(u, v);
    int l = h;
    REQUIRE(static_cast<int>(paths.size()) == 2 * n);

    std::multiset<int> lengths, want;
    std::multiset<QVertex> interior;
    std::set<QVertex> first_steps, last_steps;
    for (const auto& path : paths) {
        REQUIRE(path.front() == u);
        REQUIRE(path.back() == v);
        CHECK(is_valid_path(path));
        lengths.insert(static_cast<int>(path.size()) - 1);
        for (std::size_t i = 1; i + 1 < path.size(); ++i) interior.insert(path[i]);
        first_steps.insert(path[1]);
        last_steps.insert(path[path.size() - 2]);
    }
    // Pairwise internal disjointness: no interior vertex repeats.
    CHECK(interior.size() ==
          std::set<QVertex>(interior.begin(), interior.end()).size());
    for (int i = 0; i < h; ++i) want.insert(l);
    for (int i = 0; i < h; ++i) want.insert(l + 1);
    for (int i = 0; i < 2 * (n - h); ++i) want.insert(l + 2);
    CHECK(lengths == want);
    // Full fan: the systems touch every neighbor of u and of v.
    CHECK(first_steps.size() == static_cast<std::size_t>(2 * n));
    CHECK(last_steps.size() == static_cast<std::size_t>(2 * n));
}

TEST_CASE("disjoint path systems over all pairs of Q_2^3 and Q_3^3") {
    for (int n : {2, 3}) {
        auto vertices = all_vertices(n);
        for (const auto& u : vertices)
            for (const auto& v : vertices)
                if (u != v) check_system(u, v);
    }
}

TEST_CASE("disjoint paths frozen examples") {
    auto paths = disjoint_paths_q3(q("00"), q("11"));
    std::multiset<int> lengths;
    for (const auto& p : paths) lengths.insert(static_cast<int>(p.size()) - 1);
    CHECK(lengths == std::multiset<int>{2, 2, 3, 3});

    paths = disjoint_paths_q3(q("00"), q("01"));
    lengths.clear();
    for (const auto& p : paths) lengths.insert(static_cast<int>(p.size()) - 1);
    CHECK(lengths == std::multiset<int>{1, 2, 3, 3});

    CHECK_THROWS_AS(disjoint_paths_q3(q("00"), q("00")), domain_error);
}
