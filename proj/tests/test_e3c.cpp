#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "e3c/e3c.hpp"

using namespace e3c;

static std::set<std::string> neighbor_strings(const E3CParams& p,
                                              const std::string& u) {
    std::set<std::string> out;
    for (const auto& [w, cls] : e3c_neighbors(p, vertex_from_string(p, u)))
        out.insert(vertex_to_string(p, w));
    return out;
}

TEST_CASE("vertex codec") {
    E3CParams p111(1, 1, 1);
    auto u = vertex_from_string(p111, "0000");
    CHECK(to_string(u.A) == "0");
    CHECK(to_string(u.B) == "0");
    CHECK(to_string(u.C) == "0");
    CHECK(u.d == 0);
    CHECK(vertex_to_index(p111, u) == 0);

    CHECK(vertex_to_string(p111, vertex_from_index(p111, 1)) == "0001");

    E3CParams p112(1, 1, 2);
    auto w = vertex_from_string(p112, "01220");
    CHECK(to_string(w.A) == "0");
    CHECK(to_string(w.B) == "1");
    CHECK(to_string(w.C) == "22");
    CHECK(w.d == 0);

    // Round trip over every index of E3C(1,1,2).
    for (long long i = 0; i < p112.vertex_count(); ++i) {
        auto v = vertex_from_index(p112, i);
        CHECK(vertex_to_index(p112, v) == i);
        CHECK(vertex_from_string(p112, vertex_to_string(p112, v)) == v);
    }

    CHECK_THROWS_AS(vertex_from_string(p111, "00000"), codec_error);
    CHECK_THROWS_AS(vertex_from_index(p111, 81), codec_error);
    CHECK_THROWS_AS(vertex_from_index(p111, -1), codec_error);
}

TEST_CASE("neighbors and degrees") {
    E3CParams p111(1, 1, 1);
    CHECK(neighbor_strings(p111, "0000") ==
          std::set<std::string>{"0001", "0002", "0010", "0020"});
    CHECK(neighbor_strings(p111, "0002") ==
          std::set<std::string>{"0000", "0001", "1002", "2002"});

    for (long long i = 0; i < p111.vertex_count(); ++i)
        CHECK(e3c_degree(p111, vertex_from_index(p111, i)) == 4);

    E3CParams p122(1, 2, 2);
    for (long long i = 0; i < p122.vertex_count(); ++i) {
        auto u = vertex_from_index(p122, i);
        CHECK(e3c_degree(p122, u) ==
              static_cast<int>(e3c_neighbors(p122, u).size()));
        if (u.d == 1) CHECK(e3c_degree(p122, u) == 6);
    }

    E3CParams p123(1, 2, 3);
    int min_deg = 1 << 30;
    for (long long i = 0; i < p123.vertex_count(); ++i)
        min_deg = std::min(min_deg, e3c_degree(p123, vertex_from_index(p123, i)));
    CHECK(min_deg == 4);
}

// Literal transcription of the defining edge predicates on flat strings:
// H_p^q is the Hamming weight of the dimension interval [p, q].
static bool literal_adjacent(const E3CParams& p, const TritString& x,
                             const TritString& y) {
    int r = p.r, s = p.s, t = p.t;
    auto H = [&](int lo, int hi) { return hamming_distance(x, y, lo, hi); };
    bool e0 = H(1, r + s + t) == 0 && x[0] != y[0];
    bool e1 = H(t + 1, r + s + t) == 0 && H(1, t) == 1 && x[0] == y[0] && x[0] == 0;
    bool e2 = H(s + t + 1, r + s + t) == 0 && H(t + 1, s + t) == 1 && H(1, t) == 0 &&
              x[0] == y[0] && x[0] == 1;
    bool e3 = H(s + t + 1, r + s + t) == 1 && H(1, s + t) == 0 && x[0] == y[0] &&
              x[0] == 2;
    if (!(e0 || e1 || e2 || e3)) return false;
    // A changed digit must move by +-1 mod 3; for k = 3 every change does.
    return true;
}

TEST_CASE("adjacency matches the literal edge predicates on E3C(1,1,1)") {
    E3CParams p(1, 1, 1);
    long long nv = p.vertex_count();
    for (long long i = 0; i < nv; ++i) {
        auto u = vertex_from_index(p, i);
        std::set<long long> fast;
        for (const auto& [w, cls] : e3c_neighbors(p, u))
            fast.insert(vertex_to_index(p, w));
        for (long long j = 0; j < nv; ++j) {
            auto v = vertex_from_index(p, j);
            bool lit = i != j && literal_adjacent(p, vertex_to_flat(p, u),
                                                  vertex_to_flat(p, v));
            CHECK(lit == (fast.count(j) > 0));
        }
    }
}

TEST_CASE("adjacency is symmetric and irreflexive") {
    for (E3CParams p : {E3CParams(1, 1, 1), E3CParams(1, 1, 2)}) {
        auto adj = build_adjacency(p);
        for (std::size_t i = 0; i < adj.size(); ++i) {
            for (int j : adj[i]) {
                CHECK(j != static_cast<int>(i));
                CHECK(std::count(adj[j].begin(), adj[j].end(),
                                 static_cast<int>(i)) == 1);
            }
        }
    }
}

TEST_CASE("subcube identification") {
    E3CParams p(1, 1, 1);
    auto id0 = subcube_id(vertex_from_string(p, "0000"));
    CHECK(id0.cls == 'L');
    CHECK(to_string(id0.frozen1) == "0");  // A
    CHECK(to_string(id0.frozen2) == "0");  // B
    CHECK(subcube_id(vertex_from_string(p, "0001")).cls == 'M');
    CHECK(subcube_id(vertex_from_string(p, "0002")).cls == 'R');

    E3CParams p112(1, 1, 2);
    std::set<SubcubeId> l_ids;
    for (long long i = 0; i < p112.vertex_count(); ++i) {
        auto u = vertex_from_index(p112, i);
        if (u.d == 0) l_ids.insert(subcube_id(u));
    }
    CHECK(l_ids.size() == 9);  // 3^(r+s)
}

TEST_CASE("no edges between distinct same-class subcubes") {
    for (E3CParams p : {E3CParams(1, 1, 1), E3CParams(1, 1, 2)}) {
        for (long long i = 0; i < p.vertex_count(); ++i) {
            auto u = vertex_from_index(p, i);
            for (const auto& [w, cls] : e3c_neighbors(p, u)) {
                auto iu = subcube_id(u), iw = subcube_id(w);
                if (iu.cls == iw.cls) CHECK(iu == iw);
            }
        }
    }
}

TEST_CASE("each subcube induces the expected Q^3 copy") {
    // Within one subcube, adjacency must coincide with Q^3 adjacency of the
    // free block (and no other pairs inside the subcube are adjacent).
    E3CParams p(1, 1, 2);
    std::map<SubcubeId, std::vector<E3CVertex>> members;
    for (long long i = 0; i < p.vertex_count(); ++i) {
        auto u = vertex_from_index(p, i);
        members[subcube_id(u)].push_back(u);
    }
    auto free_block = [](const E3CVertex& u) {
        return u.d == 0 ? u.C : u.d == 1 ? u.B : u.A;
    };
    for (const auto& [id, vs] : members) {
        for (const auto& u : vs) {
            for (const auto& v : vs) {
                if (u == v) continue;
                auto nbs = e3c_neighbors(p, u);
                bool adj = std::any_of(nbs.begin(), nbs.end(),
                                       [&](const auto& e) { return e.first == v; });
                auto qn = qnk_neighbors(free_block(u));
                bool qadj = std::find(qn.begin(), qn.end(), free_block(v)) != qn.end();
                CHECK(adj == qadj);
            }
        }
    }
}

TEST_CASE("external neighbors") {
    E3CParams p(1, 1, 1);
    auto [a, b] = external_neighbors(vertex_from_string(p, "0000"));
    CHECK(vertex_to_string(p, a) == "0001");
    CHECK(vertex_to_string(p, b) == "0002");

    for (long long i = 0; i < p.vertex_count(); ++i) {
        auto u = vertex_from_index(p, i);
        auto [x, y] = external_neighbors(u);
        auto nbs = e3c_neighbors(p, x);
        CHECK(std::any_of(nbs.begin(), nbs.end(),
                          [&](const auto& e) { return e.first == y; }));
    }

    // Distinct vertices of one subcube have their externals in distinct
    // subcubes.
    std::map<SubcubeId, std::vector<E3CVertex>> members;
    for (long long i = 0; i < p.vertex_count(); ++i) {
        auto u = vertex_from_index(p, i);
        members[subcube_id(u)].push_back(u);
    }
    for (const auto& [id, vs] : members) {
        std::set<SubcubeId> first, second;
        for (const auto& u : vs) {
            auto [x, y] = external_neighbors(u);
            CHECK(first.insert(subcube_id(x)).second);
            CHECK(second.insert(subcube_id(y)).second);
        }
    }
}

static void check_iso(const E3CParams& p, const std::array<int, 3>& roles,
                      const E3CParams& want_image) {
    auto iso = block_isomorphism(p, roles);
    CHECK(iso.image_params() == want_image);
    auto adj_src = build_adjacency(p);
    auto adj_img = build_adjacency(want_image);
    std::set<long long> seen;
    for (long long i = 0; i < p.vertex_count(); ++i) {
        auto u = vertex_from_index(p, i);
        auto mu = iso.map(u);
        CHECK(iso.unmap(mu) == u);
        long long mi = vertex_to_index(want_image, mu);
        CHECK(seen.insert(mi).second);
        // Edge preservation in both directions: neighbor sets correspond.
        std::set<long long> want;
        for (int j : adj_src[i]) {
            auto mv = iso.map(vertex_from_index(p, j));
            want.insert(vertex_to_index(want_image, mv));
        }
        std::set<long long> got(adj_img[mi].begin(), adj_img[mi].end());
        CHECK(want == got);
    }
}

TEST_CASE("block isomorphisms") {
    E3CParams p112(1, 1, 2);
    check_iso(p112, {0, 1, 2}, p112);       // identity
    check_iso(p112, {0, 2, 1}, E3CParams(1, 2, 1));  // swap s and t roles
    check_iso(E3CParams(1, 2, 2), {2, 1, 0}, E3CParams(2, 2, 1));
    CHECK_THROWS_AS(block_isomorphism(p112, {0, 0, 2}), domain_error);
}

TEST_CASE("census") {
    auto c111 = graph_census(E3CParams(1, 1, 1));
    CHECK(c111.vertices == 81);
    CHECK(c111.edges == 162);

    auto c112 = graph_census(E3CParams(1, 1, 2));
    CHECK(c112.vertices == 243);
    CHECK(c112.edges == 567);

    // Handshake against explicit degrees, and against the adjacency build.
    for (E3CParams p : {E3CParams(1, 1, 1), E3CParams(1, 1, 2)}) {
        auto c = graph_census(p);
        long long degree_sum = 0;
        for (long long i = 0; i < p.vertex_count(); ++i)
            degree_sum += e3c_degree(p, vertex_from_index(p, i));
        CHECK(degree_sum == 2 * c.edges);
        auto adj = build_adjacency(p);
        long long listed = 0;
        for (const auto& row : adj) listed += static_cast<long long>(row.size());
        CHECK(listed == 2 * c.edges);
    }
}
