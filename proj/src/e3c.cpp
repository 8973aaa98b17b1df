#include "e3c/e3c.hpp"

#include <algorithm>

namespace e3c {

E3CParams::E3CParams(int r_, int s_, int t_) : r(r_), s(s_), t(t_) {
    if (r < 1 || s < 1 || t < 1)
        throw domain_error("parameters r, s, t must all be at least 1");
}

long long E3CParams::vertex_count() const {
    long long v = 1;
    for (int i = 0; i < n(); ++i) v *= 3;
    return v;
}

const char* edge_class_name(EdgeClass c) {
    switch (c) {
        case EdgeClass::E0: return "E0";
        case EdgeClass::E1: return "E1";
        case EdgeClass::E2: return "E2";
        case EdgeClass::E3: return "E3";
    }
    return "?";
}

E3CVertex vertex_from_flat(const E3CParams& p, const TritString& flat) {
    if (static_cast<int>(flat.size()) != p.n())
        throw codec_error("flat string has wrong length");
    if (flat.k != 3) throw codec_error("flat string has wrong radix");
    E3CVertex u;
    u.d = flat.digits[0];
    auto slice = [&](int lo, int len) {
        std::vector<std::uint8_t> d(flat.digits.begin() + lo,
                                    flat.digits.begin() + lo + len);
        return TritString(std::move(d), 3);
    };
    u.C = slice(1, p.t);
    u.B = slice(1 + p.t, p.s);
    u.A = slice(1 + p.t + p.s, p.r);
    return u;
}

E3CVertex vertex_from_string(const E3CParams& p, const std::string& text) {
    return vertex_from_flat(p, parse_trits(text, 3));
}

TritString vertex_to_flat(const E3CParams& p, const E3CVertex& u) {
    if (static_cast<int>(u.A.size()) != p.r ||
        static_cast<int>(u.B.size()) != p.s ||
        static_cast<int>(u.C.size()) != p.t || u.d > 2)
        throw codec_error("vertex blocks do not match parameters");
    std::vector<std::uint8_t> d;
    d.reserve(p.n());
    d.push_back(u.d);
    d.insert(d.end(), u.C.digits.begin(), u.C.digits.end());
    d.insert(d.end(), u.B.digits.begin(), u.B.digits.end());
    d.insert(d.end(), u.A.digits.begin(), u.A.digits.end());
    return TritString(std::move(d), 3);
}

std::string vertex_to_string(const E3CParams& p, const E3CVertex& u) {
    return to_string(vertex_to_flat(p, u));
}

E3CVertex vertex_from_index(const E3CParams& p, long long index) {
    if (index < 0 || index >= p.vertex_count())
        throw codec_error("vertex index out of range");
    std::vector<std::uint8_t> digits(p.n());
    for (int i = 0; i < p.n(); ++i) {
        digits[i] = static_cast<std::uint8_t>(index % 3);
        index /= 3;
    }
    return vertex_from_flat(p, TritString(std::move(digits), 3));
}

long long vertex_to_index(const E3CParams& p, const E3CVertex& u) {
    TritString flat = vertex_to_flat(p, u);
    long long index = 0;
    for (int i = p.n() - 1; i >= 0; --i) index = index * 3 + flat.digits[i];
    return index;
}

std::vector<std::pair<E3CVertex, EdgeClass>> e3c_neighbors(const E3CParams& p,
                                                           const E3CVertex& u) {
    (void)vertex_to_flat(p, u);  // validate block shapes
    std::vector<std::pair<E3CVertex, EdgeClass>> out;
    for (int step : {1, 2}) {
        E3CVertex w = u;
        w.d = static_cast<std::uint8_t>((u.d + step) % 3);
        out.emplace_back(std::move(w), EdgeClass::E0);
    }
    // The free block (C, B, A for d = 0, 1, 2) changes one digit by +-1.
    const TritString* free_block = u.d == 0 ? &u.C : u.d == 1 ? &u.B : &u.A;
    EdgeClass cls = u.d == 0   ? EdgeClass::E1
                    : u.d == 1 ? EdgeClass::E2
                               : EdgeClass::E3;
    for (std::size_t i = 0; i < free_block->size(); ++i) {
        for (int step : {1, 2}) {
            E3CVertex w = u;
            TritString* blk = u.d == 0 ? &w.C : u.d == 1 ? &w.B : &w.A;
            blk->digits[i] =
                static_cast<std::uint8_t>((free_block->digits[i] + step) % 3);
            out.emplace_back(std::move(w), cls);
        }
    }
    return out;
}

int e3c_degree(const E3CParams& p, const E3CVertex& u) {
    switch (u.d) {
        case 0: return 2 * p.t + 2;
        case 1: return 2 * p.s + 2;
        default: return 2 * p.r + 2;
    }
}

SubcubeId subcube_id(const E3CVertex& u) {
    switch (u.d) {
        case 0: return {'L', u.A, u.B};
        case 1: return {'M', u.A, u.C};
        default: return {'R', u.B, u.C};
    }
}

std::pair<E3CVertex, E3CVertex> external_neighbors(const E3CVertex& u) {
    E3CVertex a = u, b = u;
    a.d = static_cast<std::uint8_t>((u.d + 1) % 3);
    b.d = static_cast<std::uint8_t>((u.d + 2) % 3);
    return {a, b};
}

// Role indices: 0 = A (active when d = 2), 1 = B (d = 1), 2 = C (d = 0).
static int role_of_d(int d) { return 2 - d; }
static int d_of_role(int role) { return 2 - role; }

E3CParams BlockIsomorphism::image_params() const {
    auto len = [&](int blk) {
        return blk == 0 ? source.r : blk == 1 ? source.s : source.t;
    };
    return E3CParams(len(role_src[0]), len(role_src[1]), len(role_src[2]));
}

E3CVertex BlockIsomorphism::map(const E3CVertex& u) const {
    auto blk = [&](int b) -> const TritString& {
        return b == 0 ? u.A : b == 1 ? u.B : u.C;
    };
    E3CVertex v;
    v.A = blk(role_src[0]);
    v.B = blk(role_src[1]);
    v.C = blk(role_src[2]);
    int old_role = role_of_d(u.d);
    int new_role = static_cast<int>(
        std::find(role_src.begin(), role_src.end(), old_role) -
        role_src.begin());
    v.d = static_cast<std::uint8_t>(d_of_role(new_role));
    return v;
}

E3CVertex BlockIsomorphism::unmap(const E3CVertex& v) const {
    std::array<int, 3> inverse{};
    for (int rho = 0; rho < 3; ++rho) inverse[role_src[rho]] = rho;
    BlockIsomorphism back{image_params(), inverse};
    return back.map(v);
}

BlockIsomorphism block_isomorphism(const E3CParams& p,
                                   const std::array<int, 3>& role_src) {
    std::array<int, 3> sorted = role_src;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != std::array<int, 3>{0, 1, 2})
        throw domain_error("role assignment must be a permutation of {A,B,C}");
    return BlockIsomorphism{p, role_src};
}

Census graph_census(const E3CParams& p) {
    Census c;
    c.vertices = p.vertex_count();
    long long third = c.vertices / 3;  // 3^(n-1)
    c.per_class[0] = c.vertices;       // E0: one triangle per (A,B,C) tuple
    c.per_class[1] = static_cast<long long>(p.t) * third;
    c.per_class[2] = static_cast<long long>(p.s) * third;
    c.per_class[3] = static_cast<long long>(p.r) * third;
    c.edges = c.per_class[0] + c.per_class[1] + c.per_class[2] + c.per_class[3];
    return c;
}

std::vector<std::vector<int>> build_adjacency(const E3CParams& p) {
    long long nv = p.vertex_count();
    std::vector<std::vector<int>> adj(nv);
    for (long long i = 0; i < nv; ++i) {
        E3CVertex u = vertex_from_index(p, i);
        for (const auto& [w, cls] : e3c_neighbors(p, u))
            adj[i].push_back(static_cast<int>(vertex_to_index(p, w)));
        std::sort(adj[i].begin(), adj[i].end());
    }
    return adj;
}

}  // namespace e3c
