#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "e3c/qn3.hpp"
#include "e3c/trits.hpp"

namespace e3c {

// Thrown when a flat string / index fails to round-trip into block form.
struct codec_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct E3CParams {
    int r = 1, s = 1, t = 1;

    E3CParams() = default;
    E3CParams(int r_, int s_, int t_);

    int n() const { return r + s + t + 1; }
    long long vertex_count() const;

    bool operator==(const E3CParams&) const = default;
};

// A vertex in block form: flat string a_{r-1}..a_0 b_{s-1}..b_0 c_{t-1}..c_0 d
// with d at dimension 0.  Blocks are little-endian TritStrings of radix 3.
struct E3CVertex {
    TritString A, B, C;
    std::uint8_t d = 0;

    bool operator==(const E3CVertex&) const = default;
    auto operator<=>(const E3CVertex&) const = default;
};

enum class EdgeClass { E0, E1, E2, E3 };

const char* edge_class_name(EdgeClass c);

// Codec: block form <-> flat string <-> base-3 index (d least significant).
E3CVertex vertex_from_flat(const E3CParams& p, const TritString& flat);
E3CVertex vertex_from_string(const E3CParams& p, const std::string& text);
E3CVertex vertex_from_index(const E3CParams& p, long long index);
TritString vertex_to_flat(const E3CParams& p, const E3CVertex& u);
std::string vertex_to_string(const E3CParams& p, const E3CVertex& u);
long long vertex_to_index(const E3CParams& p, const E3CVertex& u);

// The Definition-2.4 adjacency: two E0 neighbors (d +- 1 mod 3), plus one
// free-block digit change by +-1 when d selects that block.
std::vector<std::pair<E3CVertex, EdgeClass>> e3c_neighbors(const E3CParams& p,
                                                           const E3CVertex& u);

// 2t+2 / 2s+2 / 2r+2 for d = 0 / 1 / 2.
int e3c_degree(const E3CParams& p, const E3CVertex& u);

// Identification of the Q^3 subcube copy containing a vertex: class L (d=0,
// free block C), M (d=1, free B) or R (d=2, free A), plus the two frozen
// blocks.  Two vertices share a SubcubeId iff they lie in the same copy; no
// global integer labels are ever assigned.
struct SubcubeId {
    char cls = 'L';            // 'L', 'M' or 'R'
    TritString frozen1, frozen2;  // L: (A,B); M: (A,C); R: (B,C)

    bool operator==(const SubcubeId&) const = default;
    auto operator<=>(const SubcubeId&) const = default;
};

SubcubeId subcube_id(const E3CVertex& u);

// The two E0 neighbors (d+1, d+2 mod 3); they lie in the other two classes
// and are adjacent to each other.
std::pair<E3CVertex, E3CVertex> external_neighbors(const E3CVertex& u);

// An explicit adjacency-preserving bijection E3C(r,s,t) -> E3C(r',s',t')
// realized by permuting the A/B/C block roles together with the matching
// relabeling of d.  `role_src[rho]` names the source block (0=A,1=B,2=C)
// that serves role rho in the image.
struct BlockIsomorphism {
    E3CParams source;
    std::array<int, 3> role_src{0, 1, 2};

    E3CParams image_params() const;
    E3CVertex map(const E3CVertex& u) const;
    E3CVertex unmap(const E3CVertex& v) const;  // inverse direction
};

BlockIsomorphism block_isomorphism(const E3CParams& p,
                                   const std::array<int, 3>& role_src);

struct Census {
    long long vertices = 0;
    long long edges = 0;
    std::array<long long, 4> per_class{};  // indexed by EdgeClass
};

// Closed-form counts: 3^n vertices, (n+2)*3^(n-1) edges.
Census graph_census(const E3CParams& p);

// Dense adjacency (index-based) for the oracle layer; adj[i] lists neighbor
// indices in a fixed deterministic order.
std::vector<std::vector<int>> build_adjacency(const E3CParams& p);

}  // namespace e3c
