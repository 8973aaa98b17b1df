#pragma once

#include <vector>

#include "e3c/trits.hpp"

namespace e3c {

// Thrown when a routing recipe is invoked outside its guarantees (e.g. the
// avoid set blocks every minimal path).
struct construction_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown on plainly invalid arguments (u == v where distinct endpoints are
// required, and the like).
struct domain_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

using QVertex = TritString;
using QPath = std::vector<QVertex>;

// All 2n neighbors of v in the k-ary n-cube (2n distinct vertices for k >= 3).
std::vector<QVertex> qnk_neighbors(const QVertex& v);

// Deterministic shortest path in Q_n^3: differing dimensions are corrected in
// increasing dimension order.  When `avoid` is non-empty and intersects the
// canonical path, a breadth-first search over the surviving graph is used; if
// no path of length lee_distance(u, v) survives, a construction_error is
// raised (the avoid set only ever restricts intermediate vertices).
QPath shortest_path_q3(const QVertex& u, const QVertex& v,
                       const std::vector<QVertex>& avoid = {});

// 2n internally disjoint u-v paths in Q_n^3 whose length multiset is exactly
// {l x h, (l+1) x h, (l+2) x 2(n-h)} with l = h = Hamming distance.  The
// first-step edges cover all 2n neighbors of u and the last-step edges cover
// all 2n neighbors of v.
std::vector<QPath> disjoint_paths_q3(const QVertex& u, const QVertex& v);

}  // namespace e3c
