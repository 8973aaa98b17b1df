#pragma once

#include <string>
#include <utility>
#include <vector>

#include "e3c/e3c.hpp"

namespace e3c {

// Classification of a distinct vertex pair into one of the 15 construction
// cases.  The case index is determined by which blocks differ and whether the
// d digits agree; the subcase is determined by the (normalized) d values:
// for d = d' the subcase is d + 1; for d != d' the unordered pair {d, d'}
// maps (0,1) -> 1, (0,2) -> 2, (1,2) -> 3.
struct CaseLabel {
    bool eqA = false, eqB = false, eqC = false;
    std::pair<int, int> dpair{0, 0};  // normalized so first <= second
    int lemma = 0;                    // case index 1..15
    int subcase = 0;                  // 1..3
    int bound = 0;                    // maximum path length for this case
    bool swapped = false;  // endpoints were exchanged during normalization

    bool operator==(const CaseLabel&) const = default;
};

using EPath = std::vector<E3CVertex>;

// 2r+2 internally disjoint source-target paths plus the case that produced
// them.  Every path starts at source, ends at target, uses only valid edges,
// and no two paths share a vertex other than the endpoints.
struct PathSystem {
    E3CVertex source, target;
    std::vector<EPath> paths;
    CaseLabel label;
};

// A vertex pair plus a deleted-vertex set forcing their surviving distance to
// at least n+3: u = 0^r 0^s 0^t 2, v = 1^r 1^s 1^t 0, and faults consisting of
// u's 2r neighbors inside its own subcube together with its d=1 external
// neighbor (2r+1 vertices in total).
struct FaultWitness {
    E3CVertex u, v;
    std::vector<E3CVertex> faults;
};

// Raised when a constructed system violates its own contract (disjointness,
// validity, count, or length bound).  Must never fire in released builds; it
// exists so the test suite reports precise counterexamples.
struct construction_defect : construction_error {
    construction_defect(const std::string& what, CaseLabel lab)
        : construction_error(what), label(std::move(lab)) {}
    CaseLabel label;
};

// Classify a distinct pair; throws domain_error when u == v.
CaseLabel classify_pair(const E3CParams& p, const E3CVertex& u,
                        const E3CVertex& v);

// The per-case maximum path length; always <= r+s+t+6 = n+5.
int case_bound(const CaseLabel& label, const E3CParams& p);

// Construct 2r+2 internally disjoint u-v paths, each of length at most
// classify_pair(u, v).bound.  Requires 1 <= r <= s <= t (callers with
// unordered parameters route through block_isomorphism first) and u != v.
PathSystem construct_path_system(const E3CParams& p, const E3CVertex& u,
                                 const E3CVertex& v);

// The canonical worst-case pair and fault set described above.
FaultWitness fault_witness(const E3CParams& p);

}  // namespace e3c
