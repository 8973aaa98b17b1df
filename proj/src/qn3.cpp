#include "e3c/qn3.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace e3c {

std::vector<QVertex> qnk_neighbors(const QVertex& v) {
    std::vector<QVertex> out;
    out.reserve(2 * v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (int step : {1, v.k - 1}) {
            QVertex w = v;
            w.digits[i] = static_cast<std::uint8_t>((v.digits[i] + step) % v.k);
            if (w != v) out.push_back(w);
        }
    }
    // For k = 2 the two steps per dimension coincide.
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Canonical minimal path: correct differing dimensions in increasing order.
static QPath dimension_order_path(const QVertex& u, const QVertex& v) {
    QPath path{u};
    QVertex cur = u;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (cur.digits[i] != v.digits[i]) {
            cur.digits[i] = v.digits[i];
            path.push_back(cur);
        }
    }
    return path;
}

QPath shortest_path_q3(const QVertex& u, const QVertex& v,
                       const std::vector<QVertex>& avoid) {
    if (u.k != 3 || v.k != 3) throw domain_error("shortest_path_q3 requires k = 3");
    if (u.size() != v.size()) throw dimension_error("length mismatch");
    if (u == v) return {u};

    QPath canonical = dimension_order_path(u, v);
    auto blocked = [&](const QVertex& x) {
        if (x == u || x == v) return false;  // endpoints are never restricted
        return std::find(avoid.begin(), avoid.end(), x) != avoid.end();
    };
    bool clean = std::none_of(canonical.begin(), canonical.end(), blocked);
    if (clean) return canonical;

    // Fall back to BFS over the surviving graph, demanding minimal length.
    int want = lee_distance(u, v);
    std::map<QVertex, QVertex> parent;
    std::deque<QVertex> frontier{u};
    parent.emplace(u, u);
    while (!frontier.empty()) {
        QVertex cur = frontier.front();
        frontier.pop_front();
        if (cur == v) break;
        for (const QVertex& nb : qnk_neighbors(cur)) {
            if (blocked(nb) || parent.count(nb)) continue;
            parent.emplace(nb, cur);
            frontier.push_back(nb);
        }
    }
    if (!parent.count(v))
        throw construction_error("avoid set disconnects the pair");
    QPath path;
    for (QVertex cur = v;; cur = parent.at(cur)) {
        path.push_back(cur);
        if (cur == u) break;
    }
    std::reverse(path.begin(), path.end());
    if (static_cast<int>(path.size()) - 1 != want)
        throw construction_error("avoid set blocks all minimal paths");
    return path;
}

std::vector<QPath> disjoint_paths_q3(const QVertex& u, const QVertex& v) {
    if (u.k != 3 || v.k != 3) throw domain_error("disjoint_paths_q3 requires k = 3");
    if (u.size() != v.size()) throw dimension_error("length mismatch");
    if (u == v) throw domain_error("endpoints must differ");

    std::vector<int> diff, same;
    for (std::size_t i = 0; i < u.size(); ++i)
        (u.digits[i] != v.digits[i] ? diff : same).push_back(static_cast<int>(i));
    const int h = static_cast<int>(diff.size());

    auto correct = [&](QPath& path, QVertex& cur, int dim) {
        cur.digits[dim] = v.digits[dim];
        path.push_back(cur);
    };

    std::vector<QPath> out;
    // h minimal paths: correct the differing dimensions in rotated order
    // starting at each of them in turn.
    for (int j = 0; j < h; ++j) {
        QPath path{u};
        QVertex cur = u;
        for (int a = 0; a < h; ++a) correct(path, cur, diff[(j + a) % h]);
        out.push_back(std::move(path));
    }
    // h paths of length l+1: move the start dimension to the third residue
    // first, correct everything else, fix it up last.  Interior vertices keep
    // that dimension at the third residue, which no other path visits.
    for (int j = 0; j < h; ++j) {
        int d0 = diff[j];
        auto third = static_cast<std::uint8_t>(3 - u.digits[d0] - v.digits[d0]);
        QPath path{u};
        QVertex cur = u;
        cur.digits[d0] = third;
        path.push_back(cur);
        for (int a = 1; a < h; ++a) correct(path, cur, diff[(j + a) % h]);
        correct(path, cur, d0);
        out.push_back(std::move(path));
    }
    // 2(n-h) detour paths of length l+2 through the agreeing dimensions.
    for (int dim : same) {
        for (int step : {1, 2}) {
            QPath path{u};
            QVertex cur = u;
            cur.digits[dim] = static_cast<std::uint8_t>((u.digits[dim] + step) % 3);
            path.push_back(cur);
            for (int d : diff) correct(path, cur, d);
            cur.digits[dim] = u.digits[dim];
            path.push_back(cur);
            out.push_back(std::move(path));
        }
    }
    return out;
}

}  // namespace e3c
