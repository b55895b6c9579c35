#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "coxpoly/errors.hpp"
#include "coxpoly/int_matrix.hpp"

namespace coxpoly {

// Finite directed multigraph. Vertices are 1..n; parallel arrows are allowed
// and meaningful (each contributes its own paths).
struct Quiver {
    int n = 0;
    std::vector<std::pair<int, int>> arrows;  // (source, target), 1-based

    Quiver() = default;
    Quiver(int vertex_count, std::vector<std::pair<int, int>> arcs)
        : n(vertex_count), arrows(std::move(arcs)) {
        validate();
    }

    void validate() const {
        if (n < 0) throw InvalidQuiverError("negative vertex count");
        for (const auto& [s, t] : arrows)
            if (s < 1 || s > n || t < 1 || t > n)
                throw InvalidQuiverError("arrow (" + std::to_string(s) + "," + std::to_string(t) +
                                         ") out of range for n=" + std::to_string(n));
    }

    friend bool operator==(const Quiver& a, const Quiver& b) {
        return a.n == b.n && a.arrows == b.arrows;
    }
};

namespace detail {

// Kahn topological sort; empty result means the quiver has a directed cycle.
inline std::vector<int> topological_order(const Quiver& q) {
    std::vector<int> indeg(q.n + 1, 0);
    std::vector<std::vector<int>> out(q.n + 1);
    for (const auto& [s, t] : q.arrows) {
        ++indeg[t];
        out[s].push_back(t);
    }
    std::vector<int> order;
    std::vector<int> ready;
    for (int v = 1; v <= q.n; ++v)
        if (indeg[v] == 0) ready.push_back(v);
    while (!ready.empty()) {
        int v = ready.back();
        ready.pop_back();
        order.push_back(v);
        for (int w : out[v])
            if (--indeg[w] == 0) ready.push_back(w);
    }
    if (static_cast<int>(order.size()) != q.n) order.clear();
    return order;
}

// Undirected simple-graph adjacency, or throws NotATree on loops/multi-edges.
// Treats a 2-cycle s->t, t->s as a multi-edge.
inline std::vector<std::vector<int>> tree_adjacency(const Quiver& q) {
    std::set<std::pair<int, int>> seen;
    std::vector<std::vector<int>> adj(q.n + 1);
    for (const auto& [s, t] : q.arrows) {
        if (s == t) throw NotATreeError("loop at vertex " + std::to_string(s));
        auto e = std::minmax(s, t);
        if (!seen.insert({e.first, e.second}).second)
            throw NotATreeError("repeated edge {" + std::to_string(s) + "," + std::to_string(t) +
                                "}");
        adj[s].push_back(t);
        adj[t].push_back(s);
    }
    if (static_cast<int>(seen.size()) != q.n - 1)
        throw NotATreeError("a tree on " + std::to_string(q.n) + " vertices has " +
                            std::to_string(q.n - 1) + " edges, got " +
                            std::to_string(seen.size()));
    // connectivity
    if (q.n > 0) {
        std::vector<char> vis(q.n + 1, 0);
        std::vector<int> stack{1};
        vis[1] = 1;
        int count = 0;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            ++count;
            for (int w : adj[v])
                if (!vis[w]) {
                    vis[w] = 1;
                    stack.push_back(w);
                }
        }
        if (count != q.n) throw NotATreeError("underlying graph is disconnected");
    }
    return adj;
}

}  // namespace detail

inline bool is_acyclic(const Quiver& q) {
    return q.n == 0 || !detail::topological_order(q).empty();
}

// Cartan matrix of the path algebra: entry (i,j) counts directed paths from
// vertex j to vertex i, the trivial path included. Column j is the dimension
// vector of the j-th indecomposable projective.
inline IntMatrix cartan_matrix(const Quiver& q) {
    q.validate();
    const auto order = detail::topological_order(q);
    if (q.n > 0 && order.empty()) throw CyclicQuiverError("quiver has a directed cycle");
    std::vector<std::vector<int>> out(q.n + 1);
    for (const auto& [s, t] : q.arrows) out[s].push_back(t);

    IntMatrix c(q.n, q.n);
    IntVec count(q.n + 1);
    for (int j = 1; j <= q.n; ++j) {
        std::fill(count.begin(), count.end(), 0);
        count[j] = 1;
        for (int v : order) {
            if (count[v] == 0) continue;
            for (int w : out[v]) count[w] += count[v];
        }
        for (int i = 1; i <= q.n; ++i) c.at(i - 1, j - 1) = count[i];
    }
    return c;
}

// Path quiver 1 -> 2 -> ... -> n.
inline Quiver linear_quiver(int n) {
    if (n < 1) throw InvalidQuiverError("linear quiver needs at least one vertex");
    std::vector<std::pair<int, int>> arrows;
    for (int v = 1; v < n; ++v) arrows.emplace_back(v, v + 1);
    return Quiver(n, std::move(arrows));
}

// Star quiver with one branch per entry of branch_lengths. Every arrow points
// toward the centre, which gets the last index. Within a branch, vertices are
// numbered starting next to the centre and moving outward, so each branch is
// the directed path  base+len -> ... -> base+1 -> centre.
inline Quiver build_star(const std::vector<int>& branch_lengths) {
    if (branch_lengths.empty()) throw EmptyInputError("star needs at least one branch");
    int total = 0;
    for (int len : branch_lengths) {
        if (len < 1) throw InvalidWeightsError("branch length must be >= 1");
        total += len;
    }
    const int centre = total + 1;
    std::vector<std::pair<int, int>> arrows;
    int base = 0;
    for (int len : branch_lengths) {
        arrows.emplace_back(base + 1, centre);
        for (int k = 1; k < len; ++k) arrows.emplace_back(base + k + 1, base + k);
        base += len;
    }
    return Quiver(centre, std::move(arrows));
}

// Shape of the underlying tree by valency analysis.
struct LinearA {
    int n;  // vertex count
    friend bool operator==(const LinearA& a, const LinearA& b) { return a.n == b.n; }
};
struct StarT {
    int a, b, c;  // branch lengths, ascending
    friend bool operator==(const StarT& x, const StarT& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c;
    }
};
struct OtherTree {
    friend bool operator==(const OtherTree&, const OtherTree&) { return true; }
};
using TreeShape = std::variant<LinearA, StarT, OtherTree>;

inline TreeShape tree_shape(const Quiver& q) {
    q.validate();
    if (q.n == 0) throw NotATreeError("empty quiver");
    const auto adj = detail::tree_adjacency(q);

    int max_val = 0, tri = 0, centre = 0;
    for (int v = 1; v <= q.n; ++v) {
        const int d = static_cast<int>(adj[v].size());
        max_val = std::max(max_val, d);
        if (d == 3) {
            ++tri;
            centre = v;
        }
    }
    if (max_val <= 2) return LinearA{q.n};
    if (max_val == 3 && tri == 1) {
        std::array<int, 3> len{};
        int k = 0;
        for (int start : adj[centre]) {
            int cnt = 1, prev = centre, cur = start;
            for (;;) {
                int next = -1;
                for (int w : adj[cur])
                    if (w != prev) next = w;
                if (next < 0) break;
                prev = cur;
                cur = next;
                ++cnt;
            }
            len[k++] = cnt;
        }
        std::sort(len.begin(), len.end());
        return StarT{len[0], len[1], len[2]};
    }
    return OtherTree{};
}

// All 2^e orientations of a tree's edge set.
inline std::vector<Quiver> all_orientations(const Quiver& q) {
    q.validate();
    detail::tree_adjacency(q);  // shape check only
    const std::size_t e = q.arrows.size();
    if (e > 30) throw InvalidQuiverError("too many edges to enumerate orientations");
    std::vector<Quiver> out;
    out.reserve(std::size_t(1) << e);
    for (std::size_t mask = 0; mask < (std::size_t(1) << e); ++mask) {
        Quiver o = q;
        for (std::size_t i = 0; i < e; ++i)
            if (mask & (std::size_t(1) << i)) std::swap(o.arrows[i].first, o.arrows[i].second);
        out.push_back(std::move(o));
    }
    return out;
}

}  // namespace coxpoly
