#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "coxpoly/errors.hpp"
#include "coxpoly/quiver.hpp"

namespace coxpoly {
namespace detail {

// 0-based adjacency lists of an unrooted tree.
using TreeAdj = std::vector<std::vector<int>>;

inline std::string ahu_string(const TreeAdj& adj, int v, int parent) {
    std::vector<std::string> kids;
    for (int w : adj[v])
        if (w != parent) kids.push_back(ahu_string(adj, w, v));
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (const auto& k : kids) s += k;
    s += ")";
    return s;
}

// One or two middle vertices found by stripping leaves.
inline std::vector<int> tree_centers(const TreeAdj& adj) {
    const int n = static_cast<int>(adj.size());
    if (n == 1) return {0};
    std::vector<int> deg(n);
    std::vector<int> layer;
    for (int v = 0; v < n; ++v) {
        deg[v] = static_cast<int>(adj[v].size());
        if (deg[v] <= 1) layer.push_back(v);
    }
    int remaining = n;
    while (remaining > 2) {
        std::vector<int> next;
        remaining -= static_cast<int>(layer.size());
        for (int v : layer)
            for (int w : adj[v])
                if (--deg[w] == 1) next.push_back(w);
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

// Canonical key of a free tree: AHU form rooted at the centre, with distinct
// prefixes for the one-centre and two-centre cases so keys never collide.
inline std::string canonical_tree_key(const TreeAdj& adj) {
    const auto centers = tree_centers(adj);
    if (centers.size() == 1) return "C" + ahu_string(adj, centers[0], -1);
    std::string s1 = ahu_string(adj, centers[0], centers[1]);
    std::string s2 = ahu_string(adj, centers[1], centers[0]);
    if (s2 < s1) std::swap(s1, s2);
    return "B" + s1 + s2;
}

// Rebuilds a rooted tree from one "(...)" group starting at pos; the root of
// the group is appended as a fresh vertex attached to parent (or none).
inline int parse_ahu_group(const std::string& s, std::size_t& pos, int parent, TreeAdj& adj) {
    // s[pos] == '('
    const int v = static_cast<int>(adj.size());
    adj.emplace_back();
    if (parent >= 0) {
        adj[v].push_back(parent);
        adj[parent].push_back(v);
    }
    ++pos;
    while (s[pos] == '(') parse_ahu_group(s, pos, v, adj);
    ++pos;  // ')'
    return v;
}

inline TreeAdj tree_from_key(const std::string& key) {
    TreeAdj adj;
    std::size_t pos = 1;
    const int r1 = parse_ahu_group(key, pos, -1, adj);
    if (key[0] == 'B') {
        const int r2 = parse_ahu_group(key, pos, -1, adj);
        adj[r1].push_back(r2);
        adj[r2].push_back(r1);
    }
    return adj;
}

// Arrows child -> parent from a DFS rooted at vertex 0; any orientation of a
// tree is acyclic, this one is just fixed.
inline Quiver quiver_from_tree(const TreeAdj& adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<std::pair<int, int>> arrows;
    std::vector<char> vis(n, 0);
    std::vector<int> stack{0};
    vis[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!vis[w]) {
                vis[w] = 1;
                arrows.emplace_back(w + 1, v + 1);
                stack.push_back(w);
            }
    }
    return Quiver(n, std::move(arrows));
}

}  // namespace detail

// One representative quiver per isomorphism class of unlabeled tree on n
// vertices, sorted by canonical form. Built by growing every tree on n-1
// vertices by one leaf and deduplicating; every tree arises this way because
// removing a leaf of a tree on n vertices leaves a tree on n-1.
inline std::vector<Quiver> enumerate_trees(int n) {
    if (n < 1) throw EmptyInputError("tree enumeration needs n >= 1");
    std::map<std::string, detail::TreeAdj> current;
    current.emplace("C()", detail::TreeAdj{{}});
    for (int size = 2; size <= n; ++size) {
        std::map<std::string, detail::TreeAdj> next;
        for (const auto& [key, adj] : current) {
            for (int v = 0; v < size - 1; ++v) {
                detail::TreeAdj grown = adj;
                grown.emplace_back();
                grown[v].push_back(size - 1);
                grown[size - 1].push_back(v);
                std::string k = detail::canonical_tree_key(grown);
                next.try_emplace(std::move(k), std::move(grown));
            }
        }
        current = std::move(next);
    }
    std::vector<Quiver> out;
    out.reserve(current.size());
    for (const auto& [key, adj] : current)
        out.push_back(detail::quiver_from_tree(detail::tree_from_key(key)));
    return out;
}

}  // namespace coxpoly
