#include "aspectra/transforms.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "aspectra/errors.hpp"

namespace aspectra {

namespace {

std::pair<int, int> norm(int u, int v) { return u < v ? std::make_pair(u, v) : std::make_pair(v, u); }

std::string edge_list_string(const std::vector<std::pair<int, int>>& removed,
                             const std::vector<std::pair<int, int>>& added) {
    std::ostringstream os;
    os << "-{";
    for (std::size_t i = 0; i < removed.size(); ++i)
        os << (i ? "," : "") << removed[i].first << "-" << removed[i].second;
    os << "} +{";
    for (std::size_t i = 0; i < added.size(); ++i)
        os << (i ? "," : "") << added[i].first << "-" << added[i].second;
    os << "}";
    return os.str();
}

}  // namespace

RewriteResult graft(const Graph& g, int u, int v, const std::vector<int>& moved) {
    if (u == v) throw InvalidMoveSet("u and v must differ");
    if (moved.empty()) throw InvalidMoveSet("moved set must be nonempty");
    std::set<int> moveset(moved.begin(), moved.end());
    for (int w : moveset) {
        if (!g.adjacent(v, w)) throw InvalidMoveSet("moved vertex not a neighbor of v");
        if (w == u || g.adjacent(u, w)) throw InvalidMoveSet("moved vertex already attached to u");
    }
    std::vector<std::pair<int, int>> edges;
    std::vector<std::pair<int, int>> removed, added;
    for (auto [a, b] : g.edges()) {
        bool moves = (a == v && moveset.count(b)) || (b == v && moveset.count(a));
        if (moves) {
            int w = a == v ? b : a;
            removed.push_back(norm(v, w));
            added.push_back(norm(u, w));
            edges.push_back(norm(u, w));
        } else {
            edges.emplace_back(a, b);
        }
    }
    return {Graph(g.vertex_count(), edges), edge_list_string(removed, added)};
}

RewriteResult contract_cut_edge_with_pendant(const Graph& g, int u, int v) {
    if (!g.adjacent(u, v)) throw EdgeNotFound();
    // uv is a cut-edge iff removing it separates u from v
    {
        std::vector<std::pair<int, int>> cut;
        for (auto [a, b] : g.edges())
            if (norm(a, b) != norm(u, v)) cut.emplace_back(a, b);
        Graph without(g.vertex_count(), cut);
        auto dist = bfs_distances(without, u);
        if (dist[static_cast<std::size_t>(v)] >= 0) throw NotACutEdge();
    }
    // neighbors of v migrate to u; v survives as the new pendant at u
    std::vector<std::pair<int, int>> edges;
    for (auto [a, b] : g.edges()) {
        if (norm(a, b) == norm(u, v)) continue;
        int a2 = a == v ? u : a;
        int b2 = b == v ? u : b;
        edges.push_back(norm(a2, b2));
    }
    edges.push_back(norm(u, v));
    std::ostringstream os;
    os << "contract " << u << "-" << v << ", pendant at " << u;
    return {Graph(g.vertex_count(), edges), os.str()};
}

RewriteResult two_switch(const Graph& g, int u, int v, int w, int y) {
    std::set<int> distinct{u, v, w, y};
    if (distinct.size() != 4) throw SwitchConflict("the four endpoints must be distinct");
    if (!g.adjacent(u, v) || !g.adjacent(w, y)) throw EdgeNotFound();
    if (g.adjacent(u, w)) throw SwitchConflict("edge u-w already present");
    if (g.adjacent(v, y)) throw SwitchConflict("edge v-y already present");
    std::vector<std::pair<int, int>> edges;
    for (auto [a, b] : g.edges()) {
        if (norm(a, b) == norm(u, v) || norm(a, b) == norm(w, y)) continue;
        edges.emplace_back(a, b);
    }
    edges.push_back(norm(u, w));
    edges.push_back(norm(v, y));
    return {Graph(g.vertex_count(), edges),
            edge_list_string({norm(u, v), norm(w, y)}, {norm(u, w), norm(v, y)})};
}

RewriteResult subdivide(const Graph& g, int u, int v) {
    if (!g.adjacent(u, v)) throw EdgeNotFound();
    int mid = g.vertex_count();
    std::vector<std::pair<int, int>> edges;
    for (auto [a, b] : g.edges()) {
        if (norm(a, b) == norm(u, v)) continue;
        edges.emplace_back(a, b);
    }
    edges.push_back(norm(u, mid));
    edges.push_back(norm(v, mid));
    std::ostringstream os;
    os << "subdivide " << u << "-" << v << " through " << mid;
    return {Graph(g.vertex_count() + 1, edges), os.str()};
}

namespace {

Graph attach_two_paths(const Graph& base, int u, int v, int len_u, int len_v) {
    std::vector<std::pair<int, int>> edges = base.edges();
    int next = base.vertex_count();
    int cur = u;
    for (int i = 0; i < len_u; ++i) {
        edges.emplace_back(std::min(cur, next), std::max(cur, next));
        cur = next++;
    }
    cur = v;
    for (int i = 0; i < len_v; ++i) {
        edges.emplace_back(std::min(cur, next), std::max(cur, next));
        cur = next++;
    }
    return Graph(next, edges);
}

}  // namespace

PendantPathShift shift_pendant_paths(const Graph& base, int u, int v, int k, int l) {
    if (!base.adjacent(u, v)) throw InvalidShift("u and v must be adjacent in the base graph");
    if (l < 0 || k - l < 2) throw InvalidShift("requires k - l >= 2");
    return {attach_two_paths(base, u, v, k, l), attach_two_paths(base, u, v, k - 1, l + 1)};
}

}  // namespace aspectra
