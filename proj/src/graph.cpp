#include "aspectra/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "aspectra/errors.hpp"

namespace aspectra {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
    if (n < 0) throw InvalidGraph("negative vertex count");
    adj_.resize(static_cast<std::size_t>(n));
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) throw InvalidGraph("edge endpoint out of range");
        if (u == v) throw InvalidGraph("self-loop");
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second) throw InvalidGraph("multi-edge");
    }
    edges_.assign(seen.begin(), seen.end());
    for (auto [u, v] : edges_) {
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (v < 0 || v >= n_) throw VertexOutOfRange(v);
    return adj_[static_cast<std::size_t>(v)];
}

bool Graph::adjacent(int u, int v) const {
    const auto& nbrs = neighbors(u);
    if (v < 0 || v >= n_) throw VertexOutOfRange(v);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

bool Graph::is_connected() const {
    if (n_ == 0) return false;
    auto dist = bfs_distances(*this, 0);
    return std::find(dist.begin(), dist.end(), -1) == dist.end();
}

std::vector<int> bfs_distances(const Graph& g, int src) {
    std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
    dist[static_cast<std::size_t>(src)] = 0;
    std::deque<int> queue{src};
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int w : g.neighbors(u)) {
            if (dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

std::optional<int> diameter(const Graph& g) {
    if (g.vertex_count() == 0) return std::nullopt;
    int best = 0;
    for (int s = 0; s < g.vertex_count(); ++s) {
        auto dist = bfs_distances(g, s);
        for (int d : dist) {
            if (d < 0) return std::nullopt;
            best = std::max(best, d);
        }
    }
    return best;
}

int cyclomatic_number(const Graph& g) {
    if (!g.is_connected()) throw DisconnectedGraph();
    return g.edge_count() - g.vertex_count() + 1;
}

BaseResult base(const Graph& g) {
    if (!g.is_connected()) throw DisconnectedGraph();
    if (cyclomatic_number(g) < 1) throw TreeHasNoBase();
    int n = g.vertex_count();
    std::vector<bool> alive(static_cast<std::size_t>(n), true);
    std::vector<int> deg(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
    std::deque<int> leaves;
    for (int v = 0; v < n; ++v)
        if (deg[static_cast<std::size_t>(v)] == 1) leaves.push_back(v);
    while (!leaves.empty()) {
        int v = leaves.front();
        leaves.pop_front();
        alive[static_cast<std::size_t>(v)] = false;
        for (int w : g.neighbors(v)) {
            if (!alive[static_cast<std::size_t>(w)]) continue;
            if (--deg[static_cast<std::size_t>(w)] == 1) leaves.push_back(w);
        }
    }
    std::vector<int> original;
    std::vector<int> new_label(static_cast<std::size_t>(n), -1);
    for (int v = 0; v < n; ++v) {
        if (alive[static_cast<std::size_t>(v)]) {
            new_label[static_cast<std::size_t>(v)] = static_cast<int>(original.size());
            original.push_back(v);
        }
    }
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges())
        if (alive[static_cast<std::size_t>(u)] && alive[static_cast<std::size_t>(v)])
            edges.emplace_back(new_label[static_cast<std::size_t>(u)], new_label[static_cast<std::size_t>(v)]);
    return {Graph(static_cast<int>(original.size()), edges), std::move(original)};
}

PathDescriptor find_diameter_path(const Graph& g) {
    if (!g.is_connected()) throw DisconnectedGraph();
    int n = g.vertex_count();
    int diam = *diameter(g);
    // Smallest endpoint pair realizing the diameter.
    int s = -1, t = -1;
    for (int a = 0; a < n && s < 0; ++a) {
        auto dist = bfs_distances(g, a);
        for (int b = a + 1; b < n; ++b) {
            if (dist[static_cast<std::size_t>(b)] == diam) {
                s = a;
                t = b;
                break;
            }
        }
    }
    PathDescriptor path;
    path.kind = PathKind::geodesic;
    if (s < 0) {  // n == 1 or diameter 0
        path.vertices = {0};
        return path;
    }
    // Walk from s along strictly decreasing distance-to-t, preferring the
    // smallest neighbor label: lexicographically smallest geodesic.
    auto dist_t = bfs_distances(g, t);
    int cur = s;
    path.vertices.push_back(cur);
    while (cur != t) {
        for (int w : g.neighbors(cur)) {  // neighbors sorted ascending
            if (dist_t[static_cast<std::size_t>(w)] == dist_t[static_cast<std::size_t>(cur)] - 1) {
                cur = w;
                break;
            }
        }
        path.vertices.push_back(cur);
    }
    return path;
}

std::vector<PathDescriptor> pendant_paths(const Graph& g) {
    std::vector<PathDescriptor> out;
    for (int leaf = 0; leaf < g.vertex_count(); ++leaf) {
        if (g.degree(leaf) != 1) continue;
        std::vector<int> walk{leaf};
        int prev = leaf;
        int cur = g.neighbors(leaf)[0];
        while (g.degree(cur) == 2) {
            int nxt = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1] : g.neighbors(cur)[0];
            walk.push_back(cur);
            prev = cur;
            cur = nxt;
        }
        if (g.degree(cur) < 3) continue;  // whole graph is a path
        walk.push_back(cur);
        std::reverse(walk.begin(), walk.end());  // root first
        out.push_back({std::move(walk), PathKind::pendant});
    }
    return out;
}

std::vector<PathDescriptor> internal_paths(const Graph& g) {
    std::vector<PathDescriptor> out;
    for (int root = 0; root < g.vertex_count(); ++root) {
        if (g.degree(root) < 3) continue;
        for (int next : g.neighbors(root)) {
            std::vector<int> walk{root};
            int prev = root;
            int cur = next;
            while (g.degree(cur) == 2) {
                walk.push_back(cur);
                int nxt = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1] : g.neighbors(cur)[0];
                prev = cur;
                cur = nxt;
            }
            if (g.degree(cur) < 3 || cur == root) continue;
            walk.push_back(cur);
            if (walk.front() > walk.back()) continue;  // keep one direction
            if (walk.front() == walk.back()) continue;
            out.push_back({std::move(walk), PathKind::internal});
        }
    }
    // Dedupe length-1 paths found from both ends (root < end kept once) and
    // order deterministically.
    std::sort(out.begin(), out.end(),
              [](const PathDescriptor& a, const PathDescriptor& b) { return a.vertices < b.vertices; });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const PathDescriptor& a, const PathDescriptor& b) { return a.vertices == b.vertices; }),
              out.end());
    return out;
}

Graph coalesce(const Graph& g, int u, const Graph& h, int w) {
    if (u < 0 || u >= g.vertex_count()) throw VertexOutOfRange(u);
    if (w < 0 || w >= h.vertex_count()) throw VertexOutOfRange(w);
    std::vector<int> relabel(static_cast<std::size_t>(h.vertex_count()));
    int next = g.vertex_count();
    for (int v = 0; v < h.vertex_count(); ++v)
        relabel[static_cast<std::size_t>(v)] = v == w ? u : next++;
    std::vector<std::pair<int, int>> edges = g.edges();
    for (auto [a, b] : h.edges())
        edges.emplace_back(relabel[static_cast<std::size_t>(a)], relabel[static_cast<std::size_t>(b)]);
    return Graph(next, edges);
}

std::vector<Graph> components(const Graph& g) {
    std::vector<Graph> out;
    std::vector<bool> seen(static_cast<std::size_t>(g.vertex_count()), false);
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        auto dist = bfs_distances(g, s);
        std::vector<int> members;
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (dist[static_cast<std::size_t>(v)] >= 0) {
                seen[static_cast<std::size_t>(v)] = true;
                members.push_back(v);
            }
        }
        std::vector<int> index(static_cast<std::size_t>(g.vertex_count()), -1);
        for (std::size_t i = 0; i < members.size(); ++i) index[static_cast<std::size_t>(members[i])] = static_cast<int>(i);
        std::vector<std::pair<int, int>> edges;
        for (auto [a, b] : g.edges())
            if (index[static_cast<std::size_t>(a)] >= 0 && index[static_cast<std::size_t>(b)] >= 0)
                edges.emplace_back(index[static_cast<std::size_t>(a)], index[static_cast<std::size_t>(b)]);
        out.emplace_back(static_cast<int>(members.size()), edges);
    }
    return out;
}

bool is_internal_path_edge(const Graph& g, int u, int v) {
    if (!g.adjacent(u, v)) throw EdgeNotFound();
    // Walk outward from each endpoint through degree-2 vertices; both walks
    // must stop at a vertex of degree >= 3. The step bound covers bare cycles,
    // where the walk would otherwise wrap around forever.
    auto chain_end_degree = [&](int from, int start) {
        int prev = from;
        int cur = start;
        for (int steps = 0; steps <= g.vertex_count() && g.degree(cur) == 2; ++steps) {
            int nxt = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1] : g.neighbors(cur)[0];
            prev = cur;
            cur = nxt;
        }
        return g.degree(cur);
    };
    return chain_end_degree(v, u) >= 3 && chain_end_degree(u, v) >= 3;
}

}  // namespace aspectra
