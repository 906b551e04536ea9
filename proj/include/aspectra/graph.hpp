#ifndef ASPECTRA_GRAPH_HPP
#define ASPECTRA_GRAPH_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace aspectra {

// Simple undirected graph on vertices 0..n-1. Immutable after construction,
// so values can be shared freely across threads.
class Graph {
  public:
    explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n)) {}
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    // Edges normalized to u < v, sorted lexicographically.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    bool adjacent(int u, int v) const;
    bool is_connected() const;

    bool operator==(const Graph& rhs) const { return n_ == rhs.n_ && edges_ == rhs.edges_; }

  private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

// Distances from src; -1 where unreachable.
std::vector<int> bfs_distances(const Graph& g, int src);

// Max shortest-path distance; nullopt iff g is disconnected (or empty).
std::optional<int> diameter(const Graph& g);

// m - n + 1 for connected g; throws DisconnectedGraph otherwise.
int cyclomatic_number(const Graph& g);

// Result of stripping pendant vertices down to the minimal c-cyclic subgraph.
// original_label[i] is the vertex of the input graph that base vertex i came from.
struct BaseResult {
    Graph graph;
    std::vector<int> original_label;
};
BaseResult base(const Graph& g);

enum class PathKind { pendant, internal, geodesic };

struct PathDescriptor {
    std::vector<int> vertices;
    PathKind kind = PathKind::geodesic;
    int length() const { return static_cast<int>(vertices.size()) - 1; }
};

// One shortest path realizing the diameter; deterministic: smallest endpoint
// pair (s,t) with s < t, then lexicographically smallest vertex sequence.
PathDescriptor find_diameter_path(const Graph& g);

// Maximal pendant paths root..leaf: root degree >= 3, interior degree 2, leaf
// degree 1. A graph that is itself a path has none.
std::vector<PathDescriptor> pendant_paths(const Graph& g);

// Proper internal paths v1..vk (v1 != vk): end degrees >= 3, interior degree 2.
// Cycle-shaped internal paths (v1 = vk) are not listed; use
// is_internal_path_edge for the edge-level predicate that covers both shapes.
std::vector<PathDescriptor> internal_paths(const Graph& g);

// True iff the chain of degree-2 vertices through uv terminates at vertices of
// degree >= 3 on both sides (possibly the same vertex).
bool is_internal_path_edge(const Graph& g, int u, int v);

// Identifies vertex u of g with vertex w of h. Labels of g are preserved;
// the remaining vertices of h get fresh labels after g in label order.
Graph coalesce(const Graph& g, int u, const Graph& h, int w);

// Connected components as separate graphs (labels compacted per component).
std::vector<Graph> components(const Graph& g);

}  // namespace aspectra

#endif
