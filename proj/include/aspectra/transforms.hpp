#ifndef ASPECTRA_TRANSFORMS_HPP
#define ASPECTRA_TRANSFORMS_HPP

#include <string>
#include <utility>
#include <vector>

#include "aspectra/graph.hpp"

namespace aspectra {

struct RewriteResult {
    Graph graph;
    std::string applied;  // human-readable list of removed/added edges
};

// Moves every edge vw (w in `moved`) to uw. Requires `moved` nonempty and
// contained in N(v) \ (N(u) u {u}).
RewriteResult graft(const Graph& g, int u, int v, const std::vector<int>& moved);

// Deletes the cut-edge uv, identifies u with v, and re-attaches v as a
// pendant neighbor of u. Vertex count and labels are preserved.
RewriteResult contract_cut_edge_with_pendant(const Graph& g, int u, int v);

// Removes edges uv and wy, adds uw and vy. The four vertices are an ordered
// quadruple; the caller picks which pairing of endpoints forms the new edges.
RewriteResult two_switch(const Graph& g, int u, int v, int w, int y);

// Replaces edge uv by the two-edge path u - (new vertex) - v.
RewriteResult subdivide(const Graph& g, int u, int v);

// Base graph with pendant paths of k and l edges at adjacent vertices u and v.
// Returns the (k,l) member and the rebalanced (k-1,l+1) member; requires
// k - l >= 2. New vertices are labeled base first, then the u-path outward,
// then the v-path.
struct PendantPathShift {
    Graph before;  // paths (k, l)
    Graph after;   // paths (k-1, l+1)
};
PendantPathShift shift_pendant_paths(const Graph& base, int u, int v, int k, int l);

}  // namespace aspectra

#endif
