#ifndef ASPECTRA_ISOMORPHISM_HPP
#define ASPECTRA_ISOMORPHISM_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "aspectra/graph.hpp"

namespace aspectra {

// Canonical adjacency encoding: upper-triangle bits (row-major, i < j) of the
// graph relabeled by the canonical permutation. Equal forms <=> isomorphic.
struct CanonicalForm {
    int n = 0;
    std::vector<std::uint64_t> bits;

    bool operator==(const CanonicalForm& rhs) const { return n == rhs.n && bits == rhs.bits; }
    bool operator<(const CanonicalForm& rhs) const {
        if (n != rhs.n) return n < rhs.n;
        return bits < rhs.bits;
    }
};

// Exact canonical form by color refinement plus individualization search.
// Intended for small graphs (enumeration and family checks); requires n <= 64.
CanonicalForm canonical_form(const Graph& g);

// The relabeled representative whose adjacency encoding equals canonical_form.
Graph canonical_graph(const Graph& g);

Graph graph_from_canonical(const CanonicalForm& form);

bool is_isomorphic(const Graph& a, const Graph& b);

namespace detail {

// Allocation-light core used by the enumeration scan: graphs given as
// per-vertex adjacency bitmasks, n <= 16, code packed into 128 bits
// (upper triangle row-major, bit index increasing from the LSB).
unsigned __int128 canon_code128(std::span<const std::uint16_t> adj);

}  // namespace detail

}  // namespace aspectra

#endif
