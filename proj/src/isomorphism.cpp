#include "aspectra/isomorphism.hpp"

#include <algorithm>
#include <array>
#include <cstring>

#include "aspectra/errors.hpp"

namespace aspectra {

namespace {

constexpr int kMaxN = 64;
constexpr int kMaxWords = (kMaxN * (kMaxN - 1) / 2 + 63) / 64;

struct Code {
    std::array<std::uint64_t, kMaxWords> words{};
    int nwords = 0;

    bool less_than(const Code& rhs) const {
        for (int i = 0; i < nwords; ++i) {
            if (words[static_cast<std::size_t>(i)] != rhs.words[static_cast<std::size_t>(i)])
                return words[static_cast<std::size_t>(i)] < rhs.words[static_cast<std::size_t>(i)];
        }
        return false;
    }
};

// Individualization-refinement canonical labeling over adjacency bitmasks.
struct Canonizer {
    int n;
    const std::uint64_t* adj;
    Code best;
    std::array<int, kMaxN> best_perm{};  // best_perm[new] = old
    bool have_best = false;

    // Signature buffer reused across refinement rounds.
    struct Sig {
        int len;
        std::array<int, kMaxN + 1> vals;
    };
    std::array<Sig, kMaxN> sig;

    explicit Canonizer(int n_, const std::uint64_t* adj_) : n(n_), adj(adj_) {}

    int cell_count(const std::array<int, kMaxN>& colors) const {
        int mx = -1;
        for (int v = 0; v < n; ++v) mx = std::max(mx, colors[static_cast<std::size_t>(v)]);
        return mx + 1;
    }

    // Stable 1-dimensional color refinement; colors keep ordered-cell semantics.
    void refine(std::array<int, kMaxN>& colors) {
        auto& sigs = sig;
        int ncells = cell_count(colors);
        while (true) {
            for (int v = 0; v < n; ++v) {
                Sig& s = sigs[static_cast<std::size_t>(v)];
                s.len = 1;
                s.vals[0] = colors[static_cast<std::size_t>(v)];
                std::uint64_t m = adj[v];
                while (m) {
                    int w = __builtin_ctzll(m);
                    m &= m - 1;
                    // insertion sort into vals[1..]
                    int c = colors[static_cast<std::size_t>(w)];
                    int k = s.len++;
                    while (k > 1 && s.vals[static_cast<std::size_t>(k - 1)] > c) {
                        s.vals[static_cast<std::size_t>(k)] = s.vals[static_cast<std::size_t>(k - 1)];
                        --k;
                    }
                    s.vals[static_cast<std::size_t>(k)] = c;
                }
            }
            std::array<int, kMaxN> order;
            for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
            std::sort(order.begin(), order.begin() + n, [&](int a, int b) {
                const Sig& sa = sigs[static_cast<std::size_t>(a)];
                const Sig& sb = sigs[static_cast<std::size_t>(b)];
                int len = std::min(sa.len, sb.len);
                for (int i = 0; i < len; ++i) {
                    if (sa.vals[static_cast<std::size_t>(i)] != sb.vals[static_cast<std::size_t>(i)])
                        return sa.vals[static_cast<std::size_t>(i)] < sb.vals[static_cast<std::size_t>(i)];
                }
                return sa.len < sb.len;
            });
            std::array<int, kMaxN> next{};
            int color = 0;
            next[static_cast<std::size_t>(order[0])] = 0;
            for (int i = 1; i < n; ++i) {
                const Sig& prev = sigs[static_cast<std::size_t>(order[static_cast<std::size_t>(i - 1)])];
                const Sig& cur = sigs[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])];
                bool same = prev.len == cur.len &&
                            std::equal(prev.vals.begin(), prev.vals.begin() + prev.len, cur.vals.begin());
                if (!same) ++color;
                next[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = color;
            }
            int newcells = color + 1;
            colors = next;
            if (newcells == ncells) return;
            ncells = newcells;
        }
    }

    void emit_leaf(const std::array<int, kMaxN>& colors) {
        std::array<int, kMaxN> inv;  // inv[new] = old
        for (int v = 0; v < n; ++v) inv[static_cast<std::size_t>(colors[static_cast<std::size_t>(v)])] = v;
        Code code;
        code.nwords = (n * (n - 1) / 2 + 63) / 64;
        int bit = 0;
        for (int i = 0; i < n; ++i) {
            std::uint64_t row = adj[inv[static_cast<std::size_t>(i)]];
            for (int j = i + 1; j < n; ++j, ++bit) {
                if (row >> inv[static_cast<std::size_t>(j)] & 1u)
                    code.words[static_cast<std::size_t>(bit >> 6)] |= 1ull << (63 - (bit & 63));
            }
        }
        if (!have_best || code.less_than(best)) {
            best = code;
            best_perm = inv;
            have_best = true;
        }
    }

    void search(std::array<int, kMaxN> colors) {
        refine(colors);
        // first non-singleton cell (smallest color value)
        int target = -1;
        std::array<int, kMaxN> count{};
        for (int v = 0; v < n; ++v) ++count[static_cast<std::size_t>(colors[static_cast<std::size_t>(v)])];
        int ncells = cell_count(colors);
        for (int c = 0; c < ncells; ++c) {
            if (count[static_cast<std::size_t>(c)] >= 2) {
                target = c;
                break;
            }
        }
        if (target < 0) {
            emit_leaf(colors);
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (colors[static_cast<std::size_t>(v)] != target) continue;
            std::array<int, kMaxN> next;
            for (int w = 0; w < n; ++w) {
                int c = colors[static_cast<std::size_t>(w)];
                next[static_cast<std::size_t>(w)] = c + (c > target ? 1 : 0);
            }
            for (int w = 0; w < n; ++w)
                if (colors[static_cast<std::size_t>(w)] == target) next[static_cast<std::size_t>(w)] = target + 1;
            next[static_cast<std::size_t>(v)] = target;
            search(next);
        }
    }

    void run() {
        std::array<int, kMaxN> colors{};
        // start from the degree partition
        std::array<int, kMaxN> degs;
        for (int v = 0; v < n; ++v) degs[static_cast<std::size_t>(v)] = __builtin_popcountll(adj[v]);
        std::array<int, kMaxN> sorted = degs;
        std::sort(sorted.begin(), sorted.begin() + n);
        for (int v = 0; v < n; ++v) {
            colors[static_cast<std::size_t>(v)] = static_cast<int>(
                std::lower_bound(sorted.begin(), sorted.begin() + n, degs[static_cast<std::size_t>(v)]) -
                sorted.begin());
        }
        // collapse to dense ordered color ids
        std::array<int, kMaxN> remap;
        remap.fill(-1);
        int next_id = 0;
        for (int c = 0; c < n; ++c) {
            for (int v = 0; v < n; ++v) {
                if (colors[static_cast<std::size_t>(v)] == c && remap[static_cast<std::size_t>(c)] < 0)
                    remap[static_cast<std::size_t>(c)] = next_id++;
            }
        }
        for (int v = 0; v < n; ++v)
            colors[static_cast<std::size_t>(v)] = remap[static_cast<std::size_t>(colors[static_cast<std::size_t>(v)])];
        if (n == 0) {
            have_best = true;
            best.nwords = 0;
            return;
        }
        search(colors);
    }
};

std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
    if (g.vertex_count() > kMaxN) throw Error("canonical form supports at most 64 vertices");
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(g.vertex_count()), 0);
    for (auto [u, v] : g.edges()) {
        adj[static_cast<std::size_t>(u)] |= 1ull << v;
        adj[static_cast<std::size_t>(v)] |= 1ull << u;
    }
    return adj;
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
    auto adj = adjacency_masks(g);
    Canonizer canon(g.vertex_count(), adj.data());
    canon.run();
    CanonicalForm form;
    form.n = g.vertex_count();
    form.bits.assign(canon.best.words.begin(), canon.best.words.begin() + canon.best.nwords);
    return form;
}

Graph canonical_graph(const Graph& g) {
    auto adj = adjacency_masks(g);
    Canonizer canon(g.vertex_count(), adj.data());
    canon.run();
    const int n = g.vertex_count();
    std::vector<int> pos(static_cast<std::size_t>(n));  // pos[old] = new
    for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(canon.best_perm[static_cast<std::size_t>(i)])] = i;
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(g.edge_count()));
    for (auto [u, v] : g.edges())
        edges.emplace_back(pos[static_cast<std::size_t>(u)], pos[static_cast<std::size_t>(v)]);
    return Graph(n, edges);
}

Graph graph_from_canonical(const CanonicalForm& form) {
    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int i = 0; i < form.n; ++i) {
        for (int j = i + 1; j < form.n; ++j, ++bit) {
            std::uint64_t word = form.bits[static_cast<std::size_t>(bit >> 6)];
            if (word >> (63 - (bit & 63)) & 1u) edges.emplace_back(i, j);
        }
    }
    return Graph(form.n, edges);
}

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> da, db;
    for (int v = 0; v < a.vertex_count(); ++v) {
        da.push_back(a.degree(v));
        db.push_back(b.degree(v));
    }
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    return canonical_form(a) == canonical_form(b);
}

namespace detail {

unsigned __int128 canon_code128(std::span<const std::uint16_t> adj) {
    const int n = static_cast<int>(adj.size());
    std::array<std::uint64_t, kMaxN> wide{};
    for (int v = 0; v < n; ++v) wide[static_cast<std::size_t>(v)] = adj[static_cast<std::size_t>(v)];
    Canonizer canon(n, wide.data());
    canon.run();
    unsigned __int128 out = static_cast<unsigned __int128>(canon.best.words[0]) << 64;
    if (canon.best.nwords > 1) out |= canon.best.words[1];
    return out;
}

}  // namespace detail

}  // namespace aspectra
