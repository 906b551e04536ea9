#include "aspectra/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "aspectra/charpoly.hpp"
#include "aspectra/errors.hpp"
#include "aspectra/isomorphism.hpp"
#include "aspectra/polynomial.hpp"
#include "aspectra/spectral.hpp"

namespace aspectra {

int worker_count() {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw < 1) hw = 1;
    if (const char* env = std::getenv("ALPHA_SPECTRA_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1) hw = std::min(hw, cap);
    }
    return hw;
}

namespace {

using Code = unsigned __int128;

// diameter of the graph given as adjacency masks; -1 if disconnected
int mask_diameter(const std::uint16_t* adj, int n) {
    const std::uint32_t full = (1u << n) - 1;
    int diam = 0;
    for (int s = 0; s < n; ++s) {
        std::uint32_t visited = 1u << s;
        std::uint32_t frontier = visited;
        int depth = 0;
        while (frontier) {
            std::uint32_t next = 0;
            std::uint32_t f = frontier;
            while (f) {
                int v = std::countr_zero(f);
                f &= f - 1;
                next |= adj[v];
            }
            next &= ~visited;
            if (next) ++depth;
            visited |= next;
            frontier = next;
        }
        if (visited != full) return -1;
        diam = std::max(diam, depth);
    }
    return diam;
}

struct ScanResult {
    // per diameter: canonical codes of the classes seen
    std::map<int, std::set<Code>> classes;

    void merge(ScanResult&& other) {
        for (auto& [d, codes] : other.classes) classes[d].merge(std::move(codes));
    }
};

// Enumerates all m-subsets of E(K_n) whose smallest edge index is `first`,
// bucketing connected graphs by diameter up to isomorphism.
void scan_from_first_edge(int n, int m, int first, ScanResult& out) {
    const int total_edges = n * (n - 1) / 2;
    std::vector<int> eu(static_cast<std::size_t>(total_edges)), ev(static_cast<std::size_t>(total_edges));
    {
        int t = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v, ++t) {
                eu[static_cast<std::size_t>(t)] = u;
                ev[static_cast<std::size_t>(t)] = v;
            }
    }
    std::vector<std::uint16_t> adj(static_cast<std::size_t>(n), 0);
    auto add = [&](int e) {
        adj[static_cast<std::size_t>(eu[static_cast<std::size_t>(e)])] |=
            static_cast<std::uint16_t>(1u << ev[static_cast<std::size_t>(e)]);
        adj[static_cast<std::size_t>(ev[static_cast<std::size_t>(e)])] |=
            static_cast<std::uint16_t>(1u << eu[static_cast<std::size_t>(e)]);
    };
    auto remove = [&](int e) {
        adj[static_cast<std::size_t>(eu[static_cast<std::size_t>(e)])] &=
            static_cast<std::uint16_t>(~(1u << ev[static_cast<std::size_t>(e)]));
        adj[static_cast<std::size_t>(ev[static_cast<std::size_t>(e)])] &=
            static_cast<std::uint16_t>(~(1u << eu[static_cast<std::size_t>(e)]));
    };

    auto process = [&]() {
        int diam = mask_diameter(adj.data(), n);
        if (diam < 0) return;
        Code code = detail::canon_code128(std::span<const std::uint16_t>(adj.data(), static_cast<std::size_t>(n)));
        out.classes[diam].insert(code);
    };

    auto recurse = [&](auto&& self, int next_edge, int slots) -> void {
        if (slots == 0) {
            process();
            return;
        }
        for (int e = next_edge; e <= total_edges - slots; ++e) {
            add(e);
            self(self, e + 1, slots - 1);
            remove(e);
        }
    };

    add(first);
    recurse(recurse, first + 1, m - 1);
    remove(first);
}

Graph graph_from_code(int n, Code code) {
    // same packing as CanonicalForm: upper triangle row-major from the top bit
    CanonicalForm form;
    form.n = n;
    form.bits = {static_cast<std::uint64_t>(code >> 64), static_cast<std::uint64_t>(code)};
    int nbits = n * (n - 1) / 2;
    form.bits.resize(static_cast<std::size_t>((nbits + 63) / 64));
    return graph_from_canonical(form);
}

std::map<int, std::vector<Graph>> subset_scan_census(int n, int m) {
    const int total_edges = n * (n - 1) / 2;
    ScanResult merged;
    if (m > total_edges) return {};
    const int threads = std::min(worker_count(), std::max(1, total_edges - m + 1));
    if (threads <= 1) {
        for (int first = 0; first + m <= total_edges; ++first) scan_from_first_edge(n, m, first, merged);
    } else {
        std::atomic<int> next_first{0};
        std::mutex merge_mutex;
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) {
            pool.emplace_back([&]() {
                ScanResult local;
                while (true) {
                    int first = next_first.fetch_add(1);
                    if (first + m > total_edges) break;
                    scan_from_first_edge(n, m, first, local);
                }
                std::lock_guard<std::mutex> lock(merge_mutex);
                merged.merge(std::move(local));
            });
        }
        for (auto& th : pool) th.join();
    }
    std::map<int, std::vector<Graph>> census;
    for (const auto& [d, codes] : merged.classes) {
        auto& bucket = census[d];
        bucket.reserve(codes.size());
        for (Code code : codes) bucket.push_back(graph_from_code(n, code));
    }
    return census;
}

std::map<int, std::vector<Graph>> augmentation_census(int n, int cyclomatic) {
    // seed bases
    std::vector<Graph> seeds;
    if (cyclomatic == 1) {
        for (int k = 3; k <= n; ++k) {
            std::vector<std::pair<int, int>> edges;
            for (int i = 0; i < k; ++i) edges.emplace_back(std::min(i, (i + 1) % k), std::max(i, (i + 1) % k));
            seeds.emplace_back(k, edges);
        }
    } else {
        for (int n1 = 3; n1 <= n; ++n1)
            for (int n2 = 3; n2 <= n1; ++n2)
                for (int n3 = 1; n1 + n2 + n3 - 2 <= n; ++n3) {
                    std::vector<std::pair<int, int>> edges;
                    int count = 0;
                    auto add_cycle = [&](int start, int len) {
                        for (int i = 0; i < len; ++i) {
                            int a = start + i, b = start + (i + 1) % len;
                            edges.emplace_back(std::min(a, b), std::max(a, b));
                        }
                    };
                    if (n3 == 1) {
                        add_cycle(0, n1);
                        // second cycle shares vertex 0
                        count = n1 + n2 - 1;
                        int prev = 0;
                        for (int i = 0; i < n2 - 1; ++i) {
                            int next = n1 + i;
                            edges.emplace_back(std::min(prev, next), std::max(prev, next));
                            prev = next;
                        }
                        edges.emplace_back(0, prev);
                    } else {
                        add_cycle(0, n1);
                        add_cycle(n1, n2);
                        count = n1 + n2 + n3 - 2;
                        int prev = 0;
                        for (int i = 0; i < n3 - 2; ++i) {
                            int next = n1 + n2 + i;
                            edges.emplace_back(std::min(prev, next), std::max(prev, next));
                            prev = next;
                        }
                        edges.emplace_back(std::min(prev, n1), std::max(prev, n1));
                    }
                    seeds.emplace_back(count, edges);
                }
        for (int p1 = 2; p1 <= n; ++p1)
            for (int p2 = 2; p2 <= p1; ++p2)
                for (int p3 = 1; p3 <= p2; ++p3) {
                    if (p1 + p2 + p3 - 1 > n) continue;
                    std::vector<std::pair<int, int>> edges;
                    int next = 2;
                    for (int len : {p1, p2, p3}) {
                        int cur = 0;
                        for (int i = 0; i < len - 1; ++i) {
                            edges.emplace_back(std::min(cur, next), std::max(cur, next));
                            cur = next++;
                        }
                        edges.emplace_back(std::min(cur, 1), std::max(cur, 1));
                    }
                    seeds.emplace_back(next, edges);
                }
    }
    // grow by pendant attachment, level by level
    std::map<int, std::map<CanonicalForm, Graph>> levels;
    for (const Graph& s : seeds) {
        if (s.vertex_count() <= n) levels[s.vertex_count()].emplace(canonical_form(s), canonical_graph(s));
    }
    for (int size = 3; size < n; ++size) {
        auto it = levels.find(size);
        if (it == levels.end()) continue;
        for (const auto& [form, g] : it->second) {
            for (int v = 0; v < g.vertex_count(); ++v) {
                std::vector<std::pair<int, int>> edges = g.edges();
                edges.emplace_back(v, g.vertex_count());
                Graph bigger(g.vertex_count() + 1, edges);
                levels[size + 1].emplace(canonical_form(bigger), canonical_graph(bigger));
            }
        }
    }
    std::map<int, std::vector<Graph>> census;
    auto it = levels.find(n);
    if (it == levels.end()) return census;
    for (const auto& [form, g] : it->second) {
        auto diam = diameter(g);
        if (diam) census[*diam].push_back(g);
    }
    return census;
}

struct CensusCache {
    std::mutex mutex;
    std::map<std::tuple<int, int, int>, std::map<int, std::vector<Graph>>> store;
};

CensusCache& census_cache() {
    static CensusCache cache;
    return cache;
}

const std::map<int, std::vector<Graph>>& census_for(int n, int cyclomatic, GenerationMethod method) {
    auto key = std::make_tuple(n, cyclomatic, static_cast<int>(method));
    auto& cache = census_cache();
    {
        std::lock_guard<std::mutex> lock(cache.mutex);
        auto it = cache.store.find(key);
        if (it != cache.store.end()) return it->second;
    }
    std::map<int, std::vector<Graph>> result;
    if (method == GenerationMethod::subset_scan)
        result = subset_scan_census(n, n + cyclomatic - 1);
    else
        result = augmentation_census(n, cyclomatic);
    std::lock_guard<std::mutex> lock(cache.mutex);
    return cache.store.emplace(key, std::move(result)).first->second;
}

}  // namespace

std::vector<Graph> enumerate_space(const SearchSpace& space, GenerationMethod method, int cap) {
    if (space.cyclomatic != 1 && space.cyclomatic != 2) throw Error("cyclomatic number must be 1 or 2");
    if (space.n < 3) throw Error("order must be at least 3");
    if (space.n > cap) throw CapExceeded(space.n, cap);
    if (space.d < 1 || space.d > space.n - 2) return {};
    const auto& census = census_for(space.n, space.cyclomatic, method);
    auto it = census.find(space.d);
    if (it == census.end()) return {};
    return it->second;
}

PairComparison compare_pair(const Graph& g, const Graph& h, const Rational& alpha, double tol) {
    SpectralResult rg = spectral_radius(g, alpha, tol);
    SpectralResult rh = spectral_radius(h, alpha, tol);
    PairComparison out;
    out.gap = rg.radius - rh.radius;
    out.error_bound = rg.residual_two + rh.residual_two;
    if (std::abs(out.gap) <= out.error_bound)
        out.order = Ordering::indistinguishable;
    else
        out.order = out.gap > 0 ? Ordering::greater : Ordering::less;
    return out;
}

int compare_pair_exact(const Graph& g, const Graph& h, const Rational& alpha) {
    return compare_largest_roots(phi(g, alpha), phi(h, alpha));
}

ExtremalReport argmax_radius(const SearchSpace& space, const Rational& alpha, double tie_tol,
                             GenerationMethod method, int cap) {
    std::vector<Graph> census = enumerate_space(space, method, cap);
    if (census.empty()) throw EmptySpace();
    std::vector<double> radii(census.size());
    {
        const int threads = std::min<std::size_t>(worker_count(), census.size());
        std::atomic<std::size_t> next{0};
        auto work = [&]() {
            while (true) {
                std::size_t i = next.fetch_add(1);
                if (i >= census.size()) break;
                radii[i] = spectral_radius(census[i], alpha).radius;
            }
        };
        if (threads <= 1) {
            work();
        } else {
            std::vector<std::thread> pool;
            for (int t = 0; t < threads; ++t) pool.emplace_back(work);
            for (auto& th : pool) th.join();
        }
    }
    std::size_t numeric_best = 0;
    for (std::size_t i = 1; i < census.size(); ++i)
        if (radii[i] > radii[numeric_best]) numeric_best = i;

    ExtremalReport report;
    report.census = census.size();
    std::vector<std::size_t> near;
    for (std::size_t i = 0; i < census.size(); ++i)
        if (i != numeric_best && radii[i] >= radii[numeric_best] - tie_tol) near.push_back(i);
    // Exact escalation: the winner must beat every near tie exactly.
    std::size_t best = numeric_best;
    for (std::size_t i : near) {
        int cmp = compare_pair_exact(census[best], census[i], alpha);
        if (cmp < 0) best = i;
        if (cmp == 0) report.exact_tie = true;
    }
    report.maximizer = census[best];
    report.radius = radii[best];
    double second = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < census.size(); ++i)
        if (i != best) second = std::max(second, radii[i]);
    report.runner_up_gap =
        census.size() == 1 ? std::numeric_limits<double>::infinity() : radii[best] - second;
    for (std::size_t i = 0; i < census.size(); ++i)
        if (i != best && radii[i] >= radii[numeric_best] - tie_tol) report.near_ties.push_back(census[i]);
    return report;
}

}  // namespace aspectra
