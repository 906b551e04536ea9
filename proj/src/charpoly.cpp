#include "aspectra/charpoly.hpp"

#include <algorithm>
#include <set>

#include "aspectra/errors.hpp"

namespace aspectra {

WeightedDigraph WeightedDigraph::from_alpha(const Graph& g, const Rational& alpha) {
    if (alpha < 0 || alpha > 1) throw AlphaOutOfRange(rational_to_string(alpha));
    WeightedDigraph w(g.vertex_count());
    const Rational off = 1 - alpha;
    for (auto [u, v] : g.edges()) {
        w.weight(u, v) = off;
        w.weight(v, u) = off;
    }
    for (int v = 0; v < w.n; ++v) w.weight(v, v) = alpha * g.degree(v);
    return w;
}

WeightedDigraph WeightedDigraph::without_vertices(std::span<const int> removed) const {
    std::set<int> gone;
    for (int v : removed) {
        if (v < 0 || v >= n) throw VertexOutOfRange(v);
        gone.insert(v);
    }
    std::vector<int> keep;
    for (int v = 0; v < n; ++v)
        if (!gone.count(v)) keep.push_back(v);
    WeightedDigraph out(static_cast<int>(keep.size()));
    for (int i = 0; i < out.n; ++i)
        for (int j = 0; j < out.n; ++j)
            out.weight(i, j) = weight(keep[static_cast<std::size_t>(i)], keep[static_cast<std::size_t>(j)]);
    return out;
}

RationalPolynomial charpoly(const WeightedDigraph& w) {
    const int n = w.n;
    if (n == 0) return RationalPolynomial(Rational(1));
    // M = xI - W over Q[x]
    std::vector<RationalPolynomial> m(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            std::vector<Rational> coeffs{-w.weight(i, j)};
            if (i == j) coeffs.push_back(Rational(1));
            m[static_cast<std::size_t>(i) * n + j] = RationalPolynomial(std::move(coeffs));
        }
    }
    auto at = [&](int i, int j) -> RationalPolynomial& { return m[static_cast<std::size_t>(i) * n + j]; };

    RationalPolynomial prev(Rational(1));
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (at(k, k).is_zero()) {
            int pivot = -1;
            for (int r = k + 1; r < n; ++r) {
                if (!at(r, k).is_zero()) {
                    pivot = r;
                    break;
                }
            }
            if (pivot < 0) return {};  // singular polynomial matrix
            for (int j = k; j < n; ++j) std::swap(at(k, j), at(pivot, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                RationalPolynomial num = at(k, k) * at(i, j) - at(i, k) * at(k, j);
                auto [quot, rem] = num.divrem(prev);
                if (!rem.is_zero()) throw Error("fraction-free elimination: inexact division");
                at(i, j) = std::move(quot);
            }
            at(i, k) = RationalPolynomial();
        }
        prev = at(k, k);
    }
    RationalPolynomial det = at(n - 1, n - 1);
    if (sign < 0) det = -det;
    return det;
}

RationalPolynomial phi(const Graph& g, const Rational& alpha) {
    return charpoly(WeightedDigraph::from_alpha(g, alpha));
}

RationalPolynomial psi(const Graph& g, std::span<const int> u_set, const Rational& alpha) {
    return charpoly(WeightedDigraph::from_alpha(g, alpha).without_vertices(u_set));
}

RationalPolynomial path_poly(int t, const Rational& alpha) {
    if (t < 0) throw Error("path polynomial index must be nonnegative");
    RationalPolynomial f_prev(Rational(1));                                      // f_0
    if (t == 0) return f_prev;
    RationalPolynomial f_cur(std::vector<Rational>{-alpha, Rational(1)});        // f_1 = x - alpha
    const RationalPolynomial step(std::vector<Rational>{-2 * alpha, Rational(1)});  // x - 2 alpha
    const Rational damp = (1 - alpha) * (1 - alpha);
    for (int i = 2; i <= t; ++i) {
        RationalPolynomial next = step * f_cur - damp * f_prev;
        f_prev = std::move(f_cur);
        f_cur = std::move(next);
    }
    return f_cur;
}

RationalPolynomial phi_path(int t, const Rational& alpha) {
    if (t < 1) throw Error("path order must be at least 1");
    return path_poly(t, alpha) + alpha * path_poly(t - 1, alpha);
}

RationalPolynomial schwenk_vertex(const WeightedDigraph& w, int v) {
    if (v < 0 || v >= w.n) throw VertexOutOfRange(v);
    const RationalPolynomial x = RationalPolynomial::x();
    const int vv[] = {v};
    RationalPolynomial result =
        (x - RationalPolynomial(w.weight(v, v))) * charpoly(w.without_vertices(vv));
    for (int u = 0; u < w.n; ++u) {
        if (u == v || w.weight(u, v) == 0) continue;
        const int uv[] = {u, v};
        result -= (w.weight(u, v) * w.weight(u, v)) * charpoly(w.without_vertices(uv));
    }
    // cycle terms: DFS over simple paths from v; second vertex < last vertex
    // picks one traversal direction per undirected cycle
    const int n = w.n;
    std::vector<int> path{v};
    std::vector<bool> visited(static_cast<std::size_t>(n), false);
    visited[static_cast<std::size_t>(v)] = true;
    Rational product(1);
    auto dfs = [&](auto&& self, int cur) -> void {
        for (int next = 0; next < n; ++next) {
            if (next == v || visited[static_cast<std::size_t>(next)]) continue;
            if (w.weight(cur, next) == 0) continue;
            path.push_back(next);
            visited[static_cast<std::size_t>(next)] = true;
            Rational saved = product;
            product *= w.weight(cur, next);
            if (path.size() >= 3 && w.weight(next, v) != 0 && path[1] < next) {
                Rational omega = product * w.weight(next, v);
                result -= 2 * omega * charpoly(w.without_vertices(path));
            }
            self(self, next);
            product = saved;
            visited[static_cast<std::size_t>(next)] = false;
            path.pop_back();
        }
    };
    dfs(dfs, v);
    return result;
}

RationalPolynomial coalesce_phi(const RationalPolynomial& g_phi, const RationalPolynomial& g_psi_u,
                                const RationalPolynomial& h_phi, const RationalPolynomial& h_psi_v) {
    return g_phi * h_psi_v + g_psi_u * h_phi - RationalPolynomial::x() * g_psi_u * h_psi_v;
}

RationalPolynomial rooted_product_phi(const RootedProductParts& p) {
    const RationalPolynomial x = RationalPolynomial::x();
    RationalPolynomial d1 = p.g1 - x * p.g1_w;
    RationalPolynomial d2 = p.g2 - x * p.g2_w;
    return p.g * p.g1_w * p.g2_w + p.g_u * d1 * p.g2_w + p.g_v * d2 * p.g1_w + p.g_uv * d1 * d2;
}

RationalPolynomial rooted_product_difference(const RationalPolynomial& df1, const RationalPolynomial& df2,
                                             const RationalPolynomial& df3, const RationalPolynomial& g_phi,
                                             const RationalPolynomial& g_psi_u) {
    RationalPolynomial hanging = g_phi - RationalPolynomial::x() * g_psi_u;
    return df1 * g_psi_u * g_psi_u + df2 * hanging * g_psi_u + df3 * hanging * hanging;
}

RationalPolynomial path_wronskian(int k, int l, const Rational& alpha) {
    if (k < 1 || l < k) throw Error("path wronskian requires l >= k >= 1");
    RationalPolynomial direct =
        path_poly(k + 1, alpha) * path_poly(l, alpha) - path_poly(k, alpha) * path_poly(l + 1, alpha);
    const int p = l - k;
    Rational scale(1);
    {
        const Rational base = (1 - alpha) * (1 - alpha);
        for (int i = 0; i < k; ++i) scale *= base;
    }
    RationalPolynomial x_minus_alpha(std::vector<Rational>{-alpha, Rational(1)});
    RationalPolynomial closed = scale * (x_minus_alpha * path_poly(p, alpha) - path_poly(p + 1, alpha));
    if (closed != direct) throw ClosedFormMismatch();
    if (p >= 1) {
        RationalPolynomial alt =
            scale * (alpha * path_poly(p, alpha) + ((1 - alpha) * (1 - alpha)) * path_poly(p - 1, alpha));
        if (alt != direct) throw ClosedFormMismatch();
    }
    return direct;
}

namespace {

RationalPolynomial poly_from(std::initializer_list<Rational> ascending) {
    return RationalPolynomial(std::vector<Rational>(ascending));
}

RationalPolynomial linear_factor(const Rational& root) {
    return RationalPolynomial(std::vector<Rational>{-root, Rational(1)});
}

}  // namespace

RationalPolynomial seed_factor(int i, int j, long z) {
    if (i < 1 || i > 4 || j < 1 || j > 4) throw IndexOutOfRange("seed factor index must be in 1..4");
    const Rational Z(z);
    const RationalPolynomial xm_half = linear_factor(Rational(1, 2));
    const RationalPolynomial xm_one = linear_factor(Rational(1));
    if (i == 2 && j == 1) return seed_factor(1, 1, z);  // the two seed graphs are isomorphic
    switch (i * 10 + j) {
        case 11:
            return poly_from({Rational(-1), Z + 5, Rational(-1, 2) * (Z + 9), Rational(1)}) * xm_half * xm_half *
                   xm_one;
        case 12:
            return poly_from({Rational(-3, 2), Z + Rational(21, 4), Rational(-1, 2) * (Z + 9), Rational(1)}) *
                   xm_half * xm_one;
        case 13:
            return poly_from({Rational(-1, 2), Rational(1, 2) * (Z + Rational(11, 2)), Rational(-1, 2) * (Z + 7),
                             Rational(1)}) *
                   xm_half * xm_one;
        case 14:
            return poly_from({Rational(-3, 4), Rational(1, 2) * (Z + 6), Rational(-1, 2) * (Z + 7), Rational(1)}) *
                   xm_one;
        case 22:
        case 23:
            return poly_from({Rational(3, 4), -(Rational(5, 8) * Z + Rational(35, 8)),
                             Rational(5, 4) * Z + Rational(31, 4), -(Rational(1, 2) * Z + 5), Rational(1)}) *
                   xm_half;
        case 24:
            return poly_from({Rational(-1), Rational(3, 4) * Z + Rational(17, 4), -(Rational(1, 2) * Z + 4),
                             Rational(1)}) *
                   xm_half;
        case 31:
            return poly_from({Rational(-1, 4), Rational(1, 4) * Z + Rational(5, 2),
                             -(Rational(11, 8) * Z + Rational(17, 2)), Rational(7, 4) * Z + Rational(23, 2),
                             Rational(-1, 2) * (Z + 12), Rational(1)}) *
                   xm_half;
        case 32:
            return poly_from({Rational(-3, 8), Rational(1, 4) * Z + Rational(51, 16),
                             -(Rational(11, 8) * Z + Rational(75, 8)), Rational(7, 4) * Z + Rational(47, 4),
                             Rational(-1, 2) * (Z + 12), Rational(1)});
        case 33:
            return poly_from({Rational(3, 4), -(Rational(3, 4) * Z + Rational(39, 8)),
                             Rational(3, 2) * Z + Rational(9), Rational(-1, 2) * (Z + 11), Rational(1)}) *
                   xm_half;
        case 34:
            return poly_from({Rational(9, 8), -(Rational(3, 4) * Z + Rational(45, 8)),
                             Rational(3, 2) * Z + Rational(37, 4), Rational(-1, 2) * (Z + 11), Rational(1)});
        case 41:
            return poly_from({Rational(1, 4), -(Rational(1, 4) * Z + Rational(23, 8)),
                             Rational(27, 16) * Z + Rational(185, 16), -(Rational(13, 4) * Z + Rational(83, 4)),
                             Rational(9, 4) * Z + Rational(71, 4), -(Rational(1, 2) * Z + 7), Rational(1)});
        case 42:
            return poly_from({Rational(-3, 8), Rational(5, 16) * Z + Rational(55, 16),
                             -(Rational(13, 8) * Z + Rational(83, 8)), Rational(7, 4) * Z + Rational(49, 4),
                             -(Rational(1, 2) * Z + 6), Rational(1)});
        case 43:
            return poly_from({Rational(-7, 8), Rational(13, 16) * Z + Rational(99, 16),
                             -(Rational(19, 8) * Z + Rational(117, 8)), Rational(2) * Z + Rational(59, 4),
                             -(Rational(1, 2) * Z + Rational(13, 2)), Rational(1)});
        case 44:
            return poly_from({Rational(-5, 4), Z + Rational(21, 4), -(Rational(1, 2) * Z + Rational(9, 2)),
                             Rational(1)}) *
                   xm_one;
        default:
            throw IndexOutOfRange("unreachable seed factor index");
    }
}

RationalPolynomial seed_prefactor(int i, long z) {
    if (i < 1 || i > 4) throw IndexOutOfRange("seed prefactor index must be in 1..4");
    if (z < 1) throw IndexOutOfRange("seed prefactor requires z >= 1");
    const RationalPolynomial xm_half = linear_factor(Rational(1, 2));
    const RationalPolynomial xm_one = linear_factor(Rational(1));
    switch (i) {
        case 1:
        case 2:
            return pow(xm_half, static_cast<unsigned>(z - 1));
        case 3:
            return pow(xm_half, static_cast<unsigned>(z - 1)) * xm_one;
        default:
            return pow(xm_half, static_cast<unsigned>(z));
    }
}

}  // namespace aspectra
