#ifndef ASPECTRA_CHARPOLY_HPP
#define ASPECTRA_CHARPOLY_HPP

#include <span>
#include <vector>

#include "aspectra/graph.hpp"
#include "aspectra/polynomial.hpp"
#include "aspectra/rational.hpp"

namespace aspectra {

// Weighted digraph view of a symmetric rational matrix (loops = diagonal).
// Deleting vertices deletes rows/columns and nothing else, so polynomials of
// deleted-vertex graphs keep the loop weights of the parent matrix.
struct WeightedDigraph {
    int n = 0;
    std::vector<Rational> weights;  // row-major n*n, weight(i,j) == weight(j,i)

    WeightedDigraph() = default;
    explicit WeightedDigraph(int n_) : n(n_), weights(static_cast<std::size_t>(n_) * n_, Rational(0)) {}

    Rational& weight(int i, int j) { return weights[static_cast<std::size_t>(i) * n + j]; }
    const Rational& weight(int i, int j) const { return weights[static_cast<std::size_t>(i) * n + j]; }

    // Coates view of alpha*D(G) + (1-alpha)*A(G).
    static WeightedDigraph from_alpha(const Graph& g, const Rational& alpha);

    WeightedDigraph without_vertices(std::span<const int> removed) const;
};

// det(xI - W) by fraction-free (Bareiss) elimination over Q[x]; monic of
// degree n, exact coefficients.
RationalPolynomial charpoly(const WeightedDigraph& w);

// Characteristic polynomial of the alpha matrix of g.
RationalPolynomial phi(const Graph& g, const Rational& alpha);

// Characteristic polynomial of the alpha matrix with rows/columns of u_set
// deleted. Degrees of the remaining vertices are their degrees in g, not in
// g - U: deletion acts on the Coates digraph of the full matrix.
RationalPolynomial psi(const Graph& g, std::span<const int> u_set, const Rational& alpha);

// f_t: f_0 = 1, f_1 = x - alpha, f_t = (x - 2 alpha) f_{t-1} - (1-alpha)^2 f_{t-2}.
// Equals psi of the (t+1)-vertex path with one pendant end deleted.
RationalPolynomial path_poly(int t, const Rational& alpha);

// phi of the t-vertex path via f_t + alpha f_{t-1}; t >= 1.
RationalPolynomial phi_path(int t, const Rational& alpha);

// One-step vertex expansion of det(xI - W) at v:
//   (x - w_vv) phi(W-v) - sum_u w_uv^2 phi(W-u-v) - 2 sum_C omega(C) phi(W-V(C))
// over undirected cycles C of length >= 3 through v, omega = product of the
// cycle's edge weights. Subdeterminants are computed directly.
RationalPolynomial schwenk_vertex(const WeightedDigraph& w, int v);

// phi of the coalescence of two rooted pieces, from the pieces' phi/psi:
//   phi(G) psi(H,v) + psi(G,u) phi(H) - x psi(G,u) psi(H,v).
// Loop weights add at the identified vertex, which is exactly what the alpha
// matrix of the coalesced graph requires (degrees add).
RationalPolynomial coalesce_phi(const RationalPolynomial& g_phi, const RationalPolynomial& g_psi_u,
                                const RationalPolynomial& h_phi, const RationalPolynomial& h_psi_v);

// phi of the rooted product H = G(H1,H2) coalescing u with w1 and v with w2.
struct RootedProductParts {
    RationalPolynomial g;      // phi(G)
    RationalPolynomial g_u;    // psi(G,u)
    RationalPolynomial g_v;    // psi(G,v)
    RationalPolynomial g_uv;   // psi(G,{u,v})
    RationalPolynomial g1;     // phi(H1)
    RationalPolynomial g1_w;   // psi(H1,w1)
    RationalPolynomial g2;     // phi(H2)
    RationalPolynomial g2_w;   // psi(H2,w2)
};
RationalPolynomial rooted_product_phi(const RootedProductParts& parts);

// Difference of two rooted products sharing the pendant piece G at u:
//   DF1 psi^2 + DF2 (phi - x psi) psi + DF3 (phi - x psi)^2.
RationalPolynomial rooted_product_difference(const RationalPolynomial& df1, const RationalPolynomial& df2,
                                             const RationalPolynomial& df3, const RationalPolynomial& g_phi,
                                             const RationalPolynomial& g_psi_u);

// f_{k+1} f_l - f_k f_{l+1} for l >= k >= 1, computed by direct polynomial
// arithmetic and by the closed form (1-alpha)^{2k} ((x-alpha) f_p - f_{p+1}),
// p = l - k; throws ClosedFormMismatch if the two routes ever disagree.
RationalPolynomial path_wronskian(int k, int l, const Rational& alpha);

// Tabulated closed-form factors for the seed graphs G1..G4 (alpha = 1/2, z
// pendant edges): phi/psi of seed graph i equals seed_prefactor(i,z) times
// seed_factor(i,j,z), where j = 1 is phi, j = 2 is psi(u1), j = 3 is psi(v1),
// j = 4 is psi({u1,v1}). Valid for z >= 1.
RationalPolynomial seed_factor(int i, int j, long z);
RationalPolynomial seed_prefactor(int i, long z);

}  // namespace aspectra

#endif
