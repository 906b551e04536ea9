#ifndef ASPECTRA_SPECTRAL_HPP
#define ASPECTRA_SPECTRAL_HPP

#include <span>
#include <vector>

#include "aspectra/graph.hpp"
#include "aspectra/rational.hpp"

namespace aspectra {

// Dense symmetric matrix alpha*D(G) + (1-alpha)*A(G). alpha kept exact; the
// numeric kernel sees the nearest doubles.
struct AlphaMatrix {
    Rational alpha;
    int n = 0;
    std::vector<double> entries;  // row-major n*n

    double at(int i, int j) const { return entries[static_cast<std::size_t>(i) * n + j]; }
};

AlphaMatrix alpha_matrix(const Graph& g, const Rational& alpha);

struct SpectralResult {
    double radius = 0.0;
    std::vector<double> perron;  // positive, unit 2-norm
    long iterations = 0;
    double residual = 0.0;       // ||A x - radius x||_inf
    double residual_two = 0.0;   // ||A x - radius x||_2, certifies |radius - lambda_max|
};

inline constexpr double kDefaultTolerance = 1e-10;
inline constexpr long kMaxPowerIterations = 100000;

// Largest eigenvalue and Perron vector of the alpha matrix, by power
// iteration on A + nI (shift keeps the largest eigenvalue dominant in
// magnitude) with the Rayleigh quotient as the radius estimate.
SpectralResult spectral_radius(const Graph& g, const Rational& alpha, double tol = kDefaultTolerance);

// rho_Q = 2 rho_{1/2}.
double signless_laplacian_radius(const Graph& g, double tol = kDefaultTolerance);

// The edge-sum form sum_{uv in E} (alpha (x_u^2 + x_v^2) + 2(1-alpha) x_u x_v),
// evaluated exactly as written. x must be unit 2-norm (tolerance 1e-8).
double rayleigh_quotient(const Graph& g, const Rational& alpha, std::span<const double> x);

}  // namespace aspectra

#endif
