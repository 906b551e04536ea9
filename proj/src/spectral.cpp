#include "aspectra/spectral.hpp"

#include <cmath>

#include "aspectra/errors.hpp"

namespace aspectra {

AlphaMatrix alpha_matrix(const Graph& g, const Rational& alpha) {
    if (alpha < 0 || alpha > 1) throw AlphaOutOfRange(rational_to_string(alpha));
    AlphaMatrix m;
    m.alpha = alpha;
    m.n = g.vertex_count();
    m.entries.assign(static_cast<std::size_t>(m.n) * m.n, 0.0);
    const double a = to_double(alpha);
    const double offdiag = 1.0 - a;
    for (auto [u, v] : g.edges()) {
        m.entries[static_cast<std::size_t>(u) * m.n + v] = offdiag;
        m.entries[static_cast<std::size_t>(v) * m.n + u] = offdiag;
    }
    for (int v = 0; v < m.n; ++v) m.entries[static_cast<std::size_t>(v) * m.n + v] = a * g.degree(v);
    return m;
}

SpectralResult spectral_radius(const Graph& g, const Rational& alpha, double tol) {
    if (!g.is_connected()) throw DisconnectedGraph();
    if (tol <= 0) throw Error("tolerance must be positive");
    const AlphaMatrix m = alpha_matrix(g, alpha);
    const int n = m.n;
    const double shift = static_cast<double>(n);

    std::vector<double> x(static_cast<std::size_t>(n), 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> ax(static_cast<std::size_t>(n));
    SpectralResult result;
    for (long iter = 1; iter <= kMaxPowerIterations; ++iter) {
        for (int i = 0; i < n; ++i) {
            double acc = 0.0;
            const double* row = m.entries.data() + static_cast<std::size_t>(i) * n;
            for (int j = 0; j < n; ++j) acc += row[j] * x[static_cast<std::size_t>(j)];
            ax[static_cast<std::size_t>(i)] = acc;
        }
        double rayleigh = 0.0;
        for (int i = 0; i < n; ++i) rayleigh += x[static_cast<std::size_t>(i)] * ax[static_cast<std::size_t>(i)];
        double rinf = 0.0, rtwo = 0.0;
        for (int i = 0; i < n; ++i) {
            double r = ax[static_cast<std::size_t>(i)] - rayleigh * x[static_cast<std::size_t>(i)];
            rinf = std::max(rinf, std::abs(r));
            rtwo += r * r;
        }
        rtwo = std::sqrt(rtwo);
        result.radius = rayleigh;
        result.iterations = iter;
        result.residual = rinf;
        result.residual_two = rtwo;
        if (rtwo <= tol) {
            result.perron = x;
            return result;
        }
        // next iterate: (A + shift I) x, normalized
        double norm = 0.0;
        for (int i = 0; i < n; ++i) {
            ax[static_cast<std::size_t>(i)] += shift * x[static_cast<std::size_t>(i)];
            norm += ax[static_cast<std::size_t>(i)] * ax[static_cast<std::size_t>(i)];
        }
        norm = std::sqrt(norm);
        for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = ax[static_cast<std::size_t>(i)] / norm;
    }
    throw NoConvergence(kMaxPowerIterations, result.residual);
}

double signless_laplacian_radius(const Graph& g, double tol) {
    return 2.0 * spectral_radius(g, Rational(1, 2), tol).radius;
}

double rayleigh_quotient(const Graph& g, const Rational& alpha, std::span<const double> x) {
    if (alpha < 0 || alpha > 1) throw AlphaOutOfRange(rational_to_string(alpha));
    if (static_cast<int>(x.size()) != g.vertex_count()) throw Error("vector length mismatch");
    double norm = 0.0;
    for (double v : x) norm += v * v;
    if (std::abs(norm - 1.0) > 1e-8) throw NotUnitVector();
    const double a = to_double(alpha);
    double acc = 0.0;
    for (auto [u, v] : g.edges()) {
        double xu = x[static_cast<std::size_t>(u)];
        double xv = x[static_cast<std::size_t>(v)];
        acc += a * (xu * xu + xv * xv) + 2.0 * (1.0 - a) * xu * xv;
    }
    return acc;
}

}  // namespace aspectra
