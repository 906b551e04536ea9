#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "aspectra/charpoly.hpp"
#include "aspectra/errors.hpp"
#include "aspectra/families.hpp"
#include "aspectra/graph.hpp"
#include "aspectra/polynomial.hpp"
#include "aspectra/spectral.hpp"

using namespace aspectra;

namespace {

Graph cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
    return Graph(n, edges);
}

Graph path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

Graph star(int leaves) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return Graph(leaves + 1, edges);
}

Graph random_connected(std::mt19937_64& rng, int n, int extra) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v)
        edges.emplace_back(static_cast<int>(rng() % static_cast<unsigned>(v)), v);
    for (int i = 0; i < extra; ++i) {
        int u = static_cast<int>(rng() % static_cast<unsigned>(n));
        int v = static_cast<int>(rng() % static_cast<unsigned>(n));
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        bool present = false;
        for (auto [a, b] : edges) present |= (a == u && b == v);
        if (!present) edges.emplace_back(u, v);
    }
    return Graph(n, edges);
}

}  // namespace

TEST_CASE("alpha matrix entries") {
    Graph k2 = path(2);
    AlphaMatrix m = alpha_matrix(k2, Rational(1, 3));
    CHECK(m.at(0, 0) == doctest::Approx(1.0 / 3));
    CHECK(m.at(0, 1) == doctest::Approx(2.0 / 3));
    CHECK(m.at(1, 0) == doctest::Approx(2.0 / 3));

    AlphaMatrix c3 = alpha_matrix(cycle(3), Rational(1, 2));
    for (int i = 0; i < 3; ++i) CHECK(c3.at(i, i) == doctest::Approx(1.0));
    CHECK(c3.at(0, 1) == doctest::Approx(0.5));

    AlphaMatrix s = alpha_matrix(star(4), Rational(1, 2));
    CHECK(s.at(0, 0) == doctest::Approx(2.0));
    CHECK(s.at(1, 1) == doctest::Approx(0.5));

    // row sums equal the degree for every alpha
    Graph g = ustar2(8, 4);
    for (const char* a : {"0", "1/4", "2/3", "1"}) {
        AlphaMatrix am = alpha_matrix(g, rational_from_string(a));
        for (int i = 0; i < am.n; ++i) {
            double row = 0;
            for (int j = 0; j < am.n; ++j) row += am.at(i, j);
            CHECK(row == doctest::Approx(g.degree(i)).epsilon(1e-12));
        }
    }
    CHECK_THROWS_AS(alpha_matrix(k2, Rational(-1, 2)), AlphaOutOfRange);
    CHECK_THROWS_AS(alpha_matrix(k2, Rational(3, 2)), AlphaOutOfRange);
}

TEST_CASE("spectral radius closed forms") {
    for (const char* a : {"0", "1/4", "1/2", "0.9"}) {
        CHECK(spectral_radius(path(2), rational_from_string(a)).radius == doctest::Approx(1.0).epsilon(1e-9));
    }
    for (int n : {3, 4, 5, 8}) {
        for (const char* a : {"0", "1/3", "3/4"}) {
            CHECK(spectral_radius(cycle(n), rational_from_string(a)).radius ==
                  doctest::Approx(2.0).epsilon(1e-9));
        }
    }
    // star K_{1,z+4} at alpha = 1/2 has radius (z+5)/2
    for (int z : {0, 1, 2, 5}) {
        CHECK(spectral_radius(star(z + 4), Rational(1, 2)).radius ==
              doctest::Approx((z + 5) / 2.0).epsilon(1e-9));
    }
    CHECK_THROWS_AS(spectral_radius(Graph(3, {{0, 1}}), Rational(0)), DisconnectedGraph);
}

TEST_CASE("signless laplacian bridge") {
    CHECK(signless_laplacian_radius(cycle(6)) == doctest::Approx(4.0).epsilon(1e-9));
    CHECK(signless_laplacian_radius(path(2)) == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(signless_laplacian_radius(bstar3(16, 9)) == doctest::Approx(2 * 4.6201).epsilon(1e-4));
}

TEST_CASE("perron vector and residual invariants") {
    for (auto g : {cycle(5), ustar2(9, 4), bstar5(12, 6), star(6)}) {
        SpectralResult r = spectral_radius(g, Rational(1, 4));
        double norm = 0;
        for (double x : r.perron) {
            CHECK(x > 0.0);
            norm += x * x;
        }
        CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(r.residual <= kDefaultTolerance);
        CHECK(r.residual_two <= kDefaultTolerance);
    }
}

TEST_CASE("rayleigh quotient edge-sum form") {
    std::vector<double> half{1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)};
    CHECK(rayleigh_quotient(path(2), Rational(1, 3), half) == doctest::Approx(1.0).epsilon(1e-12));

    std::vector<double> uniform(3, 1.0 / std::sqrt(3.0));
    CHECK(rayleigh_quotient(path(3), Rational(0), uniform) == doctest::Approx(4.0 / 3).epsilon(1e-12));

    // at the Perron vector the quotient is the radius
    Graph g = bstar3(10, 4);
    SpectralResult r = spectral_radius(g, Rational(2, 3));
    CHECK(rayleigh_quotient(g, Rational(2, 3), r.perron) == doctest::Approx(r.radius).epsilon(1e-10));

    std::vector<double> bad{1.0, 1.0};
    CHECK_THROWS_AS(rayleigh_quotient(path(2), Rational(0), bad), NotUnitVector);
}

TEST_CASE("rayleigh maximality over random unit vectors") {
    std::mt19937_64 rng(123);
    std::normal_distribution<double> gauss;
    Graph g = ustar2(8, 4);
    for (const char* as : {"0", "1/2", "3/4"}) {
        Rational alpha = rational_from_string(as);
        double rho = spectral_radius(g, alpha).radius;
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<double> x(static_cast<std::size_t>(g.vertex_count()));
            double norm = 0;
            for (double& v : x) {
                v = gauss(rng);
                norm += v * v;
            }
            norm = std::sqrt(norm);
            for (double& v : x) v /= norm;
            x[0] = std::abs(x[0]);  // at least one nonnegative entry
            CHECK(rayleigh_quotient(g, alpha, x) <= rho + 1e-9);
        }
    }
}

TEST_CASE("monotonicity in alpha on random connected graphs") {
    std::mt19937_64 rng(97);
    const Rational grid[] = {Rational(0),    Rational(1, 5), Rational(2, 5),
                             Rational(3, 5), Rational(4, 5), Rational(1)};
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = random_connected(rng, 4 + static_cast<int>(rng() % 7), static_cast<int>(rng() % 4));
        double prev = -1.0;
        for (const Rational& alpha : grid) {
            double rho = spectral_radius(g, alpha).radius;
            CHECK(rho >= prev - 1e-9);
            prev = rho;
        }
    }
}

TEST_CASE("radius exceeds 2 off trees and cycles") {
    for (auto g : {ustar2(6, 3), ustar2(9, 6), bstar3(8, 3), bstar5(8, 4), inf_small()}) {
        for (const char* as : {"0", "1/4", "1/2", "3/4"}) {
            CHECK(spectral_radius(g, rational_from_string(as)).radius > 2.0 + 1e-6);
        }
    }
}

TEST_CASE("perron entries decay along pendant paths") {
    for (auto g : {ustar2(9, 5), bstar3(11, 5), bstar5(12, 7)}) {
        for (const char* as : {"0", "1/2", "3/4"}) {
            SpectralResult r = spectral_radius(g, rational_from_string(as));
            REQUIRE(r.radius > 2.0);
            for (const PathDescriptor& p : pendant_paths(g)) {
                for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
                    CHECK(r.perron[static_cast<std::size_t>(p.vertices[i])] >
                          r.perron[static_cast<std::size_t>(p.vertices[i + 1])]);
                }
            }
        }
    }
}

TEST_CASE("radius matches the largest characteristic root on family members") {
    std::vector<Graph> members;
    for (auto [n, d] : {std::pair{7, 3}, std::pair{9, 5}, std::pair{12, 8}}) members.push_back(ustar2(n, d));
    for (auto [n, d] : {std::pair{8, 3}, std::pair{11, 6}}) members.push_back(bstar3(n, d));
    for (auto [n, d] : {std::pair{8, 4}, std::pair{12, 7}}) members.push_back(bstar5(n, d));
    members.push_back(inf_small());
    members.push_back(theta_small());
    for (const Graph& g : members) {
        for (const char* as : {"0", "1/3", "1/2", "2/3"}) {
            Rational alpha = rational_from_string(as);
            double via_poly = largest_root_approx(phi(g, alpha));
            double via_power = spectral_radius(g, alpha).radius;
            CHECK(via_power == doctest::Approx(via_poly).epsilon(1e-9));
        }
    }
}
