#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "aspectra/enumeration.hpp"
#include "aspectra/errors.hpp"
#include "aspectra/families.hpp"
#include "aspectra/graph.hpp"
#include "aspectra/graph6.hpp"
#include "aspectra/isomorphism.hpp"
#include "aspectra/reports.hpp"

using namespace aspectra;

namespace {

Graph cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
    return Graph(n, edges);
}

int total_classes(int n, int cyclomatic, GenerationMethod method) {
    int total = 0;
    for (int d = 1; d <= n - 2; ++d)
        total += static_cast<int>(enumerate_space({n, d, cyclomatic}, method).size());
    return total;
}

}  // namespace

TEST_CASE("smallest spaces") {
    auto u31 = enumerate_space({3, 1, 1});
    REQUIRE(u31.size() == 1);
    CHECK(is_isomorphic(u31[0], cycle(3)));

    // the unique bicyclic graph of order 4 has diameter 2, not 1
    CHECK(enumerate_space({4, 1, 2}).empty());
    auto b42 = enumerate_space({4, 2, 2});
    REQUIRE(b42.size() == 1);
    CHECK(is_isomorphic(b42[0], theta_small()));
}

TEST_CASE("class totals match the published counts") {
    // unicyclic: 2, 5, 13, 33 for n = 4..7
    CHECK(total_classes(4, 1, GenerationMethod::subset_scan) == 2);
    CHECK(total_classes(5, 1, GenerationMethod::subset_scan) == 5);
    CHECK(total_classes(6, 1, GenerationMethod::subset_scan) == 13);
    CHECK(total_classes(7, 1, GenerationMethod::subset_scan) == 33);
    // bicyclic: 1, 5, 19, 67 for n = 4..7
    CHECK(total_classes(4, 2, GenerationMethod::subset_scan) == 1);
    CHECK(total_classes(5, 2, GenerationMethod::subset_scan) == 5);
    CHECK(total_classes(6, 2, GenerationMethod::subset_scan) == 19);
    CHECK(total_classes(7, 2, GenerationMethod::subset_scan) == 67);
}

TEST_CASE("census stability across generation orders") {
    for (int cyclomatic : {1, 2}) {
        for (int n = 4; n <= 8; ++n) {
            for (int d = 1; d <= n - 2; ++d) {
                auto scan = enumerate_space({n, d, cyclomatic}, GenerationMethod::subset_scan);
                auto grow = enumerate_space({n, d, cyclomatic}, GenerationMethod::base_augmentation);
                REQUIRE(scan.size() == grow.size());
                for (std::size_t i = 0; i < scan.size(); ++i)
                    CHECK(canonical_form(scan[i]) == canonical_form(grow[i]));
            }
        }
    }
}

TEST_CASE("every emitted graph has the requested invariants") {
    for (int cyclomatic : {1, 2}) {
        for (int d = 2; d <= 5; ++d) {
            for (const Graph& g : enumerate_space({7, d, cyclomatic})) {
                CHECK(g.vertex_count() == 7);
                CHECK(g.edge_count() == 7 + cyclomatic - 1);
                CHECK(g.is_connected());
                CHECK(*diameter(g) == d);
            }
        }
    }
}

TEST_CASE("caps and empty spaces") {
    CHECK_THROWS_AS(enumerate_space({12, 3, 1}), CapExceeded);
    CHECK_NOTHROW(enumerate_space({4, 2, 1}, GenerationMethod::subset_scan, 4));
    CHECK(enumerate_space({5, 1, 1}).empty());  // no unicyclic graph of order 5 has diameter 1
    CHECK_THROWS_AS(argmax_radius({5, 1, 1}, Rational(0)), EmptySpace);
}

TEST_CASE("unicyclic argmax matches the balanced member") {
    auto report = argmax_radius({7, 3, 1}, Rational(1, 2));
    CHECK(report.census == static_cast<std::size_t>(enumerate_space({7, 3, 1}).size()));
    CHECK(is_isomorphic(report.maximizer, ustar2(7, 3)));
    CHECK_FALSE(report.exact_tie);
    CHECK(report.runner_up_gap > 0);
    // deterministic repeat
    auto again = argmax_radius({7, 3, 1}, Rational(1, 2));
    CHECK(to_graph6(again.maximizer) == to_graph6(report.maximizer));
    CHECK(again.radius == report.radius);
}

TEST_CASE("bicyclic argmax lands in the candidate pair") {
    for (const char* as : {"0", "1/2"}) {
        Rational alpha = rational_from_string(as);
        auto report = argmax_radius({8, 4, 2}, alpha);
        bool is_b3 = is_isomorphic(report.maximizer, bstar3(8, 4));
        bool is_b5 = is_isomorphic(report.maximizer, bstar5(8, 4));
        CHECK((is_b3 || is_b5));
        if (alpha == Rational(1, 2)) CHECK(is_b3);
    }
}

TEST_CASE("compare pair") {
    Graph b3 = bstar3(16, 9);
    Graph b5 = bstar5(16, 9);
    PairComparison at0 = compare_pair(b3, b5, Rational(0));
    CHECK(at0.order == Ordering::less);
    CHECK(at0.gap == doctest::Approx(-0.00353).epsilon(2e-3));
    CHECK(at0.error_bound < 1e-8);

    PairComparison at04 = compare_pair(b3, b5, rational_from_string("0.4"));
    CHECK(at04.order == Ordering::greater);
    CHECK(at04.gap == doctest::Approx(0.00327).epsilon(2e-3));

    PairComparison same = compare_pair(b3, b3, Rational(1, 3));
    CHECK(same.order == Ordering::indistinguishable);
    CHECK(std::abs(same.gap) < 1e-12);

    CHECK(compare_pair_exact(b3, b5, Rational(1, 2)) == 1);
    CHECK(compare_pair_exact(b3, b5, Rational(0)) == -1);
    CHECK(compare_pair_exact(b3, b3, Rational(1, 2)) == 0);
}

TEST_CASE("radius table and csv round trip") {
    std::vector<Rational> alphas{Rational(0), Rational(1, 2)};
    auto rows = radius_table(16, 9, alphas);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].dr == doctest::Approx(-0.00353).epsilon(2e-3));
    CHECK(rows[1].rho_b3 == doctest::Approx(4.6201).epsilon(1e-4));
    CHECK(rows[1].rho_b5 == doctest::Approx(4.6171).epsilon(1e-4));

    std::string csv = radius_table_to_csv(rows);
    auto parsed = radius_table_from_csv(csv);
    REQUIRE(parsed.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(parsed[i].alpha == rows[i].alpha);
        CHECK(parsed[i].rho_b3 == rows[i].rho_b3);  // exact: full-precision emit
        CHECK(parsed[i].rho_b5 == rows[i].rho_b5);
        CHECK(parsed[i].dr == rows[i].dr);
    }
    CHECK_THROWS_AS(radius_table_from_csv("bogus\n1,2,3,4\n"), ParseError);
}

TEST_CASE("worker count respects the environment cap") {
    CHECK(worker_count() >= 1);
}
