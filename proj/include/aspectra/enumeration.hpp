#ifndef ASPECTRA_ENUMERATION_HPP
#define ASPECTRA_ENUMERATION_HPP

#include <cstddef>
#include <vector>

#include "aspectra/graph.hpp"
#include "aspectra/rational.hpp"

namespace aspectra {

inline constexpr int kEnumerationCap = 11;

struct SearchSpace {
    int n = 0;
    int d = 0;
    int cyclomatic = 1;  // 1 = unicyclic, 2 = bicyclic
};

enum class GenerationMethod {
    subset_scan,        // all m-subsets of E(K_n), filtered and deduplicated
    base_augmentation,  // grow every base by pendant vertices, deduplicated
};

// Every isomorphism class of connected graphs with m = n + cyclomatic - 1
// edges and diameter exactly d, each as its canonical representative, sorted
// by canonical form. Results are memoized per (n, cyclomatic, method).
// Honors the ALPHA_SPECTRA_THREADS cap for the subset scan.
std::vector<Graph> enumerate_space(const SearchSpace& space,
                                   GenerationMethod method = GenerationMethod::subset_scan,
                                   int cap = kEnumerationCap);

struct ExtremalReport {
    Graph maximizer{0};
    double radius = 0.0;
    double runner_up_gap = 0.0;       // radius minus best radius among the rest
    std::vector<Graph> near_ties;     // within tie_tol of the maximum, maximizer excluded
    std::size_t census = 0;
    bool exact_tie = false;           // a non-isomorphic graph shares the exact radius
};

// Deterministic argmax of the alpha-spectral radius over the census. Near
// ties are resolved by exact comparison of characteristic-polynomial roots;
// an exact tie between non-isomorphic graphs is flagged, never suppressed.
ExtremalReport argmax_radius(const SearchSpace& space, const Rational& alpha, double tie_tol = 1e-7,
                             GenerationMethod method = GenerationMethod::subset_scan,
                             int cap = kEnumerationCap);

enum class Ordering { less, equal, greater, indistinguishable };

struct PairComparison {
    Ordering order = Ordering::indistinguishable;
    double gap = 0.0;          // rho(g) - rho(h)
    double error_bound = 0.0;  // certified: sum of the two eigensolver residuals
};

// Sign of rho_alpha(g) - rho_alpha(h) with a certified bound; reports
// `indistinguishable` instead of guessing when |gap| is below the bound.
PairComparison compare_pair(const Graph& g, const Graph& h, const Rational& alpha, double tol = 1e-10);

// Exact ordering of rho_alpha(g) vs rho_alpha(h) through characteristic
// polynomials: -1, 0, +1.
int compare_pair_exact(const Graph& g, const Graph& h, const Rational& alpha);

// Worker count: min(ALPHA_SPECTRA_THREADS, hardware concurrency), at least 1.
int worker_count();

}  // namespace aspectra

#endif
