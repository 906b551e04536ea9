#ifndef ASPECTRA_LEMMA_SUITES_HPP
#define ASPECTRA_LEMMA_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace aspectra {

// Randomized property suites for the radius-monotone rewrites. Each suite
// draws valid instances (hypothesis failures are discarded and redrawn),
// asserts the predicted radius ordering with margin 10x the eigensolver
// tolerance, and escalates anything inside the margin to exact
// characteristic-polynomial comparison.
struct SuiteOptions {
    std::uint64_t seed = 20250811;
    int instances = 200;
    double tol = 1e-10;
    bool invert_graft = false;  // negative control: graft toward the smaller Perron entry
};

struct SuiteResult {
    std::string name;
    int instances_checked = 0;
    int violations = 0;
    int exact_escalations = 0;
    std::vector<std::string> counterexamples;  // "graph6  description"
    bool passed() const { return violations == 0; }
};

std::vector<SuiteResult> run_lemma_suites(const SuiteOptions& options);

}  // namespace aspectra

#endif
