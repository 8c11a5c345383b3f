#ifndef QGRAPH_VERIFY_HPP
#define QGRAPH_VERIFY_HPP

#include <string>
#include <vector>

#include "qgraph/lie.hpp"

namespace qgraph {

enum class CheckStatus { pass, fail, skip };

struct CheckResult {
    std::string name;
    std::string expected;
    std::string actual;
    CheckStatus status = CheckStatus::fail;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    bool passed() const;  // no failed entries (skips allowed)
};

// Sector bounds for the verification suites; the defaults match the
// acceptance budgets.
struct VerifyOptions {
    int d2_tree_max_n = 6;       // all-black tree sectors, by in-leg count
    int d2_loop_max_n = 5;       // all-black one-loop sectors
    int d2_mixed_max_black = 5;  // sectors mixing bivalent and higher blacks
    int d2_mixed_max_legs = 5;
    int d2_g2_max_degree = 16;   // bivalent sectors, by effective degree
    int d2_g2_max_vertices = 8;
    int dims_tree_max_n = 4;
    int dims_loop_max_n = 3;
    int dims_g2_max_degree = 8;
    int laplacian_max_vertices = 6;
    int laplacian_max_legs = 6;
    int psi_pi_max_n = 2;
};

std::vector<std::string> suite_names();

// One of d2zero, laplacian, dims, psi-pi, lie-example; unknown names throw
// std::invalid_argument.  A LimitExceeded inside a check marks it skipped
// rather than failed.
SuiteReport run_suite(const std::string& name,
                      const VerifyOptions& options = {});

// The lie-example law checks against one algebra (Jacobi, nilpotency, the
// derivation squaring to zero, trace classes, cycle evaluation).  The
// semisimple-only expectations are included exactly when the Killing form is
// nondegenerate.
SuiteReport lie_example_suite(const LieAlgebraData& L, const std::string& tag);

std::string report_to_json(const SuiteReport& report);

}  // namespace qgraph

#endif  // QGRAPH_VERIFY_HPP
