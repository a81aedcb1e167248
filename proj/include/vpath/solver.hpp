#ifndef VPATH_SOLVER_HPP
#define VPATH_SOLVER_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "vpath/generators.hpp"
#include "vpath/graph.hpp"

namespace vpath {

enum class SolveMethod { brute, bnb, local };

struct SearchStats {
    Count nodes = 0;
    double elapsed_ms = 0.0;
    bool proven = false;
};

struct SolveResult {
    Objective objective = Objective::minimize;
    Count value = 0;
    Numbering witness;
    SolveMethod method = SolveMethod::brute;
    SearchStats stats;
};

struct SolveOptions {
    Count node_budget = 0;     // 0 = default_node_budget()
    double time_limit_ms = 0;  // 0 = none
    int threads = 1;
    int brute_cap = 10;        // exhaustive search refuses beyond this
    bool fix_first = false;    // vertex-transitive instances: pin number 1 to vertex 1
};

/// 1e8 nodes unless the VPATH_NODE_BUDGET environment variable overrides.
Count default_node_budget();

/// Raised when exhaustive search is asked for more vertices than the cap
/// allows; callers should fall back to the branch-and-bound solver.
class cap_exceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Full enumeration of assignment sequences with incremental placement
/// costs (assigning the next number to u adds C(u's unassigned-neighbor
/// count, 2)). The witness is the lexicographically smallest optimal
/// sequence. Workers may split on the first placement; results are
/// identical for every thread count.
SolveResult solve_brute(const Graph& g, Objective objective, const SolveOptions& opts = {});

/// Same search tree with pruning. Min prunes against
/// partial + max(level-fill bound, live triangle count); max against
/// partial + a degree-capped linear relaxation (both dominate the trivial
/// 0 / sum-of-C(deg,2) bounds). Seeds its incumbent from the greedy +
/// local-search start. Proven optimum when the search completes within
/// the node budget, otherwise the best incumbent with proven = false.
SolveResult solve_bnb(const Graph& g, Objective objective, const SolveOptions& opts = {});

/// Independent reference: walks every numbering via next_permutation and
/// recounts from scratch. Slow; kept for cross-checking the incremental
/// solvers and the benchmark.
SolveResult solve_exhaustive_reference(const Graph& g, Objective objective);

enum class Direction { at_most, at_least };

struct DecisionQuery {
    Graph graph;
    Count k = 0;
    Direction direction = Direction::at_most;
};

/// yes with stats.proven unset cannot happen; no with stats.proven unset
/// means the budget ran out before the answer was certain.
struct DecisionResult {
    bool yes = false;
    std::optional<Numbering> witness;
    SearchStats stats;
};

/// Is there a numbering scoring at most (at_least: at least) k? Branches
/// stop at their first threshold witness; the reported witness is the one
/// from the smallest first-placement branch, independent of thread count.
DecisionResult decide(const DecisionQuery& q, const SolveOptions& opts = {});

enum class RowStatus { ok, resolved, mismatch, skipped };

/// One line of the formula / construction / solver agreement matrix.
struct VerifyRow {
    GraphClassSpec spec;
    Objective objective = Objective::minimize;
    std::optional<Count> formula;    // primary formula value
    std::vector<Count> candidates;   // all stated candidates when flagged
    bool bound_only = false;         // formula is an upper bound, not an exact value
    bool flagged = false;            // inconsistent source, bound-only, or unproven construction
    std::optional<Count> constructive;
    std::optional<Count> solver;     // empty when skipped (instance beyond the brute cap)
    RowStatus status = RowStatus::ok;
    std::string note;
};

/// Builds the matrix for the requested class names ("paths", "cycles",
/// "stars", "trees", "wheels", "bipartite", "complete", "apollonian",
/// "grids") over sizes [n_lo, n_hi]. Unflagged rows must show three-way
/// agreement; flagged rows are resolved against the solver and the
/// matching candidate is named in the note.
std::vector<VerifyRow> verify_classes(const std::vector<std::string>& classes, int n_lo, int n_hi,
                                      const SolveOptions& opts = {});

}  // namespace vpath

#endif
