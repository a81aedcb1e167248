#ifndef VPATH_HEURISTICS_HPP
#define VPATH_HEURISTICS_HPP

#include <cstdint>

#include "vpath/graph.hpp"
#include "vpath/solver.hpp"

namespace vpath {

struct LocalSearchOptions {
    std::uint64_t seed = 0;   // shuffles the scan order in first-improvement mode
    Count max_iters = 0;      // accepted-move cap; 0 = run to a local optimum
    bool first_improvement = false;
    int threads = 1;          // parallel neighborhood scan (best-improvement only)
};

/// Peeling start: repeatedly pick the unnumbered vertex of least (min
/// objective) or greatest (max) residual degree, smallest id on ties, and
/// hand it the lowest remaining number. Gives 0 on trees for min and the
/// hub-first numbering on stars for max.
Numbering greedy_start(const Graph& g, Objective objective);

/// Repeated best improving exchange of two vertices' numbers; the delta
/// of a swap recounts only middles at or adjacent to the swapped pair.
/// Ties go to the lexicographically smallest vertex pair, so the accepted
/// move sequence is identical for every thread count. Terminates at a
/// swap-local optimum or after max_iters accepted moves; the result is
/// never worse than the start and never claims optimality.
SolveResult local_search(const Graph& g, const Numbering& start, Objective objective,
                         const LocalSearchOptions& opts = {});

}  // namespace vpath

#endif
