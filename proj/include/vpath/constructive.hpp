#ifndef VPATH_CONSTRUCTIVE_HPP
#define VPATH_CONSTRUCTIVE_HPP

#include "vpath/generators.hpp"
#include "vpath/graph.hpp"

namespace vpath {

/// Optimal-numbering constructions for the generated graph classes. Each
/// returns a bijection onto {1..n} for the generator's vertex convention;
/// the attained counts are pinned by the test suite.

/// Sequential numbering from endpoint 1; attains 0.
Numbering path_min(int n);

/// Odd-distance vertices from endpoint 1 get 1..floor(n/2), the rest the
/// remaining numbers in position order; attains ceil(n/2) - 1. n >= 3.
Numbering path_max(int n);

/// Peel a leaf of the remaining tree each round, numbering 1, 2, ... in
/// peel order (ties: original degree, then id, so a star's hub comes
/// last); attains 0 on every tree. Throws if g is not a tree.
Numbering tree_min(const Graph& g);

/// Hub first: the identity numbering of the generated star; attains
/// C(n-1, 2). n >= 3.
Numbering star_max(int n);

Numbering cycle_min(int n);  // identity; attains 1
Numbering cycle_max(int n);  // attains ceil((n-1)/2)

Numbering wheel_min(int n);  // hub last; attains n
Numbering wheel_max(int n);  // hub first; attains C(n-1,2) + ceil((n-2)/2)

/// Small side first (1..p then p+1..p+q); attains p*C(q,2).
Numbering bipartite_max(int p, int q);

/// Small side takes the p highest odd numbers when q is even, the p
/// highest even numbers when q is odd; attains (3q-p-1)(p^2-p)/6.
Numbering bipartite_min(int p, int q);

/// Reverse of the construction order recorded in the trace (newest vertex
/// gets 1); attains 3n-8, exactly one valid path per triangle. Throws if
/// the trace does not replay to g.
Numbering apollonian_min(const Graph& g, const DimpleTrace& trace);

/// Degree-descending numbering. When g is in spine form (two vertices
/// adjacent to all others whose removal leaves an induced path) the tie
/// order among spine vertices follows the alternating pattern that
/// attains the class maximum; otherwise ties break by ascending id and no
/// optimality is claimed.
Numbering apollonian_max(const Graph& g);

/// True when g has two vertices adjacent to every other vertex whose
/// removal leaves an induced path; the form apollonian_max is proven
/// maximal for.
bool is_spine_form(const Graph& g);

Numbering grid_min(int rows, int cols);  // row-major; attains (n-1)^2 on odd squares
Numbering grid_max(int rows, int cols);  // odd checkerboard first; attains 3(n-1)^2 on odd squares

/// Dispatches to the construction for the given class, or nullopt where
/// none is claimed (tree max, named instances). Apollonian minimization
/// needs the instance's dimple trace.
std::optional<Numbering> class_construction(const GraphClassSpec& spec, const Graph& g,
                                            const std::optional<DimpleTrace>& trace,
                                            Objective objective);

}  // namespace vpath

#endif
