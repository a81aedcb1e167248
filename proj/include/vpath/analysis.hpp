#ifndef VPATH_ANALYSIS_HPP
#define VPATH_ANALYSIS_HPP

#include <array>
#include <vector>

#include "vpath/graph.hpp"

namespace vpath {

/// All triangles as sorted vertex triples, in lexicographic order.
std::vector<std::array<int, 3>> triangle_list(const Graph& g);

Count triangle_count(const Graph& g);

/// Triangles whose removal (of the three vertices) disconnects the rest.
/// Requires a connected graph with n >= 4.
Count separating_triangle_count(const Graph& g);

/// Necessary conditions for being a maximal planar graph: connected,
/// m == 3n - 6, min degree >= 3 and triangle count within
/// [2n - 4, 3n - 8]. A cheap screen, not a planarity test.
bool is_triangulation_candidate(const Graph& g);

/// Triangles sharing no vertex with any other triangle. Every numbering
/// scores at least this many valid paths.
Count isolated_triangle_count(const Graph& g);

/// Size of a greedily built family of pairwise vertex-disjoint triangles
/// (lexicographic order); also a lower bound on every numbering's score,
/// used by the branch-and-bound pruning.
Count disjoint_triangle_bound(const Graph& g);

}  // namespace vpath

#endif
