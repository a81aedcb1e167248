#ifndef VPATH_CLOSED_FORM_HPP
#define VPATH_CLOSED_FORM_HPP

#include <optional>
#include <string>
#include <vector>

#include "vpath/generators.hpp"
#include "vpath/graph.hpp"

namespace vpath {

struct FormulaQuery {
    GraphClassSpec spec;  // classes with stated formulas only
    Objective objective = Objective::minimize;
};

/// Outcome of a formula lookup. `value` is the primary stated value. Where
/// the source states conflicting expressions (wheel max at even n, the
/// stacked-triangulation max tabulated differently for n >= 7) all
/// candidates are returned and `inconsistent` is set; the verification
/// matrix settles which candidate the solver confirms. Tree max is an
/// upper bound, not a value.
struct FormulaResult {
    Count value = 0;
    bool bound_only = false;
    bool inconsistent = false;
    std::vector<Count> candidates;  // primary first
    std::string note;
};

/// Exact integer evaluation; throws std::invalid_argument when the class
/// has no formula for the objective or the parameters fall outside the
/// stated range (path/cycle n >= 3, bipartite 1 <= p <= q, grid odd
/// square, stacked n >= 3, wheel n >= 4).
FormulaResult formula_value(const FormulaQuery& q);

struct FormulaTableRow {
    GraphClassSpec spec;
    std::optional<FormulaResult> min;
    std::optional<FormulaResult> max;
};

/// One row per class and size over [n_lo, n_hi]; complete-bipartite rows
/// enumerate the splits p + q = n, grids keep odd squares only.
std::vector<FormulaTableRow> formula_table(const std::vector<GraphClass>& classes, int n_lo,
                                           int n_hi);

}  // namespace vpath

#endif
