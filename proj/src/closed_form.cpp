#include "vpath/closed_form.hpp"

#include <stdexcept>

namespace vpath {

namespace {

[[noreturn]] void reject(const std::string& msg) { throw std::invalid_argument(msg); }

Count ceil_half(Count x) { return (x + 1) / 2; }

FormulaResult plain(Count v) {
    FormulaResult r;
    r.value = v;
    r.candidates = {v};
    return r;
}

FormulaResult path_formula(int n, Objective obj) {
    if (n < 3) reject("path formula needs n >= 3");
    return plain(obj == Objective::minimize ? 0 : ceil_half(n) - 1);
}

FormulaResult cycle_formula(int n, Objective obj) {
    if (n < 3) reject("cycle formula needs n >= 3");
    return plain(obj == Objective::minimize ? 1 : ceil_half(n - 1));
}

FormulaResult star_formula(int n, Objective obj) {
    if (n < 3) reject("star formula needs n >= 3");
    return plain(obj == Objective::minimize ? 0 : choose2(n - 1));
}

FormulaResult tree_formula(int n, Objective obj) {
    if (n < 1) reject("tree formula needs n >= 1");
    if (obj == Objective::minimize) return plain(0);
    FormulaResult r = plain(choose2(n - 1));
    r.bound_only = true;
    r.note = "upper bound; attained only by stars";
    return r;
}

FormulaResult wheel_formula(int n, Objective obj) {
    if (n < 4) reject("wheel formula needs n >= 4");
    if (obj == Objective::minimize) return plain(n);
    const Count stated = choose2(n - 1) + ceil_half(n - 1);
    const Count rim_corrected = choose2(n - 1) + ceil_half(n - 2);
    FormulaResult r = plain(stated);
    if (stated != rim_corrected) {
        r.inconsistent = true;
        r.candidates.push_back(rim_corrected);
        r.note = "stated hub+rim formula disagrees with the rim cycle maximum at even n";
    }
    return r;
}

FormulaResult bipartite_formula(int p, int q, Objective obj) {
    if (p < 1 || p > q) reject("bipartite formula needs 1 <= p <= q");
    const Count P = p, Q = q;
    if (obj == Objective::minimize) return plain((3 * Q - P - 1) * P * (P - 1) / 6);
    return plain(P * choose2(Q));
}

FormulaResult complete_formula(int n, Objective) {
    if (n < 1) reject("complete formula needs n >= 1");
    const Count N = n;
    return plain(N * (N - 1) * (N - 2) / 6);  // C(n,3); numbering-independent
}

FormulaResult apollonian_formula(int n, Objective obj) {
    if (n < 3) reject("stacked-triangulation formula needs n >= 3");
    const Count N = n;
    if (obj == Objective::minimize) return plain(3 * N - 8);
    const Count half = N / 2;
    const Count value = (N % 2 == 0) ? (2 * N * N - 7 * N + 4) / 2 : 4 * half * half - 3 * half;
    FormulaResult r = plain(value);
    if (n >= 7) {
        r.inconsistent = true;
        r.candidates.push_back(5 * N - 12);
        r.candidates.push_back(5 * N - 11);
        r.note = "even/odd closed form disagrees with the tabulated range [5n-12, 5n-11]";
    }
    return r;
}

FormulaResult grid_formula(int rows, int cols, Objective obj) {
    if (rows != cols) reject("grid formula covers square grids only");
    if (rows < 3 || rows % 2 == 0) reject("grid formula covers odd side >= 3 only");
    const Count s = rows - 1;
    return plain(obj == Objective::minimize ? s * s : 3 * s * s);
}

}  // namespace

FormulaResult formula_value(const FormulaQuery& q) {
    const auto& s = q.spec;
    switch (s.cls) {
        case GraphClass::path: return path_formula(s.n, q.objective);
        case GraphClass::cycle: return cycle_formula(s.n, q.objective);
        case GraphClass::star: return star_formula(s.n, q.objective);
        case GraphClass::random_tree: return tree_formula(s.n, q.objective);
        case GraphClass::wheel: return wheel_formula(s.n, q.objective);
        case GraphClass::complete: return complete_formula(s.n, q.objective);
        case GraphClass::complete_bipartite: return bipartite_formula(s.p, s.q, q.objective);
        case GraphClass::grid: return grid_formula(s.rows, s.cols, q.objective);
        case GraphClass::apollonian_spine:
        case GraphClass::apollonian_random: return apollonian_formula(s.n, q.objective);
        case GraphClass::named: break;
    }
    reject("no closed form for this class");
}

std::vector<FormulaTableRow> formula_table(const std::vector<GraphClass>& classes, int n_lo,
                                           int n_hi) {
    if (n_lo > n_hi) reject("empty size range");
    std::vector<FormulaTableRow> rows;
    auto push = [&rows](GraphClassSpec spec) {
        FormulaTableRow row{spec, {}, {}};
        row.min = formula_value({spec, Objective::minimize});
        row.max = formula_value({spec, Objective::maximize});
        rows.push_back(std::move(row));
    };
    for (GraphClass cls : classes) {
        for (int n = n_lo; n <= n_hi; ++n) {
            switch (cls) {
                case GraphClass::path:
                    if (n >= 3) push(GraphClassSpec::path(n));
                    break;
                case GraphClass::cycle:
                    if (n >= 3) push(GraphClassSpec::cycle(n));
                    break;
                case GraphClass::star:
                    if (n >= 3) push(GraphClassSpec::star(n));
                    break;
                case GraphClass::random_tree:
                    if (n >= 1) push(GraphClassSpec::random_tree(n, 0));
                    break;
                case GraphClass::wheel:
                    if (n >= 4) push(GraphClassSpec::wheel(n));
                    break;
                case GraphClass::complete:
                    if (n >= 1) push(GraphClassSpec::complete(n));
                    break;
                case GraphClass::complete_bipartite:
                    for (int p = 1; 2 * p <= n; ++p) push(GraphClassSpec::complete_bipartite(p, n - p));
                    break;
                case GraphClass::grid:
                    if (n >= 3 && n % 2 == 1) push(GraphClassSpec::grid(n, n));
                    break;
                case GraphClass::apollonian_spine:
                case GraphClass::apollonian_random:
                    if (n >= 3) push(GraphClassSpec::apollonian_spine(n));
                    break;
                case GraphClass::named: reject("named instances have no formula rows");
            }
        }
    }
    return rows;
}

}  // namespace vpath
