#include "vpath/constructive.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace vpath {

namespace {

[[noreturn]] void reject(const std::string& msg) { throw std::invalid_argument(msg); }

}  // namespace

Numbering path_min(int n) {
    if (n < 1) reject("path_min needs n >= 1");
    return Numbering::identity(n);
}

Numbering path_max(int n) {
    if (n < 3) reject("path_max needs n >= 3");
    Numbering pi(n);
    int next = 1;
    for (int v = 2; v <= n; v += 2) pi.set(v, next++);
    for (int v = 1; v <= n; v += 2) pi.set(v, next++);
    return pi;
}

Numbering tree_min(const Graph& g) {
    if (!is_connected(g) || g.num_edges() != g.num_vertices() - 1)
        reject("tree_min needs a connected acyclic graph");
    // Peel a leaf of the remaining tree each round. Residual-degree ties go
    // to the smaller original degree so a star's hub is numbered after the
    // final leaf, then to the smaller id.
    const int n = g.num_vertices();
    std::vector<int> residual(static_cast<std::size_t>(n) + 1, 0);
    std::vector<char> removed(static_cast<std::size_t>(n) + 1, 0);
    for (int v = 1; v <= n; ++v) residual[static_cast<std::size_t>(v)] = g.degree(v);
    auto key = [&](int v) {
        return std::tuple(residual[static_cast<std::size_t>(v)], g.degree(v), v);
    };
    Numbering pi(n);
    for (int number = 1; number <= n; ++number) {
        int pick = 0;
        for (int v = 1; v <= n; ++v)
            if (!removed[static_cast<std::size_t>(v)] && (pick == 0 || key(v) < key(pick)))
                pick = v;
        pi.set(pick, number);
        removed[static_cast<std::size_t>(pick)] = 1;
        for (int w : g.neighbors(pick))
            if (!removed[static_cast<std::size_t>(w)]) --residual[static_cast<std::size_t>(w)];
    }
    return pi;
}

Numbering star_max(int n) {
    if (n < 3) reject("star_max needs n >= 3");
    return Numbering::identity(n);
}

Numbering cycle_min(int n) {
    if (n < 3) reject("cycle_min needs n >= 3");
    return Numbering::identity(n);
}

Numbering cycle_max(int n) {
    if (n < 3) reject("cycle_max needs n >= 3");
    if (n == 3) return Numbering::identity(3);
    // Vertex 1 gets 1; the remaining cycle is the path 2..n, numbered by
    // the path maximum shifted up by one.
    const Numbering tail = path_max(n - 1);
    Numbering pi(n);
    pi.set(1, 1);
    for (int i = 1; i < n; ++i) pi.set(1 + i, tail.of(i) + 1);
    return pi;
}

Numbering wheel_min(int n) {
    if (n < 4) reject("wheel_min needs n >= 4");
    return Numbering::identity(n);  // hub is vertex n; rim keeps cycle order
}

Numbering wheel_max(int n) {
    if (n < 4) reject("wheel_max needs n >= 4");
    const Numbering rim = cycle_max(n - 1);
    Numbering pi(n);
    pi.set(n, 1);
    for (int v = 1; v < n; ++v) pi.set(v, rim.of(v) + 1);
    return pi;
}

Numbering bipartite_max(int p, int q) {
    if (p < 1 || p > q) reject("bipartite_max needs 1 <= p <= q");
    return Numbering::identity(p + q);
}

Numbering bipartite_min(int p, int q) {
    if (p < 1 || p > q) reject("bipartite_min needs 1 <= p <= q");
    const int n = p + q;
    // The p highest numbers of the right parity, ascending over the small
    // side; everything else ascending over the large side.
    std::vector<int> small_side;
    const int parity = (q % 2 == 0) ? 1 : 0;
    for (int x = n; static_cast<int>(small_side.size()) < p; --x)
        if (x % 2 == parity) small_side.push_back(x);
    std::sort(small_side.begin(), small_side.end());
    std::vector<char> taken(static_cast<std::size_t>(n) + 1, 0);
    for (int x : small_side) taken[static_cast<std::size_t>(x)] = 1;

    Numbering pi(n);
    for (int v = 1; v <= p; ++v) pi.set(v, small_side[static_cast<std::size_t>(v) - 1]);
    int next = 1;
    for (int v = p + 1; v <= n; ++v) {
        while (taken[static_cast<std::size_t>(next)]) ++next;
        pi.set(v, next++);
    }
    return pi;
}

Numbering apollonian_min(const Graph& g, const DimpleTrace& trace) {
    if (!(trace.replay() == g)) reject("dimple trace does not replay to this graph");
    const int n = g.num_vertices();
    Numbering pi(n);
    for (int v = 1; v <= n; ++v) pi.set(v, n + 1 - v);
    return pi;
}

namespace {

// Looks for two vertices adjacent to every other vertex whose removal
// leaves an induced path, returned in walk order from the endpoint with
// the smaller id.
struct SpineForm {
    int base_a = 0, base_b = 0;
    std::vector<int> spine;
};

std::optional<std::vector<int>> induced_path_order(const Graph& g, const std::vector<int>& rest) {
    const std::size_t s = rest.size();
    std::vector<char> in_rest(static_cast<std::size_t>(g.num_vertices()) + 1, 0);
    for (int v : rest) in_rest[static_cast<std::size_t>(v)] = 1;
    auto rest_degree = [&](int v) {
        int d = 0;
        for (int w : g.neighbors(v))
            if (in_rest[static_cast<std::size_t>(w)]) ++d;
        return d;
    };
    if (s == 1) return std::vector<int>{rest.front()};
    std::vector<int> ends;
    for (int v : rest) {
        const int d = rest_degree(v);
        if (d == 1) ends.push_back(v);
        else if (d != 2) return std::nullopt;
    }
    if (ends.size() != 2) return std::nullopt;
    std::vector<int> order{std::min(ends[0], ends[1])};
    int prev = 0;
    while (order.size() < s) {
        int cur = order.back(), next = 0;
        for (int w : g.neighbors(cur)) {
            if (!in_rest[static_cast<std::size_t>(w)] || w == prev) continue;
            if (next != 0) return std::nullopt;
            next = w;
        }
        if (next == 0) return std::nullopt;  // disconnected: a cycle among the rest
        prev = cur;
        order.push_back(next);
    }
    return order;
}

std::optional<SpineForm> detect_spine(const Graph& g) {
    const int n = g.num_vertices();
    std::vector<int> dominating;
    for (int v = 1; v <= n; ++v)
        if (g.degree(v) == n - 1) dominating.push_back(v);
    for (std::size_t i = 0; i < dominating.size(); ++i)
        for (std::size_t j = i + 1; j < dominating.size(); ++j) {
            const int a = dominating[i], b = dominating[j];
            std::vector<int> rest;
            for (int v = 1; v <= n; ++v)
                if (v != a && v != b) rest.push_back(v);
            if (auto order = induced_path_order(g, rest)) return SpineForm{a, b, std::move(*order)};
        }
    return std::nullopt;
}

// Spine tie order attaining the class maximum: interior even positions
// first, then interior odd positions, then the two path ends.
std::vector<int> spine_ranks(int s) {
    std::vector<int> rank(static_cast<std::size_t>(s) + 1, 0);
    if (s == 1) {
        rank[1] = 1;
        return rank;
    }
    int next = 1;
    for (int pos = 2; pos < s; pos += 2) rank[static_cast<std::size_t>(pos)] = next++;
    for (int pos = 3; pos < s; pos += 2) rank[static_cast<std::size_t>(pos)] = next++;
    rank[1] = next++;
    rank[static_cast<std::size_t>(s)] = next;
    return rank;
}

}  // namespace

Numbering apollonian_max(const Graph& g) {
    const int n = g.num_vertices();
    if (n == 3) return Numbering::identity(3);
    if (const auto spine = detect_spine(g)) {
        const int s = static_cast<int>(spine->spine.size());
        const auto rank = spine_ranks(s);
        Numbering pi(n);
        pi.set(std::min(spine->base_a, spine->base_b), 1);
        pi.set(std::max(spine->base_a, spine->base_b), 2);
        for (int pos = 1; pos <= s; ++pos)
            pi.set(spine->spine[static_cast<std::size_t>(pos) - 1],
                   rank[static_cast<std::size_t>(pos)] + 2);
        return pi;
    }
    // General fallback: plain degree order, ascending id on ties.
    std::vector<int> by_degree(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v) by_degree[static_cast<std::size_t>(v) - 1] = v;
    std::stable_sort(by_degree.begin(), by_degree.end(),
                     [&g](int a, int b) { return g.degree(a) > g.degree(b); });
    Numbering pi(n);
    for (int t = 0; t < n; ++t) pi.set(by_degree[static_cast<std::size_t>(t)], t + 1);
    return pi;
}

bool is_spine_form(const Graph& g) { return detect_spine(g).has_value(); }

std::optional<Numbering> class_construction(const GraphClassSpec& spec, const Graph& g,
                                            const std::optional<DimpleTrace>& trace,
                                            Objective objective) {
    const bool min = objective == Objective::minimize;
    switch (spec.cls) {
        case GraphClass::path: return min ? path_min(spec.n) : path_max(spec.n);
        case GraphClass::cycle: return min ? cycle_min(spec.n) : cycle_max(spec.n);
        case GraphClass::star: return min ? tree_min(g) : star_max(spec.n);
        case GraphClass::random_tree:
            if (min) return tree_min(g);
            return std::nullopt;
        case GraphClass::wheel: return min ? wheel_min(spec.n) : wheel_max(spec.n);
        case GraphClass::complete: return Numbering::identity(spec.n);
        case GraphClass::complete_bipartite:
            return min ? bipartite_min(spec.p, spec.q) : bipartite_max(spec.p, spec.q);
        case GraphClass::grid:
            return min ? grid_min(spec.rows, spec.cols) : grid_max(spec.rows, spec.cols);
        case GraphClass::apollonian_spine:
        case GraphClass::apollonian_random:
            if (!min) return apollonian_max(g);
            if (!trace) return std::nullopt;
            return apollonian_min(g, *trace);
        case GraphClass::named: return std::nullopt;
    }
    return std::nullopt;
}

Numbering grid_min(int rows, int cols) {
    if (rows < 1 || cols < 1) reject("grid_min needs rows, cols >= 1");
    return Numbering::identity(rows * cols);  // row-major by vertex convention
}

Numbering grid_max(int rows, int cols) {
    if (rows < 1 || cols < 1) reject("grid_max needs rows, cols >= 1");
    if (rows == 1 || cols == 1) return path_max(rows * cols);
    Numbering pi(rows * cols);
    int next = 1;
    for (int i = 1; i <= rows; ++i)
        for (int j = 1; j <= cols; ++j)
            if ((i + j) % 2 == 1) pi.set((i - 1) * cols + j, next++);
    for (int i = 1; i <= rows; ++i)
        for (int j = 1; j <= cols; ++j)
            if ((i + j) % 2 == 0) pi.set((i - 1) * cols + j, next++);
    return pi;
}

}  // namespace vpath
