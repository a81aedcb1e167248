#include "vpath/generators.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>

namespace vpath {

namespace {

[[noreturn]] void bad_spec(const std::string& msg) { throw std::invalid_argument(msg); }

void require(bool ok, const char* msg) {
    if (!ok) bad_spec(msg);
}

}  // namespace

GraphClassSpec GraphClassSpec::path(int n) { return {GraphClass::path, n}; }
GraphClassSpec GraphClassSpec::cycle(int n) { return {GraphClass::cycle, n}; }
GraphClassSpec GraphClassSpec::star(int n) { return {GraphClass::star, n}; }
GraphClassSpec GraphClassSpec::random_tree(int n, std::uint64_t seed) {
    GraphClassSpec s{GraphClass::random_tree, n};
    s.seed = seed;
    return s;
}
GraphClassSpec GraphClassSpec::wheel(int n) { return {GraphClass::wheel, n}; }
GraphClassSpec GraphClassSpec::complete(int n) { return {GraphClass::complete, n}; }
GraphClassSpec GraphClassSpec::complete_bipartite(int p, int q) {
    GraphClassSpec s{GraphClass::complete_bipartite};
    s.p = p;
    s.q = q;
    s.n = p + q;
    return s;
}
GraphClassSpec GraphClassSpec::grid(int rows, int cols) {
    GraphClassSpec s{GraphClass::grid};
    s.rows = rows;
    s.cols = cols;
    s.n = rows * cols;
    return s;
}
GraphClassSpec GraphClassSpec::apollonian_spine(int n) {
    return {GraphClass::apollonian_spine, n};
}
GraphClassSpec GraphClassSpec::apollonian_random(int n, std::uint64_t seed) {
    GraphClassSpec s{GraphClass::apollonian_random, n};
    s.seed = seed;
    return s;
}
GraphClassSpec GraphClassSpec::named(NamedId id) {
    GraphClassSpec s{GraphClass::named};
    s.id = id;
    return s;
}

std::string GraphClassSpec::label() const {
    switch (cls) {
        case GraphClass::path: return "path n=" + std::to_string(n);
        case GraphClass::cycle: return "cycle n=" + std::to_string(n);
        case GraphClass::star: return "star n=" + std::to_string(n);
        case GraphClass::random_tree:
            return "random-tree n=" + std::to_string(n) + " seed=" + std::to_string(seed);
        case GraphClass::wheel: return "wheel n=" + std::to_string(n);
        case GraphClass::complete: return "K_" + std::to_string(n);
        case GraphClass::complete_bipartite:
            return "K_{" + std::to_string(p) + "," + std::to_string(q) + "}";
        case GraphClass::grid:
            return "grid " + std::to_string(rows) + "x" + std::to_string(cols);
        case GraphClass::apollonian_spine: return "apollonian-spine n=" + std::to_string(n);
        case GraphClass::apollonian_random:
            return "apollonian-random n=" + std::to_string(n) + " seed=" + std::to_string(seed);
        case GraphClass::named: return id ? named_id_to_string(*id) : "named ?";
    }
    return "?";
}

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("Rng::below needs a positive bound");
    const std::uint64_t threshold = (~bound + 1) % bound;  // 2^64 mod bound
    for (;;) {
        const std::uint64_t r = next();
        if (r >= threshold) return r % bound;
    }
}

namespace {

Graph make_path(int n) {
    require(n >= 1, "path needs n >= 1");
    Graph g(n);
    for (int i = 1; i < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph make_cycle(int n) {
    require(n >= 3, "cycle needs n >= 3");
    Graph g = make_path(n);
    g.add_edge(1, n);
    return g;
}

Graph make_star(int n) {
    require(n >= 3, "star needs n >= 3");
    Graph g(n);
    for (int v = 2; v <= n; ++v) g.add_edge(1, v);
    return g;
}

Graph make_complete(int n) {
    require(n >= 1, "complete graph needs n >= 1");
    Graph g(n);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) g.add_edge(u, v);
    return g;
}

// Hub is vertex n; the rim is the cycle on 1..n-1.
Graph make_wheel(int n) {
    require(n >= 4, "wheel needs n >= 4");
    Graph g(n);
    for (int i = 1; i < n - 1; ++i) g.add_edge(i, i + 1);
    g.add_edge(1, n - 1);
    for (int i = 1; i < n; ++i) g.add_edge(i, n);
    return g;
}

Graph make_complete_bipartite(int p, int q) {
    require(1 <= p && p <= q, "complete bipartite needs 1 <= p <= q");
    Graph g(p + q);
    for (int u = 1; u <= p; ++u)
        for (int v = p + 1; v <= p + q; ++v) g.add_edge(u, v);
    return g;
}

// Cell (i, j) is vertex (i-1)*cols + j, so row-major numbering is the
// identity permutation.
Graph make_grid(int rows, int cols) {
    require(rows >= 1 && cols >= 1, "grid needs rows, cols >= 1");
    Graph g(rows * cols);
    auto id = [cols](int i, int j) { return (i - 1) * cols + j; };
    for (int i = 1; i <= rows; ++i)
        for (int j = 1; j <= cols; ++j) {
            if (j < cols) g.add_edge(id(i, j), id(i, j + 1));
            if (i < rows) g.add_edge(id(i, j), id(i + 1, j));
        }
    return g;
}

// Uniform labelled tree via a random sequence decoded with the usual
// leaf-queue algorithm.
Graph make_random_tree(int n, std::uint64_t seed) {
    require(n >= 1, "tree needs n >= 1");
    Graph g(n);
    if (n == 1) return g;
    if (n == 2) {
        g.add_edge(1, 2);
        return g;
    }
    Rng rng(seed);
    std::vector<int> seq(static_cast<std::size_t>(n) - 2);
    for (auto& s : seq) s = static_cast<int>(rng.below(static_cast<std::uint64_t>(n))) + 1;

    std::vector<int> deg(static_cast<std::size_t>(n) + 1, 1);
    for (int s : seq) ++deg[static_cast<std::size_t>(s)];
    std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
    for (int v = 1; v <= n; ++v)
        if (deg[static_cast<std::size_t>(v)] == 1) leaves.push(v);
    for (int s : seq) {
        const int leaf = leaves.top();
        leaves.pop();
        g.add_edge(std::min(leaf, s), std::max(leaf, s));
        if (--deg[static_cast<std::size_t>(s)] == 1) leaves.push(s);
    }
    const int a = leaves.top();
    leaves.pop();
    const int b = leaves.top();
    g.add_edge(std::min(a, b), std::max(a, b));
    return g;
}

Graph make_k4() {
    return Graph::from_edges(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
}

using Face = std::array<int, 3>;

// Replaces faces[idx] by the three faces created by inserting w into it.
void split_face(std::vector<Face>& faces, std::size_t idx, int w) {
    const Face f = faces[idx];
    faces.erase(faces.begin() + static_cast<std::ptrdiff_t>(idx));
    faces.push_back({f[0], f[1], w});
    faces.push_back({f[0], f[2], w});
    faces.push_back({f[1], f[2], w});
}

std::vector<Face> k4_faces() { return {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}; }

}  // namespace

Graph dimple(const Graph& g, const std::array<int, 3>& face) {
    const auto [a, b, c] = face;
    if (!(g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c)))
        bad_spec("dimple target is not a triangle");
    Graph h(g.num_vertices() + 1);
    for (auto [u, v] : g.edges()) h.add_edge(u, v);
    const int w = h.num_vertices();
    h.add_edge(a, w);
    h.add_edge(b, w);
    h.add_edge(c, w);
    return h;
}

Graph DimpleTrace::replay() const {
    Graph g = base;
    for (const auto& step : steps) {
        if (step.new_vertex != g.num_vertices() + 1)
            bad_spec("dimple trace out of order");
        g = dimple(g, step.face);
    }
    return g;
}

std::pair<Graph, DimpleTrace> make_apollonian_spine(int n) {
    require(n >= 4, "spine construction needs n >= 4");
    DimpleTrace trace{make_k4(), {}};
    for (int k = 5; k <= n; ++k) trace.steps.push_back({{1, 2, k - 1}, k});
    return {trace.replay(), trace};
}

std::pair<Graph, DimpleTrace> make_apollonian_random(int n, std::uint64_t seed) {
    require(n >= 4, "random stacked triangulation needs n >= 4");
    DimpleTrace trace{make_k4(), {}};
    std::vector<Face> faces = k4_faces();
    Rng rng(seed);
    for (int k = 5; k <= n; ++k) {
        const auto idx = static_cast<std::size_t>(rng.below(faces.size()));
        trace.steps.push_back({faces[idx], k});
        split_face(faces, idx, k);
    }
    return {trace.replay(), trace};
}

namespace {

// Frozen edge lists for the named instances; ids match the generated
// spine graphs where the instance is spine-form.
const std::vector<std::pair<int, int>>& named_edges(NamedId id) {
    // octahedron = K_{2,2,2}, 4-regular
    static const std::vector<std::pair<int, int>> octahedral = {
        {1, 2}, {1, 3}, {1, 5}, {1, 6}, {2, 3}, {2, 4},
        {2, 5}, {3, 4}, {3, 6}, {4, 5}, {4, 6}, {5, 6}};
    // triangular bipyramid; K_4 plus one dimple
    static const std::vector<std::pair<int, int>> johnson12 = {
        {1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {4, 5}};
    // pentagonal bipyramid, apexes 3 and 5
    static const std::vector<std::pair<int, int>> johnson13 = {
        {1, 2}, {1, 3}, {1, 5}, {1, 6}, {2, 3}, {2, 4}, {2, 5}, {3, 4},
        {3, 6}, {3, 7}, {4, 5}, {4, 7}, {5, 6}, {5, 7}, {6, 7}};
    // 6-vertex stacked spine: base {1,2}, spine path 3-4-5-6
    static const std::vector<std::pair<int, int>> hexahedral5 = {
        {1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 3},
        {2, 4}, {2, 5}, {2, 6}, {3, 4}, {4, 5}, {5, 6}};
    // 7-vertex stacked spine: base {1,2}, spine path 3-4-5-6-7
    static const std::vector<std::pair<int, int>> heptahedral15 = {
        {1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 7}, {2, 3}, {2, 4},
        {2, 5}, {2, 6}, {2, 7}, {3, 4}, {4, 5}, {5, 6}, {6, 7}};
    // 6-vertex spine plus a dimple in face {2,5,6}
    static const std::vector<std::pair<int, int>> heptahedral29 = {
        {1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 3}, {2, 4}, {2, 5},
        {2, 6}, {2, 7}, {3, 4}, {4, 5}, {5, 6}, {5, 7}, {6, 7}};
    // 6-vertex spine plus a dimple in face {2,4,5}
    static const std::vector<std::pair<int, int>> two_apollonian = {
        {1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 3}, {2, 4}, {2, 5},
        {2, 6}, {2, 7}, {3, 4}, {4, 5}, {4, 7}, {5, 6}, {5, 7}};
    // octahedron with one face {3,4,6} dimpled; maximal planar, not stacked
    static const std::vector<std::pair<int, int>> heptahedral34 = {
        {1, 2}, {1, 3}, {1, 5}, {1, 6}, {2, 3}, {2, 4}, {2, 5}, {3, 4},
        {3, 6}, {3, 7}, {4, 5}, {4, 6}, {4, 7}, {5, 6}, {6, 7}};
    switch (id) {
        case NamedId::octahedral: return octahedral;
        case NamedId::johnson12: return johnson12;
        case NamedId::johnson13: return johnson13;
        case NamedId::hexahedral5: return hexahedral5;
        case NamedId::heptahedral15: return heptahedral15;
        case NamedId::heptahedral29: return heptahedral29;
        case NamedId::heptahedral34: return heptahedral34;
        case NamedId::two_apollonian: return two_apollonian;
    }
    bad_spec("unknown named graph id");
}

int named_order(NamedId id) {
    switch (id) {
        case NamedId::johnson12: return 5;
        case NamedId::octahedral:
        case NamedId::hexahedral5: return 6;
        default: return 7;
    }
}

}  // namespace

Graph named_graph(NamedId id) { return Graph::from_edges(named_order(id), named_edges(id)); }

const char* named_id_to_string(NamedId id) {
    switch (id) {
        case NamedId::octahedral: return "octahedral";
        case NamedId::johnson12: return "johnson12";
        case NamedId::johnson13: return "johnson13";
        case NamedId::hexahedral5: return "hexahedral5";
        case NamedId::heptahedral15: return "heptahedral15";
        case NamedId::heptahedral29: return "heptahedral29";
        case NamedId::heptahedral34: return "heptahedral34";
        case NamedId::two_apollonian: return "two_apollonian";
    }
    return "?";
}

std::optional<NamedId> named_id_from_string(const std::string& s) {
    static const std::pair<const char*, NamedId> table[] = {
        {"octahedral", NamedId::octahedral},
        {"johnson12", NamedId::johnson12},
        {"johnson13", NamedId::johnson13},
        {"hexahedral5", NamedId::hexahedral5},
        {"heptahedral15", NamedId::heptahedral15},
        {"heptahedral29", NamedId::heptahedral29},
        {"heptahedral34", NamedId::heptahedral34},
        {"two_apollonian", NamedId::two_apollonian},
    };
    for (const auto& [name, id] : table)
        if (s == name) return id;
    return std::nullopt;
}

Graph generate(const GraphClassSpec& spec) {
    switch (spec.cls) {
        case GraphClass::path: return make_path(spec.n);
        case GraphClass::cycle: return make_cycle(spec.n);
        case GraphClass::star: return make_star(spec.n);
        case GraphClass::random_tree: return make_random_tree(spec.n, spec.seed);
        case GraphClass::wheel: return make_wheel(spec.n);
        case GraphClass::complete: return make_complete(spec.n);
        case GraphClass::complete_bipartite: return make_complete_bipartite(spec.p, spec.q);
        case GraphClass::grid: return make_grid(spec.rows, spec.cols);
        case GraphClass::apollonian_spine:
            if (spec.n == 3) return make_cycle(3);
            return make_apollonian_spine(spec.n).first;
        case GraphClass::apollonian_random:
            if (spec.n == 3) return make_cycle(3);
            return make_apollonian_random(spec.n, spec.seed).first;
        case GraphClass::named:
            if (!spec.id) bad_spec("named class needs an id");
            return named_graph(*spec.id);
    }
    bad_spec("unknown graph class");
}

bool vertex_transitive_hint(const GraphClassSpec& spec) {
    return spec.cls == GraphClass::complete || spec.cls == GraphClass::cycle;
}

}  // namespace vpath
