#ifndef VPATH_GRAPH_HPP
#define VPATH_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace vpath {

using Count = std::int64_t;

/// C(k, 2) in exact integer arithmetic.
inline constexpr Count choose2(Count k) { return k < 2 ? 0 : k * (k - 1) / 2; }

/// A finite, undirected, simple graph. Vertices are the ids 1..n; the
/// neighbor lists are kept sorted. Instances are treated as immutable once
/// built (the generators hand out finished values).
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    /// Builds a graph from an edge list. Throws std::invalid_argument on
    /// self-loops, out-of-range ids or duplicate edges.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int num_vertices() const { return n_; }
    Count num_edges() const { return m_; }

    int degree(int v) const;
    std::span<const int> neighbors(int v) const;
    bool has_edge(int u, int v) const;

    void add_edge(int u, int v);

    /// All edges as (u, v) with u < v, sorted.
    std::vector<std::pair<int, int>> edges() const;

    int min_degree() const;
    int max_degree() const;

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    Count m_ = 0;
    std::vector<std::vector<int>> adj_;  // adj_[0] unused

    void check_vertex(int v) const;
};

/// A bijection from the vertices of a graph onto {1..n}. Stored as the
/// assignment array: of(v) is the number carried by vertex v.
class Numbering {
public:
    Numbering() = default;
    explicit Numbering(int n) : num_(static_cast<std::size_t>(n) + 1, 0) {}

    /// values[v-1] is the number of vertex v (file order).
    static Numbering from_values(const std::vector<int>& values);
    static Numbering identity(int n);

    int size() const { return static_cast<int>(num_.size()) - 1; }
    int of(int v) const { return num_[static_cast<std::size_t>(v)]; }
    void set(int v, int number) { num_[static_cast<std::size_t>(v)] = number; }

    /// True iff the stored values form a permutation of {1..size()}.
    bool is_permutation() const;

    /// Vertex order by ascending number: result[t] = vertex numbered t+1.
    std::vector<int> to_order() const;
    static Numbering from_order(const std::vector<int>& order);

    bool operator==(const Numbering&) const = default;

private:
    std::vector<int> num_;  // num_[0] unused
};

/// A 2-path with its middle vertex and canonically ordered endpoints.
struct TwoPath {
    int middle = 0;
    int end_lo = 0;  // min endpoint
    int end_hi = 0;  // max endpoint
    auto operator<=>(const TwoPath&) const = default;
};

struct ValidityReport {
    Count count = 0;
    std::optional<std::vector<TwoPath>> paths;  // sorted (middle, lo, hi)
};

/// Number of 2-paths of g: sum over v of C(deg(v), 2).
Count count_two_paths(const Graph& g);

/// True iff pi is a bijection onto {1..n} with n = g.num_vertices().
/// Never throws; malformed input simply yields false.
bool is_valid_numbering(const Graph& g, const Numbering& pi);

/// Validity of pi on g: the number of 2-paths whose middle carries a
/// smaller number than both endpoints. Throws std::invalid_argument if pi
/// is not a numbering of g. With list_paths the report carries every valid
/// path, each exactly once in canonical order.
ValidityReport count_validity(const Graph& g, const Numbering& pi, bool list_paths = false);

/// Counting core used by the solvers; pi must already be valid.
/// Parallelised over vertices for large graphs.
Count validity_count(const Graph& g, const Numbering& pi);

/// Plain per-vertex loop kept as the reference the parallel kernel is
/// tested against.
Count validity_count_serial(const Graph& g, const Numbering& pi);

/// Connected components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<int>> components(const Graph& g);

bool is_connected(const Graph& g);

/// Per-component validity counts; they sum to count_validity(g, pi).
std::vector<std::pair<std::vector<int>, Count>>
validity_of_components(const Graph& g, const Numbering& pi);

enum class Objective { minimize, maximize };

}  // namespace vpath

#endif
