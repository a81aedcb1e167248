#ifndef VPATH_GENERATORS_HPP
#define VPATH_GENERATORS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "vpath/graph.hpp"

namespace vpath {

enum class GraphClass {
    path,
    cycle,
    star,
    random_tree,
    wheel,
    complete,
    complete_bipartite,
    grid,
    apollonian_spine,
    apollonian_random,
    named,
};

/// The eight hand-frozen instances: the octahedron, the triangular (J12)
/// and pentagonal (J13) bipyramids, and small planar triangulations on 6
/// and 7 vertices (two of them stacked).
enum class NamedId {
    octahedral,
    johnson12,
    johnson13,
    hexahedral5,
    heptahedral15,
    heptahedral29,
    heptahedral34,
    two_apollonian,
};

struct GraphClassSpec {
    GraphClass cls = GraphClass::path;
    int n = 0;
    int p = 0, q = 0;          // complete_bipartite
    int rows = 0, cols = 0;    // grid
    std::uint64_t seed = 0;    // random_tree, apollonian_random
    std::optional<NamedId> id; // named

    static GraphClassSpec path(int n);
    static GraphClassSpec cycle(int n);
    static GraphClassSpec star(int n);
    static GraphClassSpec random_tree(int n, std::uint64_t seed);
    static GraphClassSpec wheel(int n);
    static GraphClassSpec complete(int n);
    static GraphClassSpec complete_bipartite(int p, int q);
    static GraphClassSpec grid(int rows, int cols);
    static GraphClassSpec apollonian_spine(int n);
    static GraphClassSpec apollonian_random(int n, std::uint64_t seed);
    static GraphClassSpec named(NamedId id);

    /// Short human label, e.g. "path n=5" or "K_{2,4}".
    std::string label() const;
};

/// One face subdivision: new_vertex was dropped into face and joined to
/// its three corners.
struct DimpleStep {
    std::array<int, 3> face{};  // sorted corner ids
    int new_vertex = 0;
};

/// Construction log of a stacked triangulation, replayable from the base.
struct DimpleTrace {
    Graph base;  // K_4 on vertices 1..4
    std::vector<DimpleStep> steps;

    Graph replay() const;
};

/// Subdivides the given triangular face of g with a fresh vertex n+1.
/// Throws if the three ids do not span a triangle of g.
Graph dimple(const Graph& g, const std::array<int, 3>& face);

/// Stacked triangulation whose subdivisions always hit a face containing
/// the previous new vertex and base vertices 1, 2; vertices 3..n form an
/// induced path and 1, 2 are adjacent to everything.
std::pair<Graph, DimpleTrace> make_apollonian_spine(int n);

/// Stacked triangulation with uniformly random face choices.
std::pair<Graph, DimpleTrace> make_apollonian_random(int n, std::uint64_t seed);

Graph named_graph(NamedId id);

const char* named_id_to_string(NamedId id);
std::optional<NamedId> named_id_from_string(const std::string& s);

Graph generate(const GraphClassSpec& spec);

/// True for classes whose instances are vertex-transitive by construction
/// (complete graphs and cycles); lets the exact solvers fix the vertex
/// that receives number 1.
bool vertex_transitive_hint(const GraphClassSpec& spec);

/// Seeded stream of uniform integers. Wraps std::mt19937_64 (bit-exact by
/// the standard) and draws bounded values by rejection instead of
/// uniform_int_distribution, whose mapping is implementation-defined; the
/// same seed therefore yields the same graphs on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    std::uint64_t next() { return engine_(); }
    std::uint64_t below(std::uint64_t bound);

private:
    std::mt19937_64 engine_;
};

}  // namespace vpath

#endif
