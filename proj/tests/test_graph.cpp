#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "test_util.hpp"
#include "vpath/analysis.hpp"
#include "vpath/generators.hpp"
#include "vpath/graph.hpp"

using namespace vpath;
using testutil::random_numbering;
using testutil::random_permutation;

namespace {

Graph path_graph(int n) { return generate(GraphClassSpec::path(n)); }

Graph grid4x4() { return generate(GraphClassSpec::grid(4, 4)); }

// Ids are row-major; cells with odd coordinate parity take 1..8 in id
// order, the rest 9..16.
Numbering grid4x4_checkerboard() {
    std::vector<int> vals(16, 0);
    int next = 1;
    for (int pass = 0; pass < 2; ++pass)
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c)
                if ((r + c) % 2 == (pass == 0 ? 1 : 0)) vals[static_cast<std::size_t>(4 * r + c)] = next++;
    return Numbering::from_values(vals);
}

}  // namespace

TEST_CASE("choose2 small values") {
    CHECK(choose2(-3) == 0);
    CHECK(choose2(0) == 0);
    CHECK(choose2(1) == 0);
    CHECK(choose2(2) == 1);
    CHECK(choose2(3) == 3);
    CHECK(choose2(4) == 6);
    CHECK(choose2(100) == 4950);
}

TEST_CASE("graph construction and accessors") {
    const Graph k4 = Graph::from_edges(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    CHECK(k4.num_vertices() == 4);
    CHECK(k4.num_edges() == 6);
    for (int v = 1; v <= 4; ++v) CHECK(k4.degree(v) == 3);
    CHECK(k4.min_degree() == 3);
    CHECK(k4.max_degree() == 3);
    CHECK(k4.has_edge(1, 4));
    CHECK(k4.has_edge(4, 1));

    const auto nbrs = k4.neighbors(2);
    CHECK(std::vector<int>(nbrs.begin(), nbrs.end()) == std::vector<int>{1, 3, 4});

    const std::vector<std::pair<int, int>> expect{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
    CHECK(k4.edges() == expect);

    Graph g(3);
    g.add_edge(3, 1);
    CHECK(g.has_edge(1, 3));
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{1, 3}});

    CHECK_THROWS_AS(Graph::from_edges(3, {{2, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(3, {{1, 4}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(3, {{1, 2}, {2, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(3, {{1, 2}, {1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(-1), std::invalid_argument);
}

TEST_CASE("two-path census") {
    CHECK(count_two_paths(generate(GraphClassSpec::star(4))) == 3);  // K_{1,3}
    for (int n = 2; n <= 9; ++n) CHECK(count_two_paths(path_graph(n)) == n - 2);
    CHECK(count_two_paths(generate(GraphClassSpec::complete(4))) == 12);
    CHECK(count_two_paths(Graph(5)) == 0);
}

TEST_CASE("validity of pinned numberings") {
    const Graph k4 = generate(GraphClassSpec::complete(4));
    std::vector<int> order{1, 2, 3, 4};
    do {
        CHECK(count_validity(k4, Numbering::from_order(order)).count == 4);
    } while (std::next_permutation(order.begin(), order.end()));

    CHECK(count_validity(path_graph(3), Numbering::identity(3)).count == 0);

    const Graph grid = grid4x4();
    CHECK(count_validity(grid, Numbering::identity(16)).count == 9);
    CHECK(count_validity(grid, grid4x4_checkerboard()).count == 26);
}

TEST_CASE("valid path listing") {
    const Graph p3 = path_graph(3);
    const auto report = count_validity(p3, Numbering::from_values({2, 1, 3}), true);
    CHECK(report.count == 1);
    REQUIRE(report.paths.has_value());
    REQUIRE(report.paths->size() == 1);
    CHECK((*report.paths)[0] == TwoPath{2, 1, 3});

    CHECK_FALSE(count_validity(p3, Numbering::identity(3)).paths.has_value());

    const Graph w7 = generate(GraphClassSpec::wheel(7));
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
        const Numbering pi = random_numbering(7, seed);
        const auto rep = count_validity(w7, pi, true);
        REQUIRE(rep.paths.has_value());
        CHECK(static_cast<Count>(rep.paths->size()) == rep.count);
        CHECK(std::is_sorted(rep.paths->begin(), rep.paths->end()));
        CHECK(std::adjacent_find(rep.paths->begin(), rep.paths->end()) == rep.paths->end());
        for (const TwoPath& p : *rep.paths) {
            CHECK(p.end_lo < p.end_hi);
            CHECK(w7.has_edge(p.middle, p.end_lo));
            CHECK(w7.has_edge(p.middle, p.end_hi));
            CHECK(pi.of(p.middle) < pi.of(p.end_lo));
            CHECK(pi.of(p.middle) < pi.of(p.end_hi));
        }
    }
}

TEST_CASE("rejects non-numberings") {
    const Graph p3 = path_graph(3);
    CHECK(is_valid_numbering(p3, Numbering::from_values({2, 1, 3})));
    CHECK_FALSE(is_valid_numbering(p3, Numbering::from_values({1, 1, 3})));
    CHECK_FALSE(is_valid_numbering(p3, Numbering::from_values({0, 1, 2})));
    CHECK_FALSE(is_valid_numbering(p3, Numbering::from_values({1, 2})));
    CHECK_FALSE(is_valid_numbering(p3, Numbering()));

    CHECK_THROWS_AS(count_validity(p3, Numbering::from_values({1, 1, 3})), std::invalid_argument);
    CHECK_THROWS_AS(count_validity(p3, Numbering::from_values({0, 1, 2})), std::invalid_argument);
    CHECK_THROWS_AS(count_validity(p3, Numbering::from_values({1, 2})), std::invalid_argument);
    CHECK_THROWS_AS(validity_of_components(p3, Numbering::from_values({3, 2, 4})),
                    std::invalid_argument);

    CHECK(is_valid_numbering(Graph(), Numbering(0)));
    CHECK(count_validity(Graph(), Numbering(0)).count == 0);
}

TEST_CASE("count bounds and endpoint facts") {
    const std::vector<Graph> graphs{
        path_graph(7),
        generate(GraphClassSpec::cycle(6)),
        generate(GraphClassSpec::wheel(7)),
        generate(GraphClassSpec::complete(5)),
        generate(GraphClassSpec::named(NamedId::octahedral)),
        generate(GraphClassSpec::named(NamedId::johnson12)),
        generate(GraphClassSpec::grid(3, 3)),
        generate(GraphClassSpec::apollonian_random(9, 3)),
        generate(GraphClassSpec::random_tree(10, 1)),
    };
    for (const Graph& g : graphs) {
        const int n = g.num_vertices();
        const Count ceiling = count_two_paths(g);
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            const Numbering pi = random_numbering(n, seed);
            const auto rep = count_validity(g, pi, true);
            CHECK(rep.count >= 0);
            CHECK(rep.count <= ceiling);
            int last = 0, first = 0;
            for (int v = 1; v <= n; ++v) {
                if (pi.of(v) == n) last = v;
                if (pi.of(v) == 1) first = v;
            }
            Count as_middle_last = 0, as_middle_first = 0;
            for (const TwoPath& p : *rep.paths) {
                if (p.middle == last) ++as_middle_last;
                if (p.middle == first) ++as_middle_first;
            }
            CHECK(as_middle_last == 0);
            CHECK(as_middle_first == choose2(g.degree(first)));
        }
    }
}

TEST_CASE("relabeling leaves the count unchanged") {
    const std::vector<Graph> graphs{
        generate(GraphClassSpec::named(NamedId::octahedral)),
        generate(GraphClassSpec::named(NamedId::hexahedral5)),
        generate(GraphClassSpec::grid(3, 3)),
    };
    for (const Graph& g : graphs) {
        const int n = g.num_vertices();
        for (std::uint64_t seed = 1; seed <= 4; ++seed) {
            const std::vector<int> sigma = random_permutation(n, 100 + seed);  // sigma[v-1] = new id
            std::vector<std::pair<int, int>> mapped;
            for (auto [u, v] : g.edges())
                mapped.emplace_back(sigma[static_cast<std::size_t>(u) - 1],
                                    sigma[static_cast<std::size_t>(v) - 1]);
            const Graph h = Graph::from_edges(n, mapped);

            const Numbering pi = random_numbering(n, seed);
            Numbering pi_h(n);
            for (int v = 1; v <= n; ++v) pi_h.set(sigma[static_cast<std::size_t>(v) - 1], pi.of(v));
            CHECK(count_validity(g, pi).count == count_validity(h, pi_h).count);
        }
    }
}

TEST_CASE("each triangle scores exactly one of its three 2-paths") {
    const std::vector<Graph> graphs{
        generate(GraphClassSpec::complete(5)),
        generate(GraphClassSpec::named(NamedId::octahedral)),
        generate(GraphClassSpec::named(NamedId::heptahedral29)),
        generate(GraphClassSpec::apollonian_random(10, 7)),
    };
    for (const Graph& g : graphs) {
        const auto tris = triangle_list(g);
        for (std::uint64_t seed = 1; seed <= 4; ++seed) {
            const Numbering pi = random_numbering(g.num_vertices(), seed);
            const auto rep = count_validity(g, pi, true);
            for (const auto& t : tris) {
                int hits = 0;
                for (const TwoPath& p : *rep.paths) {
                    const std::array<int, 3> s{p.end_lo, std::min(p.middle, p.end_hi),
                                               std::max(p.middle, p.end_hi)};
                    std::array<int, 3> sorted = s;
                    std::sort(sorted.begin(), sorted.end());
                    if (sorted == t) ++hits;
                }
                CHECK(hits == 1);
            }
        }
    }
}

TEST_CASE("complete graphs score C(n,3) under every numbering") {
    for (int n : {5, 6}) {
        const Graph kn = generate(GraphClassSpec::complete(n));
        const Count expect = static_cast<Count>(n) * (n - 1) * (n - 2) / 6;
        for (std::uint64_t seed = 1; seed <= 20; ++seed)
            CHECK(count_validity(kn, random_numbering(n, seed)).count == expect);
    }
}

TEST_CASE("components and additivity") {
    const Graph tri2 = Graph::from_edges(6, {{1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 6}});
    CHECK_FALSE(is_connected(tri2));
    const auto comps = components(tri2);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<int>{1, 2, 3});
    CHECK(comps[1] == std::vector<int>{4, 5, 6});
    for (std::uint64_t seed = 0; seed <= 6; ++seed) {
        const Numbering pi = seed == 0 ? Numbering::identity(6) : random_numbering(6, seed);
        const auto parts = validity_of_components(tri2, pi);
        REQUIRE(parts.size() == 2);
        CHECK(parts[0].second == 1);
        CHECK(parts[1].second == 1);
        CHECK(count_validity(tri2, pi).count == 2);
    }

    const Graph edgeless(5);
    CHECK(components(edgeless).size() == 5);
    CHECK(count_validity(edgeless, Numbering::identity(5)).count == 0);

    // P_4 plus a triangle on 5..7.
    const Graph mix = Graph::from_edges(7, {{1, 2}, {2, 3}, {3, 4}, {5, 6}, {5, 7}, {6, 7}});
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const Numbering pi = random_numbering(7, seed);
        Count sum = 0;
        for (const auto& [vs, c] : validity_of_components(mix, pi)) sum += c;
        CHECK(sum == count_validity(mix, pi).count);
    }

    CHECK(is_connected(path_graph(5)));
    CHECK(components(path_graph(5)).size() == 1);
}

TEST_CASE("parallel and serial counting kernels agree") {
    const std::vector<Graph> graphs{
        generate(GraphClassSpec::grid(80, 80)),  // crosses the parallel threshold
        generate(GraphClassSpec::named(NamedId::octahedral)),
        generate(GraphClassSpec::apollonian_random(40, 11)),
    };
    for (const Graph& g : graphs) {
        const int n = g.num_vertices();
        for (std::uint64_t seed = 1; seed <= 3; ++seed) {
            const Numbering pi = random_numbering(n, seed);
            const Count serial = validity_count_serial(g, pi);
            CHECK(validity_count(g, pi) == serial);
            CHECK(count_validity(g, pi).count == serial);
        }
    }
}

TEST_CASE("numbering round-trips") {
    CHECK(Numbering::identity(5).to_order() == std::vector<int>{1, 2, 3, 4, 5});
    CHECK(Numbering::identity(5).is_permutation());

    const std::vector<int> order{3, 1, 4, 2};
    const Numbering pi = Numbering::from_order(order);
    CHECK(pi.of(3) == 1);
    CHECK(pi.of(1) == 2);
    CHECK(pi.of(4) == 3);
    CHECK(pi.of(2) == 4);
    CHECK(pi.to_order() == order);

    const Numbering fv = Numbering::from_values({2, 1, 3});
    CHECK(fv.of(1) == 2);
    CHECK(fv.of(2) == 1);
    CHECK(fv.of(3) == 3);
    CHECK(Numbering::from_order(fv.to_order()) == fv);

    CHECK_FALSE(Numbering::from_values({1, 1, 3}).is_permutation());
    CHECK_FALSE(Numbering::from_values({0, 1, 2}).is_permutation());
    CHECK_FALSE(Numbering::from_values({1, 2, 4}).is_permutation());
    CHECK(Numbering(0).is_permutation());

    Numbering m(3);
    m.set(1, 3);
    m.set(2, 1);
    m.set(3, 2);
    CHECK(m.is_permutation());
    CHECK(m.to_order() == std::vector<int>{2, 3, 1});

    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const Numbering r = random_numbering(9, seed);
        CHECK(Numbering::from_order(r.to_order()) == r);
    }
}
