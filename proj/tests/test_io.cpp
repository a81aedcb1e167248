#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <stdexcept>
#include <string>

#include "test_util.hpp"
#include "vpath/generators.hpp"
#include "vpath/graph.hpp"
#include "vpath/io.hpp"

using namespace vpath;
using testutil::random_numbering;

namespace {

template <class Fn>
int error_line(Fn fn) {
    try {
        fn();
    } catch (const parse_error& e) {
        return e.line();
    }
    return -1;
}

template <class Fn>
std::string error_text(Fn fn) {
    try {
        fn();
    } catch (const std::exception& e) {
        return e.what();
    }
    return {};
}

}  // namespace

TEST_CASE("graph serialization is canonical") {
    const Graph k4 = generate(GraphClassSpec::complete(4));
    CHECK(graph_to_string(k4) == "4 6\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n");
    CHECK(graph_to_string(Graph(3)) == "3 0\n");
    CHECK(graph_to_string(Graph()) == "0 0\n");

    for (const auto& spec :
         {GraphClassSpec::named(NamedId::octahedral), GraphClassSpec::grid(3, 3),
          GraphClassSpec::random_tree(9, 5), GraphClassSpec::apollonian_random(8, 2)}) {
        const Graph g = generate(spec);
        CHECK(parse_graph(graph_to_string(g)) == g);
    }
}

TEST_CASE("graph parsing tolerates comments and blank lines") {
    const std::string text =
        "# a triangle\n"
        "\n"
        "3 3   # header: n m\n"
        "1 2\n"
        "\t\n"
        "1 3  # last two\n"
        "2 3\n";
    const Graph g = parse_graph(text);
    CHECK(g.num_vertices() == 3);
    CHECK(g.num_edges() == 3);
    CHECK(g.has_edge(1, 2));
    CHECK(g.has_edge(1, 3));
    CHECK(g.has_edge(2, 3));
}

TEST_CASE("graph parse errors carry the offending line") {
    CHECK(error_line([] { parse_graph(std::string{}); }) == 1);
    CHECK(error_line([] { parse_graph("# only comments\n\n"); }) == 1);
    CHECK(error_line([] { parse_graph("x y\n"); }) == 1);
    CHECK(error_line([] { parse_graph("4\n"); }) == 1);
    CHECK(error_line([] { parse_graph("20000000 0\n"); }) == 1);
    CHECK(error_line([] { parse_graph("3 -1\n"); }) == 1);
    CHECK(error_line([] { parse_graph("3 2\n1 2\n"); }) == 2);       // too few edge lines
    CHECK(error_line([] { parse_graph("3 1\n1 2\n2 3\n"); }) == 3);  // trailing content
    CHECK(error_line([] { parse_graph("3 1\n2 1\n"); }) == 2);       // u >= v
    CHECK(error_line([] { parse_graph("3 1\n2 2\n"); }) == 2);       // self-loop
    CHECK(error_line([] { parse_graph("3 1\n1 4\n"); }) == 2);       // id out of range
    CHECK(error_line([] { parse_graph("3 2\n1 2\n1 2\n"); }) == 3);  // duplicate edge
    CHECK(error_line([] { parse_graph("3 1\n1 a\n"); }) == 2);       // not an integer
    CHECK(error_line([] { parse_graph("3 1\n1 2 3\n"); }) == 2);     // too many fields

    // Comments and blanks keep their positions in the count.
    CHECK(error_line([] { parse_graph("# c\n\n3 1\n# x\n9 9\n"); }) == 5);

    const std::string msg = error_text([] { parse_graph("3 2\n1 2\n1 2\n"); });
    CHECK(msg.find("line 3") != std::string::npos);
    CHECK(msg.find("duplicate edge 1 2") != std::string::npos);
}

TEST_CASE("numbering serialization round-trips") {
    const Numbering pi = Numbering::from_values({2, 1, 3});
    CHECK(numbering_to_string(pi) == "2\n1\n3\n");
    CHECK(parse_numbering("2\n1\n3\n") == pi);
    CHECK(parse_numbering("# vertex order\n2\n1\n3  # trailing\n") == pi);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const Numbering r = random_numbering(8, seed);
        CHECK(parse_numbering(numbering_to_string(r)) == r);
    }
}

TEST_CASE("numbering parse errors carry the offending line") {
    CHECK(error_line([] { parse_numbering(std::string{}); }) == 1);
    CHECK(error_line([] { parse_numbering("1\n2\n5\n"); }) == 3);    // outside 1..n
    CHECK(error_line([] { parse_numbering("1\n0\n2\n"); }) == 2);    // below 1
    CHECK(error_line([] { parse_numbering("2\n2\n1\n"); }) == 2);    // duplicate
    CHECK(error_line([] { parse_numbering("1\nx\n"); }) == 2);       // not an integer
    CHECK(error_line([] { parse_numbering("1 2\n3\n"); }) == 1);     // two values on a line

    const std::string msg = error_text([] { parse_numbering("2\n2\n1\n"); });
    CHECK(msg.find("already used on line 1") != std::string::npos);
}

TEST_CASE("file round-trips and load errors") {
    const std::string dir = "/tmp";
    const std::string gpath = dir + "/vpath_test_graph.txt";
    const std::string npath = dir + "/vpath_test_numbering.txt";

    const Graph g = generate(GraphClassSpec::named(NamedId::johnson12));
    save_graph(gpath, g);
    CHECK(load_graph(gpath) == g);

    const Numbering pi = random_numbering(5, 3);
    save_numbering(npath, pi);
    CHECK(load_numbering(npath) == pi);

    CHECK_THROWS_AS(load_graph(dir + "/vpath_test_missing.txt"), std::runtime_error);
    const std::string missing =
        error_text([&] { load_graph(dir + "/vpath_test_missing.txt"); });
    CHECK(missing.find("vpath_test_missing.txt") != std::string::npos);

    // Parse failures are reported as "<path>: line N: ...".
    {
        std::FILE* f = std::fopen(gpath.c_str(), "w");
        REQUIRE(f != nullptr);
        std::fputs("3 1\n2 1\n", f);
        std::fclose(f);
    }
    const std::string bad = error_text([&] { load_graph(gpath); });
    CHECK(bad.find(gpath + ": line 2:") != std::string::npos);

    std::remove(gpath.c_str());
    std::remove(npath.c_str());
}

TEST_CASE("hash keys the canonical serialization") {
    CHECK(graph_hash(generate(GraphClassSpec::grid(4, 4))) == "04ecea77bea10ba9");
    CHECK(graph_hash(generate(GraphClassSpec::named(NamedId::octahedral))) ==
          "f416fa1d33cdc102");
    CHECK(graph_hash(generate(GraphClassSpec::complete(4))) == "bbed55002c577c89");

    const Graph a = generate(GraphClassSpec::path(3));
    CHECK(graph_hash(a) == graph_hash(parse_graph(graph_to_string(a))));
    const Graph b = Graph::from_edges(3, {{1, 3}, {2, 3}});  // same shape, different labels
    CHECK(graph_hash(a) != graph_hash(b));
    CHECK(graph_hash(a).size() == 16);
}
