#include <chrono>
#include <iomanip>
#include <iostream>
#include <string>

#include "vpath/generators.hpp"
#include "vpath/graph.hpp"
#include "vpath/heuristics.hpp"
#include "vpath/solver.hpp"

// Times each parallel kernel against its serial reference on the same
// input and checks that both produce identical results, as the
// determinism contract promises. Thread counts: 1 vs 4.

namespace {

using Clock = std::chrono::steady_clock;
using vpath::Count;

template <typename F>
double time_ms(F&& f) {
    const auto t0 = Clock::now();
    f();
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void row(const std::string& kernel, double serial_ms, double parallel_ms, bool equal) {
    std::cout << std::left << std::setw(34) << kernel << std::right << std::fixed
              << std::setprecision(1) << std::setw(12) << serial_ms << std::setw(12)
              << parallel_ms << std::setw(10) << std::setprecision(2)
              << (parallel_ms > 0 ? serial_ms / parallel_ms : 0.0) << "   "
              << (equal ? "yes" : "NO") << "\n";
}

}  // namespace

int main() {
    using namespace vpath;
    std::cout << std::left << std::setw(34) << "kernel" << std::right << std::setw(12)
              << "serial ms" << std::setw(12) << "par ms" << std::setw(10) << "speedup"
              << "   equal\n";

    {
        const Graph g = generate(GraphClassSpec::grid(400, 400));
        const Numbering pi = Numbering::identity(g.num_vertices());
        Count serial = 0, parallel = 0;
        double s_ms = 0, p_ms = 0;
        for (int rep = 0; rep < 5; ++rep) {
            s_ms += time_ms([&] { serial = validity_count_serial(g, pi); });
            p_ms += time_ms([&] { parallel = validity_count(g, pi); });
        }
        row("validity count, 400x400 grid x5", s_ms, p_ms, serial == parallel);
    }

    {
        const auto [g, trace] = make_apollonian_random(9, 7);
        SolveOptions one, four;
        four.threads = 4;
        SolveResult a, b;
        const double s_ms = time_ms([&] { a = solve_brute(g, Objective::maximize, one); });
        const double p_ms = time_ms([&] { b = solve_brute(g, Objective::maximize, four); });
        row("brute max, apollonian n=9", s_ms, p_ms,
            a.value == b.value && a.witness == b.witness && a.stats.nodes == b.stats.nodes);
    }

    {
        const Graph g = generate(GraphClassSpec::grid(4, 4));
        SolveOptions one, four;
        one.node_budget = 4000000;
        four = one;
        four.threads = 4;
        SolveResult a, b;
        const double s_ms = time_ms([&] { a = solve_bnb(g, Objective::minimize, one); });
        const double p_ms = time_ms([&] { b = solve_bnb(g, Objective::minimize, four); });
        row("bnb min, 4x4 grid, 4e6 nodes", s_ms, p_ms,
            a.value == b.value && a.witness == b.witness && a.stats.proven == b.stats.proven);
    }

    {
        const auto [g, trace] = make_apollonian_random(260, 11);
        const Numbering start = greedy_start(g, Objective::minimize);
        LocalSearchOptions one, four;
        four.threads = 4;
        SolveResult a, b;
        const double s_ms =
            time_ms([&] { a = local_search(g, start, Objective::minimize, one); });
        const double p_ms =
            time_ms([&] { b = local_search(g, start, Objective::minimize, four); });
        row("local search, apollonian n=260", s_ms, p_ms,
            a.value == b.value && a.witness == b.witness);
    }

    {
        const Graph g = generate(GraphClassSpec::complete(9));
        SolveResult ref, inc;
        const double s_ms = time_ms([&] { ref = solve_exhaustive_reference(g, Objective::minimize); });
        SolveOptions opts;
        const double p_ms = time_ms([&] { inc = solve_brute(g, Objective::minimize, opts); });
        row("K_9 min: recount vs incremental", s_ms, p_ms, ref.value == inc.value);
    }

    return 0;
}
