#include "vpath/heuristics.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace vpath {

Numbering greedy_start(const Graph& g, Objective objective) {
    const int n = g.num_vertices();
    std::vector<int> residual(static_cast<std::size_t>(n) + 1, 0);
    std::vector<char> done(static_cast<std::size_t>(n) + 1, 0);
    for (int v = 1; v <= n; ++v) residual[static_cast<std::size_t>(v)] = g.degree(v);
    Numbering pi(n);
    for (int number = 1; number <= n; ++number) {
        int pick = 0;
        for (int v = 1; v <= n; ++v) {
            if (done[static_cast<std::size_t>(v)]) continue;
            if (pick == 0) {
                pick = v;
                continue;
            }
            const int dv = residual[static_cast<std::size_t>(v)];
            const int dp = residual[static_cast<std::size_t>(pick)];
            if (objective == Objective::minimize ? dv < dp : dv > dp) pick = v;
        }
        pi.set(pick, number);
        done[static_cast<std::size_t>(pick)] = 1;
        for (int w : g.neighbors(pick))
            if (!done[static_cast<std::size_t>(w)]) --residual[static_cast<std::size_t>(w)];
    }
    return pi;
}

namespace {

Count contribution(const Graph& g, const Numbering& pi, int u) {
    Count higher = 0;
    for (int w : g.neighbors(u))
        if (pi.of(w) > pi.of(u)) ++higher;
    return choose2(higher);
}

// Middles whose validity can change when a and b trade numbers.
void affected_middles(const Graph& g, int a, int b, std::vector<int>& out,
                      std::vector<int>& stamp, int tick) {
    out.clear();
    auto add = [&](int v) {
        if (stamp[static_cast<std::size_t>(v)] != tick) {
            stamp[static_cast<std::size_t>(v)] = tick;
            out.push_back(v);
        }
    };
    add(a);
    add(b);
    for (int w : g.neighbors(a)) add(w);
    for (int w : g.neighbors(b)) add(w);
}

struct SwapScan {
    Count delta = 0;
    int a = 0, b = 0;
    bool found = false;
};

}  // namespace

SolveResult local_search(const Graph& g, const Numbering& start, Objective objective,
                         const LocalSearchOptions& opts) {
    if (!is_valid_numbering(g, start))
        throw std::invalid_argument("local_search start is not a numbering of g");
    const auto t0 = std::chrono::steady_clock::now();
    const int n = g.num_vertices();
    Numbering pi = start;
    std::vector<Count> contrib(static_cast<std::size_t>(n) + 1, 0);
    Count value = 0;
    for (int v = 1; v <= n; ++v) {
        contrib[static_cast<std::size_t>(v)] = contribution(g, pi, v);
        value += contrib[static_cast<std::size_t>(v)];
    }

    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<std::size_t>(n) * (static_cast<std::size_t>(n) - 1) / 2);
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) pairs.emplace_back(a, b);
    if (opts.first_improvement && opts.seed != 0) {
        Rng rng(opts.seed);
        for (std::size_t i = pairs.size(); i > 1; --i)
            std::swap(pairs[i - 1], pairs[static_cast<std::size_t>(rng.below(i))]);
    }

    const bool want_max = objective == Objective::maximize;
    // Swap delta, recounting only the affected middles. Reads pi through a
    // virtual exchange so concurrent scans never touch shared state;
    // scratch buffers are per thread.
    auto eval_swap = [&](int a, int b, std::vector<int>& middles, std::vector<int>& stamp,
                         int tick) {
        affected_middles(g, a, b, middles, stamp, tick);
        const int na = pi.of(a), nb = pi.of(b);
        auto swapped = [&](int v) {
            if (v == a) return nb;
            if (v == b) return na;
            return pi.of(v);
        };
        Count delta = 0;
        for (int u : middles) {
            const int nu = swapped(u);
            Count higher = 0;
            for (int w : g.neighbors(u))
                if (swapped(w) > nu) ++higher;
            delta += choose2(higher) - contrib[static_cast<std::size_t>(u)];
        }
        return delta;
    };

    Count accepted = 0;
    const int threads = std::max(1, opts.threads);
    std::vector<std::vector<int>> middles_buf(static_cast<std::size_t>(threads));
    std::vector<std::vector<int>> stamp_buf(
        static_cast<std::size_t>(threads),
        std::vector<int>(static_cast<std::size_t>(n) + 1, -1));
    std::vector<int> tick_buf(static_cast<std::size_t>(threads), 0);

    for (;;) {
        if (opts.max_iters > 0 && accepted >= opts.max_iters) break;
        SwapScan best;
        if (opts.first_improvement) {
            for (auto [a, b] : pairs) {
                const Count d = eval_swap(a, b, middles_buf[0], stamp_buf[0], ++tick_buf[0]);
                if (want_max ? d > 0 : d < 0) {
                    best = {d, a, b, true};
                    break;
                }
            }
        } else {
            std::vector<SwapScan> local(static_cast<std::size_t>(threads));
            const auto total = static_cast<std::int64_t>(pairs.size());
#pragma omp parallel for schedule(static) num_threads(threads) if (threads > 1)
            for (std::int64_t idx = 0; idx < total; ++idx) {
#ifdef _OPENMP
                const auto tid = static_cast<std::size_t>(omp_get_thread_num());
#else
                const std::size_t tid = 0;
#endif
                const auto [a, b] = pairs[static_cast<std::size_t>(idx)];
                const Count d =
                    eval_swap(a, b, middles_buf[tid], stamp_buf[tid], ++tick_buf[tid]);
                SwapScan& mine = local[tid];
                const bool improving = want_max ? d > 0 : d < 0;
                if (!improving) continue;
                const bool better =
                    !mine.found || (want_max ? d > mine.delta : d < mine.delta) ||
                    (d == mine.delta && std::pair(a, b) < std::pair(mine.a, mine.b));
                if (better) mine = {d, a, b, true};
            }
            // Deterministic reduction: best delta, then smallest pair.
            for (const auto& cand : local) {
                if (!cand.found) continue;
                const bool better =
                    !best.found || (want_max ? cand.delta > best.delta : cand.delta < best.delta) ||
                    (cand.delta == best.delta &&
                     std::pair(cand.a, cand.b) < std::pair(best.a, best.b));
                if (better) best = cand;
            }
        }
        if (!best.found) break;

        const int na = pi.of(best.a), nb = pi.of(best.b);
        pi.set(best.a, nb);
        pi.set(best.b, na);
        affected_middles(g, best.a, best.b, middles_buf[0], stamp_buf[0], ++tick_buf[0]);
        for (int u : middles_buf[0]) contrib[static_cast<std::size_t>(u)] = contribution(g, pi, u);
        value += best.delta;
        ++accepted;
    }

    SolveResult result;
    result.objective = objective;
    result.value = value;
    result.witness = std::move(pi);
    result.method = SolveMethod::local;
    result.stats.nodes = accepted;
    result.stats.proven = false;
    result.stats.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

}  // namespace vpath
