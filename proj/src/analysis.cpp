#include "vpath/analysis.hpp"

#include <algorithm>
#include <stdexcept>

namespace vpath {

std::vector<std::array<int, 3>> triangle_list(const Graph& g) {
    std::vector<std::array<int, 3>> out;
    for (int u = 1; u <= g.num_vertices(); ++u) {
        auto nbrs = g.neighbors(u);
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            if (nbrs[i] < u) continue;
            for (std::size_t j = i + 1; j < nbrs.size(); ++j)
                if (g.has_edge(nbrs[i], nbrs[j])) out.push_back({u, nbrs[i], nbrs[j]});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Count triangle_count(const Graph& g) {
    return static_cast<Count>(triangle_list(g).size());
}

// Counts components of g restricted to the vertices with keep[v] set.
static int restricted_components(const Graph& g, const std::vector<char>& keep) {
    const int n = g.num_vertices();
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> stack;
    int comps = 0;
    for (int s = 1; s <= n; ++s) {
        if (!keep[static_cast<std::size_t>(s)] || seen[static_cast<std::size_t>(s)]) continue;
        ++comps;
        seen[static_cast<std::size_t>(s)] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(u)) {
                if (keep[static_cast<std::size_t>(w)] && !seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    stack.push_back(w);
                }
            }
        }
    }
    return comps;
}

Count separating_triangle_count(const Graph& g) {
    if (g.num_vertices() < 4)
        throw std::invalid_argument("separating triangles need at least 4 vertices");
    if (!is_connected(g)) throw std::invalid_argument("graph must be connected");
    Count sep = 0;
    std::vector<char> keep(static_cast<std::size_t>(g.num_vertices()) + 1, 1);
    for (const auto& t : triangle_list(g)) {
        for (int v : t) keep[static_cast<std::size_t>(v)] = 0;
        if (restricted_components(g, keep) > 1) ++sep;
        for (int v : t) keep[static_cast<std::size_t>(v)] = 1;
    }
    return sep;
}

bool is_triangulation_candidate(const Graph& g) {
    const Count n = g.num_vertices();
    if (n < 4) return false;
    if (!is_connected(g)) return false;
    if (g.num_edges() != 3 * n - 6) return false;
    if (g.min_degree() < 3) return false;
    const Count tau = triangle_count(g);
    return 2 * n - 4 <= tau && tau <= 3 * n - 8;
}

Count isolated_triangle_count(const Graph& g) {
    const auto tris = triangle_list(g);
    std::vector<int> hits(static_cast<std::size_t>(g.num_vertices()) + 1, 0);
    for (const auto& t : tris)
        for (int v : t) ++hits[static_cast<std::size_t>(v)];
    Count isolated = 0;
    for (const auto& t : tris)
        if (hits[static_cast<std::size_t>(t[0])] == 1 && hits[static_cast<std::size_t>(t[1])] == 1 &&
            hits[static_cast<std::size_t>(t[2])] == 1)
            ++isolated;
    return isolated;
}

Count disjoint_triangle_bound(const Graph& g) {
    std::vector<char> used(static_cast<std::size_t>(g.num_vertices()) + 1, 0);
    Count picked = 0;
    for (const auto& t : triangle_list(g)) {
        if (used[static_cast<std::size_t>(t[0])] || used[static_cast<std::size_t>(t[1])] ||
            used[static_cast<std::size_t>(t[2])])
            continue;
        for (int v : t) used[static_cast<std::size_t>(v)] = 1;
        ++picked;
    }
    return picked;
}

}  // namespace vpath
