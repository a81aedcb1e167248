#include "vpath/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace vpath {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n) + 1) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
}

void Graph::check_vertex(int v) const {
    if (v < 1 || v > n_)
        throw std::invalid_argument("vertex id " + std::to_string(v) + " out of range 1.." +
                                    std::to_string(n_));
}

int Graph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
}

std::span<const int> Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& a = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(a.begin(), a.end(), v);
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    auto& a = adj_[static_cast<std::size_t>(u)];
    auto it = std::lower_bound(a.begin(), a.end(), v);
    if (it != a.end() && *it == v)
        throw std::invalid_argument("duplicate edge " + std::to_string(std::min(u, v)) + " " +
                                    std::to_string(std::max(u, v)));
    a.insert(it, v);
    auto& b = adj_[static_cast<std::size_t>(v)];
    b.insert(std::lower_bound(b.begin(), b.end(), u), u);
    ++m_;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 1; u <= n_; ++u)
        for (int v : adj_[static_cast<std::size_t>(u)])
            if (u < v) out.emplace_back(u, v);
    return out;
}

int Graph::min_degree() const {
    int d = n_ == 0 ? 0 : degree(1);
    for (int v = 2; v <= n_; ++v) d = std::min(d, degree(v));
    return d;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 1; v <= n_; ++v) d = std::max(d, degree(v));
    return d;
}

Numbering Numbering::from_values(const std::vector<int>& values) {
    Numbering pi(static_cast<int>(values.size()));
    for (std::size_t i = 0; i < values.size(); ++i) pi.num_[i + 1] = values[i];
    return pi;
}

Numbering Numbering::identity(int n) {
    Numbering pi(n);
    std::iota(pi.num_.begin() + 1, pi.num_.end(), 1);
    return pi;
}

bool Numbering::is_permutation() const {
    const int n = size();
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int v = 1; v <= n; ++v) {
        const int x = of(v);
        if (x < 1 || x > n || seen[static_cast<std::size_t>(x)]) return false;
        seen[static_cast<std::size_t>(x)] = 1;
    }
    return true;
}

std::vector<int> Numbering::to_order() const {
    std::vector<int> order(static_cast<std::size_t>(size()));
    for (int v = 1; v <= size(); ++v) order[static_cast<std::size_t>(of(v)) - 1] = v;
    return order;
}

Numbering Numbering::from_order(const std::vector<int>& order) {
    Numbering pi(static_cast<int>(order.size()));
    for (std::size_t t = 0; t < order.size(); ++t) pi.set(order[t], static_cast<int>(t) + 1);
    return pi;
}

Count count_two_paths(const Graph& g) {
    Count total = 0;
    for (int v = 1; v <= g.num_vertices(); ++v) total += choose2(g.degree(v));
    return total;
}

bool is_valid_numbering(const Graph& g, const Numbering& pi) {
    return pi.size() == g.num_vertices() && pi.is_permutation();
}

// A 2-path <x, u, y> is valid iff pi(u) < min(pi(x), pi(y)), so the
// contribution of middle u is C(h, 2) with h the number of neighbors
// carrying larger numbers.
static Count middle_contribution(const Graph& g, const Numbering& pi, int u) {
    Count h = 0;
    for (int w : g.neighbors(u))
        if (pi.of(w) > pi.of(u)) ++h;
    return choose2(h);
}

Count validity_count_serial(const Graph& g, const Numbering& pi) {
    Count total = 0;
    for (int u = 1; u <= g.num_vertices(); ++u) total += middle_contribution(g, pi, u);
    return total;
}

Count validity_count(const Graph& g, const Numbering& pi) {
    const int n = g.num_vertices();
    Count total = 0;
#pragma omp parallel for schedule(static) reduction(+ : total) if (n >= 4096)
    for (int u = 1; u <= n; ++u) total += middle_contribution(g, pi, u);
    return total;
}

ValidityReport count_validity(const Graph& g, const Numbering& pi, bool list_paths) {
    if (!is_valid_numbering(g, pi))
        throw std::invalid_argument("numbering is not a bijection onto 1..n");
    ValidityReport report;
    if (!list_paths) {
        report.count = validity_count(g, pi);
        return report;
    }
    std::vector<TwoPath> paths;
    for (int u = 1; u <= g.num_vertices(); ++u) {
        auto nbrs = g.neighbors(u);
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            if (pi.of(nbrs[i]) < pi.of(u)) continue;
            for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
                if (pi.of(nbrs[j]) < pi.of(u)) continue;
                paths.push_back({u, nbrs[i], nbrs[j]});
            }
        }
    }
    std::sort(paths.begin(), paths.end());
    report.count = static_cast<Count>(paths.size());
    report.paths = std::move(paths);
    return report;
}

std::vector<std::vector<int>> components(const Graph& g) {
    const int n = g.num_vertices();
    std::vector<int> comp(static_cast<std::size_t>(n) + 1, 0);
    std::vector<std::vector<int>> out;
    std::vector<int> stack;
    for (int s = 1; s <= n; ++s) {
        if (comp[static_cast<std::size_t>(s)]) continue;
        const int id = static_cast<int>(out.size()) + 1;
        out.emplace_back();
        stack.push_back(s);
        comp[static_cast<std::size_t>(s)] = id;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            out.back().push_back(u);
            for (int w : g.neighbors(u)) {
                if (!comp[static_cast<std::size_t>(w)]) {
                    comp[static_cast<std::size_t>(w)] = id;
                    stack.push_back(w);
                }
            }
        }
        std::sort(out.back().begin(), out.back().end());
    }
    return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

std::vector<std::pair<std::vector<int>, Count>>
validity_of_components(const Graph& g, const Numbering& pi) {
    if (!is_valid_numbering(g, pi))
        throw std::invalid_argument("numbering is not a bijection onto 1..n");
    std::vector<std::pair<std::vector<int>, Count>> out;
    for (auto& comp : components(g)) {
        Count c = 0;
        for (int u : comp) c += middle_contribution(g, pi, u);
        out.emplace_back(std::move(comp), c);
    }
    return out;
}

}  // namespace vpath
