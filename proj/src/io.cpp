#include "vpath/io.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace vpath {

parse_error::parse_error(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

// Significant lines with their 1-based positions: comments stripped,
// whitespace-only lines dropped.
std::vector<std::pair<int, std::string>> significant_lines(std::istream& in) {
    std::vector<std::pair<int, std::string>> out;
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        out.emplace_back(no, line);
    }
    return out;
}

std::vector<long long> parse_ints(int line_no, const std::string& line, std::size_t expect) {
    std::istringstream ss(line);
    std::vector<long long> vals;
    long long v = 0;
    while (ss >> v) vals.push_back(v);
    if (!ss.eof()) throw parse_error(line_no, "expected integers, got '" + line + "'");
    if (vals.size() != expect)
        throw parse_error(line_no, "expected " + std::to_string(expect) + " integers, got " +
                                       std::to_string(vals.size()));
    return vals;
}

}  // namespace

Graph parse_graph(std::istream& in) {
    const auto lines = significant_lines(in);
    if (lines.empty()) throw parse_error(1, "empty graph file, expected a 'n m' header");
    const auto header = parse_ints(lines[0].first, lines[0].second, 2);
    const long long n = header[0], m = header[1];
    if (n < 0 || n > 10000000) throw parse_error(lines[0].first, "vertex count out of range");
    if (m < 0) throw parse_error(lines[0].first, "negative edge count");
    if (static_cast<long long>(lines.size()) - 1 < m) {
        const int last = lines.back().first;
        throw parse_error(last, "expected " + std::to_string(m) + " edge lines, found " +
                                    std::to_string(lines.size() - 1));
    }
    if (static_cast<long long>(lines.size()) - 1 > m)
        throw parse_error(lines[static_cast<std::size_t>(m) + 1].first,
                          "trailing content after the declared " + std::to_string(m) + " edges");
    Graph g(static_cast<int>(n));
    for (long long i = 1; i <= m; ++i) {
        const auto& [no, text] = lines[static_cast<std::size_t>(i)];
        const auto uv = parse_ints(no, text, 2);
        const long long u = uv[0], v = uv[1];
        if (u < 1 || v < 1 || u > n || v > n) throw parse_error(no, "vertex id out of range");
        if (u >= v) throw parse_error(no, "edges must be written as 'u v' with u < v");
        try {
            g.add_edge(static_cast<int>(u), static_cast<int>(v));
        } catch (const std::invalid_argument& e) {
            throw parse_error(no, e.what());
        }
    }
    return g;
}

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
    out << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::string graph_to_string(const Graph& g) {
    std::ostringstream out;
    write_graph(out, g);
    return out.str();
}

Numbering parse_numbering(std::istream& in) {
    const auto lines = significant_lines(in);
    if (lines.empty()) throw parse_error(1, "empty numbering file");
    const auto n = static_cast<long long>(lines.size());
    std::vector<int> values;
    values.reserve(lines.size());
    std::vector<int> seen_at(lines.size() + 1, 0);
    for (const auto& [no, text] : lines) {
        const long long x = parse_ints(no, text, 1)[0];
        if (x < 1 || x > n)
            throw parse_error(no, "number " + std::to_string(x) + " outside 1.." +
                                      std::to_string(n));
        if (seen_at[static_cast<std::size_t>(x)])
            throw parse_error(no, "number " + std::to_string(x) + " already used on line " +
                                      std::to_string(seen_at[static_cast<std::size_t>(x)]));
        seen_at[static_cast<std::size_t>(x)] = no;
        values.push_back(static_cast<int>(x));
    }
    return Numbering::from_values(values);
}

Numbering parse_numbering(const std::string& text) {
    std::istringstream in(text);
    return parse_numbering(in);
}

void write_numbering(std::ostream& out, const Numbering& pi) {
    for (int v = 1; v <= pi.size(); ++v) out << pi.of(v) << '\n';
}

std::string numbering_to_string(const Numbering& pi) {
    std::ostringstream out;
    write_numbering(out, pi);
    return out.str();
}

namespace {

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path + " for reading");
    return in;
}

}  // namespace

Graph load_graph(const std::string& path) {
    auto in = open_in(path);
    try {
        return parse_graph(in);
    } catch (const parse_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

Numbering load_numbering(const std::string& path) {
    auto in = open_in(path);
    try {
        return parse_numbering(in);
    } catch (const parse_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

void save_graph(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_graph(out, g);
}

void save_numbering(const std::string& path, const Numbering& pi) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_numbering(out, pi);
}

std::string graph_hash(const Graph& g) {
    const std::string text = graph_to_string(g);
    std::uint64_t h = 14695981039346656037ULL;
    for (const unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
    return std::string(buf);
}

}  // namespace vpath
