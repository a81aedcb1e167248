#ifndef VPATH_IO_HPP
#define VPATH_IO_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "vpath/graph.hpp"

namespace vpath {

/// Parse failure with the 1-based source line it occurred on.
class parse_error : public std::runtime_error {
public:
    parse_error(int line, const std::string& message);
    int line() const { return line_; }

private:
    int line_;
};

/// Graph files: a header line "n m", then exactly m lines "u v" with
/// 1 <= u < v <= n. '#' starts a comment (whole line or trailing); blank
/// lines are skipped. Numbering files: one integer per significant line,
/// line v carrying the number of vertex v; the n lines must form a
/// permutation of 1..n. Serialization is canonical: sorted edges, no
/// comments; parse(serialize(x)) == x.
Graph parse_graph(std::istream& in);
Graph parse_graph(const std::string& text);
void write_graph(std::ostream& out, const Graph& g);
std::string graph_to_string(const Graph& g);

Numbering parse_numbering(std::istream& in);
Numbering parse_numbering(const std::string& text);
void write_numbering(std::ostream& out, const Numbering& pi);
std::string numbering_to_string(const Numbering& pi);

Graph load_graph(const std::string& path);
Numbering load_numbering(const std::string& path);
void save_graph(const std::string& path, const Graph& g);
void save_numbering(const std::string& path, const Numbering& pi);

/// FNV-1a (64-bit) over the canonical serialization, as 16 hex digits.
/// Stable across platforms; used to key result records to their input.
std::string graph_hash(const Graph& g);

}  // namespace vpath

#endif
