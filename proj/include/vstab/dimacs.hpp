#pragma once

#include "vstab/graph.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vstab {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line)
    {
    }
    int line() const noexcept { return line_; }

private:
    int line_;
};

struct DimacsGraph {
    Graph graph;
    std::vector<std::string> comments;
    bool had_duplicate_edges = false;
};

/// Parses the DIMACS edge format ("p edge n m", "e u v", 1-based). Self-loops are errors;
/// repeated edges are collapsed and flagged.
DimacsGraph read_dimacs_graph(std::string_view text);

/// Canonical form: header then "e u v" with u < v in lexicographic order, 1-based.
std::string write_dimacs_graph(const Graph& g);

/// Graphviz export. Vertices keep their 0-based indices as node names.
std::string write_dot(const Graph& g, std::string_view name = "G");

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view contents);

} // namespace vstab
