#pragma once

#include "meyniel/graph.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

namespace meyniel {

enum class GraphFormat { dimacs, edgelist };

/// Parse failure; `line()` is 1-based, 0 when the error is not tied to a line.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what)
        , line_(line)
    {
    }
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

GraphFormat format_from_string(std::string_view name);

/// DIMACS: "p edge <n> <m>", then "e <u> <v>" (1-based); "c" lines are comments.
/// edgelist: first line "<n>", then "<u> <v>" (0-based); blank lines ignored.
Graph parse_graph(std::string_view text, GraphFormat format);

Graph read_graph_file(const std::filesystem::path& path, GraphFormat format);

std::string to_dimacs(const Graph& g);
std::string to_edgelist(const Graph& g);

} // namespace meyniel
