#include "meyniel/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace meyniel {

namespace {

std::vector<std::string_view> split_ws(std::string_view line)
{
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
            ++j;
        if (j > i)
            tokens.push_back(line.substr(i, j - i));
        i = j;
    }
    return tokens;
}

long long to_int(std::string_view tok, std::size_t line)
{
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(line, "expected an integer, got '" + std::string(tok) + "'");
    return value;
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn)
{
    std::size_t lineno = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        ++lineno;
        fn(text.substr(start, end - start), lineno);
        if (end == text.size())
            break;
        start = end + 1;
    }
}

Edge checked_edge(long long u, long long v, long long n, std::size_t line)
{
    if (u < 0 || v < 0 || u >= n || v >= n)
        throw ParseError(line, "vertex out of range");
    if (u == v)
        throw ParseError(line, "self-loop");
    return {static_cast<Vertex>(u), static_cast<Vertex>(v)};
}

Graph parse_dimacs(std::string_view text)
{
    bool have_header = false;
    long long n = 0, m = 0;
    std::size_t header_line = 0;
    std::vector<Edge> edges;

    for_each_line(text, [&](std::string_view line, std::size_t ln) {
        auto tok = split_ws(line);
        if (tok.empty() || tok[0] == "c")
            return;
        if (tok[0] == "p") {
            if (have_header)
                throw ParseError(ln, "duplicate header");
            if (tok.size() != 4 || (tok[1] != "edge" && tok[1] != "col"))
                throw ParseError(ln, "malformed header, expected 'p edge <n> <m>'");
            n = to_int(tok[2], ln);
            m = to_int(tok[3], ln);
            if (n < 0 || m < 0)
                throw ParseError(ln, "malformed header, negative size");
            have_header = true;
            header_line = ln;
            edges.reserve(static_cast<std::size_t>(m));
            return;
        }
        if (tok[0] == "e") {
            if (!have_header)
                throw ParseError(ln, "edge before header");
            if (tok.size() != 3)
                throw ParseError(ln, "malformed edge line, expected 'e <u> <v>'");
            edges.push_back(checked_edge(to_int(tok[1], ln) - 1, to_int(tok[2], ln) - 1, n, ln));
            return;
        }
        throw ParseError(ln, "unknown line type '" + std::string(tok[0]) + "'");
    });

    if (!have_header)
        throw ParseError(0, "missing 'p edge' header");
    if (static_cast<long long>(edges.size()) != m)
        throw ParseError(header_line, "edge count mismatch: header declares " + std::to_string(m)
                                          + ", found " + std::to_string(edges.size()));
    return Graph::build(static_cast<int>(n), edges);
}

Graph parse_edgelist(std::string_view text)
{
    bool have_n = false;
    long long n = 0;
    std::vector<Edge> edges;

    for_each_line(text, [&](std::string_view line, std::size_t ln) {
        auto tok = split_ws(line);
        if (tok.empty())
            return;
        if (!have_n) {
            if (tok.size() != 1)
                throw ParseError(ln, "malformed header, expected '<n>'");
            n = to_int(tok[0], ln);
            if (n < 0)
                throw ParseError(ln, "negative vertex count");
            have_n = true;
            return;
        }
        if (tok.size() != 2)
            throw ParseError(ln, "malformed edge line, expected '<u> <v>'");
        edges.push_back(checked_edge(to_int(tok[0], ln), to_int(tok[1], ln), n, ln));
    });

    if (!have_n)
        throw ParseError(0, "missing vertex count");
    return Graph::build(static_cast<int>(n), edges);
}

} // namespace

GraphFormat format_from_string(std::string_view name)
{
    if (name == "dimacs" || name == "col")
        return GraphFormat::dimacs;
    if (name == "edgelist")
        return GraphFormat::edgelist;
    throw std::invalid_argument("unknown graph format '" + std::string(name) + "'");
}

Graph parse_graph(std::string_view text, GraphFormat format)
{
    return format == GraphFormat::dimacs ? parse_dimacs(text) : parse_edgelist(text);
}

Graph read_graph_file(const std::filesystem::path& path, GraphFormat format)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError(0, "cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str(), format);
}

std::string to_dimacs(const Graph& g)
{
    std::ostringstream out;
    out << "p edge " << g.order() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges())
        out << "e " << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

std::string to_edgelist(const Graph& g)
{
    std::ostringstream out;
    out << g.order() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
    return out.str();
}

} // namespace meyniel
