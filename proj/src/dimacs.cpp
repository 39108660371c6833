#include "vstab/dimacs.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

namespace vstab {

namespace {

std::vector<std::string_view> split_ws(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
            ++i;
        if (i > start)
            out.push_back(line.substr(start, i - start));
    }
    return out;
}

std::optional<long long> parse_int(std::string_view tok)
{
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        return std::nullopt;
    return value;
}

} // namespace

DimacsGraph read_dimacs_graph(std::string_view text)
{
    DimacsGraph out;
    std::optional<GraphBuilder> builder;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        const auto toks = split_ws(line);
        if (toks.empty())
            continue;
        if (toks[0] == "c") {
            auto body = line.substr(line.find('c') + 1);
            if (!body.empty() && body.front() == ' ')
                body.remove_prefix(1);
            while (!body.empty() && body.back() == '\r')
                body.remove_suffix(1);
            out.comments.emplace_back(body);
            continue;
        }
        if (toks[0] == "p") {
            if (builder)
                throw ParseError(line_no, "duplicate problem line");
            if (toks.size() != 4 || (toks[1] != "edge" && toks[1] != "col"))
                throw ParseError(line_no, "malformed header, expected 'p edge <n> <m>'");
            const auto n = parse_int(toks[2]);
            const auto m = parse_int(toks[3]);
            if (!n || !m || *n < 0 || *m < 0)
                throw ParseError(line_no, "malformed header counts");
            if (*n > kMaxVertices)
                throw ParseError(line_no, "graph has " + std::to_string(*n) +
                                              " vertices; the limit is " +
                                              std::to_string(kMaxVertices));
            builder.emplace(static_cast<int>(*n));
            continue;
        }
        if (toks[0] == "e") {
            if (!builder)
                throw ParseError(line_no, "edge before problem line");
            if (toks.size() != 3)
                throw ParseError(line_no, "malformed edge line");
            const auto u = parse_int(toks[1]);
            const auto v = parse_int(toks[2]);
            if (!u || !v)
                throw ParseError(line_no, "malformed edge endpoints");
            if (*u < 1 || *v < 1 || *u > builder->order() || *v > builder->order())
                throw ParseError(line_no, "vertex index out of range");
            if (*u == *v)
                throw ParseError(line_no, "self-loop at vertex " + std::to_string(*u));
            if (!builder->add_edge(static_cast<int>(*u - 1), static_cast<int>(*v - 1)))
                out.had_duplicate_edges = true;
            continue;
        }
        throw ParseError(line_no, "unrecognized line type '" + std::string(toks[0]) + "'");
    }
    if (!builder)
        throw ParseError(line_no, "missing problem line");
    out.graph = std::move(*builder).build();
    return out;
}

std::string write_dimacs_graph(const Graph& g)
{
    std::ostringstream os;
    const auto edges = g.edges();
    os << "p edge " << g.order() << ' ' << edges.size() << '\n';
    for (const auto& e : edges)
        os << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
    return os.str();
}

std::string write_dot(const Graph& g, std::string_view name)
{
    std::ostringstream os;
    os << "graph " << name << " {\n";
    for (int v = 0; v < g.order(); ++v)
        os << "  " << v << ";\n";
    for (const auto& e : g.edges())
        os << "  " << e.u << " -- " << e.v << ";\n";
    os << "}\n";
    return os.str();
}

std::string read_text_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, std::string_view contents)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << contents;
    if (!out)
        throw std::runtime_error("failed writing " + path);
}

} // namespace vstab
