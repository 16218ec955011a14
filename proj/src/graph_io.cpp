#include "mwbm/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string_view>
#include <vector>

#include "mwbm/error.hpp"

namespace mwbm {

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

std::uint64_t parse_uint(std::string_view tok, std::size_t line, const char* what) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec == std::errc::result_out_of_range) {
        throw ParseError(line, std::string(what) + " '" + std::string(tok) + "' out of range");
    }
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw ParseError(line, std::string(what) + " '" + std::string(tok) + "' is not a non-negative integer");
    }
    return value;
}

std::string at_line(std::size_t line, const std::string& msg) {
    return "line " + std::to_string(line) + ": " + msg;
}

}  // namespace

BipartiteGraph parse_graph(std::istream& in) {
    std::optional<std::uint64_t> n1, n2, m;
    std::vector<Edge> edges;
    std::vector<std::size_t> edge_lines;

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto tokens = split_tokens(line);
        if (tokens.empty() || tokens[0] == "c") continue;

        if (tokens[0] == "p") {
            if (n1) throw ParseError(lineno, "duplicate problem line");
            if (tokens.size() != 5 || tokens[1] != "bipartite") {
                throw ParseError(lineno, "expected 'p bipartite <n1> <n2> <m>'");
            }
            n1 = parse_uint(tokens[2], lineno, "n1");
            n2 = parse_uint(tokens[3], lineno, "n2");
            m = parse_uint(tokens[4], lineno, "m");
            if (*n1 == 0 || *n2 == 0 || *n1 > UINT32_MAX || *n2 > UINT32_MAX) {
                throw ParseError(lineno, "partition sizes must be in [1, 2^32)");
            }
            continue;
        }

        if (tokens[0] == "e") {
            if (!n1) throw ParseError(lineno, "edge before problem line");
            if (tokens.size() != 4) throw ParseError(lineno, "expected 'e <left> <right> <weight>'");
            if (!tokens[3].empty() && tokens[3][0] == '-') {
                throw Error(Errc::ZeroOrNegativeWeight, at_line(lineno, "negative weight"));
            }
            std::uint64_t l = parse_uint(tokens[1], lineno, "left index");
            std::uint64_t r = parse_uint(tokens[2], lineno, "right index");
            std::uint64_t w = parse_uint(tokens[3], lineno, "weight");
            if (l == 0 || r == 0 || l > *n1 || r > *n2) {
                throw Error(Errc::IndexOutOfRange, at_line(lineno, "edge endpoint out of range"));
            }
            if (w == 0) throw Error(Errc::ZeroOrNegativeWeight, at_line(lineno, "zero weight"));
            edges.push_back({static_cast<Index>(l - 1), static_cast<Index>(r - 1), w});
            edge_lines.push_back(lineno);
            continue;
        }

        throw ParseError(lineno, "unknown line type '" + std::string(tokens[0]) + "'");
    }

    if (!n1) throw ParseError(lineno + 1, "missing problem line");
    if (edges.size() != *m) {
        throw ParseError(lineno + 1, "declared " + std::to_string(*m) + " edges, found " +
                                         std::to_string(edges.size()));
    }
    try {
        return BipartiteGraph::build(static_cast<Index>(*n1), static_cast<Index>(*n2), edges);
    } catch (const Error& e) {
        if (e.code() != Errc::DuplicateEdge) throw;
        // Report the second occurrence's line.
        std::vector<std::pair<EdgeKey, std::size_t>> seen;
        for (std::size_t i = 0; i < edges.size(); ++i) seen.push_back({{edges[i].left, edges[i].right}, edge_lines[i]});
        std::stable_sort(seen.begin(), seen.end(), [](auto& a, auto& b) { return a.first < b.first; });
        for (std::size_t i = 1; i < seen.size(); ++i) {
            if (seen[i].first == seen[i - 1].first) {
                throw Error(Errc::DuplicateEdge, at_line(seen[i].second, e.what()));
            }
        }
        throw;
    }
}

BipartiteGraph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

BipartiteGraph load_graph(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::IoError, "cannot open " + path.string());
    return parse_graph(in);
}

void serialize_graph(const BipartiteGraph& g, std::ostream& out) {
    out << "p bipartite " << g.n_left() << ' ' << g.n_right() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) {
        out << "e " << e.left + 1ULL << ' ' << e.right + 1ULL << ' ' << e.weight << '\n';
    }
}

std::string serialize_graph(const BipartiteGraph& g) {
    std::ostringstream out;
    serialize_graph(g, out);
    return out.str();
}

void save_graph(const BipartiteGraph& g, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw Error(Errc::IoError, "cannot write " + path.string());
    serialize_graph(g, out);
    if (!out) throw Error(Errc::IoError, "write failed for " + path.string());
}

}  // namespace mwbm
