#include "tcoi/graph_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace tcoi {

namespace {

[[noreturn]] void parse_fail(int line_no, const std::string& what) {
    throw invalid_input_error("parse error at line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

namespace {

// Blank lines and '#'-prefixed comment lines are skipped.
bool skippable(const std::string& line) {
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) return true;
    return tok[0] == '#';
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    std::string line;
    int line_no = 0;
    long long n = -1, m = -1;
    bool have_header = false;
    while (!have_header) {
        if (!std::getline(in, line)) parse_fail(line_no, "missing header 'n m'");
        ++line_no;
        if (skippable(line)) continue;
        std::istringstream ls(line);
        if (!(ls >> n >> m) || n < 0 || m < 0) parse_fail(line_no, "expected header 'n m'");
        have_header = true;
    }
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(m));
    while (static_cast<long long>(edges.size()) < m) {
        if (!std::getline(in, line)) parse_fail(line_no, "unexpected end of file, expected more edges");
        ++line_no;
        if (skippable(line)) continue;
        std::istringstream ls(line);
        long long u, v;
        if (!(ls >> u >> v)) parse_fail(line_no, "expected edge 'u v'");
        std::string extra;
        if (ls >> extra) parse_fail(line_no, "trailing data after edge");
        if (u < 0 || v < 0 || u >= n || v >= n) parse_fail(line_no, "vertex id out of range");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    try {
        return Graph(static_cast<int>(n), std::move(edges));
    } catch (const invalid_input_error& e) {
        throw invalid_input_error(std::string("invalid edge list: ") + e.what());
    }
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

namespace {

constexpr int kG6Lo = 63;   // '?'
constexpr int kG6Hi = 126;  // '~'

}  // namespace

Graph read_graph6_line(const std::string& raw) {
    std::string line = raw;
    const std::string header = ">>graph6<<";
    if (line.rfind(header, 0) == 0) line = line.substr(header.size());
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
    if (line.empty()) throw invalid_input_error("empty graph6 line");

    size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= line.size()) throw invalid_input_error("truncated graph6 string");
        int c = static_cast<unsigned char>(line[pos++]);
        if (c < kG6Lo || c > kG6Hi) throw invalid_input_error("invalid graph6 character");
        return c - kG6Lo;
    };

    long long n;
    if (static_cast<unsigned char>(line[0]) != kG6Hi) {
        n = next();
    } else {
        ++pos;
        if (pos < line.size() && static_cast<unsigned char>(line[pos]) == kG6Hi)
            throw invalid_input_error("graph6 orders above 258047 are not supported");
        long long a = next(), b = next(), c = next();
        n = (a << 12) | (b << 6) | c;
    }

    std::vector<std::pair<int, int>> edges;
    int bits_left = 0, current = 0;
    for (long long col = 1; col < n; ++col) {
        for (long long row = 0; row < col; ++row) {
            if (bits_left == 0) {
                current = next();
                bits_left = 6;
            }
            --bits_left;
            if (current >> bits_left & 1)
                edges.emplace_back(static_cast<int>(row), static_cast<int>(col));
        }
    }
    return Graph(static_cast<int>(n), std::move(edges));
}

std::string write_graph6(const Graph& g) {
    int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kG6Lo));
    } else if (n <= 258047) {
        out.push_back(static_cast<char>(kG6Hi));
        out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kG6Lo));
        out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kG6Lo));
        out.push_back(static_cast<char>((n & 0x3f) + kG6Lo));
    } else {
        throw invalid_input_error("graph6 writer limited to n <= 258047");
    }
    int bits_used = 0, current = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            current = (current << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++bits_used == 6) {
                out.push_back(static_cast<char>(current + kG6Lo));
                bits_used = 0;
                current = 0;
            }
        }
    }
    if (bits_used > 0) {
        current <<= 6 - bits_used;
        out.push_back(static_cast<char>(current + kG6Lo));
    }
    return out;
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_input_error("cannot open file: " + path);
    std::string first;
    if (!std::getline(in, first)) throw invalid_input_error("empty file: " + path);
    std::istringstream probe(first);
    long long a, b;
    std::string rest;
    if (probe >> a >> b && !(probe >> rest)) {
        in.seekg(0);
        return read_edge_list(in);
    }
    return read_graph6_line(first);
}

void write_graph_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw invalid_input_error("cannot open file for writing: " + path);
    write_edge_list(out, g);
}

void write_graph6_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw invalid_input_error("cannot open file for writing: " + path);
    out << write_graph6(g) << '\n';
}

std::string write_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace tcoi
