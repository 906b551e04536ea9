#include "aspectra/graph6.hpp"

#include <sstream>

#include "aspectra/errors.hpp"

namespace aspectra {

std::string to_graph6(const Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        throw ParseError("graph too large for graph6 writer");
    }
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

Graph from_graph6(const std::string& line) {
    std::string s = line;
    const std::string header = ">>graph6<<";
    if (s.rfind(header, 0) == 0) s = s.substr(header.size());
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    if (s.empty()) throw ParseError("empty graph6 string");
    std::size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= s.size()) throw ParseError("truncated graph6 string");
        int c = static_cast<unsigned char>(s[pos++]);
        if (c < 63 || c > 126) throw ParseError("invalid graph6 byte at position " + std::to_string(pos - 1));
        return c - 63;
    };
    long n;
    int c0 = next();
    if (c0 < 63) {
        n = c0;
    } else {
        long a = next(), b = next(), c = next();
        n = (a << 12) | (b << 6) | c;
    }
    if (n > 100000) throw ParseError("graph6 order too large");
    std::vector<std::pair<int, int>> edges;
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (nbits == 0) {
                acc = next();
                nbits = 6;
            }
            if (acc & (1 << (nbits - 1))) edges.emplace_back(i, j);
            --nbits;
        }
    }
    if (pos != s.size()) throw ParseError("trailing bytes after graph6 payload");
    return Graph(static_cast<int>(n), edges);
}

std::vector<Graph> read_graph6_lines(const std::string& text) {
    std::vector<Graph> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line == "\r") continue;
        out.push_back(from_graph6(line));
    }
    return out;
}

}  // namespace aspectra
