#include "kcut/graph6.hpp"

#include <sstream>

#include "kcut/errors.hpp"

namespace kcut {

namespace {

int g6_byte(const std::string& s, size_t off) {
    unsigned char c = static_cast<unsigned char>(s[off]);
    if (c < 63 || c > 126)
        throw parse_error("graph6: byte " + std::to_string(off) +
                          " has value " + std::to_string(int{c}) +
                          ", outside the printable range [63,126]");
    return int{c} - 63;
}

} // namespace

Graph parse_graph6(const std::string& s) {
    if (s.empty()) throw parse_error("graph6: empty string");
    size_t pos = 0;
    long long n;
    if (s[0] == '~') {
        // 18-bit order in three bytes. Required form for n >= 63; a second
        // '~' would start the 36-bit form, whose orders all exceed 64.
        if (s.size() < 4)
            throw parse_error("graph6: byte 0 starts a multi-byte order "
                              "but only " + std::to_string(s.size()) +
                              " bytes are present");
        if (s[1] == '~')
            throw parse_error("graph6: byte 1 starts a 36-bit order, which "
                              "always exceeds the vertex limit 64");
        n = (static_cast<long long>(g6_byte(s, 1)) << 12) |
            (static_cast<long long>(g6_byte(s, 2)) << 6) |
            static_cast<long long>(g6_byte(s, 3));
        if (n < 63)
            throw parse_error("graph6: multi-byte order " + std::to_string(n) +
                              " must use the single-byte form");
        pos = 4;
    } else {
        n = g6_byte(s, 0);
        pos = 1;
    }
    if (n > 64)
        throw parse_error("graph6: order " + std::to_string(n) +
                          " exceeds the vertex limit 64");
    long long nbits = n * (n - 1) / 2;
    size_t body = static_cast<size_t>((nbits + 5) / 6);
    if (s.size() - pos != body)
        throw parse_error("graph6: expected " + std::to_string(body) +
                          " body bytes after the order, got " +
                          std::to_string(s.size() - pos));
    std::vector<Edge> edges;
    long long bit = 0;
    int cur = 0;
    int have = 0;
    size_t off = pos;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            if (have == 0) {
                cur = g6_byte(s, off);
                ++off;
                have = 6;
            }
            if ((cur >> (have - 1)) & 1) edges.emplace_back(i, j);
            --have;
            ++bit;
        }
    if (have > 0 && (cur & ((1 << have) - 1)) != 0)
        throw parse_error("graph6: byte " + std::to_string(off - 1) +
                          " has nonzero padding bits");
    return Graph::from_edges(static_cast<int>(n), edges);
}

std::string to_graph6(const Graph& g) {
    int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int cur = 0;
    int have = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            cur = (cur << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++have == 6) {
                out.push_back(static_cast<char>(cur + 63));
                cur = 0;
                have = 0;
            }
        }
    if (have > 0) {
        cur <<= (6 - have);
        out.push_back(static_cast<char>(cur + 63));
    }
    return out;
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    long long n = -1, m = -1;
    std::vector<Edge> edges;
    std::vector<uint64_t> seen;
    long long got = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue; // blank line
        if (n < 0) {
            std::istringstream hs(line);
            std::string extra;
            if (!(hs >> n >> m) || (hs >> extra))
                throw parse_error("edge list line " + std::to_string(lineno) +
                                  ": expected header 'n m'");
            if (n < 0 || n > 64)
                throw parse_error("edge list line " + std::to_string(lineno) +
                                  ": order " + std::to_string(n) +
                                  " outside [0,64]");
            if (m < 0)
                throw parse_error("edge list line " + std::to_string(lineno) +
                                  ": negative edge count");
            seen.assign(static_cast<size_t>(n), 0);
            continue;
        }
        long long u, v;
        std::istringstream es(line);
        std::string extra;
        if (!(es >> u >> v) || (es >> extra))
            throw parse_error("edge list line " + std::to_string(lineno) +
                              ": expected 'u v'");
        if (got == m)
            throw parse_error("edge list line " + std::to_string(lineno) +
                              ": more than the declared " + std::to_string(m) +
                              " edges");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw parse_error("edge list line " + std::to_string(lineno) +
                              ": endpoint outside [0," + std::to_string(n) +
                              ")");
        if (u == v)
            throw parse_error("edge list line " + std::to_string(lineno) +
                              ": loop edge " + std::to_string(u) + " " +
                              std::to_string(v));
        Edge e(static_cast<int>(u), static_cast<int>(v));
        if ((seen[e.u] >> e.v) & 1u)
            throw parse_error("edge list line " + std::to_string(lineno) +
                              ": duplicate edge " + e.str());
        seen[e.u] |= uint64_t{1} << e.v;
        edges.push_back(e);
        ++got;
    }
    if (n < 0) throw parse_error("edge list: missing header line 'n m'");
    if (got != m)
        throw parse_error("edge list: declared " + std::to_string(m) +
                          " edges but found " + std::to_string(got));
    return Graph::from_edges(static_cast<int>(n), edges);
}

} // namespace kcut
