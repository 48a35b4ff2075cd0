#ifndef QWALK_GRAPH6_HPP
#define QWALK_GRAPH6_HPP

// graph6 reader/writer.
//
// Layout: N(n) followed by the upper triangle of the adjacency matrix,
// column by column (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed six bits per
// byte, most significant bit first, each byte offset by 63. The final byte is
// zero-padded.

#include <cstdint>
#include <fstream>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "qwalk/errors.hpp"
#include "qwalk/graph.hpp"

namespace qwalk {

namespace detail {

constexpr int g6_bias = 63;
constexpr int g6_max = 126;
constexpr std::string_view g6_header = ">>graph6<<";

inline int g6_value(std::string_view s, std::size_t pos) {
    if (pos >= s.size())
        throw parse_error(pos, "unexpected end of input");
    const int c = static_cast<unsigned char>(s[pos]);
    if (c < g6_bias || c > g6_max)
        throw parse_error(pos, "byte value " + std::to_string(c) + " outside [63,126]");
    return c - g6_bias;
}

} // namespace detail

inline graph parse_graph6(std::string_view line) {
    std::size_t pos = 0;
    if (line.starts_with(detail::g6_header))
        pos = detail::g6_header.size();

    std::uint64_t n = 0;
    if (pos >= line.size())
        throw parse_error(pos, "empty graph6 string");
    if (static_cast<unsigned char>(line[pos]) != detail::g6_max) {
        n = static_cast<std::uint64_t>(detail::g6_value(line, pos));
        pos += 1;
    } else {
        std::size_t width = 3;
        ++pos;
        if (pos < line.size() && static_cast<unsigned char>(line[pos]) == detail::g6_max) {
            width = 6;
            ++pos;
        }
        for (std::size_t i = 0; i < width; ++i)
            n = (n << 6) | static_cast<std::uint64_t>(detail::g6_value(line, pos + i));
        pos += width;
        if ((width == 3 && n < 63) || (width == 6 && n < 258048))
            throw parse_error(pos - width, "non-canonical size encoding for n=" + std::to_string(n));
    }
    if (n == 0)
        throw parse_error(0, "graph has no vertices");

    const std::uint64_t bits = n * (n - 1) / 2;
    const std::uint64_t bytes = (bits + 5) / 6;
    if (line.size() - pos != bytes) {
        const std::size_t where = line.size() - pos < bytes ? line.size() : pos + bytes;
        throw parse_error(where, line.size() - pos < bytes
                                     ? "truncated edge data: expected " + std::to_string(bytes) +
                                           " bytes for n=" + std::to_string(n)
                                     : "trailing garbage after edge data");
    }

    std::vector<edge> edges;
    std::uint64_t bit = 0;
    for (std::uint64_t j = 1; j < n; ++j)
        for (std::uint64_t i = 0; i < j; ++i, ++bit) {
            const std::size_t at = pos + bit / 6;
            if ((detail::g6_value(line, at) >> (5 - bit % 6)) & 1)
                edges.emplace_back(i, j);
        }
    for (; bit < bytes * 6; ++bit) {
        const std::size_t at = pos + bit / 6;
        if ((detail::g6_value(line, at) >> (5 - bit % 6)) & 1)
            throw parse_error(at, "nonzero padding bit");
    }
    return graph(n, edges);
}

inline std::string write_graph6(const graph& g) {
    const std::uint64_t n = g.order();
    if (n == 0)
        throw parameter_error("graph6 requires at least one vertex");

    std::string out;
    auto put = [&out](std::uint64_t v) { out.push_back(static_cast<char>(v + detail::g6_bias)); };
    if (n <= 62) {
        put(n);
    } else if (n <= 258047) {
        out.push_back(static_cast<char>(detail::g6_max));
        for (int shift = 12; shift >= 0; shift -= 6)
            put((n >> shift) & 63);
    } else {
        out.append(2, static_cast<char>(detail::g6_max));
        for (int shift = 30; shift >= 0; shift -= 6)
            put((n >> shift) & 63);
    }

    int acc = 0;
    int filled = 0;
    for (std::uint64_t j = 1; j < n; ++j)
        for (std::uint64_t i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                put(static_cast<std::uint64_t>(acc));
                acc = 0;
                filled = 0;
            }
        }
    if (filled > 0)
        put(static_cast<std::uint64_t>(acc << (6 - filled)));
    return out;
}

/// A graph read from a corpus, tagged with "source:line".
struct labelled_graph {
    std::string id;
    graph g;
};

/// Reads one graph6 string per line. A ">>graph6<<" prefix is accepted on
/// the first line; blank lines are skipped. Parse errors are rethrown with
/// the "source:line" prefix.
inline std::vector<labelled_graph> read_graph6_stream(std::istream& in, const std::string& source) {
    std::vector<labelled_graph> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        std::string_view body = line;
        if (lineno > 1 && body.starts_with(detail::g6_header))
            throw parse_error(0, "header only allowed on line 1", source + ":" + std::to_string(lineno));
        if (body.empty())
            continue;
        const std::string id = source + ":" + std::to_string(lineno);
        try {
            out.push_back({id, parse_graph6(body)});
        } catch (const parse_error& e) {
            throw parse_error(e.offset(), e.reason(), id);
        } catch (const parameter_error& e) {
            throw parse_error(0, e.what(), id);
        }
    }
    return out;
}

inline std::vector<labelled_graph> read_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw parameter_error("cannot open " + path);
    return read_graph6_stream(in, path);
}

} // namespace qwalk

#endif // QWALK_GRAPH6_HPP
