#ifndef QWALK_GENERATORS_HPP
#define QWALK_GENERATORS_HPP

// Named graph families with fixed vertex numbering.
//
//   cycle(n)               i ~ i+1 (mod n)
//   complete(n)            all pairs
//   complete_bipartite(a,b) parts {0..a-1} and {a..a+b-1}
//   petersen()             outer cycle 0..4 (i ~ i+1), spokes i ~ i+5,
//                          inner pentagram 5+i ~ 5+(i+2 mod 5)
//   hypercube(d)           0..2^d-1, adjacent iff labels differ in one bit
//   circulant(n, S)        i ~ i+s (mod n) for s in S
//   shrikhande()           (a,b) in Z4 x Z4 is vertex 4a+b; difference in
//                          {±(0,1), ±(1,0), ±(1,1)}
//   rook(a,b)              (r,c) is vertex r*b+c; same row or same column
//   paley(q)               q prime, q = 1 (mod 4); i ~ j iff i-j is a
//                          nonzero square mod q

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qwalk/errors.hpp"
#include "qwalk/graph.hpp"

namespace qwalk::generators {

inline graph cycle(std::size_t n) {
    if (n < 3)
        throw parameter_error("cycle: n must be at least 3");
    std::vector<edge> e;
    for (vertex i = 0; i < n; ++i)
        e.emplace_back(i, (i + 1) % n);
    return graph(n, e);
}

inline graph complete(std::size_t n) {
    if (n < 1)
        throw parameter_error("complete: n must be at least 1");
    std::vector<edge> e;
    for (vertex i = 0; i < n; ++i)
        for (vertex j = i + 1; j < n; ++j)
            e.emplace_back(i, j);
    return graph(n, e);
}

inline graph complete_bipartite(std::size_t a, std::size_t b) {
    if (a < 1 || b < 1)
        throw parameter_error("complete_bipartite: both parts must be nonempty");
    std::vector<edge> e;
    for (vertex i = 0; i < a; ++i)
        for (vertex j = 0; j < b; ++j)
            e.emplace_back(i, a + j);
    return graph(a + b, e);
}

inline graph petersen() {
    std::vector<edge> e;
    for (vertex i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return graph(10, e);
}

inline graph hypercube(std::size_t d) {
    if (d < 1 || d > 20)
        throw parameter_error("hypercube: dimension must be in [1, 20]");
    const std::size_t n = std::size_t{1} << d;
    std::vector<edge> e;
    for (vertex v = 0; v < n; ++v)
        for (std::size_t b = 0; b < d; ++b) {
            vertex w = v ^ (std::size_t{1} << b);
            if (v < w)
                e.emplace_back(v, w);
        }
    return graph(n, e);
}

/// Connection set entries are taken mod n; s and n-s give the same edges.
inline graph circulant(std::size_t n, const std::vector<std::size_t>& connection) {
    if (n < 2)
        throw parameter_error("circulant: n must be at least 2");
    std::vector<bool> use(n, false);
    for (std::size_t s : connection) {
        s %= n;
        if (s == 0)
            throw parameter_error("circulant: connection set may not contain 0 (mod n)");
        use[s] = use[n - s] = true;
    }
    std::vector<edge> e;
    for (vertex i = 0; i < n; ++i)
        for (std::size_t s = 1; s <= n / 2; ++s)
            if (use[s]) {
                vertex j = (i + s) % n;
                // s = n/2 reaches the same partner from both ends
                if (2 * s == n && j < i)
                    continue;
                e.emplace_back(i, j);
            }
    return graph(n, e);
}

inline graph shrikhande() {
    std::vector<edge> e;
    const int diffs[3][2] = {{0, 1}, {1, 0}, {1, 1}};
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (auto& d : diffs) {
                const int a2 = (a + d[0]) % 4;
                const int b2 = (b + d[1]) % 4;
                e.emplace_back(static_cast<vertex>(4 * a + b), static_cast<vertex>(4 * a2 + b2));
            }
    return graph(16, e);
}

inline graph rook(std::size_t rows, std::size_t cols) {
    if (rows < 1 || cols < 1)
        throw parameter_error("rook: dimensions must be positive");
    std::vector<edge> e;
    for (vertex u = 0; u < rows * cols; ++u)
        for (vertex v = u + 1; v < rows * cols; ++v)
            if (u / cols == v / cols || u % cols == v % cols)
                e.emplace_back(u, v);
    return graph(rows * cols, e);
}

inline bool is_prime(std::uint64_t q) {
    if (q < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= q; ++d)
        if (q % d == 0)
            return false;
    return true;
}

inline graph paley(std::size_t q) {
    if (!is_prime(q) || q % 4 != 1)
        throw parameter_error("paley: q must be a prime with q = 1 (mod 4), got " + std::to_string(q));
    std::vector<bool> square(q, false);
    for (std::size_t x = 1; x < q; ++x)
        square[x * x % q] = true;
    std::vector<edge> e;
    for (vertex i = 0; i < q; ++i)
        for (vertex j = i + 1; j < q; ++j)
            if (square[(j - i) % q])
                e.emplace_back(i, j);
    return graph(q, e);
}

namespace detail {

inline std::vector<std::size_t> parse_numbers(std::string_view text, std::string_view spec) {
    std::vector<std::size_t> out;
    while (!text.empty()) {
        auto comma = text.find(',');
        auto token = text.substr(0, comma);
        std::size_t v = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty())
            throw parameter_error("generator spec '" + std::string(spec) + "': bad number '" +
                                  std::string(token) + "'");
        out.push_back(v);
        if (comma == std::string_view::npos)
            break;
        text.remove_prefix(comma + 1);
        if (text.empty())
            throw parameter_error("generator spec '" + std::string(spec) + "': trailing comma");
    }
    return out;
}

} // namespace detail

/// Builds a graph from "name[:params]", e.g. "cycle:6", "rook:4",
/// "complete_bipartite:3,3", "circulant:8:1,3", "paley:13", "petersen".
inline graph from_spec(std::string_view spec) {
    const auto colon = spec.find(':');
    const std::string name(spec.substr(0, colon));
    std::string_view rest = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);

    auto args = [&](std::size_t lo, std::size_t hi) {
        auto v = detail::parse_numbers(rest, spec);
        if (v.size() < lo || v.size() > hi)
            throw parameter_error("generator spec '" + std::string(spec) + "': " + name + " takes " +
                                  (lo == hi ? std::to_string(lo) : std::to_string(lo) + "-" + std::to_string(hi)) +
                                  " parameter(s)");
        return v;
    };

    if (name == "cycle")
        return cycle(args(1, 1)[0]);
    if (name == "complete")
        return complete(args(1, 1)[0]);
    if (name == "complete_bipartite") {
        auto v = args(2, 2);
        return complete_bipartite(v[0], v[1]);
    }
    if (name == "petersen") {
        args(0, 0);
        return petersen();
    }
    if (name == "hypercube")
        return hypercube(args(1, 1)[0]);
    if (name == "circulant") {
        auto sep = rest.find(':');
        if (sep == std::string_view::npos)
            throw parameter_error("generator spec '" + std::string(spec) + "': expected circulant:n:s1,s2,...");
        auto n = detail::parse_numbers(rest.substr(0, sep), spec);
        if (n.size() != 1)
            throw parameter_error("generator spec '" + std::string(spec) + "': circulant needs a single n");
        return circulant(n[0], detail::parse_numbers(rest.substr(sep + 1), spec));
    }
    if (name == "shrikhande") {
        args(0, 0);
        return shrikhande();
    }
    if (name == "rook") {
        auto v = args(1, 2);
        return rook(v[0], v.size() == 2 ? v[1] : v[0]);
    }
    if (name == "paley")
        return paley(args(1, 1)[0]);
    throw parameter_error("unknown generator '" + name + "'");
}

} // namespace qwalk::generators

#endif // QWALK_GENERATORS_HPP
