#ifndef QWALK_GRAPH_HPP
#define QWALK_GRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qwalk/errors.hpp"
#include "qwalk/int_matrix.hpp"

namespace qwalk {

using vertex = std::size_t;
using edge = std::pair<vertex, vertex>;

/// Simple undirected graph on vertices 0..n-1.
///
/// Edges are stored normalized (u < v) and sorted, so two graphs with the
/// same labelled edge set compare equal.
class graph {
public:
    graph() = default;

    explicit graph(std::size_t n) : n_(n), adj_(n) {}

    /// Throws parameter_error on loops, duplicate edges or out-of-range endpoints.
    graph(std::size_t n, std::span<const edge> edges) : graph(n) {
        for (auto [u, v] : edges)
            add_edge(u, v);
        finalize();
    }

    graph(std::size_t n, std::initializer_list<edge> edges)
        : graph(n, std::span<const edge>(edges.begin(), edges.size())) {}

    std::size_t order() const noexcept { return n_; }
    std::size_t size() const noexcept { return edges_.size(); }
    const std::vector<edge>& edges() const noexcept { return edges_; }

    /// Sorted neighbour list of v.
    const std::vector<vertex>& neighbours(vertex v) const { return adj_.at(v); }
    std::size_t degree(vertex v) const { return adj_.at(v).size(); }

    bool adjacent(vertex u, vertex v) const {
        const auto& nb = adj_.at(u);
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    friend bool operator==(const graph& a, const graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    void add_edge(vertex u, vertex v) {
        if (u >= n_ || v >= n_)
            throw parameter_error("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") has an endpoint outside [0, " + std::to_string(n_) + ")");
        if (u == v)
            throw parameter_error("loop at vertex " + std::to_string(u));
        if (u > v)
            std::swap(u, v);
        edges_.emplace_back(u, v);
    }

    void finalize() {
        std::sort(edges_.begin(), edges_.end());
        auto dup = std::adjacent_find(edges_.begin(), edges_.end());
        if (dup != edges_.end())
            throw parameter_error("duplicate edge (" + std::to_string(dup->first) + "," +
                                  std::to_string(dup->second) + ")");
        for (auto [u, v] : edges_) {
            adj_[u].push_back(v);
            adj_[v].push_back(u);
        }
        for (auto& nb : adj_)
            std::sort(nb.begin(), nb.end());
    }

    std::size_t n_ = 0;
    std::vector<edge> edges_;
    std::vector<std::vector<vertex>> adj_;
};

/// Parameters (n, k, lambda, mu) of a strongly regular graph.
struct srg_params {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t lambda = 0;
    std::size_t mu = 0;

    /// k(k - lambda - 1) == (n - k - 1) mu
    bool feasible() const noexcept {
        const auto sn = static_cast<long long>(n), sk = static_cast<long long>(k);
        const auto sl = static_cast<long long>(lambda), sm = static_cast<long long>(mu);
        return sk * (sk - sl - 1) == (sn - sk - 1) * sm;
    }

    friend bool operator==(const srg_params&, const srg_params&) = default;
};

/// Common degree, or nullopt if degrees differ. The empty graph is 0-regular.
inline std::optional<std::size_t> is_regular(const graph& g) {
    if (g.order() == 0)
        return 0;
    const std::size_t k = g.degree(0);
    for (vertex v = 1; v < g.order(); ++v)
        if (g.degree(v) != k)
            return std::nullopt;
    return k;
}

inline bool is_connected(const graph& g) {
    if (g.order() == 0)
        return true;
    std::vector<bool> seen(g.order(), false);
    std::queue<vertex> todo;
    todo.push(0);
    seen[0] = true;
    std::size_t reached = 1;
    while (!todo.empty()) {
        vertex u = todo.front();
        todo.pop();
        for (vertex w : g.neighbours(u))
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                todo.push(w);
            }
    }
    return reached == g.order();
}

inline std::size_t common_neighbours(const graph& g, vertex u, vertex v) {
    const auto& a = g.neighbours(u);
    const auto& b = g.neighbours(v);
    std::size_t count = 0;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j)
            ++i;
        else if (*j < *i)
            ++j;
        else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

/// SRG parameters, or nullopt if g is not strongly regular.
///
/// Complete and edgeless graphs are rejected: one of lambda, mu would be
/// vacuous.
inline std::optional<srg_params> srg_parameters(const graph& g) {
    auto k = is_regular(g);
    if (!k)
        return std::nullopt;
    const std::size_t n = g.order();
    if (*k == 0 || *k + 1 == n)
        return std::nullopt;

    std::optional<std::size_t> lambda, mu;
    for (vertex u = 0; u < n; ++u)
        for (vertex v = u + 1; v < n; ++v) {
            auto& slot = g.adjacent(u, v) ? lambda : mu;
            std::size_t c = common_neighbours(g, u, v);
            if (!slot)
                slot = c;
            else if (*slot != c)
                return std::nullopt;
        }
    return srg_params{n, *k, *lambda, *mu};
}

/// Symmetric 0/1 adjacency matrix with zero diagonal.
inline int_matrix adjacency_matrix(const graph& g) {
    int_matrix a(g.order(), g.order());
    for (auto [u, v] : g.edges())
        a(u, v) = a(v, u) = 1;
    return a;
}

/// Image of g under the vertex map v -> perm[v].
inline graph relabel(const graph& g, std::span<const vertex> perm) {
    if (perm.size() != g.order())
        throw parameter_error("relabel: permutation length " + std::to_string(perm.size()) +
                              " does not match order " + std::to_string(g.order()));
    std::vector<bool> hit(perm.size(), false);
    for (vertex p : perm) {
        if (p >= perm.size() || hit[p])
            throw parameter_error("relabel: not a permutation");
        hit[p] = true;
    }
    std::vector<edge> out;
    out.reserve(g.size());
    for (auto [u, v] : g.edges())
        out.emplace_back(perm[u], perm[v]);
    return graph(g.order(), out);
}

/// Vertices of h are shifted by g.order().
inline graph disjoint_union(const graph& g, const graph& h) {
    std::vector<edge> out(g.edges());
    for (auto [u, v] : h.edges())
        out.emplace_back(u + g.order(), v + g.order());
    return graph(g.order() + h.order(), out);
}

} // namespace qwalk

#endif // QWALK_GRAPH_HPP
