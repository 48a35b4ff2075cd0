#ifndef QWALK_ARC_SPACE_HPP
#define QWALK_ARC_SPACE_HPP

// Arc-indexed operators of the Grover-coin walk on a k-regular graph.
//
// The walk moves amplitude from arc j to arc i when head(j) = tail(i):
//
//     U = (2/k) outs^T ins - P
//
// with ins/outs the head/tail incidence matrices and P the arc reversal.
// Everything here is kept over the integers by scaling with k > 0, which
// leaves the sign pattern of every power of U unchanged.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qwalk/errors.hpp"
#include "qwalk/graph.hpp"
#include "qwalk/int_matrix.hpp"

namespace qwalk {

struct arc {
    vertex tail;
    vertex head;

    friend bool operator==(const arc&, const arc&) = default;
};

/// Canonical indexing of the nk arcs of a k-regular graph: for each edge
/// {u,v} (u < v) in lexicographic order, arc (u,v) then arc (v,u). Arc 2e
/// and arc 2e+1 are reverses of each other.
class arc_space {
public:
    /// Throws valency_error unless g is regular with k >= 1.
    explicit arc_space(graph g) : g_(std::move(g)) {
        auto k = is_regular(g_);
        if (!k)
            throw valency_error("arc space needs a regular graph");
        if (*k < 1)
            throw valency_error("arc space needs valency k >= 1, got k=0");
        k_ = *k;
        arcs_.reserve(2 * g_.size());
        for (auto [u, v] : g_.edges()) {
            arcs_.push_back({u, v});
            arcs_.push_back({v, u});
        }
    }

    const graph& underlying() const noexcept { return g_; }
    std::size_t order() const noexcept { return g_.order(); }
    std::size_t valency() const noexcept { return k_; }
    std::size_t size() const noexcept { return arcs_.size(); }
    const std::vector<arc>& arcs() const noexcept { return arcs_; }
    const arc& operator[](std::size_t i) const { return arcs_.at(i); }

    std::size_t reverse(std::size_t i) const noexcept { return i ^ 1u; }

private:
    graph g_;
    std::size_t k_ = 0;
    std::vector<arc> arcs_;
};

/// n x nk; column j has a single 1 in the row of head(j).
inline int_matrix ins_matrix(const arc_space& a) {
    int_matrix m(a.order(), a.size());
    for (std::size_t j = 0; j < a.size(); ++j)
        m(a[j].head, j) = 1;
    return m;
}

/// n x nk; column j has a single 1 in the row of tail(j).
inline int_matrix outs_matrix(const arc_space& a) {
    int_matrix m(a.order(), a.size());
    for (std::size_t j = 0; j < a.size(); ++j)
        m(a[j].tail, j) = 1;
    return m;
}

/// P(i,j) = 1 iff arc i is the reverse of arc j.
inline int_matrix reversal_matrix(const arc_space& a) {
    int_matrix m(a.size(), a.size());
    for (std::size_t j = 0; j < a.size(); ++j)
        m(a.reverse(j), j) = 1;
    return m;
}

/// outs^T ins: entry (i,j) is 1 iff tail(i) = head(j), i.e. arc i can
/// follow arc j. This is the adjacency matrix of the line digraph.
inline int_matrix line_digraph_matrix(const arc_space& a) {
    int_matrix m(a.size(), a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if (a[i].tail == a[j].head)
                m(i, j) = 1;
    return m;
}

/// W = kU = 2 outs^T ins - k P. Entries: 2 where arc i continues arc j
/// without backtracking, 2 - k where arc i reverses arc j, 0 elsewhere.
inline int_matrix scaled_transition_matrix(const arc_space& a) {
    int_matrix w = line_digraph_matrix(a);
    w *= big_int(2);
    const big_int k(a.valency());
    for (std::size_t j = 0; j < a.size(); ++j)
        w(a.reverse(j), j) -= k;
    return w;
}

/// kQ = 2 ins^T ins - k I. Entry (i,j) is 2 when arcs i and j share a head.
inline int_matrix scaled_reflection_q(const arc_space& a) {
    int_matrix q(a.size(), a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if (a[i].head == a[j].head)
                q(i, j) = 2;
    const big_int k(a.valency());
    for (std::size_t i = 0; i < a.size(); ++i)
        q(i, i) -= k;
    return q;
}

} // namespace qwalk

#endif // QWALK_ARC_SPACE_HPP
