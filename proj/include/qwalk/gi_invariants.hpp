#ifndef QWALK_GI_INVARIANTS_HPP
#define QWALK_GI_INVARIANTS_HPP

// Cospectrality of graphs under four matrix invariants: the adjacency
// matrix A, S+(U), S+(U^2) and S+(U^3). Two graphs are cospectral for an
// invariant when the characteristic polynomials agree exactly.
//
// Isomorphic graphs agree on all four. Agreement on all four says nothing
// about isomorphism.

#include <algorithm>
#include <array>
#include <atomic>
#include <cstddef>
#include <exception>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "qwalk/arc_space.hpp"
#include "qwalk/char_poly.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/graph.hpp"
#include "qwalk/graph6.hpp"
#include "qwalk/support_spectra.hpp"

namespace qwalk {

enum class invariant { adjacency, s1, s2, s3 };

inline constexpr std::array<invariant, 4> all_invariants{invariant::adjacency, invariant::s1, invariant::s2,
                                                         invariant::s3};

inline std::string_view to_string(invariant i) {
    switch (i) {
    case invariant::adjacency: return "A";
    case invariant::s1: return "S+(U)";
    case invariant::s2: return "S+(U^2)";
    case invariant::s3: return "S+(U^3)";
    }
    return "?";
}

/// Short machine name: "a", "s1", "s2", "s3".
inline std::string_view key(invariant i) {
    switch (i) {
    case invariant::adjacency: return "a";
    case invariant::s1: return "s1";
    case invariant::s2: return "s2";
    case invariant::s3: return "s3";
    }
    return "?";
}

struct invariant_profile {
    std::string id;
    std::size_t n = 0;
    std::size_t k = 0;
    std::array<char_polynomial, 4> charpoly;

    const char_polynomial& operator[](invariant i) const { return charpoly[static_cast<std::size_t>(i)]; }
};

/// All four characteristic polynomials. Throws hypothesis_error (prefixed
/// with the id) unless g is connected and regular with k >= 2.
inline invariant_profile profile(const graph& g, std::string id) {
    try {
        const std::size_t k = detail::require_connected_regular(g, 2);
        const arc_space a(g);
        const support_set s = compute_supports(a);
        invariant_profile p;
        p.id = id;
        p.n = g.order();
        p.k = k;
        p.charpoly = {char_poly(adjacency_matrix(g)), char_poly(s.s1), char_poly(s.s2), char_poly(s.s3)};
        return p;
    } catch (const hypothesis_error& e) {
        throw hypothesis_error(id + ": " + e.what());
    }
}

enum class verdict { cospectral, distinguished };

inline std::string_view to_string(verdict v) { return v == verdict::cospectral ? "cospectral" : "distinguished"; }

struct compare_report {
    std::pair<std::string, std::string> ids;
    std::array<verdict, 4> verdicts{};
    /// First invariant, in the order A, S+(U), S+(U^2), S+(U^3), that differs.
    std::optional<invariant> distinguishing;

    verdict operator[](invariant i) const { return verdicts[static_cast<std::size_t>(i)]; }
    bool all_cospectral() const { return !distinguishing.has_value(); }
};

inline compare_report compare(const invariant_profile& p, const invariant_profile& q) {
    compare_report r;
    r.ids = {p.id, q.id};
    for (invariant i : all_invariants) {
        // Graphs of different (n, k) always differ in degree or trace of the
        // A polynomial; the coefficient comparison covers that case too.
        const bool same = p.n == q.n && p.k == q.k && p[i] == q[i];
        r.verdicts[static_cast<std::size_t>(i)] = same ? verdict::cospectral : verdict::distinguished;
        if (!same && !r.distinguishing)
            r.distinguishing = i;
    }
    return r;
}

struct skipped_graph {
    std::string id;
    std::string reason;
};

struct batch_options {
    /// 0 means std::thread::hardware_concurrency().
    std::size_t threads = 0;
    /// Also report pairs whose (n, k) differ (always distinguished by A).
    bool include_cross_class = false;
};

struct batch_report {
    std::vector<compare_report> pairs;
    std::vector<skipped_graph> skipped;
};

/// Profiles every graph (in parallel), then compares all pairs within each
/// (n, k) class. Output order is lexicographic by id pair and independent
/// of scheduling.
inline batch_report batch_compare(const std::vector<labelled_graph>& corpus, const batch_options& opt = {}) {
    std::vector<std::optional<invariant_profile>> profiles(corpus.size());
    std::vector<std::string> failures(corpus.size());

    std::size_t workers = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min(workers, std::max<std::size_t>(corpus.size(), 1));
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < corpus.size();) {
            try {
                profiles[i] = profile(corpus[i].g, corpus[i].id);
            } catch (const hypothesis_error& e) {
                std::string_view why = e.what();
                const std::string prefix = corpus[i].id + ": ";
                if (why.starts_with(prefix))
                    why.remove_prefix(prefix.size());
                failures[i] = std::string(why);
            } catch (const valency_error& e) {
                failures[i] = e.what();
            }
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < workers; ++t)
            pool.emplace_back(work);
    }

    batch_report out;
    std::vector<const invariant_profile*> ok;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        if (profiles[i])
            ok.push_back(&*profiles[i]);
        else
            out.skipped.push_back({corpus[i].id, failures[i]});
    }
    std::sort(ok.begin(), ok.end(), [](auto* a, auto* b) { return a->id < b->id; });
    for (std::size_t i = 0; i < ok.size(); ++i)
        for (std::size_t j = i + 1; j < ok.size(); ++j) {
            const bool same_class = ok[i]->n == ok[j]->n && ok[i]->k == ok[j]->k;
            if (same_class || opt.include_cross_class)
                out.pairs.push_back(compare(*ok[i], *ok[j]));
        }
    return out;
}

} // namespace qwalk

#endif // QWALK_GI_INVARIANTS_HPP
