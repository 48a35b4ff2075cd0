#ifndef QWALK_VERIFICATION_HPP
#define QWALK_VERIFICATION_HPP

// Named exact checks over a single graph, grouped as
//
//   identities    incidence / reversal / transition-matrix identities
//   su-spectrum   char_poly(S+(U)) equals the closed-form S+(U) spectrum
//   su2-identity  S+(U^2) = S+(U)^2 + I (k > 2)
//   su2-spectrum  char_poly(S+(U^2)) equals the closed-form S+(U^2) spectrum
//   ihara         char_poly(S+(U)) = t^n phi_A((t^2+k-1)/t) (t^2-1)^(n(k-2)/2)
//
// A check whose hypotheses fail is reported as skipped, never as failed.

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qwalk/arc_space.hpp"
#include "qwalk/char_poly.hpp"
#include "qwalk/graph.hpp"
#include "qwalk/int_matrix.hpp"
#include "qwalk/support_spectra.hpp"

namespace qwalk {

enum class check_status { pass, fail, skipped };

inline std::string_view to_string(check_status s) {
    switch (s) {
    case check_status::pass: return "pass";
    case check_status::fail: return "fail";
    case check_status::skipped: return "skipped";
    }
    return "?";
}

struct check_result {
    std::string graph_id;
    std::string check;
    check_status status = check_status::pass;
    std::string detail;
};

inline const std::vector<std::string>& check_groups() {
    static const std::vector<std::string> groups{"identities", "su-spectrum", "su2-identity", "su2-spectrum", "ihara"};
    return groups;
}

namespace detail {

/// Lazily computed matrices shared by the checks on one graph.
class check_context {
public:
    explicit check_context(const graph& g) : g_(g), k_(is_regular(g)), connected_(is_connected(g)) {
        if (k_ && *k_ >= 1)
            arcs_.emplace(g);
    }

    const graph& g() const { return g_; }
    std::optional<std::size_t> k() const { return k_; }
    bool connected() const { return connected_; }
    const arc_space& arcs() const { return *arcs_; }
    bool has_arcs() const { return arcs_.has_value(); }

    const int_matrix& adj() { return cached(adj_, [&] { return adjacency_matrix(g_); }); }
    const int_matrix& ins() { return cached(ins_, [&] { return ins_matrix(*arcs_); }); }
    const int_matrix& outs() { return cached(outs_, [&] { return outs_matrix(*arcs_); }); }
    const int_matrix& rev() { return cached(rev_, [&] { return reversal_matrix(*arcs_); }); }
    const int_matrix& w() { return cached(w_, [&] { return scaled_transition_matrix(*arcs_); }); }
    const int_matrix& kq() { return cached(kq_, [&] { return scaled_reflection_q(*arcs_); }); }
    const int_matrix& s1() { return cached(s1_, [&] { return support_u(*arcs_); }); }
    const int_matrix& s2() { return cached(s2_, [&] { return support_u_power(*arcs_, 2); }); }

private:
    template <class F>
    const int_matrix& cached(std::optional<int_matrix>& slot, F make) {
        if (!slot)
            slot = make();
        return *slot;
    }

    const graph& g_;
    std::optional<std::size_t> k_;
    bool connected_;
    std::optional<arc_space> arcs_;
    std::optional<int_matrix> adj_, ins_, outs_, rev_, w_, kq_, s1_, s2_;
};

inline int_matrix scalar_identity(std::size_t n, long long c) {
    int_matrix m = int_matrix::identity(n);
    m *= big_int(c);
    return m;
}

inline std::vector<check_result> identity_checks(check_context& c, const std::string& id) {
    std::vector<check_result> out;
    auto record = [&](std::string name, bool ok) {
        out.push_back({id, "identities:" + std::move(name), ok ? check_status::pass : check_status::fail, ""});
    };
    auto skip = [&](std::string name, std::string why) {
        out.push_back({id, "identities:" + std::move(name), check_status::skipped, std::move(why)});
    };
    if (!c.has_arcs()) {
        skip("all", c.k() ? "hypothesis k >= 1" : "hypothesis: regular graph");
        return out;
    }
    const auto k = static_cast<long long>(*c.k());
    const std::size_t n = c.g().order();
    const std::size_t nk = c.arcs().size();
    const int_matrix ins_t = c.ins().transpose();
    const int_matrix outs_t = c.outs().transpose();

    record("ins*outs^T=A", mat_mul(c.ins(), outs_t) == c.adj());
    record("outs*outs^T=kI", mat_mul(c.outs(), outs_t) == scalar_identity(n, k));
    record("ins*ins^T=kI", mat_mul(c.ins(), ins_t) == scalar_identity(n, k));
    record("P^2=I", mat_mul(c.rev(), c.rev()) == int_matrix::identity(nk));
    record("P*ins^T=outs^T", mat_mul(c.rev(), ins_t) == outs_t);
    record("P*outs^T=ins^T", mat_mul(c.rev(), outs_t) == ins_t);
    record("W*W^T=k^2I", mat_mul(c.w(), c.w().transpose()) == scalar_identity(nk, k * k));
    record("(kQ)^2=k^2I", mat_mul(c.kq(), c.kq()) == scalar_identity(nk, k * k));
    record("trace(W)=0", c.w().trace() == 0);
    if (k < 2) {
        for (const char* name : {"S1*ins^T=(k-1)outs^T", "S1*outs^T=outs^T*A-ins^T", "2*S1=P(kQ+(k-2)I)"})
            skip(name, "hypothesis k >= 2");
        return out;
    }
    record("S1*ins^T=(k-1)outs^T", mat_mul(c.s1(), ins_t) == big_int(k - 1) * outs_t);
    record("S1*outs^T=outs^T*A-ins^T", mat_mul(c.s1(), outs_t) == mat_mul(outs_t, c.adj()) - ins_t);
    record("2*S1=P(kQ+(k-2)I)",
           big_int(2) * c.s1() == mat_mul(c.rev(), c.kq() + scalar_identity(nk, k - 2)));
    return out;
}

} // namespace detail

/// Runs the requested check groups ("all" expands to every group).
inline std::vector<check_result> run_checks(const graph& g, const std::string& id, std::vector<std::string> groups) {
    if (std::find(groups.begin(), groups.end(), "all") != groups.end())
        groups = check_groups();
    for (const auto& name : groups)
        if (std::find(check_groups().begin(), check_groups().end(), name) == check_groups().end())
            throw parameter_error("unknown check '" + name + "'");

    detail::check_context c(g);
    std::vector<check_result> out;
    const auto k = c.k();
    auto single = [&](const std::string& name, bool ok, std::string detail = {}) {
        out.push_back({id, name, ok ? check_status::pass : check_status::fail, std::move(detail)});
    };
    auto skipped = [&](const std::string& name, std::string why) {
        out.push_back({id, name, check_status::skipped, std::move(why)});
    };
    auto hypothesis = [&](std::size_t min_k) -> std::optional<std::string> {
        if (!k)
            return "hypothesis: regular graph";
        if (*k < min_k)
            return "k=" + std::to_string(*k) + ": hypothesis k" + (min_k == 3 ? ">2" : ">=" + std::to_string(min_k));
        if (!c.connected())
            return "hypothesis: connected graph";
        return std::nullopt;
    };

    for (const auto& name : check_groups()) {
        if (std::find(groups.begin(), groups.end(), name) == groups.end())
            continue;
        if (name == "identities") {
            auto r = detail::identity_checks(c, id);
            out.insert(out.end(), r.begin(), r.end());
        } else if (name == "su-spectrum") {
            if (auto why = hypothesis(2)) {
                skipped(name, *why);
                continue;
            }
            const auto spec = closed_form_spectrum_su(g);
            single(name, char_poly(c.s1()) == spec.expanded_polynomial() && spec.trace() == 0 &&
                             spec.total_multiplicity() == c.arcs().size());
        } else if (name == "su2-identity") {
            // Only the k > 2 hypothesis applies; connectivity is not needed.
            if (!k) {
                skipped(name, "hypothesis: regular graph");
                continue;
            }
            if (*k <= 2) {
                skipped(name, "k=" + std::to_string(*k) + ": hypothesis k>2");
                continue;
            }
            single(name, c.s2() == su2_via_identity(c.arcs()));
        } else if (name == "su2-spectrum") {
            if (auto why = hypothesis(3)) {
                skipped(name, *why);
                continue;
            }
            const auto spec = closed_form_spectrum_su2(g);
            single(name, char_poly(c.s2()) == spec.expanded_polynomial() &&
                             spec.trace() == big_rational(c.s2().trace()));
        } else if (name == "ihara") {
            if (auto why = hypothesis(2)) {
                skipped(name, *why);
                continue;
            }
            single(name, char_poly(c.s1()) == ihara_polynomial(char_poly(c.adj()), g.order(), *k));
        }
    }
    return out;
}

} // namespace qwalk

#endif // QWALK_VERIFICATION_HPP
