#ifndef QWALK_SUPPORT_SPECTRA_HPP
#define QWALK_SUPPORT_SPECTRA_HPP

// Positive supports of powers of the walk operator and the closed-form
// spectra of S+(U) and S+(U^2) on connected k-regular graphs.
//
// For k >= 2, S+(U) = outs^T ins - P is the non-backtracking (Hashimoto)
// matrix. Its spectrum is
//
//   k - 1                                   once
//   (lambda +- sqrt(lambda^2 - 4(k-1))) / 2  for each adjacency eigenvalue
//                                           lambda != k (with multiplicity)
//   1                                       n(k-2)/2 + 1 times
//   -1                                      n(k-2)/2 times
//
// and for k > 2, S+(U^2) = S+(U)^2 + I, so each eigenvalue theta of S+(U)
// becomes theta^2 + 1. The multiplicities above are the ones forced by the
// dimension count nk and by trace(S+(U)) = 0.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qwalk/arc_space.hpp"
#include "qwalk/char_poly.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/graph.hpp"
#include "qwalk/int_matrix.hpp"
#include "qwalk/numeric.hpp"
#include "qwalk/polynomial.hpp"

namespace qwalk {

using big_rational = boost::multiprecision::cpp_rational;

namespace detail {

inline void require_nonbacktracking_valency(const arc_space& a) {
    if (a.valency() < 2)
        throw valency_error("k=" + std::to_string(a.valency()) + ": positive support of U needs k >= 2");
}

inline std::size_t require_connected_regular(const graph& g, std::size_t min_k) {
    auto k = is_regular(g);
    if (!k)
        throw hypothesis_error("graph is not regular");
    if (*k < min_k)
        throw hypothesis_error("k=" + std::to_string(*k) + ": " +
                               (min_k > 2 ? "S+(U^2) = S+(U)^2 + I, and its closed form, require k > 2"
                                          : "closed form requires k >= " + std::to_string(min_k)));
    if (!is_connected(g))
        throw hypothesis_error("graph is not connected");
    return *k;
}

inline const polynomial& t_poly() {
    static const polynomial t{0, 1};
    return t;
}

} // namespace detail

/// S+(U) = outs^T ins - P.
inline int_matrix support_u(const arc_space& a) {
    detail::require_nonbacktracking_valency(a);
    return line_digraph_matrix(a) - reversal_matrix(a);
}

/// S+(U^m), read off the signs of W^m = (kU)^m.
inline int_matrix support_u_power(const arc_space& a, unsigned m) {
    detail::require_nonbacktracking_valency(a);
    if (m < 1)
        throw parameter_error("support_u_power: exponent must be at least 1");
    return positive_support(mat_pow(scaled_transition_matrix(a), m));
}

/// S+(U)^2 + I. Valid as S+(U^2) only for k > 2: at k = 2 the entries that
/// pass through a reversal vanish instead of turning negative.
inline int_matrix su2_via_identity(const arc_space& a) {
    if (a.valency() <= 2)
        throw hypothesis_error("k=" + std::to_string(a.valency()) +
                               ": S+(U^2) = S+(U)^2 + I requires k > 2");
    const int_matrix s = support_u(a);
    return mat_mul(s, s) + int_matrix::identity(a.size());
}

/// S+(U), S+(U^2), S+(U^3).
struct support_set {
    int_matrix s1;
    int_matrix s2;
    int_matrix s3;
};

inline support_set compute_supports(const arc_space& a) {
    detail::require_nonbacktracking_valency(a);
    const int_matrix w = scaled_transition_matrix(a);
    const int_matrix w2 = mat_mul(w, w);
    return {support_u(a), positive_support(w2), positive_support(mat_mul(w2, w))};
}

/// An eigenvalue known as an exact rational.
struct rational_eigenvalue {
    big_rational value;
    std::size_t multiplicity = 0;
};

/// The two roots of t^2 - lambda t + (k - 1), or, when `squared`, their
/// images under theta -> theta^2 + 1. `lambda` is exact when integral;
/// otherwise only the floating-point value is held and the exact content
/// lives in closed_form_spectrum::irrational_lambdas.
struct quadratic_pair {
    std::optional<big_int> lambda_exact;
    double lambda = 0;
    std::size_t k = 0;
    std::size_t multiplicity = 0;
    bool squared = false;

    bool exact() const noexcept { return lambda_exact.has_value(); }

    /// Sum and product of the two roots (exact pairs only).
    big_int root_sum() const {
        const big_int l = exact_lambda();
        const big_int kk(k);
        return squared ? big_int(l * l - 2 * kk + 4) : l;
    }
    big_int root_product() const {
        const big_int l = exact_lambda();
        const big_int kk(k);
        return squared ? big_int(l * l + (kk - 2) * (kk - 2)) : big_int(kk - 1);
    }

    /// Monic quadratic whose roots are this pair (exact pairs only).
    polynomial quadratic() const { return polynomial{root_product(), -root_sum(), 1}; }

    /// Discriminant sign of the underlying theta pair: true when the roots
    /// are a non-real conjugate pair, i.e. lambda^2 < 4(k - 1).
    bool complex_pair() const {
        if (exact()) {
            const big_int l = *lambda_exact;
            return l * l < 4 * (big_int(k) - 1);
        }
        return lambda * lambda < 4.0 * (static_cast<double>(k) - 1);
    }

    /// lambda^2 = 4(k - 1): both roots coincide.
    bool double_root() const {
        if (exact()) {
            const big_int l = *lambda_exact;
            return l * l == 4 * (big_int(k) - 1);
        }
        return false;
    }

    std::pair<std::complex<double>, std::complex<double>> roots() const {
        const double l = exact() ? lambda_exact->convert_to<double>() : lambda;
        const std::complex<double> disc(l * l - 4.0 * (static_cast<double>(k) - 1), 0.0);
        const std::complex<double> root = std::sqrt(disc);
        std::complex<double> a = (l + root) / 2.0;
        std::complex<double> b = (l - root) / 2.0;
        if (squared) {
            a = a * a + 1.0;
            b = b * b + 1.0;
        }
        return {a, b};
    }

private:
    const big_int& exact_lambda() const {
        if (!lambda_exact)
            throw contract_error("quadratic pair has an irrational lambda");
        return *lambda_exact;
    }
};

/// Closed-form spectrum of S+(U) (or of S+(U^2) when `squared`).
///
/// Adjacency eigenvalues that are not integers are carried exactly by
/// `irrational_lambdas`, the monic factor of the adjacency characteristic
/// polynomial whose roots they are; the matching `pairs` entries hold their
/// numeric values for reporting.
struct closed_form_spectrum {
    std::size_t n = 0;
    std::size_t k = 0;
    bool squared = false;
    std::vector<rational_eigenvalue> rationals;
    std::vector<quadratic_pair> pairs;
    polynomial irrational_lambdas = polynomial::constant(1);

    std::size_t total_multiplicity() const {
        std::size_t total = 0;
        for (const auto& r : rationals)
            total += r.multiplicity;
        for (const auto& p : pairs)
            total += 2 * p.multiplicity;
        return total;
    }

    /// Fully expanded characteristic polynomial implied by the closed form.
    polynomial expanded_polynomial() const {
        const polynomial& t = detail::t_poly();
        polynomial out = polynomial::constant(1);
        for (const auto& r : rationals) {
            const big_int num = numerator(r.value);
            const big_int den = denominator(r.value);
            out *= poly_pow(polynomial{-num, den}, r.multiplicity);
        }
        for (const auto& p : pairs)
            if (p.exact())
                out *= poly_pow(p.quadratic(), p.multiplicity);
        if (irrational_lambdas.degree() > 0) {
            const big_int kk(k);
            if (!squared) {
                // prod (t^2 - lambda t + (k-1)) = homogenized g at (t^2 + k - 1, t)
                out *= homogeneous_substitute(irrational_lambdas, t * t + polynomial::constant(kk - 1), t);
            } else {
                // prod ((t + k - 2)^2 - lambda^2 (t - 1)), via h(z) = prod (z - lambda^2)
                const polynomial h = squared_roots(irrational_lambdas);
                const polynomial shift = t + polynomial::constant(kk - 2);
                out *= homogeneous_substitute(h, shift * shift, t - polynomial::constant(1));
            }
        }
        return out;
    }

    /// Exact sum of all eigenvalues with multiplicity.
    big_rational trace() const {
        big_rational s = 0;
        for (const auto& r : rationals)
            s += r.value * static_cast<unsigned long long>(r.multiplicity);
        for (const auto& p : pairs)
            if (p.exact())
                s += big_rational(p.root_sum()) * static_cast<unsigned long long>(p.multiplicity);
        const long d = irrational_lambdas.degree();
        if (d > 0) {
            const big_int e1 = -irrational_lambdas[static_cast<std::size_t>(d - 1)];
            if (!squared) {
                s += e1;
            } else {
                const big_int e2 = d >= 2 ? irrational_lambdas[static_cast<std::size_t>(d - 2)] : big_int(0);
                s += e1 * e1 - 2 * e2 + big_int(d) * (4 - 2 * big_int(k));
            }
        }
        return s;
    }

    /// Numeric eigenvalues with multiplicity.
    std::vector<std::complex<double>> eigenvalues() const {
        std::vector<std::complex<double>> out;
        for (const auto& r : rationals)
            out.insert(out.end(), r.multiplicity, std::complex<double>(r.value.convert_to<double>(), 0));
        for (const auto& p : pairs) {
            auto [a, b] = p.roots();
            for (std::size_t i = 0; i < p.multiplicity; ++i) {
                out.push_back(a);
                out.push_back(b);
            }
        }
        return out;
    }

    /// Spectrum after theta -> theta^2 + 1.
    closed_form_spectrum squared_image() const {
        if (squared)
            throw contract_error("closed_form_spectrum: already squared");
        closed_form_spectrum out = *this;
        out.squared = true;
        out.rationals.clear();
        for (const auto& r : rationals) {
            const big_rational v = r.value * r.value + 1;
            auto it = std::find_if(out.rationals.begin(), out.rationals.end(),
                                   [&](const rational_eigenvalue& e) { return e.value == v; });
            if (it != out.rationals.end())
                it->multiplicity += r.multiplicity;
            else
                out.rationals.push_back({v, r.multiplicity});
        }
        for (auto& p : out.pairs)
            p.squared = true;
        return out;
    }

    /// h with h(z) = prod (z - r^2) over the roots r of g.
    static polynomial squared_roots(const polynomial& g) {
        // g(z) g(-z) = (-1)^d prod (z^2 - r^2)
        const polynomial gg = g * g.reflect();
        const auto d = static_cast<std::size_t>(g.degree());
        std::vector<big_int> h(d + 1);
        for (std::size_t i = 0; i <= d; ++i)
            h[i] = (d % 2 ? big_int(-gg[2 * i]) : gg[2 * i]);
        return polynomial(std::move(h));
    }
};

/// Integer roots of a monic integer polynomial within [-bound, bound],
/// deflated exactly. Returns (root, multiplicity) in descending root order
/// and leaves the cofactor in `rest`.
inline std::vector<std::pair<long long, std::size_t>> extract_integer_roots(const polynomial& p, long long bound,
                                                                             polynomial& rest) {
    std::vector<std::pair<long long, std::size_t>> roots;
    rest = p;
    for (long long r = bound; r >= -bound; --r) {
        std::size_t m = 0;
        while (rest.degree() > 0) {
            auto q = try_divide_exact(rest, polynomial::linear_root(big_int(r)));
            if (!q)
                break;
            rest = *std::move(q);
            ++m;
        }
        if (m > 0)
            roots.emplace_back(r, m);
    }
    return roots;
}

/// Closed-form spectrum of S+(U) for a connected k-regular graph, k >= 2.
inline closed_form_spectrum closed_form_spectrum_su(const graph& g) {
    const std::size_t k = detail::require_connected_regular(g, 2);
    const std::size_t n = g.order();
    const int_matrix adj = adjacency_matrix(g);
    const polynomial phi = char_poly(adj);

    polynomial rest;
    const auto integral = extract_integer_roots(phi, static_cast<long long>(k), rest);

    closed_form_spectrum s;
    s.n = n;
    s.k = k;
    s.irrational_lambdas = rest;

    std::size_t top_multiplicity = 0;
    for (auto [l, m] : integral)
        if (l == static_cast<long long>(k))
            top_multiplicity = m;
    if (top_multiplicity != 1)
        throw hypothesis_error("eigenvalue k of the adjacency matrix is not simple");

    s.rationals.push_back({big_rational(k - 1), 1});
    for (auto [l, m] : integral)
        if (l != static_cast<long long>(k))
            s.pairs.push_back({big_int(l), static_cast<double>(l), k, m, false});

    if (rest.degree() > 0) {
        // Numeric values of the irrational eigenvalues: drop the integral ones
        // from the Jacobi spectrum, then cluster what is left.
        std::vector<double> ev = symmetric_eigenvalues(adj);
        for (auto [l, m] : integral)
            for (std::size_t i = 0; i < m; ++i) {
                auto nearest = std::min_element(ev.begin(), ev.end(), [l = static_cast<double>(l)](double a, double b) {
                    return std::abs(a - l) < std::abs(b - l);
                });
                ev.erase(nearest);
            }
        if (ev.size() != static_cast<std::size_t>(rest.degree()))
            throw contract_error("closed_form_spectrum_su: numeric and exact eigenvalue counts disagree");
        std::size_t i = 0;
        while (i < ev.size()) {
            std::size_t j = i + 1;
            double sum = ev[i];
            while (j < ev.size() && ev[j] - ev[j - 1] < 1e-6)
                sum += ev[j++];
            s.pairs.push_back({std::nullopt, sum / static_cast<double>(j - i), k, j - i, false});
            i = j;
        }
    }

    const std::size_t half = n * (k - 2) / 2;
    s.rationals.push_back({big_rational(1), half + 1});
    if (half > 0)
        s.rationals.push_back({big_rational(-1), half});
    return s;
}

/// Closed-form spectrum of S+(U^2) for a connected k-regular graph, k > 2.
inline closed_form_spectrum closed_form_spectrum_su2(const graph& g) {
    detail::require_connected_regular(g, 3);
    return closed_form_spectrum_su(g).squared_image();
}

/// t^n phi((t^2 + k - 1)/t) * (t^2 - 1)^(n(k-2)/2), from the adjacency
/// characteristic polynomial phi of a k-regular graph on n vertices.
inline polynomial ihara_polynomial(const polynomial& phi, std::size_t n, std::size_t k) {
    const polynomial& t = detail::t_poly();
    const polynomial x = t * t + polynomial::constant(big_int(k) - 1);
    const polynomial tail = t * t - polynomial::constant(1);
    return homogeneous_substitute(phi, x, t) * poly_pow(tail, n * (k - 2) / 2);
}

/// char_poly(S+(U)) == ihara_polynomial(char_poly(A), n, k), exactly.
inline bool char_poly_identity_check(const graph& g) {
    const std::size_t k = detail::require_connected_regular(g, 2);
    const arc_space a(g);
    return char_poly(support_u(a)) == ihara_polynomial(char_poly(adjacency_matrix(g)), g.order(), k);
}

} // namespace qwalk

#endif // QWALK_SUPPORT_SPECTRA_HPP
