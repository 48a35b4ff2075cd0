#ifndef QWALK_NUMERIC_HPP
#define QWALK_NUMERIC_HPP

// Floating-point companions to the exact layer: symmetric eigenvalues,
// polynomial roots, and multiset matching of complex spectra.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <vector>

#include "qwalk/errors.hpp"
#include "qwalk/int_matrix.hpp"
#include "qwalk/polynomial.hpp"

namespace qwalk {

/// Cyclic Jacobi sweeps until the off-diagonal Frobenius norm drops below
/// rel_tol times the initial Frobenius norm. Ascending, with multiplicity.
inline std::vector<double> symmetric_eigenvalues(std::vector<std::vector<double>> a, double rel_tol = 1e-12) {
    const std::size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n)
            throw dimension_error("symmetric_eigenvalues: matrix is not square");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (a[i][j] != a[j][i])
                throw contract_error("symmetric_eigenvalues: matrix is not symmetric");

    auto off_norm = [&] {
        double s = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j)
                    s += a[i][j] * a[i][j];
        return std::sqrt(s);
    };
    double frob = 0;
    for (const auto& row : a)
        for (double x : row)
            frob += x * x;
    frob = std::sqrt(frob);
    const double target = rel_tol * frob;

    for (int sweep = 0; sweep < 100 && off_norm() > target; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                if (a[p][q] == 0)
                    continue;
                const double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                const double c = 1 / std::sqrt(t * t + 1);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                a[p][q] = a[q][p] = 0;
            }
    }
    std::vector<double> ev(n);
    for (std::size_t i = 0; i < n; ++i)
        ev[i] = a[i][i];
    std::sort(ev.begin(), ev.end());
    return ev;
}

template <class Int>
std::vector<double> symmetric_eigenvalues(const basic_int_matrix<Int>& m, double rel_tol = 1e-12) {
    if (!m.square())
        throw dimension_error("symmetric_eigenvalues: " + m.shape() + " is not square");
    if (!m.symmetric())
        throw contract_error("symmetric_eigenvalues: matrix is not symmetric");
    std::vector<std::vector<double>> a(m.rows(), std::vector<double>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            a[i][j] = big_int(m(i, j)).template convert_to<double>();
    return symmetric_eigenvalues(std::move(a), rel_tol);
}

namespace detail {

using cld = std::complex<long double>;

inline std::vector<cld> aberth_roots(const polynomial& f) {
    const auto d = static_cast<std::size_t>(f.degree());
    std::vector<long double> c(d + 1);
    const long double lead = f.leading().convert_to<long double>();
    for (std::size_t i = 0; i <= d; ++i)
        c[i] = f[i].convert_to<long double>() / lead;
    if (d == 1)
        return {cld(-c[0], 0)};

    long double radius = 0;
    for (std::size_t i = 0; i < d; ++i)
        radius = std::max(radius, std::abs(c[i]));
    radius = 1 + radius;

    std::vector<cld> z(d);
    for (std::size_t i = 0; i < d; ++i) {
        const long double ang = 2 * std::numbers::pi_v<long double> * i / d + 0.4L;
        z[i] = std::polar(radius * 0.5L, ang);
    }

    auto eval = [&](cld x, cld& deriv) {
        cld p = c[d];
        deriv = 0;
        for (std::size_t i = d; i-- > 0;) {
            deriv = deriv * x + p;
            p = p * x + c[i];
        }
        return p;
    };

    for (int iter = 0; iter < 2000; ++iter) {
        long double worst = 0;
        for (std::size_t i = 0; i < d; ++i) {
            cld dp;
            const cld p = eval(z[i], dp);
            if (p == cld(0))
                continue;
            const cld ratio = p / dp;
            cld repel = 0;
            for (std::size_t j = 0; j < d; ++j)
                if (j != i)
                    repel += cld(1) / (z[i] - z[j]);
            const cld step = ratio / (cld(1) - ratio * repel);
            z[i] -= step;
            worst = std::max(worst, std::abs(step) / std::max<long double>(1, std::abs(z[i])));
        }
        if (worst < 1e-17L)
            break;
    }
    return z;
}

} // namespace detail

/// Complex roots of p with multiplicity. Repeated roots are separated
/// exactly by square-free decomposition before any floating-point work.
inline std::vector<std::complex<double>> polynomial_roots(const polynomial& p) {
    std::vector<std::complex<double>> out;
    if (p.degree() < 1)
        return out;
    const auto parts = square_free_decomposition(p);
    for (std::size_t m = 0; m < parts.size(); ++m) {
        if (parts[m].degree() < 1)
            continue;
        for (const auto& z : detail::aberth_roots(parts[m])) {
            std::complex<double> r(static_cast<double>(z.real()), static_cast<double>(z.imag()));
            for (std::size_t rep = 0; rep <= m; ++rep)
                out.push_back(r);
        }
    }
    std::sort(out.begin(), out.end(), [](auto a, auto b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    return out;
}

/// Largest pairwise distance under the assignment between a and b that
/// minimizes total distance (Hungarian algorithm). Sizes must agree.
inline double match_spectra(const std::vector<std::complex<double>>& a, const std::vector<std::complex<double>>& b) {
    if (a.size() != b.size())
        throw dimension_error("match_spectra: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()) +
                              " values");
    const std::size_t n = a.size();
    if (n == 0)
        return 0;
    const double inf = std::numeric_limits<double>::infinity();
    // 1-based potentials formulation
    std::vector<double> u(n + 1, 0), v(n + 1, 0);
    std::vector<std::size_t> match(n + 1, 0), way(n + 1, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        match[0] = i;
        std::size_t j0 = 0;
        std::vector<double> minv(n + 1, inf);
        std::vector<bool> used(n + 1, false);
        do {
            used[j0] = true;
            const std::size_t i0 = match[j0];
            double delta = inf;
            std::size_t j1 = 0;
            for (std::size_t j = 1; j <= n; ++j) {
                if (used[j])
                    continue;
                const double cur = std::abs(a[i0 - 1] - b[j - 1]) - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (std::size_t j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[match[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (match[j0] != 0);
        do {
            const std::size_t j1 = way[j0];
            match[j0] = match[j1];
            j0 = j1;
        } while (j0);
    }
    double worst = 0;
    for (std::size_t j = 1; j <= n; ++j)
        worst = std::max(worst, std::abs(a[match[j] - 1] - b[j - 1]));
    return worst;
}

} // namespace qwalk

#endif // QWALK_NUMERIC_HPP
