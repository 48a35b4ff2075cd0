#ifndef QWALK_CHAR_POLY_HPP
#define QWALK_CHAR_POLY_HPP

// Exact characteristic polynomials of integer matrices.
//
// char_poly runs the Berkowitz recurrence, which needs only ring operations,
// over Z/p for as many 31-bit primes as it takes to cover a Hadamard-type
// bound on the coefficients, then lifts by Chinese remaindering. Every
// coefficient of det(tI - M) is a signed sum of principal minors, so
//
//     |c_i| <= e_{n-i}(h_1, ..., h_n) <= prod_j (1 + h_j),
//
// where h_j is the Euclidean norm of row j. The result is exact.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <mutex>
#include <utility>
#include <vector>

#include "qwalk/errors.hpp"
#include "qwalk/int_matrix.hpp"
#include "qwalk/polynomial.hpp"

namespace qwalk {

/// det(tI - M), monic of degree dim(M); coefficient i multiplies t^i.
using char_polynomial = polynomial;

namespace detail {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1)
            r = mul_mod(r, b, m);
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    return r;
}

// Deterministic for n < 3,215,031,751.
inline bool is_prime_u32(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t p : {2u, 3u, 5u, 7u})
        if (n % p == 0)
            return n == p;
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2u, 3u, 5u, 7u}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness)
            return false;
    }
    return true;
}

/// i-th prime below 2^31, counting down.
inline std::uint32_t modulus(std::size_t i) {
    static std::mutex lock;
    static std::vector<std::uint32_t> primes;
    std::lock_guard guard(lock);
    std::uint64_t next = primes.empty() ? (std::uint64_t{1} << 31) - 1 : primes.back() - 2;
    while (primes.size() <= i) {
        while (!is_prime_u32(next))
            next -= 2;
        primes.push_back(static_cast<std::uint32_t>(next));
        next -= 2;
    }
    return primes[i];
}

inline std::uint32_t reduce(const big_int& x, std::uint32_t p) {
    big_int r = x % p;
    if (r < 0)
        r += p;
    return r.convert_to<std::uint32_t>();
}

inline double log2_big(const big_int& x) {
    if (x <= 0)
        return -INFINITY;
    const auto bits = boost::multiprecision::msb(x);
    if (bits < 1000)
        return std::log2(x.convert_to<double>());
    // x in [2^bits, 2^(bits+1))
    return static_cast<double>(bits) + 1.0;
}

/// Berkowitz over Z/p. Returns coefficients in descending order.
inline std::vector<std::uint64_t> berkowitz_mod(const std::vector<std::uint32_t>& dense,
                                                const std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>>& sparse,
                                                std::size_t n, std::uint64_t p) {
    auto neg = [p](std::uint64_t x) { return x == 0 ? 0 : p - x; };
    std::vector<std::uint64_t> poly{1};
    std::vector<std::uint64_t> q, v, w, next;
    for (std::size_t r = 0; r < n; ++r) {
        q.assign(r + 2, 0);
        q[0] = 1;
        q[1] = neg(dense[r * n + r]);
        v.resize(r);
        for (std::size_t i = 0; i < r; ++i)
            v[i] = dense[i * n + r];
        w.resize(r);
        for (std::size_t j = 0; j < r; ++j) {
            std::uint64_t acc = 0;
            for (std::size_t c = 0; c < r; ++c) {
                acc += dense[r * n + c] * v[c];
                if (acc >> 63)
                    acc %= p;
            }
            q[j + 2] = neg(acc % p);
            if (j + 1 == r)
                break;
            for (std::size_t i = 0; i < r; ++i) {
                std::uint64_t a = 0;
                for (auto [c, val] : sparse[i]) {
                    if (c >= r)
                        break;
                    a += std::uint64_t{val} * v[c];
                    if (a >> 63)
                        a %= p;
                }
                w[i] = a % p;
            }
            std::swap(v, w);
        }
        next.assign(r + 2, 0);
        for (std::size_t i = 0; i < r + 2; ++i) {
            std::uint64_t acc = 0;
            const std::size_t jmax = std::min(i, r);
            for (std::size_t j = (i > 1 + r ? i - 1 - r : 0); j <= jmax; ++j) {
                acc += q[i - j] * poly[j];
                if (acc >> 63)
                    acc %= p;
            }
            next[i] = acc % p;
        }
        std::swap(poly, next);
    }
    return poly;
}

} // namespace detail

/// log2 of a bound B with |c_i| <= B for every coefficient of det(tI - M).
template <class Int>
double char_poly_coefficient_bound_log2(const basic_int_matrix<Int>& m) {
    double bits = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        big_int sq = 0;
        for (const auto& x : m.row(i))
            sq += big_int(x) * big_int(x);
        if (sq == 0)
            continue;
        const double log_norm = 0.5 * detail::log2_big(sq);
        // log2(1 + h) <= 1 + max(0, log2 h)
        bits += log_norm < 40 ? std::log2(1.0 + std::exp2(log_norm)) : log_norm + 1e-9;
    }
    return bits;
}

/// Exact characteristic polynomial det(tI - M) of a square integer matrix.
template <class Int>
char_polynomial char_poly(const basic_int_matrix<Int>& m) {
    if (!m.square())
        throw dimension_error("char_poly: " + m.shape() + " is not square");
    const std::size_t n = m.rows();
    if (n == 0)
        return polynomial::constant(1);

    // Products of the chosen primes must exceed 2B + 1; two spare bits cover
    // rounding in the floating-point bound.
    const double need_bits = char_poly_coefficient_bound_log2(m) + 3.0;

    std::vector<big_int> value(n + 1, big_int(0));
    big_int modulus_product = 1;
    double covered_bits = 0;
    std::vector<std::uint32_t> dense(n * n);
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> sparse(n);

    for (std::size_t pi = 0; covered_bits < need_bits; ++pi) {
        const std::uint32_t p = detail::modulus(pi);
        for (std::size_t i = 0; i < n; ++i) {
            sparse[i].clear();
            for (std::size_t j = 0; j < n; ++j) {
                const std::uint32_t r = detail::reduce(big_int(m(i, j)), p);
                dense[i * n + j] = r;
                if (r != 0)
                    sparse[i].emplace_back(static_cast<std::uint32_t>(j), r);
            }
        }
        const auto desc = detail::berkowitz_mod(dense, sparse, n, p);

        // Garner step: value += M * ((r - value) * M^-1 mod p)
        const std::uint64_t m_mod = detail::reduce(modulus_product, p);
        const std::uint64_t m_inv = detail::pow_mod(m_mod, p - 2, p);
        for (std::size_t i = 0; i <= n; ++i) {
            const std::uint64_t r = desc[n - i];
            const std::uint64_t have = detail::reduce(value[i], p);
            const std::uint64_t delta = detail::mul_mod((r + p - have) % p, m_inv, p);
            if (delta != 0)
                value[i] += modulus_product * delta;
        }
        modulus_product *= p;
        covered_bits += std::log2(static_cast<double>(p));
    }

    const big_int half = modulus_product / 2;
    for (auto& v : value)
        if (v > half)
            v -= modulus_product;
    return polynomial(std::move(value));
}

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
template <class Int>
big_int determinant(const basic_int_matrix<Int>& m) {
    if (!m.square())
        throw dimension_error("determinant: " + m.shape() + " is not square");
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;
    std::vector<std::vector<big_int>> a(n, std::vector<big_int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = big_int(m(i, j));
    big_int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t s = k + 1;
            while (s < n && a[s][k] == 0)
                ++s;
            if (s == n)
                return 0;
            std::swap(a[k], a[s]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

} // namespace qwalk

#endif // QWALK_CHAR_POLY_HPP
