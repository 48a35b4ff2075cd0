#ifndef QWALK_POLYNOMIAL_HPP
#define QWALK_POLYNOMIAL_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qwalk/errors.hpp"

namespace qwalk {

using big_int = boost::multiprecision::cpp_int;

/// Univariate polynomial over the integers, coefficient i multiplies t^i.
///
/// Always normalized: no trailing zero coefficients, and the zero
/// polynomial has no coefficients (degree -1).
class polynomial {
public:
    polynomial() = default;
    polynomial(std::initializer_list<big_int> c) : c_(c) { trim(); }
    explicit polynomial(std::vector<big_int> c) : c_(std::move(c)) { trim(); }

    static polynomial constant(big_int v) { return polynomial(std::vector<big_int>{std::move(v)}); }
    /// t - root
    static polynomial linear_root(const big_int& root) { return polynomial{-root, 1}; }
    static polynomial monomial(std::size_t degree, big_int coeff = 1) {
        std::vector<big_int> c(degree + 1);
        c[degree] = std::move(coeff);
        return polynomial(std::move(c));
    }

    bool is_zero() const noexcept { return c_.empty(); }
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    const std::vector<big_int>& coefficients() const noexcept { return c_; }

    /// Coefficient of t^i (zero beyond the degree).
    big_int operator[](std::size_t i) const { return i < c_.size() ? c_[i] : big_int(0); }
    const big_int& leading() const {
        if (c_.empty())
            throw contract_error("leading coefficient of the zero polynomial");
        return c_.back();
    }
    bool monic() const { return !c_.empty() && c_.back() == 1; }

    friend bool operator==(const polynomial&, const polynomial&) = default;

    polynomial& operator+=(const polynomial& o) {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] += o.c_[i];
        trim();
        return *this;
    }
    polynomial& operator-=(const polynomial& o) {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    polynomial& operator*=(const big_int& s) {
        for (auto& x : c_)
            x *= s;
        trim();
        return *this;
    }

    friend polynomial operator+(polynomial a, const polynomial& b) { return a += b; }
    friend polynomial operator-(polynomial a, const polynomial& b) { return a -= b; }
    friend polynomial operator-(polynomial a) {
        for (auto& x : a.c_)
            x = -x;
        return a;
    }
    friend polynomial operator*(const big_int& s, polynomial a) { return a *= s; }

    friend polynomial operator*(const polynomial& a, const polynomial& b) {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<big_int> out(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0)
                continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                out[i + j] += a.c_[i] * b.c_[j];
        }
        return polynomial(std::move(out));
    }
    polynomial& operator*=(const polynomial& o) { return *this = *this * o; }

    big_int evaluate(const big_int& x) const {
        big_int acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * x + *it;
        return acc;
    }

    polynomial derivative() const {
        if (c_.size() <= 1)
            return {};
        std::vector<big_int> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i)
            d[i - 1] = c_[i] * static_cast<unsigned long long>(i);
        return polynomial(std::move(d));
    }

    /// p(-t)
    polynomial reflect() const {
        polynomial r = *this;
        for (std::size_t i = 1; i < r.c_.size(); i += 2)
            r.c_[i] = -r.c_[i];
        return r;
    }

    /// Human-readable form in descending powers, e.g. "t^3 - 3*t - 2".
    std::string to_string(const char* var = "t") const {
        if (c_.empty())
            return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t k = c_.size(); k-- > 0;) {
            const big_int& a = c_[k];
            if (a == 0)
                continue;
            big_int mag = a < 0 ? big_int(-a) : a;
            if (first)
                os << (a < 0 ? "-" : "");
            else
                os << (a < 0 ? " - " : " + ");
            first = false;
            if (k == 0 || mag != 1)
                os << mag << (k > 0 ? "*" : "");
            if (k >= 1)
                os << var;
            if (k >= 2)
                os << '^' << k;
        }
        return os.str();
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0)
            c_.pop_back();
    }

    std::vector<big_int> c_;
};

inline std::ostream& operator<<(std::ostream& os, const polynomial& p) { return os << p.to_string(); }

inline polynomial poly_mul(const polynomial& a, const polynomial& b) { return a * b; }

inline bool poly_equal(const polynomial& a, const polynomial& b) { return a == b; }

inline polynomial poly_pow(polynomial base, std::size_t e) {
    polynomial r = polynomial::constant(1);
    while (e > 0) {
        if (e & 1)
            r *= base;
        e >>= 1;
        if (e)
            base *= base;
    }
    return r;
}

/// Quotient over the integers if q divides p exactly, otherwise nullopt.
inline std::optional<polynomial> try_divide_exact(const polynomial& p, const polynomial& q) {
    if (q.is_zero())
        throw divisibility_error("division by the zero polynomial");
    if (p.is_zero())
        return polynomial{};
    if (p.degree() < q.degree())
        return std::nullopt;
    std::vector<big_int> rem = p.coefficients();
    const auto& qc = q.coefficients();
    const std::size_t dq = qc.size() - 1;
    std::vector<big_int> quot(rem.size() - dq);
    for (std::size_t k = quot.size(); k-- > 0;) {
        big_int lead = rem[k + dq];
        if (lead == 0)
            continue;
        if (lead % qc.back() != 0)
            return std::nullopt;
        big_int f = lead / qc.back();
        for (std::size_t j = 0; j <= dq; ++j)
            rem[k + j] -= f * qc[j];
        quot[k] = std::move(f);
    }
    for (std::size_t j = 0; j < dq; ++j)
        if (rem[j] != 0)
            return std::nullopt;
    return polynomial(std::move(quot));
}

/// p / q; throws divisibility_error when q does not divide p over the integers.
inline polynomial poly_divide_exact(const polynomial& p, const polynomial& q) {
    auto r = try_divide_exact(p, q);
    if (!r)
        throw divisibility_error("(" + p.to_string() + ") is not divisible by (" + q.to_string() + ")");
    return *std::move(r);
}

/// sum_i p_i x^i y^(deg p - i): the homogenization of p evaluated at (x, y).
inline polynomial homogeneous_substitute(const polynomial& p, const polynomial& x, const polynomial& y) {
    if (p.is_zero())
        return {};
    const auto d = static_cast<std::size_t>(p.degree());
    std::vector<polynomial> ypow(d + 1);
    ypow[0] = polynomial::constant(1);
    for (std::size_t i = 1; i <= d; ++i)
        ypow[i] = ypow[i - 1] * y;
    polynomial out;
    polynomial xpow = polynomial::constant(1);
    for (std::size_t i = 0; i <= d; ++i) {
        if (p[i] != 0)
            out += p[i] * (xpow * ypow[d - i]);
        if (i < d)
            xpow *= x;
    }
    return out;
}

/// Greatest common divisor of the coefficients (non-negative).
inline big_int content(const polynomial& p) {
    big_int g = 0;
    for (const auto& c : p.coefficients())
        g = boost::multiprecision::gcd(g, c);
    return g;
}

/// p divided by its content, with positive leading coefficient.
inline polynomial primitive_part(const polynomial& p) {
    if (p.is_zero())
        return {};
    big_int g = content(p);
    if (p.leading() < 0)
        g = -g;
    std::vector<big_int> c = p.coefficients();
    for (auto& x : c)
        x /= g;
    return polynomial(std::move(c));
}

/// lc(b)^(deg a - deg b + 1) * a mod b, computed without division.
inline polynomial pseudo_remainder(const polynomial& a, const polynomial& b) {
    if (b.is_zero())
        throw divisibility_error("pseudo-remainder by the zero polynomial");
    if (a.degree() < b.degree())
        return a;
    std::vector<big_int> r = a.coefficients();
    const auto& bc = b.coefficients();
    const std::size_t db = bc.size() - 1;
    const big_int& lb = bc.back();
    for (std::size_t top = r.size(); top-- > db;) {
        big_int lead = r[top];
        for (auto& x : r)
            x *= lb;
        if (lead != 0)
            for (std::size_t j = 0; j <= db; ++j)
                r[top - db + j] -= lead * bc[j];
    }
    r.resize(db);
    return polynomial(std::move(r));
}

/// Primitive gcd over Z[t] (positive leading coefficient) via the
/// primitive polynomial remainder sequence.
inline polynomial poly_gcd(polynomial a, polynomial b) {
    a = primitive_part(a);
    b = primitive_part(b);
    if (a.degree() < b.degree())
        std::swap(a, b);
    while (!b.is_zero()) {
        polynomial r = primitive_part(pseudo_remainder(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/// Square-free decomposition (Yun): returns factors f_1, f_2, ... with
/// p = c * prod f_i^i, each f_i square-free and pairwise coprime. Factors
/// that are constant are returned as the constant 1.
inline std::vector<polynomial> square_free_decomposition(const polynomial& p) {
    if (p.degree() < 1)
        return {};
    const polynomial one = polynomial::constant(1);
    polynomial a = primitive_part(p);
    polynomial da = a.derivative();
    polynomial b = poly_gcd(a, da);
    polynomial c = poly_divide_exact(a, b);
    polynomial d = poly_divide_exact(da, b) - c.derivative();
    std::vector<polynomial> out;
    while (c.degree() > 0) {
        polynomial f = poly_gcd(c, d);
        c = poly_divide_exact(c, f);
        d = poly_divide_exact(d, f) - c.derivative();
        out.push_back(f.degree() > 0 ? f : one);
    }
    return out;
}

} // namespace qwalk

#endif // QWALK_POLYNOMIAL_HPP
