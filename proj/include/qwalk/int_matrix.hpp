#ifndef QWALK_INT_MATRIX_HPP
#define QWALK_INT_MATRIX_HPP

#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qwalk/errors.hpp"

namespace qwalk {

using big_int = boost::multiprecision::cpp_int;

/// Dense row-major integer matrix. Dimensions are fixed at construction.
template <class Int>
class basic_int_matrix {
public:
    using value_type = Int;

    basic_int_matrix() = default;
    basic_int_matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static basic_int_matrix identity(std::size_t n) {
        basic_int_matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }
    std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

    Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<Int> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const Int> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    friend bool operator==(const basic_int_matrix&, const basic_int_matrix&) = default;

    basic_int_matrix& operator+=(const basic_int_matrix& o) {
        check_same(o, "+");
        for (std::size_t i = 0; i < data_.size(); ++i)
            data_[i] += o.data_[i];
        return *this;
    }

    basic_int_matrix& operator-=(const basic_int_matrix& o) {
        check_same(o, "-");
        for (std::size_t i = 0; i < data_.size(); ++i)
            data_[i] -= o.data_[i];
        return *this;
    }

    basic_int_matrix& operator*=(const Int& c) {
        for (auto& x : data_)
            x *= c;
        return *this;
    }

    friend basic_int_matrix operator+(basic_int_matrix a, const basic_int_matrix& b) { return a += b; }
    friend basic_int_matrix operator-(basic_int_matrix a, const basic_int_matrix& b) { return a -= b; }
    friend basic_int_matrix operator*(const Int& c, basic_int_matrix a) { return a *= c; }

    basic_int_matrix transpose() const {
        basic_int_matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    Int trace() const {
        if (!square())
            throw dimension_error("trace of a non-square matrix");
        Int t = 0;
        for (std::size_t i = 0; i < rows_; ++i)
            t += (*this)(i, i);
        return t;
    }

    bool symmetric() const {
        if (!square())
            return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i))
                    return false;
        return true;
    }

    /// B with B(i,j) = A(perm[i], perm[j]), i.e. P^T A P for the
    /// permutation matrix sending e_i to e_perm[i].
    basic_int_matrix permuted(std::span<const std::size_t> perm) const {
        if (!square() || perm.size() != rows_)
            throw dimension_error("permuted: permutation length does not match matrix");
        basic_int_matrix out(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                out(i, j) = (*this)(perm[i], perm[j]);
        return out;
    }

private:
    void check_same(const basic_int_matrix& o, const char* op) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw dimension_error(std::string("operator") + op + ": " + shape() + " vs " + o.shape());
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> data_;
};

using int_matrix = basic_int_matrix<big_int>;

/// Exact product. Zero entries on either side are skipped, so sparse
/// arc-space operators multiply in time proportional to their fill.
template <class Int>
basic_int_matrix<Int> mat_mul(const basic_int_matrix<Int>& a, const basic_int_matrix<Int>& b) {
    if (a.cols() != b.rows())
        throw dimension_error("mat_mul: " + a.shape() + " times " + b.shape());
    basic_int_matrix<Int> c(a.rows(), b.cols());
    std::vector<std::vector<std::size_t>> b_nonzero(b.rows());
    for (std::size_t l = 0; l < b.rows(); ++l)
        for (std::size_t j = 0; j < b.cols(); ++j)
            if (b(l, j) != 0)
                b_nonzero[l].push_back(j);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t l = 0; l < a.cols(); ++l) {
            const Int& x = a(i, l);
            if (x == 0)
                continue;
            for (std::size_t j : b_nonzero[l])
                c(i, j) += x * b(l, j);
        }
    return c;
}

template <class Int>
basic_int_matrix<Int> mat_pow(const basic_int_matrix<Int>& a, unsigned e) {
    if (!a.square())
        throw dimension_error("mat_pow: " + a.shape() + " is not square");
    if (e == 0)
        return basic_int_matrix<Int>::identity(a.rows());
    basic_int_matrix<Int> r = a;
    for (unsigned i = 1; i < e; ++i)
        r = mat_mul(r, a);
    return r;
}

/// S+(M): 1 where M is strictly positive, 0 elsewhere.
template <class Int>
basic_int_matrix<Int> positive_support(const basic_int_matrix<Int>& m) {
    basic_int_matrix<Int> s(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) > 0)
                s(i, j) = 1;
    return s;
}

/// Space-separated rows, one per line.
template <class Int>
std::ostream& operator<<(std::ostream& os, const basic_int_matrix<Int>& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            os << (j ? " " : "") << m(i, j);
        os << '\n';
    }
    return os;
}

} // namespace qwalk

#endif // QWALK_INT_MATRIX_HPP
