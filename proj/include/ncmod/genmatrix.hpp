#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ncmod/error.hpp"

namespace ncmod {

/**
 * Dense rectangular matrix over an arbitrary carrier.
 *
 * The carrier only has to provide +, * (possibly noncommutative), unary -,
 * and ==. A zero value of the carrier is stored with the matrix so that
 * empty sums and padding are well defined even when zero needs context
 * (algebra elements carry their algebra).
 *
 * Index convention: entry(i, j) is row i, column j.
 *
 * There is deliberately no operator*: matrices over a noncommutative
 * carrier have two distinct products, rc_product and cr_product, and
 * call sites must pick one.
 */
template <typename Carrier>
class GenMatrix {
public:
    GenMatrix(std::size_t rows, std::size_t cols, Carrier zero)
        : rows_(rows), cols_(cols), zero_(std::move(zero)),
          entries_(rows * cols, zero_) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Carrier& zero_value() const { return zero_; }

    const Carrier& operator()(std::size_t r, std::size_t c) const {
        check_index(r, c);
        return entries_[r * cols_ + c];
    }
    Carrier& operator()(std::size_t r, std::size_t c) {
        check_index(r, c);
        return entries_[r * cols_ + c];
    }

    friend bool operator==(const GenMatrix& a, const GenMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const GenMatrix& a, const GenMatrix& b) { return !(a == b); }

private:
    void check_index(std::size_t r, std::size_t c) const {
        if (r >= rows_ || c >= cols_)
            throw DimensionError("matrix: index out of range");
    }

    std::size_t rows_;
    std::size_t cols_;
    Carrier zero_;
    std::vector<Carrier> entries_;
};

/// rc-product (row over column): entry (i,j) = sum_k a(i,k) * b(k,j).
template <typename C>
GenMatrix<C> rc_product(const GenMatrix<C>& a, const GenMatrix<C>& b) {
    if (a.cols() != b.rows())
        throw DimensionError("rc_product: inner dimensions differ");
    GenMatrix<C> out(a.rows(), b.cols(), a.zero_value());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            C acc = a.zero_value();
            for (std::size_t k = 0; k < a.cols(); ++k)
                acc = acc + a(i, k) * b(k, j);
            out(i, j) = std::move(acc);
        }
    return out;
}

/// cr-product (column over row): entry (i,j) = sum_k a(k,j) * b(i,k),
/// with the a-factor written first in each term. Result is b.rows x a.cols.
template <typename C>
GenMatrix<C> cr_product(const GenMatrix<C>& a, const GenMatrix<C>& b) {
    if (a.rows() != b.cols())
        throw DimensionError("cr_product: a.rows must equal b.cols");
    GenMatrix<C> out(b.rows(), a.cols(), a.zero_value());
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            C acc = a.zero_value();
            for (std::size_t k = 0; k < a.rows(); ++k)
                acc = acc + a(k, j) * b(i, k);
            out(i, j) = std::move(acc);
        }
    return out;
}

template <typename C>
GenMatrix<C> transpose(const GenMatrix<C>& a) {
    GenMatrix<C> out(a.cols(), a.rows(), a.zero_value());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(j, i) = a(i, j);
    return out;
}

template <typename C>
GenMatrix<C> mat_sum(const GenMatrix<C>& a, const GenMatrix<C>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError("mat_sum: shape mismatch");
    GenMatrix<C> out(a.rows(), a.cols(), a.zero_value());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(i, j) = a(i, j) + b(i, j);
    return out;
}

template <typename C>
GenMatrix<C> operator+(const GenMatrix<C>& a, const GenMatrix<C>& b) {
    return mat_sum(a, b);
}

template <typename C>
GenMatrix<C> negate(const GenMatrix<C>& a) {
    GenMatrix<C> out(a.rows(), a.cols(), a.zero_value());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(i, j) = -a(i, j);
    return out;
}

template <typename C>
GenMatrix<C> operator-(const GenMatrix<C>& a) { return negate(a); }

template <typename C>
GenMatrix<C> operator-(const GenMatrix<C>& a, const GenMatrix<C>& b) {
    return mat_sum(a, negate(b));
}

/// n x n identity; the common identity of both products.
template <typename C>
GenMatrix<C> identity(std::size_t n, const C& one, const C& zero) {
    GenMatrix<C> out(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = one;
    return out;
}

} // namespace ncmod
