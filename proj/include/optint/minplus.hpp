#ifndef OPTINT_MINPLUS_HPP
#define OPTINT_MINPLUS_HPP

#include <cmath>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "optint/core.hpp"

// Min-plus (tropical) kernel: vectors and matrices over values extended
// with an absorbing infinity (TOP), the naive quadratic convolution, and a
// blocked convolution that routes through min-plus matrix products. The
// square-product backend is pluggable; the built-in one is the cubic
// triple loop, so the blocked path matches the naive one asymptotically
// and exists as the substitution point for faster distance products.

namespace optint {

// Finite value or TOP. TOP absorbs addition and loses every min. It is a
// tag, never a large finite value, so exact arithmetic cannot corrupt it.
template <class T>
struct ExtendedValue {
    T value{};
    bool is_top = false;

    static constexpr ExtendedValue top() { return ExtendedValue{T{}, true}; }
    static constexpr ExtendedValue of(T v) { return ExtendedValue{v, false}; }

    bool finite() const noexcept { return !is_top; }

    friend bool operator==(const ExtendedValue& a, const ExtendedValue& b) {
        if (a.is_top || b.is_top) return a.is_top && b.is_top;
        return a.value == b.value;
    }
};

template <class T>
ExtendedValue<T> sat_add(const ExtendedValue<T>& a, const ExtendedValue<T>& b) {
    if (a.is_top || b.is_top) return ExtendedValue<T>::top();
    return ExtendedValue<T>::of(detail::checked_add(a.value, b.value));
}

template <class T>
ExtendedValue<T> ev_min(const ExtendedValue<T>& a, const ExtendedValue<T>& b) {
    if (a.is_top) return b;
    if (b.is_top) return a;
    return a.value <= b.value ? a : b;
}

template <class T>
using MinPlusVector = std::vector<ExtendedValue<T>>;

template <class T>
class MinPlusMatrix {
public:
    MinPlusMatrix(index_t rows, index_t cols, ExtendedValue<T> fill = ExtendedValue<T>::top())
        : rows_(rows), cols_(cols),
          cells_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), fill) {
        if (rows < 1 || cols < 1) throw std::invalid_argument("matrix dimensions must be positive");
    }

    static MinPlusMatrix tropical_identity(index_t d) {
        MinPlusMatrix m(d, d);
        for (index_t i = 0; i < d; ++i) m.at(i, i) = ExtendedValue<T>::of(T(0));
        return m;
    }

    index_t rows() const noexcept { return rows_; }
    index_t cols() const noexcept { return cols_; }

    ExtendedValue<T>& at(index_t r, index_t c) {
        return cells_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
                      static_cast<std::size_t>(c)];
    }
    const ExtendedValue<T>& at(index_t r, index_t c) const {
        return cells_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
                      static_cast<std::size_t>(c)];
    }

    friend bool operator==(const MinPlusMatrix& a, const MinPlusMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.cells_ == b.cells_;
    }

private:
    index_t rows_;
    index_t cols_;
    std::vector<ExtendedValue<T>> cells_;
};

template <class T>
using SquareProductFn = std::function<MinPlusMatrix<T>(const MinPlusMatrix<T>&, const MinPlusMatrix<T>&)>;

// d_{i,j} = min_k (b_{i,k} + c_{k,j}); the built-in square backend.
template <class T>
MinPlusMatrix<T> naive_square_product(const MinPlusMatrix<T>& b, const MinPlusMatrix<T>& c) {
    if (b.rows() != b.cols() || c.rows() != c.cols() || b.cols() != c.rows())
        throw std::invalid_argument("square product needs equal square dimensions");
    const index_t d = b.rows();
    MinPlusMatrix<T> out(d, d);
    for (index_t i = 0; i < d; ++i) {
        for (index_t k = 0; k < d; ++k) {
            const ExtendedValue<T>& bik = b.at(i, k);
            if (bik.is_top) continue;
            for (index_t j = 0; j < d; ++j) {
                const ExtendedValue<T>& ckj = c.at(k, j);
                if (ckj.is_top) continue;
                ExtendedValue<T>& cell = out.at(i, j);
                const T cand = detail::checked_add(bik.value, ckj.value);
                if (cell.is_top || cand < cell.value) cell = ExtendedValue<T>::of(cand);
            }
        }
    }
    return out;
}

template <class T>
MinPlusMatrix<T> square_min_plus_product(const MinPlusMatrix<T>& b, const MinPlusMatrix<T>& c,
                                         const SquareProductFn<T>& backend = naive_square_product<T>) {
    if (b.rows() != b.cols() || c.rows() != c.cols() || b.cols() != c.rows())
        throw std::invalid_argument("square product needs equal square dimensions");
    return backend(b, c);
}

// Rectangular product of B (r x m) and C (m x d) by chunking the inner
// dimension into square blocks handled by the square backend; chunks are
// padded with TOP, which is neutral under the entrywise min combine. The
// block edge is max(r, d), matching the r <= d <= m case the blocked
// convolution produces while accepting any shape.
template <class T>
MinPlusMatrix<T> rect_min_plus_product(const MinPlusMatrix<T>& b, const MinPlusMatrix<T>& c,
                                       const SquareProductFn<T>& backend = naive_square_product<T>) {
    if (b.cols() != c.rows())
        throw std::invalid_argument("rectangular product dimension mismatch");
    const index_t r = b.rows();
    const index_t m = b.cols();
    const index_t d = c.cols();
    const index_t edge = std::max(r, d);
    const index_t chunks = (m + edge - 1) / edge;

    MinPlusMatrix<T> out(r, d);
    MinPlusMatrix<T> bk(edge, edge);
    MinPlusMatrix<T> ck(edge, edge);
    for (index_t chunk = 0; chunk < chunks; ++chunk) {
        const index_t k0 = chunk * edge;
        const index_t width = std::min(edge, m - k0);
        for (index_t i = 0; i < edge; ++i)
            for (index_t k = 0; k < edge; ++k)
                bk.at(i, k) = (i < r && k < width) ? b.at(i, k0 + k) : ExtendedValue<T>::top();
        for (index_t k = 0; k < edge; ++k)
            for (index_t j = 0; j < edge; ++j)
                ck.at(k, j) = (k < width && j < d) ? c.at(k0 + k, j) : ExtendedValue<T>::top();
        const MinPlusMatrix<T> prod = backend(bk, ck);
        for (index_t i = 0; i < r; ++i)
            for (index_t j = 0; j < d; ++j)
                out.at(i, j) = ev_min(out.at(i, j), prod.at(i, j));
    }
    return out;
}

// z_k = min_{i=0..k} (x_i + y_{k-i}); the definitional quadratic route.
template <class T>
MinPlusVector<T> naive_convolution(const MinPlusVector<T>& x, const MinPlusVector<T>& y) {
    if (x.empty() || x.size() != y.size())
        throw std::invalid_argument("convolution needs equal non-empty lengths");
    const index_t n = static_cast<index_t>(x.size());
    MinPlusVector<T> z(x.size(), ExtendedValue<T>::top());
    for (index_t k = 0; k < n; ++k)
        for (index_t i = 0; i <= k; ++i)
            z[static_cast<std::size_t>(k)] =
                ev_min(z[static_cast<std::size_t>(k)],
                       sat_add(x[static_cast<std::size_t>(i)], y[static_cast<std::size_t>(k - i)]));
    return z;
}

namespace detail {

inline index_t ceil_sqrt(index_t n) {
    index_t d = static_cast<index_t>(std::ceil(std::sqrt(static_cast<double>(n))));
    while (d > 1 && (d - 1) * (d - 1) >= n) --d;
    while (d * d < n) ++d;
    return d;
}

}  // namespace detail

// Staging matrices for the blocked convolution. With d = ceil(sqrt(n)) and
// r = ceil(n/d):
//   row i of B (r x (2n-1)):  n-1-i*d TOPs, x_0..x_{n-1}, i*d TOPs
//   col j of C ((2n-1) x d):  j TOPs, y_{n-1}..y_0, n-1-j TOPs
// so entry (i, j) of the product is min_t { x_t + y_{i*d+j-t} } whenever
// i*d + j <= n-1. Rows whose shift i*d exceeds n-1 are never read and are
// not emitted.
template <class T>
std::pair<MinPlusMatrix<T>, MinPlusMatrix<T>> build_block_matrices(const MinPlusVector<T>& x,
                                                                   const MinPlusVector<T>& y) {
    if (x.empty() || x.size() != y.size())
        throw std::invalid_argument("convolution needs equal non-empty lengths");
    const index_t n = static_cast<index_t>(x.size());
    const index_t d = detail::ceil_sqrt(n);
    const index_t r = (n + d - 1) / d;
    const index_t width = 2 * n - 1;

    MinPlusMatrix<T> b(r, width);
    for (index_t i = 0; i < r; ++i) {
        const index_t lead = n - 1 - i * d;
        for (index_t t = 0; t < n; ++t) b.at(i, lead + t) = x[static_cast<std::size_t>(t)];
    }
    MinPlusMatrix<T> c(width, d);
    for (index_t j = 0; j < d; ++j) {
        for (index_t t = 0; t < n; ++t)
            c.at(j + t, j) = y[static_cast<std::size_t>(n - 1 - t)];
    }
    return {std::move(b), std::move(c)};
}

// Convolution via the blocked min-plus product; identical output to
// naive_convolution for every input.
template <class T>
MinPlusVector<T> blocked_convolution(const MinPlusVector<T>& x, const MinPlusVector<T>& y,
                                     const SquareProductFn<T>& backend = naive_square_product<T>) {
    auto [b, c] = build_block_matrices(x, y);
    const index_t n = static_cast<index_t>(x.size());
    const index_t d = c.cols();
    const MinPlusMatrix<T> prod = rect_min_plus_product(b, c, backend);
    MinPlusVector<T> z;
    z.reserve(x.size());
    for (index_t k = 0; k < n; ++k) z.push_back(prod.at(k / d, k % d));
    return z;
}

}  // namespace optint

#endif  // OPTINT_MINPLUS_HPP
