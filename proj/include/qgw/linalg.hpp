#pragma once

#include <cstddef>
#include <vector>

#include "qgw/errors.hpp"

namespace qgw {

namespace detail {
template <class F>
bool fz(const F& x) { return x == F(0); } // field zero test
} // namespace detail

template <class F>
using Mat = std::vector<std::vector<F>>;

// Incremental exact Gaussian elimination over a field F (needs 0/1 literals
// and +,-,*,/,==). Rows are kept fully reduced (RREF), so the nullspace basis
// falls out directly.
template <class F>
class RowReducer {
public:
    explicit RowReducer(std::size_t ncols) : ncols_(ncols) {}

    std::size_t ncols() const { return ncols_; }
    std::size_t rank() const { return rows_.size(); }

    // reduce against current pivots without inserting
    std::vector<F> reduce(std::vector<F> row) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (detail::fz(row[pivot_[r]])) continue;
            F f = row[pivot_[r]]; // stored rows have pivot entry 1
            for (std::size_t j = 0; j < ncols_; ++j)
                if (!detail::fz(rows_[r][j])) row[j] -= f * rows_[r][j];
        }
        return row;
    }

    // returns true if the row increased the rank
    bool add_row(std::vector<F> row) {
        row = reduce(std::move(row));
        std::size_t p = ncols_;
        for (std::size_t j = 0; j < ncols_; ++j)
            if (!detail::fz(row[j])) { p = j; break; }
        if (p == ncols_) return false;
        F inv = F(1) / row[p];
        for (std::size_t j = p; j < ncols_; ++j)
            if (!detail::fz(row[j])) row[j] = inv * row[j];
        // keep existing rows reduced against the new pivot
        for (auto& stored : rows_) {
            if (detail::fz(stored[p])) continue;
            F f = stored[p];
            for (std::size_t j = 0; j < ncols_; ++j)
                if (!detail::fz(row[j])) stored[j] -= f * row[j];
        }
        std::size_t pos = 0;
        while (pos < pivot_.size() && pivot_[pos] < p) ++pos;
        rows_.insert(rows_.begin() + pos, std::move(row));
        pivot_.insert(pivot_.begin() + pos, p);
        return true;
    }

    const std::vector<std::vector<F>>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivot_; }

    // basis of {x : A x = 0} where the added rows are the equations
    std::vector<std::vector<F>> nullspace_basis() const {
        std::vector<bool> is_pivot(ncols_, false);
        for (auto p : pivot_) is_pivot[p] = true;
        std::vector<std::vector<F>> basis;
        for (std::size_t f = 0; f < ncols_; ++f) {
            if (is_pivot[f]) continue;
            std::vector<F> x(ncols_, F(0));
            x[f] = F(1);
            for (std::size_t r = 0; r < rows_.size(); ++r) x[pivot_[r]] = -rows_[r][f];
            basis.push_back(std::move(x));
        }
        return basis;
    }

private:
    std::size_t ncols_;
    std::vector<std::vector<F>> rows_;
    std::vector<std::size_t> pivot_;
};

template <class F>
std::size_t matrix_rank(const std::vector<std::vector<F>>& m) {
    if (m.empty()) return 0;
    RowReducer<F> red(m.front().size());
    for (const auto& row : m) red.add_row(row);
    return red.rank();
}

template <class F>
std::vector<std::vector<F>> identity_matrix(std::size_t n) {
    std::vector<std::vector<F>> id(n, std::vector<F>(n, F(0)));
    for (std::size_t i = 0; i < n; ++i) id[i][i] = F(1);
    return id;
}

template <class F>
std::vector<std::vector<F>> mat_mul(const std::vector<std::vector<F>>& a,
                                    const std::vector<std::vector<F>>& b) {
    std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b.front().size();
    std::vector<std::vector<F>> r(n, std::vector<F>(m, F(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t x = 0; x < k; ++x) {
            if (detail::fz(a[i][x])) continue;
            for (std::size_t j = 0; j < m; ++j)
                if (!detail::fz(b[x][j])) r[i][j] += a[i][x] * b[x][j];
        }
    return r;
}

// exact inverse by Gauss-Jordan; throws VerificationError when singular
template <class F>
std::vector<std::vector<F>> mat_inverse(std::vector<std::vector<F>> a) {
    std::size_t n = a.size();
    auto inv = identity_matrix<F>(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = n;
        for (std::size_t r = col; r < n; ++r)
            if (!detail::fz(a[r][col])) { piv = r; break; }
        if (piv == n) throw VerificationError("mat_inverse: singular matrix");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        F d = F(1) / a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] = d * a[col][j];
            inv[col][j] = d * inv[col][j];
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || detail::fz(a[r][col])) continue;
            F f = a[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

} // namespace qgw
