#include "formacheck/matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace formacheck {

MatQ MatQ::identity(std::size_t n)
{
    MatQ m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

MatQ MatQ::from_rows(std::span<const VecQ> rows, std::size_t cols)
{
    MatQ m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw std::invalid_argument("MatQ::from_rows: ragged rows");
        std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(r * cols));
    }
    return m;
}

MatQ MatQ::from_columns(std::span<const VecQ> columns, std::size_t rows)
{
    MatQ m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows)
            throw std::invalid_argument("MatQ::from_columns: ragged columns");
        for (std::size_t r = 0; r < rows; ++r)
            m(r, c) = columns[c][r];
    }
    return m;
}

VecQ MatQ::row(std::size_t r) const
{
    const auto first = data_.begin() + static_cast<std::ptrdiff_t>(r * cols_);
    return VecQ(first, first + static_cast<std::ptrdiff_t>(cols_));
}

VecQ MatQ::column(std::size_t c) const
{
    VecQ v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = (*this)(r, c);
    return v;
}

bool MatQ::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const Rat& x) { return formacheck::is_zero(x); });
}

MatQ MatQ::transpose() const
{
    MatQ t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

MatQ operator*(const MatQ& a, const MatQ& b)
{
    if (a.cols() != b.rows())
        throw std::invalid_argument("matrix product: dimension mismatch");
    MatQ p(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rat& aik = a(i, k);
            if (is_zero(aik))
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (!is_zero(b(k, j)))
                    p(i, j) += aik * b(k, j);
        }
    return p;
}

VecQ operator*(const MatQ& m, std::span<const Rat> x)
{
    if (m.cols() != x.size())
        throw std::invalid_argument("matrix-vector product: dimension mismatch");
    VecQ y(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!is_zero(x[j]) && !is_zero(m(i, j)))
                y[i] += m(i, j) * x[j];
    return y;
}

RrefResult rref(const MatQ& m)
{
    RrefResult out{m, {}, 0};
    MatQ& a = out.rref;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();

    std::size_t lead = 0;
    for (std::size_t c = 0; c < cols && lead < rows; ++c) {
        // Among candidate rows pick the sparsest one; the RREF is unique.
        std::size_t best = rows;
        std::size_t best_nnz = 0;
        for (std::size_t r = lead; r < rows; ++r) {
            if (is_zero(a(r, c)))
                continue;
            std::size_t nnz = 0;
            for (std::size_t k = c; k < cols; ++k)
                nnz += is_zero(a(r, k)) ? 0 : 1;
            if (best == rows || nnz < best_nnz) {
                best = r;
                best_nnz = nnz;
            }
        }
        if (best == rows)
            continue;

        if (best != lead)
            for (std::size_t k = 0; k < cols; ++k)
                std::swap(a(best, k), a(lead, k));

        const Rat inv = 1 / a(lead, c);
        for (std::size_t k = c; k < cols; ++k)
            if (!is_zero(a(lead, k)))
                a(lead, k) *= inv;

        for (std::size_t r = 0; r < rows; ++r) {
            if (r == lead || is_zero(a(r, c)))
                continue;
            const Rat f = a(r, c);
            for (std::size_t k = c; k < cols; ++k)
                if (!is_zero(a(lead, k)))
                    a(r, k) -= f * a(lead, k);
        }
        out.pivot_cols.push_back(c);
        ++lead;
    }
    out.rank = out.pivot_cols.size();
    return out;
}

std::size_t rank(const MatQ& m) { return rref(m).rank; }

std::vector<VecQ> kernel_basis(const MatQ& m)
{
    const auto red = rref(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto p : red.pivot_cols)
        is_pivot[p] = true;

    std::vector<VecQ> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free])
            continue;
        VecQ x(cols);
        x[free] = 1;
        for (std::size_t i = 0; i < red.rank; ++i)
            x[red.pivot_cols[i]] = -red.rref(i, free);
        basis.push_back(std::move(x));
    }
    return basis;
}

std::optional<VecQ> solve(const MatQ& m, std::span<const Rat> b)
{
    if (b.size() != m.rows())
        throw std::invalid_argument("solve: right-hand side has wrong length");

    MatQ aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c)
            aug(r, c) = m(r, c);
        aug(r, m.cols()) = b[r];
    }
    const auto red = rref(aug);
    if (!red.pivot_cols.empty() && red.pivot_cols.back() == m.cols())
        return std::nullopt;

    VecQ x(m.cols());
    for (std::size_t i = 0; i < red.rank; ++i)
        x[red.pivot_cols[i]] = red.rref(i, m.cols());
    return x;
}

void reduce_against(VecQ& v, const RrefResult& basis)
{
    for (std::size_t i = 0; i < basis.rank; ++i) {
        const std::size_t p = basis.pivot_cols[i];
        if (is_zero(v[p]))
            continue;
        const Rat f = v[p];
        for (std::size_t k = 0; k < v.size(); ++k)
            if (!is_zero(basis.rref(i, k)))
                v[k] -= f * basis.rref(i, k);
    }
}

std::vector<VecQ> extend_to_complement(std::span<const VecQ> sub, std::size_t ambient_dim)
{
    std::vector<VecQ> rows(sub.begin(), sub.end());
    for (const auto& v : rows)
        if (v.size() != ambient_dim)
            throw std::invalid_argument("extend_to_complement: vector length differs from ambient dimension");

    auto current = rref(MatQ::from_rows(rows, ambient_dim));
    std::vector<VecQ> added;
    for (std::size_t k = 0; k < ambient_dim && current.rank < ambient_dim; ++k) {
        VecQ e(ambient_dim);
        e[k] = 1;
        VecQ reduced = e;
        reduce_against(reduced, current);
        if (std::all_of(reduced.begin(), reduced.end(), [](const Rat& x) { return is_zero(x); }))
            continue;
        rows.push_back(e);
        added.push_back(std::move(e));
        current = rref(MatQ::from_rows(rows, ambient_dim));
    }
    return added;
}

} // namespace formacheck
