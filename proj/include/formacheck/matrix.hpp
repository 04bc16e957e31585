#pragma once

#include "formacheck/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace formacheck {

using VecQ = std::vector<Rat>;

/// Dense row-major matrix over Q.
class MatQ {
public:
    MatQ() = default;
    MatQ(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static MatQ identity(std::size_t n);
    static MatQ from_rows(std::span<const VecQ> rows, std::size_t cols);
    static MatQ from_columns(std::span<const VecQ> columns, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    VecQ row(std::size_t r) const;
    VecQ column(std::size_t c) const;

    bool is_zero() const;
    MatQ transpose() const;

    friend bool operator==(const MatQ&, const MatQ&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rat> data_;
};

MatQ operator*(const MatQ& a, const MatQ& b);
VecQ operator*(const MatQ& m, std::span<const Rat> x);

struct RrefResult {
    MatQ rref;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
};

/// Reduced row echelon form. Pivots are taken column by column; the
/// result is unique, so the row picked for each pivot only affects cost.
RrefResult rref(const MatQ& m);

std::size_t rank(const MatQ& m);

/// Basis of {x : m x = 0}, one vector per free column, with that free
/// variable set to 1 and the other free variables set to 0.
std::vector<VecQ> kernel_basis(const MatQ& m);

/// Some x with m x = b, free variables set to zero; nullopt when the
/// system is inconsistent. Throws std::invalid_argument if b.size() != rows.
std::optional<VecQ> solve(const MatQ& m, std::span<const Rat> b);

/// Standard basis vectors e_0, e_1, ... (in index order) that enlarge the
/// span of `sub`, kept greedily.
std::vector<VecQ> extend_to_complement(std::span<const VecQ> sub, std::size_t ambient_dim);

/// Reduces `v` against the rows of an RREF matrix so that it vanishes in
/// every pivot column.
void reduce_against(VecQ& v, const RrefResult& basis);

} // namespace formacheck
