#pragma once

#include "admz/exact_scalar.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace admz {

using RationalVector = std::vector<ExactScalar>;

struct RrefResult;

/// Sparse row-major matrix over Q. Explicit zeros are never stored.
class RationalMatrix {
public:
    using Row = std::map<std::size_t, ExactScalar>;

    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);

    static RationalMatrix identity(std::size_t n);
    static RationalMatrix from_dense(const std::vector<RationalVector>& rows, std::size_t cols);
    /// Rows of top followed by rows of bottom; column counts must match.
    static RationalMatrix vstack(const RationalMatrix& top, const RationalMatrix& bottom);

    [[nodiscard]] std::size_t rows() const { return rows_.size(); }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] std::size_t nonzeros() const;
    [[nodiscard]] const Row& row(std::size_t r) const { return rows_.at(r); }
    [[nodiscard]] ExactScalar at(std::size_t r, std::size_t c) const;
    [[nodiscard]] bool is_zero() const { return nonzeros() == 0; }

    void set(std::size_t r, std::size_t c, const ExactScalar& v);
    void add(std::size_t r, std::size_t c, const ExactScalar& v);

    /// m * v
    [[nodiscard]] RationalVector apply(const RationalVector& v) const;
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    friend RrefResult rref(const RationalMatrix& m);
    std::size_t cols_ = 0;
    std::vector<Row> rows_;
};

struct RrefResult {
    RationalMatrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_columns;
};

/// Gauss-Jordan elimination over Q. Pivots are taken column by column
/// (lowest column first) from the lowest-index remaining row, so the output is
/// the unique reduced row echelon form with zero rows at the bottom.
RrefResult rref(const RationalMatrix& m);

/// Basis of { v : m v = 0 }, one vector per free column (in column order),
/// each scaled so its first nonzero coordinate is 1.
std::vector<RationalVector> kernel_basis(const RationalMatrix& m);

}  // namespace admz
