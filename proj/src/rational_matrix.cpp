#include "admz/rational_matrix.hpp"

#include "admz/errors.hpp"

#include <utility>

namespace admz {

namespace {

// target -= factor * source
void subtract_scaled(RationalMatrix::Row& target, const RationalMatrix::Row& source, const ExactScalar& factor) {
    for (const auto& [col, value] : source) {
        auto [it, inserted] = target.try_emplace(col, -(factor * value));
        if (!inserted) {
            it->second -= factor * value;
            if (it->second.is_zero()) target.erase(it);
        }
    }
}

}  // namespace

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, ExactScalar(1));
    return m;
}

RationalMatrix RationalMatrix::from_dense(const std::vector<RationalVector>& rows, std::size_t cols) {
    RationalMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw InvalidInput("ragged dense matrix");
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
    }
    return m;
}

RationalMatrix RationalMatrix::vstack(const RationalMatrix& top, const RationalMatrix& bottom) {
    if (top.cols_ != bottom.cols_) throw InvalidInput("vstack of matrices with different column counts");
    RationalMatrix m = top;
    m.rows_.insert(m.rows_.end(), bottom.rows_.begin(), bottom.rows_.end());
    return m;
}

std::size_t RationalMatrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& r : rows_) n += r.size();
    return n;
}

ExactScalar RationalMatrix::at(std::size_t r, std::size_t c) const {
    const auto& row = rows_.at(r);
    auto it = row.find(c);
    return it == row.end() ? ExactScalar(0) : it->second;
}

void RationalMatrix::set(std::size_t r, std::size_t c, const ExactScalar& v) {
    if (r >= rows_.size() || c >= cols_) throw InvalidInput("matrix index out of range");
    if (v.is_zero()) rows_[r].erase(c);
    else rows_[r][c] = v;
}

void RationalMatrix::add(std::size_t r, std::size_t c, const ExactScalar& v) {
    set(r, c, at(r, c) + v);
}

RationalVector RationalMatrix::apply(const RationalVector& v) const {
    if (v.size() != cols_) throw InvalidInput("vector length does not match column count");
    RationalVector out(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r)
        for (const auto& [c, value] : rows_[r]) out[r] += value * v[c];
    return out;
}

std::string RationalMatrix::to_string() const {
    std::string out;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        out += "[";
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c > 0) out += ", ";
            out += at(r, c).to_string();
        }
        out += "]\n";
    }
    return out;
}

RrefResult rref(const RationalMatrix& m) {
    RrefResult result{m, 0, {}};
    auto& rows = result.reduced.rows_;
    std::size_t next = 0;
    for (std::size_t col = 0; col < m.cols() && next < rows.size(); ++col) {
        // Rows at or below `next` have no entries left of `col`.
        std::size_t pivot = rows.size();
        for (std::size_t r = next; r < rows.size(); ++r) {
            if (!rows[r].empty() && rows[r].begin()->first == col) {
                pivot = r;
                break;
            }
        }
        if (pivot == rows.size()) continue;
        std::swap(rows[next], rows[pivot]);
        const ExactScalar inv = ExactScalar(1) / rows[next].begin()->second;
        for (auto& [c, v] : rows[next]) v *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == next) continue;
            auto it = rows[r].find(col);
            if (it == rows[r].end()) continue;
            const ExactScalar factor = it->second;
            subtract_scaled(rows[r], rows[next], factor);
        }
        result.pivot_columns.push_back(col);
        ++next;
    }
    result.rank = next;
    return result;
}

std::vector<RationalVector> kernel_basis(const RationalMatrix& m) {
    const RrefResult reduced = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : reduced.pivot_columns) is_pivot[c] = true;

    std::vector<RationalVector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        RationalVector v(m.cols());
        v[free] = ExactScalar(1);
        for (std::size_t i = 0; i < reduced.rank; ++i) v[reduced.pivot_columns[i]] = -reduced.reduced.at(i, free);
        for (const auto& x : v) {
            if (x.is_zero()) continue;
            const ExactScalar inv = ExactScalar(1) / x;
            for (auto& y : v) y *= inv;
            break;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace admz
