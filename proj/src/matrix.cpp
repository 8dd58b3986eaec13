#include "addfeq/matrix.hpp"

#include <utility>

#include "addfeq/error.hpp"

namespace addfeq {

namespace {

// Gauss-Jordan reduction; returns the pivot column of each pivot row.
std::vector<std::size_t> reduce(std::vector<std::vector<Rational>>& m) {
    std::vector<std::size_t> pivot_cols;
    if (m.empty()) return pivot_cols;
    const std::size_t cols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.size() && m[pivot][col].is_zero()) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[row], m[pivot]);
        Rational inv = m[row][col].inverse();
        for (std::size_t c = col; c < cols; ++c) m[row][c] *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col].is_zero()) continue;
            Rational factor = m[r][col];
            for (std::size_t c = col; c < cols; ++c) m[r][c] -= factor * m[row][c];
        }
        pivot_cols.push_back(col);
        ++row;
    }
    return pivot_cols;
}

} // namespace

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

void ExactMatrix::append_row(const std::vector<Rational>& row) {
    check_invariant(row.size() == cols_ || rows_ == 0, "appended row has wrong width");
    if (rows_ == 0) cols_ = row.size();
    data_.insert(data_.end(), row.begin(), row.end());
    ++rows_;
}

std::size_t ExactMatrix::rank() const {
    std::vector<std::vector<Rational>> m(rows_, std::vector<Rational>(cols_));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) m[r][c] = at(r, c);
    return reduce(m).size();
}

std::vector<std::vector<Rational>> ExactMatrix::nullspace() const {
    std::vector<std::vector<Rational>> m(rows_, std::vector<Rational>(cols_));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) m[r][c] = at(r, c);
    std::vector<std::size_t> pivot_cols = reduce(m);

    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(cols_, Rational(0));
        v[free] = Rational(1);
        for (std::size_t r = 0; r < pivot_cols.size(); ++r)
            v[pivot_cols[r]] = -m[r][free];
        basis.push_back(std::move(v));
    }

    check_invariant(pivot_cols.size() + basis.size() == cols_, "rank + nullity != cols");
    for (const auto& v : basis) {
        for (std::size_t r = 0; r < rows_; ++r) {
            Rational dot = 0;
            for (std::size_t c = 0; c < cols_; ++c) dot += at(r, c) * v[c];
            check_invariant(dot.is_zero(), "nullspace vector fails M v = 0");
        }
    }
    return basis;
}

bool ExactMatrix::consistent(const std::vector<Rational>& rhs) const {
    check_invariant(rhs.size() == rows_, "rhs size mismatch");
    ExactMatrix aug(rows_, cols_ + 1);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
        aug.at(r, cols_) = rhs[r];
    }
    return aug.rank() == rank();
}

std::vector<std::vector<Rational>> nullspace(const ExactMatrix& m) {
    return m.nullspace();
}

} // namespace addfeq
