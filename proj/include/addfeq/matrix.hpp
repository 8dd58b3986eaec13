#pragma once

#include <cstddef>
#include <vector>

#include "addfeq/rational.hpp"

namespace addfeq {

// Dense matrix of exact rationals.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    static ExactMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    void append_row(const std::vector<Rational>& row);

    std::size_t rank() const;

    // Basis of {v : M v = 0}, one vector per free column of the reduced form.
    // Postcondition M v = 0 is checked exactly for every vector, and
    // rank + nullity = cols.
    std::vector<std::vector<Rational>> nullspace() const;

    // Whether M x = rhs admits a solution (rank of augmented vs plain).
    bool consistent(const std::vector<Rational>& rhs) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

std::vector<std::vector<Rational>> nullspace(const ExactMatrix& m);

} // namespace addfeq
