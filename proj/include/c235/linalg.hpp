#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "c235/rational.hpp"

namespace c235 {

class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

    static RationalMatrix from_rows(const std::vector<RationalVector>& rows);
    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    void append_row(const RationalVector& row);

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

// exact rank via rational Gaussian elimination
std::size_t mat_rank(RationalMatrix m);

// exact basis of the right null space {v : M v = 0}; empty when trivial
std::vector<RationalVector> mat_nullspace(const RationalMatrix& m);

// one exact solution of M x = rhs, or nullopt if inconsistent
std::optional<RationalVector> mat_solve(const RationalMatrix& m, const RationalVector& rhs);

}  // namespace c235
