#include "c235/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace c235 {

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows) {
    RationalMatrix m;
    for (const auto& r : rows) m.append_row(r);
    return m;
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

void RationalMatrix::append_row(const RationalVector& row) {
    if (rows_ == 0 && cols_ == 0) cols_ = row.size();
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix row");
    a_.insert(a_.end(), row.begin(), row.end());
    ++rows_;
}

namespace {

// Reduced row echelon form in place; returns pivot column per pivot row.
std::vector<std::size_t> rref(RationalMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m.at(p, col) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
        const Rational inv = m.at(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) /= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            const Rational f = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::size_t mat_rank(RationalMatrix m) { return rref(m).size(); }

std::vector<RationalVector> mat_nullspace(const RationalMatrix& m) {
    RationalMatrix r = m;
    const std::vector<std::size_t> pivots = rref(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (const auto c : pivots) is_pivot[c] = true;

    std::vector<RationalVector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        RationalVector v(m.cols(), Rational(0));
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r.at(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RationalVector> mat_solve(const RationalMatrix& m, const RationalVector& rhs) {
    if (rhs.size() != m.rows()) throw std::invalid_argument("mat_solve: rhs size mismatch");
    RationalMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = rhs[i];
    }
    const std::vector<std::size_t> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;  // 0 = 1 row
    RationalVector x(m.cols(), Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, m.cols());
    return x;
}

}  // namespace c235
