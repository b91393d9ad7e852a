#pragma once

#include <polydiff/rational.hpp>

#include <optional>
#include <stdexcept>
#include <vector>

namespace polydiff {

// Dense matrix of exact rationals, row-major.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols, 0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& operator()(int r, int c) { return data_[size_t(r) * cols_ + c]; }
    const Rational& operator()(int r, int c) const { return data_[size_t(r) * cols_ + c]; }

private:
    int rows_, cols_;
    std::vector<Rational> data_;
};

// In-place reduced row echelon form; returns pivot column indices.
inline std::vector<int> rref(RatMatrix& m)
{
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int piv = -1;
        for (int i = r; i < m.rows(); ++i)
            if (m(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv < 0)
            continue;
        if (piv != r)
            for (int j = 0; j < m.cols(); ++j)
                std::swap(m(piv, j), m(r, j));
        Rational inv = m(r, c);
        for (int j = c; j < m.cols(); ++j)
            m(r, j) /= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0)
                continue;
            Rational f = m(i, c);
            for (int j = c; j < m.cols(); ++j)
                m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

// Basis of the right nullspace of m (columns as vectors), canonical:
// free variables set to 1 in increasing column order.
inline std::vector<std::vector<Rational>> nullspace(RatMatrix m)
{
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivots)
        is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        std::vector<Rational> v(m.cols(), 0);
        v[free] = 1;
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -m(int(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Solves A x = b; nullopt if inconsistent. Free variables are set to 0.
inline std::optional<std::vector<Rational>> solve(RatMatrix a, const std::vector<Rational>& b)
{
    if (int(b.size()) != a.rows())
        throw std::invalid_argument("solve: rhs size mismatch");
    RatMatrix aug(a.rows(), a.cols() + 1);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j)
            aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    std::vector<int> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == a.cols())
        return std::nullopt;
    std::vector<Rational> x(a.cols(), 0);
    for (size_t r = 0; r < pivots.size(); ++r)
        x[pivots[r]] = aug(int(r), a.cols());
    return x;
}

inline int rank(RatMatrix m) { return int(rref(m).size()); }

}  // namespace polydiff
