#include "ghecke/linalg.hpp"

#include <algorithm>

namespace ghk {

CMat cidentity(int n) {
    CMat m = czeros(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = Cyclo(1);
    return m;
}

CMat czeros(int rows, int cols) {
    CMat m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = Cyclo(0);
    return m;
}

bool is_zero(const CMat& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) return false;
    return true;
}

std::vector<int> rref(CMat& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int p = -1;
        for (int i = row; i < m.rows(); ++i) {
            if (!m(i, col).is_zero()) {
                p = i;
                break;
            }
        }
        if (p < 0) continue;
        if (p != row) m.row(p).swap(m.row(row));
        Cyclo inv = m(row, col).inverse();
        for (int j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            Cyclo f = m(i, col);
            for (int j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int rank(CMat m) { return static_cast<int>(rref(m).size()); }

CMat kernel(const CMat& m) {
    CMat e = m;
    std::vector<int> pivots = rref(e);
    const int n = static_cast<int>(m.cols());
    std::vector<int> free_cols;
    {
        std::vector<char> is_pivot(n, 0);
        for (int c : pivots) is_pivot[c] = 1;
        for (int c = 0; c < n; ++c)
            if (!is_pivot[c]) free_cols.push_back(c);
    }
    CMat out = czeros(n, static_cast<int>(free_cols.size()));
    for (size_t k = 0; k < free_cols.size(); ++k) {
        int fc = free_cols[k];
        out(fc, static_cast<int>(k)) = Cyclo(1);
        for (size_t i = 0; i < pivots.size(); ++i) out(pivots[i], static_cast<int>(k)) = -e(static_cast<int>(i), fc);
    }
    return out;
}

std::optional<CVec> solve(const CMat& m, const CVec& b) {
    CMat aug = czeros(static_cast<int>(m.rows()), static_cast<int>(m.cols()) + 1);
    aug.block(0, 0, m.rows(), m.cols()) = m;
    aug.col(m.cols()) = b;
    std::vector<int> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    CVec x = czeros(static_cast<int>(m.cols()), 1);
    for (size_t i = 0; i < pivots.size(); ++i) x(pivots[i]) = aug(static_cast<int>(i), m.cols());
    return x;
}

std::optional<CMat> inverse(const CMat& m) {
    const int n = static_cast<int>(m.rows());
    CMat aug = czeros(n, 2 * n);
    aug.block(0, 0, n, n) = m;
    aug.block(0, n, n, n) = cidentity(n);
    std::vector<int> pivots = rref(aug);
    if (static_cast<int>(pivots.size()) < n || pivots[n - 1] != n - 1) return std::nullopt;
    return CMat(aug.block(0, n, n, n));
}

void RowSpace::reduce(CVec& v) const {
    for (size_t i = 0; i < rows_.size(); ++i) {
        const Cyclo& c = v(pivots_[i]);
        if (c.is_zero()) continue;
        Cyclo f = c;
        v -= f * rows_[i];
    }
}

bool RowSpace::insert(CVec v) {
    reduce(v);
    int p = -1;
    for (int i = 0; i < ambient_; ++i) {
        if (!v(i).is_zero()) {
            p = i;
            break;
        }
    }
    if (p < 0) return false;
    Cyclo inv = v(p).inverse();
    for (int i = 0; i < ambient_; ++i) v(i) *= inv;
    // Back-substitute into existing rows to keep the basis reduced.
    for (size_t i = 0; i < rows_.size(); ++i) {
        Cyclo f = rows_[i](p);
        if (!f.is_zero()) rows_[i] -= f * v;
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
}

bool RowSpace::contains(CVec v) const {
    reduce(v);
    for (int i = 0; i < ambient_; ++i)
        if (!v(i).is_zero()) return false;
    return true;
}

bool RowSpace::contains_all(const CMat& columns) const {
    for (int j = 0; j < columns.cols(); ++j)
        if (!contains(columns.col(j))) return false;
    return true;
}

CMat RowSpace::basis() const {
    CMat out = czeros(ambient_, dim());
    for (int j = 0; j < dim(); ++j) out.col(j) = rows_[j];
    return out;
}

}  // namespace ghk
