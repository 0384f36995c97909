#pragma once

#include <vector>

namespace qshuffle {

// Dense exact linear algebra over any field type with +, -, *, /, is_zero().
// Small matrices only; fraction growth is kept in check by the field's own
// normalization.

template <typename K>
using Matrix = std::vector<std::vector<K>>;

// Row-reduces in place, returns the rank. Rows keep their width.
template <typename K>
int row_reduce(Matrix<K>& m) {
    if (m.empty()) return 0;
    const size_t cols = m[0].size();
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < m.size(); ++col) {
        size_t pivot = rank;
        while (pivot < m.size() && m[pivot][col].is_zero()) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[rank], m[pivot]);
        K inv = K(1) / m[rank][col];
        for (size_t j = col; j < cols; ++j) m[rank][j] = m[rank][j] * inv;
        for (size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][col].is_zero()) continue;
            K factor = m[r][col];
            for (size_t j = col; j < cols; ++j)
                m[r][j] = m[r][j] - factor * m[rank][j];
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

template <typename K>
int matrix_rank(Matrix<K> m) {
    return row_reduce(m);
}

// Basis of the right null space {x : m x = 0}.
template <typename K>
Matrix<K> null_space(Matrix<K> m) {
    if (m.empty()) return {};
    const size_t cols = m[0].size();
    row_reduce(m);
    // Locate pivot columns.
    std::vector<int> pivot_of_col(cols, -1);
    size_t r = 0;
    for (size_t col = 0; col < cols && r < m.size(); ++col) {
        if (!m[r][col].is_zero()) pivot_of_col[col] = static_cast<int>(r++);
    }
    Matrix<K> basis;
    for (size_t free_col = 0; free_col < cols; ++free_col) {
        if (pivot_of_col[free_col] >= 0) continue;
        std::vector<K> v(cols, K(0));
        v[free_col] = K(1);
        for (size_t col = 0; col < cols; ++col) {
            int pr = pivot_of_col[col];
            if (pr >= 0) v[col] = K(0) - m[pr][free_col];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// Solves m x = rhs if consistent; returns false on inconsistency. When the
// system is underdetermined, free variables are set to zero.
template <typename K>
bool solve_linear(Matrix<K> m, std::vector<K> rhs, std::vector<K>& out) {
    const size_t rows = m.size();
    const size_t cols = rows == 0 ? 0 : m[0].size();
    for (size_t r = 0; r < rows; ++r) m[r].push_back(rhs[r]);
    row_reduce(m);
    out.assign(cols, K(0));
    for (size_t r = 0; r < rows; ++r) {
        size_t lead = 0;
        while (lead < cols && m[r][lead].is_zero()) ++lead;
        if (lead == cols) {
            if (!m[r][cols].is_zero()) return false;  // 0 = nonzero
            continue;
        }
        out[lead] = m[r][cols];
    }
    return true;
}

}  // namespace qshuffle
