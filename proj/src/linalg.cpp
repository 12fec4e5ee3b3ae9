#include "milnor/linalg.hpp"

namespace milnor {

std::vector<int> reduced_row_echelon(QMatrix& a) {
    std::vector<int> pivots;
    if (a.empty()) return pivots;
    int rows = static_cast<int>(a.size());
    int cols = static_cast<int>(a[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (a[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[piv], a[r]);
        mpq_class d = a[r][c];
        for (int j = c; j < cols; ++j) a[r][j] /= d;
        for (int i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            mpq_class f = a[i][c];
            for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int rank(QMatrix a) { return static_cast<int>(reduced_row_echelon(a).size()); }

std::vector<QRow> nullspace(QMatrix a) {
    if (a.empty()) return {};
    int cols = static_cast<int>(a[0].size());
    std::vector<int> pivots = reduced_row_echelon(a);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<QRow> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        QRow v(cols, 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<QRow> solve(QMatrix a, QRow b) {
    int rows = static_cast<int>(a.size());
    int cols = a.empty() ? 0 : static_cast<int>(a[0].size());
    for (int i = 0; i < rows; ++i) a[i].push_back(b[i]);
    std::vector<int> pivots = reduced_row_echelon(a);
    QRow x(cols, 0);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == cols) return std::nullopt;  // pivot in the constant column
        x[pivots[r]] = a[r][cols];
    }
    return x;
}

mpq_class determinant(QMatrix a) {
    int n = static_cast<int>(a.size());
    mpq_class det = 1;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i)
            if (a[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) return 0;
        if (piv != c) {
            std::swap(a[piv], a[c]);
            det = -det;
        }
        det *= a[c][c];
        mpq_class d = a[c][c];
        for (int i = c + 1; i < n; ++i) {
            if (a[i][c] == 0) continue;
            mpq_class f = a[i][c] / d;
            for (int j = c; j < n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    return det;
}

}  // namespace milnor
