#include "gdiff/linalg.hpp"

#include <stdexcept>

namespace gdiff {

namespace {

// smaller is better: prefers integral entries, then fewer limbs
std::pair<int, size_t> pivot_cost(const Rational& q) {
    int frac = q.get_den() == 1 ? 0 : 1;
    size_t bits = mpz_sizeinbase(q.get_num().get_mpz_t(), 2) +
                  mpz_sizeinbase(q.get_den().get_mpz_t(), 2);
    return {frac, bits};
}

}  // namespace

int rref_in_place(QMatrix& m) {
    if (m.empty()) return 0;
    const size_t rows = m.size();
    const size_t cols = m[0].size();
    for (const auto& r : m)
        if (r.size() != cols) throw std::invalid_argument("ragged matrix");

    size_t pivot_row = 0;
    for (size_t col = 0; col < cols && pivot_row < rows; ++col) {
        size_t best = rows;
        std::pair<int, size_t> best_cost{2, ~size_t{0}};
        for (size_t r = pivot_row; r < rows; ++r) {
            if (m[r][col] == 0) continue;
            auto cost = pivot_cost(m[r][col]);
            if (best == rows || cost < best_cost) {
                best = r;
                best_cost = cost;
            }
        }
        if (best == rows) continue;
        std::swap(m[pivot_row], m[best]);

        Rational inv = 1 / m[pivot_row][col];
        for (size_t c = col; c < cols; ++c) m[pivot_row][c] *= inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == pivot_row || m[r][col] == 0) continue;
            Rational f = m[r][col];
            for (size_t c = col; c < cols; ++c) m[r][c] -= f * m[pivot_row][c];
        }
        ++pivot_row;
    }
    return static_cast<int>(pivot_row);
}

std::vector<int> pivot_columns(const QMatrix& m) {
    std::vector<int> pivots;
    for (const auto& row : m) {
        for (size_t c = 0; c < row.size(); ++c) {
            if (row[c] != 0) {
                pivots.push_back(static_cast<int>(c));
                break;
            }
        }
    }
    return pivots;
}

QMatrix nullspace_basis(QMatrix m, int ncols) {
    const size_t cols = static_cast<size_t>(ncols);
    if (m.empty()) {
        QMatrix basis;
        for (size_t j = 0; j < cols; ++j) {
            QRow v(cols, Rational(0));
            v[j] = 1;
            basis.push_back(std::move(v));
        }
        return basis;
    }
    int rank = rref_in_place(m);
    std::vector<int> pivots = pivot_columns(m);
    std::vector<bool> is_pivot(cols, false);
    for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;

    QMatrix basis;
    for (size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        QRow v(cols, Rational(0));
        v[free_col] = 1;
        for (int r = 0; r < rank; ++r)
            v[static_cast<size_t>(pivots[static_cast<size_t>(r)])] = -m[static_cast<size_t>(r)][free_col];
        basis.push_back(std::move(v));
    }
    return basis;
}

bool in_row_span(const QMatrix& rref, QRow v) {
    std::vector<int> pivots = pivot_columns(rref);
    for (size_t r = 0; r < rref.size() && r < pivots.size(); ++r) {
        size_t p = static_cast<size_t>(pivots[r]);
        if (v[p] == 0) continue;
        Rational f = v[p];
        for (size_t c = 0; c < v.size(); ++c) v[c] -= f * rref[r][c];
    }
    for (const Rational& q : v)
        if (q != 0) return false;
    return true;
}

}  // namespace gdiff
