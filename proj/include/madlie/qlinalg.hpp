#pragma once

#include <optional>
#include <vector>

#include "madlie/rational.hpp"

namespace madlie {

// Dense exact linear algebra over Q, for fibre computations and constant
// matrices.  Row-major.
using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;

inline QMat q_identity(int n) {
    QMat m(n, QVec(n, Rational(0)));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline QMat q_mul(const QMat& a, const QMat& b) {
    int n = int(a.size()), k = int(b.size()), p = k ? int(b[0].size()) : 0;
    QMat r(n, QVec(p, Rational(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < k; ++j) {
            if (a[i][j] == 0) continue;
            for (int c = 0; c < p; ++c) r[i][c] += a[i][j] * b[j][c];
        }
    return r;
}

// Row echelon reduction in place; returns pivot columns.
inline std::vector<int> q_echelon(QMat& m) {
    std::vector<int> pivots;
    int rows = int(m.size());
    int cols = rows ? int(m[0].size()) : 0;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] != 0) { p = i; break; }
        if (p < 0) continue;
        std::swap(m[r], m[p]);
        Rational inv = Rational(1) / m[r][c];
        for (int j = c; j < cols; ++j) m[r][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline int q_rank(QMat m) { return int(q_echelon(m).size()); }

// Basis of {x : m x = 0} (column kernel).
inline std::vector<QVec> q_kernel(QMat m) {
    int cols = m.empty() ? 0 : int(m[0].size());
    auto pivots = q_echelon(m);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<QVec> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        QVec v(cols, Rational(0));
        v[free] = 1;
        // Back-substitute: row r pivots at pivots[r].
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

// Solve m x = b; empty optional when inconsistent.  Returns one solution
// (free coordinates set to 0).
inline std::optional<QVec> q_solve(QMat m, QVec b) {
    int rows = int(m.size());
    int cols = rows ? int(m[0].size()) : 0;
    for (int i = 0; i < rows; ++i) m[i].push_back(b[i]);
    auto pivots = q_echelon(m);
    QVec x(cols, Rational(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == cols) return std::nullopt;  // pivot in the augmented column
        x[pivots[r]] = m[r][cols];
    }
    // Verify (guards the free-coordinate choice).
    for (int i = 0; i < rows; ++i) {
        Rational acc(0);
        for (int j = 0; j < cols; ++j) acc += m[i][j] * x[j];
        if (acc != m[i][cols]) return std::nullopt;
    }
    return x;
}

inline std::optional<QMat> q_inverse(const QMat& m) {
    int n = int(m.size());
    QMat work(n, QVec(2 * n, Rational(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) work[i][j] = m[i][j];
        work[i][n + i] = 1;
    }
    auto pivots = q_echelon(work);
    if (int(pivots.size()) != n) return std::nullopt;
    for (int i = 0; i < n; ++i)
        if (pivots[i] != i) return std::nullopt;
    QMat inv(n, QVec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv[i][j] = work[i][n + j];
    return inv;
}

inline Rational q_det(QMat m) {
    int n = int(m.size());
    Rational d(1);
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = c; i < n; ++i)
            if (m[i][c] != 0) { p = i; break; }
        if (p < 0) return Rational(0);
        if (p != c) { std::swap(m[p], m[c]); d = -d; }
        d *= m[c][c];
        Rational inv = Rational(1) / m[c][c];
        for (int i = c + 1; i < n; ++i) {
            if (m[i][c] == 0) continue;
            Rational f = m[i][c] * inv;
            for (int j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return d;
}

}  // namespace madlie
