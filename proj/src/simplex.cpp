#include "assortflow/simplex.hpp"

#include <cmath>
#include <limits>

namespace assortflow {

LpResult simplex_maximize(const std::vector<std::vector<double>>& A, const std::vector<double>& b,
                          const std::vector<double>& c) {
    const int m = static_cast<int>(A.size());
    const int n = static_cast<int>(c.size());
    for (int i = 0; i < m; ++i) {
        require(static_cast<int>(A[i].size()) == n, "simplex: ragged constraint matrix");
        require(b[i] >= 0.0, "simplex: negative right-hand side");
    }

    const int cols = n + m;  // structural variables then slacks
    std::vector<std::vector<double>> t(m, std::vector<double>(cols + 1, 0.0));
    std::vector<double> obj(cols + 1, 0.0);
    std::vector<int> basis(m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) t[i][j] = A[i][j];
        t[i][n + i] = 1.0;
        t[i][cols] = b[i];
        basis[i] = n + i;
    }
    for (int j = 0; j < n; ++j) obj[j] = c[j];

    const double tol = 1e-9;
    const long max_iter = 200000L + 50L * static_cast<long>(m) * cols;
    for (long iter = 0;; ++iter) {
        require(iter < max_iter, "simplex: iteration limit reached");

        int enter = -1;  // Bland: lowest-index improving column
        for (int j = 0; j < cols; ++j) {
            if (obj[j] > tol) {
                enter = j;
                break;
            }
        }
        if (enter < 0) break;

        int leave = -1;
        double best_ratio = std::numeric_limits<double>::infinity();
        for (int i = 0; i < m; ++i) {
            if (t[i][enter] > tol) {
                double ratio = t[i][cols] / t[i][enter];
                if (ratio < best_ratio - tol ||
                    (ratio < best_ratio + tol && (leave < 0 || basis[i] < basis[leave]))) {
                    best_ratio = ratio;
                    leave = i;
                }
            }
        }
        require(leave >= 0, "simplex: unbounded objective");

        double piv = t[leave][enter];
        for (int j = 0; j <= cols; ++j) t[leave][j] /= piv;
        for (int i = 0; i < m; ++i) {
            if (i == leave) continue;
            double f = t[i][enter];
            if (f == 0.0) continue;
            for (int j = 0; j <= cols; ++j) t[i][j] -= f * t[leave][j];
        }
        double f = obj[enter];
        for (int j = 0; j <= cols; ++j) obj[j] -= f * t[leave][j];
        basis[leave] = enter;
    }

    LpResult res;
    res.x.assign(n, 0.0);
    for (int i = 0; i < m; ++i) {
        if (basis[i] < n) res.x[basis[i]] = t[i][cols];
    }
    res.objective = -obj[cols];
    return res;
}

}  // namespace assortflow
