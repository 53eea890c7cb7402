#pragma once

#include <vector>

#include "assortflow/common.hpp"

namespace assortflow {

// Exact-arithmetic-style dense simplex for small LPs:
//   maximize c'x  subject to  Ax <= b, x >= 0, with b >= 0.
// The all-slack basis is feasible, and Bland's pivoting rule guards against
// cycling on the degenerate rows these models produce.
struct LpResult {
    double objective = 0.0;
    std::vector<double> x;
};

LpResult simplex_maximize(const std::vector<std::vector<double>>& A, const std::vector<double>& b,
                          const std::vector<double>& c);

}  // namespace assortflow
