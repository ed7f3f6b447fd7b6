#ifndef OSCTAIL_GAUSS_KRONROD_HPP
#define OSCTAIL_GAUSS_KRONROD_HPP

#include <vector>

namespace osctail {

/// Gauss-Kronrod pair on [-1, 1]: an m-point Gauss rule embedded in a
/// (2m + 1)-point Kronrod extension.
///
/// Nodes are ascending. The Gauss nodes are the odd-indexed Kronrod nodes;
/// `gauss_weights` is zero at the even indices.
struct KronrodRule {
    int gauss_points = 0;
    std::vector<double> nodes;
    std::vector<double> kronrod_weights;
    std::vector<double> gauss_weights;

    int size() const noexcept { return static_cast<int>(nodes.size()); }
};

/// Builds the rule for m Gauss points from the Legendre recurrence
/// (Laurie's Jacobi-Kronrod matrix, then a symmetric tridiagonal eigensolve).
KronrodRule compute_kronrod_rule(int gauss_points);

/// Cached rule with `total_nodes` = 2m + 1 points. Thread safe.
const KronrodRule& kronrod_rule(int total_nodes);

} // namespace osctail

#endif // OSCTAIL_GAUSS_KRONROD_HPP
