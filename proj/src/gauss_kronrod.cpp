#include "osctail/gauss_kronrod.hpp"

#include "osctail/errors.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>

namespace osctail {

namespace {

struct Recurrence {
    std::vector<double> a;
    std::vector<double> b;
};

// Monic Legendre recurrence on [-1, 1]; b[0] is the total mass.
Recurrence legendre_recurrence(int count)
{
    Recurrence r;
    r.a.assign(static_cast<std::size_t>(count), 0.0);
    r.b.resize(static_cast<std::size_t>(count));
    r.b[0] = 2.0;
    for (int k = 1; k < count; ++k) {
        const double kk = static_cast<double>(k) * k;
        r.b[static_cast<std::size_t>(k)] = kk / (4.0 * kk - 1.0);
    }
    return r;
}

// Jacobi-Kronrod matrix coefficients (D. P. Laurie, Math. Comp. 66, 1997).
Recurrence jacobi_kronrod(int n)
{
    const Recurrence base = legendre_recurrence(3 * n / 2 + 2);
    const auto sz = static_cast<std::size_t>(2 * n + 1);
    std::vector<double> a(sz, 0.0);
    std::vector<double> b(sz, 0.0);
    for (int k = 0; k <= 3 * n / 2; ++k)
        a[static_cast<std::size_t>(k)] = base.a[static_cast<std::size_t>(k)];
    for (int k = 0; k <= (3 * n + 1) / 2; ++k)
        b[static_cast<std::size_t>(k)] = base.b[static_cast<std::size_t>(k)];

    const auto width = static_cast<std::size_t>(n / 2 + 2);
    std::vector<double> s(width, 0.0);
    std::vector<double> t(width, 0.0);
    t[1] = b[static_cast<std::size_t>(n + 1)];

    auto at = [](std::vector<double>& v, int i) -> double& { return v[static_cast<std::size_t>(i)]; };

    std::vector<double> acc;
    for (int m = 0; m <= n - 2; ++m) {
        acc.clear();
        double running = 0.0;
        for (int k = (m + 1) / 2; k >= 0; --k) {
            const int l = m - k;
            running += (at(a, k + n + 1) - at(a, l)) * at(t, k + 1) + at(b, k + n + 1) * at(s, k)
                       - at(b, l) * at(s, k + 1);
            acc.push_back(running);
        }
        std::size_t idx = 0;
        for (int k = (m + 1) / 2; k >= 0; --k)
            at(s, k + 1) = acc[idx++];
        std::swap(s, t);
    }

    for (int j = n / 2; j >= 0; --j)
        at(s, j + 1) = at(s, j);

    for (int m = n - 1; m <= 2 * n - 3; ++m) {
        acc.clear();
        double running = 0.0;
        const int k_lo = m + 1 - n;
        const int k_hi = (m - 1) / 2;
        int j_last = 0;
        for (int k = k_lo; k <= k_hi; ++k) {
            const int l = m - k;
            const int j = n - 1 - l;
            running += -(at(a, k + n + 1) - at(a, l)) * at(t, j + 1) - at(b, k + n + 1) * at(s, j + 1)
                       + at(b, l) * at(s, j + 2);
            acc.push_back(running);
        }
        std::size_t idx = 0;
        for (int k = k_lo; k <= k_hi; ++k) {
            const int j = n - 1 - (m - k);
            at(s, j + 1) = acc[idx++];
            j_last = j;
        }
        const int k = (m + 1) / 2;
        if (m % 2 == 0)
            at(a, k + n + 1) = at(a, k) + (at(s, j_last + 1) - at(b, k + n + 1) * at(s, j_last + 2))
                                              / at(t, j_last + 2);
        else
            at(b, k + n + 1) = at(s, j_last + 1) / at(s, j_last + 2);
        std::swap(s, t);
    }
    at(a, 2 * n) = at(a, n - 1) - at(b, 2 * n) * at(s, 1) / at(t, 1);
    return {std::move(a), std::move(b)};
}

// Golub-Welsch: nodes are eigenvalues of the Jacobi matrix, weights b0 * v0^2.
void solve_jacobi(const Recurrence& r, int size, std::vector<double>& nodes,
                  std::vector<double>& weights)
{
    Eigen::VectorXd diag(size);
    Eigen::VectorXd sub(std::max(size - 1, 0));
    for (int i = 0; i < size; ++i)
        diag(i) = r.a[static_cast<std::size_t>(i)];
    for (int i = 0; i + 1 < size; ++i)
        sub(i) = std::sqrt(r.b[static_cast<std::size_t>(i + 1)]);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success)
        throw NumericError("Kronrod rule: eigensolver failed");

    nodes.resize(static_cast<std::size_t>(size));
    weights.resize(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) {
        nodes[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
        const double v0 = solver.eigenvectors()(0, i);
        weights[static_cast<std::size_t>(i)] = r.b[0] * v0 * v0;
    }
}

void symmetrize(std::vector<double>& nodes, std::vector<double>& weights)
{
    const std::size_t n = nodes.size();
    for (std::size_t i = 0; i < n / 2; ++i) {
        const std::size_t j = n - 1 - i;
        const double x = 0.5 * (nodes[j] - nodes[i]);
        const double w = 0.5 * (weights[i] + weights[j]);
        nodes[i] = -x;
        nodes[j] = x;
        weights[i] = w;
        weights[j] = w;
    }
    if (n % 2 == 1)
        nodes[n / 2] = 0.0;
}

} // namespace

KronrodRule compute_kronrod_rule(int gauss_points)
{
    if (gauss_points < 1)
        throw DomainError("Kronrod rule: need at least one Gauss point");

    KronrodRule rule;
    rule.gauss_points = gauss_points;
    const int total = 2 * gauss_points + 1;

    solve_jacobi(jacobi_kronrod(gauss_points), total, rule.nodes, rule.kronrod_weights);
    symmetrize(rule.nodes, rule.kronrod_weights);

    std::vector<double> g_nodes;
    std::vector<double> g_weights;
    solve_jacobi(legendre_recurrence(gauss_points), gauss_points, g_nodes, g_weights);
    symmetrize(g_nodes, g_weights);

    rule.gauss_weights.assign(static_cast<std::size_t>(total), 0.0);
    for (int i = 0; i < gauss_points; ++i) {
        const auto ki = static_cast<std::size_t>(2 * i + 1);
        const auto gi = static_cast<std::size_t>(i);
        if (std::abs(rule.nodes[ki] - g_nodes[gi]) > 1e-12)
            throw NumericError("Kronrod rule: Gauss nodes do not interlace");
        rule.nodes[ki] = g_nodes[gi];
        rule.gauss_weights[ki] = g_weights[gi];
    }
    return rule;
}

const KronrodRule& kronrod_rule(int total_nodes)
{
    if (total_nodes < 3 || total_nodes % 2 == 0)
        throw DomainError("Kronrod rule: node count must be odd and >= 3");

    static std::mutex mutex;
    static std::map<int, std::unique_ptr<const KronrodRule>> cache;

    const std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(total_nodes);
    if (it == cache.end()) {
        auto rule = std::make_unique<const KronrodRule>(compute_kronrod_rule((total_nodes - 1) / 2));
        it = cache.emplace(total_nodes, std::move(rule)).first;
    }
    return *it->second;
}

} // namespace osctail
