#include "scx/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace scx {

double symmetry_defect(const Eigen::MatrixXd& a) {
    if (a.size() == 0) return 0.0;
    return (a - a.transpose()).cwiseAbs().maxCoeff();
}

std::vector<double> jacobi_eigenvalues(Eigen::MatrixXd a, Eigen::MatrixXd* vectors) {
    const int n = int(a.rows());
    if (n == 0) return {};
    a = ((a + a.transpose()) / 2.0).eval();
    if (vectors) *vectors = Eigen::MatrixXd::Identity(n, n);

    auto off_norm = [&]() {
        double s = 0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) s += a(p, q) * a(p, q);
        return std::sqrt(2 * s);
    };

    const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
    const double stop = 1e-15 * scale * n;
    for (int sweep = 0; sweep < 64 && off_norm() > stop; ++sweep) {
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (std::abs(apq) <= 1e-300) continue;
                const double theta = (a(q, q) - a(p, p)) / (2 * apq);
                double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                if (theta < 0) t = -t;
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);
                const double h = t * apq;
                a(p, p) -= h;
                a(q, q) += h;
                a(p, q) = a(q, p) = 0.0;
                for (int i = 0; i < n; ++i) {
                    if (i == p || i == q) continue;
                    const double aip = a(i, p);
                    const double aiq = a(i, q);
                    a(i, p) = a(p, i) = aip - s * (aiq + tau * aip);
                    a(i, q) = a(q, i) = aiq + s * (aip - tau * aiq);
                }
                if (vectors)
                    for (int i = 0; i < n; ++i) {
                        const double vip = (*vectors)(i, p);
                        const double viq = (*vectors)(i, q);
                        (*vectors)(i, p) = vip - s * (viq + tau * vip);
                        (*vectors)(i, q) = viq + s * (vip - tau * viq);
                    }
            }
    }

    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return a(i, i) < a(j, j); });
    std::vector<double> values(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) values[size_t(i)] = a(order[size_t(i)], order[size_t(i)]);
    if (vectors) {
        Eigen::MatrixXd sorted(n, n);
        for (int i = 0; i < n; ++i) sorted.col(i) = vectors->col(order[size_t(i)]);
        *vectors = sorted;
    }
    return values;
}

}  // namespace scx
