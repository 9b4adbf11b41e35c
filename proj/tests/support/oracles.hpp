#pragma once

// Test-only oracles, kept independent of the assembly paths they check.

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <vector>

#include "scx/complex.hpp"
#include "scx/laplacian.hpp"
#include "scx/rational.hpp"
#include "scx/simplex.hpp"

namespace scx::test {

// Up-Laplacian evaluated entry by entry from the operator's defining sums
// (shared cofaces of basis-face pairs), never through coboundary products.
inline RationalMatrix up_laplacian_by_formula(const WeightedComplex& k, int n) {
    const auto& basis = k.faces(n);
    const int size = int(basis.size());
    RationalMatrix m(size, size);
    for (int i = 0; i < size; ++i) {
        if (k.weights(n)[size_t(i)] == 0) continue;
        for (int j = 0; j < size; ++j) {
            Rational sum = 0;
            for (const Simplex& fbar : k.faces(n + 1)) {
                if (!fbar.contains_all(basis[size_t(i)]) ||
                    !fbar.contains_all(basis[size_t(j)]))
                    continue;
                const Rational coeff = k.weight(fbar) / k.weights(n)[size_t(i)];
                sum += coeff * boundary_sign(basis[size_t(i)], fbar) *
                       boundary_sign(basis[size_t(j)], fbar);
            }
            m(i, j) = sum;
        }
    }
    return m;
}

// Down-Laplacian from its defining sums over shared boundary faces.
inline RationalMatrix down_laplacian_by_formula(const WeightedComplex& k, int n) {
    const auto& basis = k.faces(n);
    const int size = int(basis.size());
    RationalMatrix m(size, size);
    if (n < 1) return m;
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) {
            Rational sum = 0;
            for (const Simplex& e : k.faces(n - 1)) {
                if (k.weight(e) == 0) continue;
                if (!basis[size_t(i)].contains_all(e) || !basis[size_t(j)].contains_all(e))
                    continue;
                if (i != j) {
                    // Off-diagonal terms exist only when the faces meet exactly in e.
                    int common = 0;
                    for (int v : basis[size_t(i)].vertices())
                        if (basis[size_t(j)].contains(v)) ++common;
                    if (common != n) continue;
                }
                sum += k.weights(n)[size_t(j)] / k.weight(e) *
                       boundary_sign(e, basis[size_t(i)]) *
                       boundary_sign(e, basis[size_t(j)]);
            }
            m(i, j) = sum;
        }
    return m;
}

inline Eigen::MatrixXd to_eigen(const RationalMatrix& m) {
    Eigen::MatrixXd out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(i, j) = to_double(m(i, j));
    return out;
}

// Reference eigensolver for cross-checking the Jacobi implementation.
inline std::vector<double> eigen_oracle(const Eigen::MatrixXd& m) {
    if (m.rows() == 0) return {};
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
    std::vector<double> values(solver.eigenvalues().data(),
                               solver.eigenvalues().data() + m.rows());
    std::sort(values.begin(), values.end());
    return values;
}

// Numerical rank through singular values.
inline int svd_rank(const Eigen::MatrixXd& m, double rel_tol = 1e-8) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const double cutoff = rel_tol * std::max(1.0, svd.singularValues()(0));
    int rank = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()(i) > cutoff) ++rank;
    return rank;
}

// Closed-form combinatorial path spectrum: 2 - 2 cos(k pi / n), k = 0..n-1.
inline std::vector<double> path_spectrum(int n) {
    std::vector<double> values;
    for (int k = 0; k < n; ++k)
        values.push_back(2.0 - 2.0 * std::cos(k * M_PI / n));
    std::sort(values.begin(), values.end());
    return values;
}

// Closed-form combinatorial cycle spectrum: 2 - 2 cos(2 pi k / n).
inline std::vector<double> cycle_spectrum(int n) {
    std::vector<double> values;
    for (int k = 0; k < n; ++k)
        values.push_back(2.0 - 2.0 * std::cos(2.0 * M_PI * k / n));
    std::sort(values.begin(), values.end());
    return values;
}

// Closed-form normalized cycle spectrum: 1 - cos(2 pi k / n).
inline std::vector<double> normalized_cycle_spectrum(int n) {
    std::vector<double> values;
    for (int k = 0; k < n; ++k)
        values.push_back(1.0 - std::cos(2.0 * M_PI * k / n));
    std::sort(values.begin(), values.end());
    return values;
}

// Common fixture: the five-vertex complex with edges 12,13,23,34,35 and the
// filled triangle 123, unit weights.
inline WeightedComplex fig1_complex() {
    return build_complex({{1, 2, 3}, {3, 4}, {3, 5}});
}

inline WeightedComplex cycle_complex(int n, int base = 0) {
    std::vector<std::vector<int>> edges;
    for (int i = 0; i < n; ++i) edges.push_back({base + i, base + (i + 1) % n});
    return build_complex(edges);
}

inline WeightedComplex path_complex(int n, int base = 0) {
    std::vector<std::vector<int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({base + i, base + i + 1});
    return build_complex(edges);
}

}  // namespace scx::test
