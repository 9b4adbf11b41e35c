#include "scx/spectrum.hpp"

#include <algorithm>
#include <cmath>

#include "scx/jacobi.hpp"

namespace scx {

int Spectrum::zero_multiplicity() const {
    int count = 0;
    for (double v : values)
        if (std::abs(v) <= tol) ++count;
    return count;
}

Spectrum eigenvalues(const Eigen::MatrixXd& m, double tol, bool check_residuals) {
    const double scale = m.size() ? std::max(1.0, m.cwiseAbs().maxCoeff()) : 1.0;
    if (m.rows() != m.cols() || symmetry_defect(m) > 1e-10 * scale)
        throw Error(ErrorCode::NotSymmetric, "eigenvalues need a symmetric matrix");
    Spectrum s;
    s.tol = tol;
    if (check_residuals) {
        Eigen::MatrixXd vectors;
        s.values = jacobi_eigenvalues(m, &vectors);
        const double norm = m.size() ? m.norm() : 0.0;
        for (int i = 0; i < int(s.values.size()); ++i) {
            const double residual =
                (m * vectors.col(i) - s.values[size_t(i)] * vectors.col(i)).norm();
            if (residual > 1e-8 * std::max(1.0, norm))
                throw Error(ErrorCode::NotSymmetric, "eigenpair residual out of bounds");
        }
    } else {
        s.values = jacobi_eigenvalues(m);
    }
    return s;
}

SymmetrizedBlock symmetrized_positive_block(const LaplacianMatrix& l) {
    SymmetrizedBlock out;
    for (int i = 0; i < int(l.basis.size()); ++i) {
        if (l.basis_weights[size_t(i)] > 0)
            out.kept.push_back(i);
        else
            ++out.zero_count;
    }
    const int m = int(out.kept.size());
    out.matrix = Eigen::MatrixXd::Zero(m, m);
    std::vector<double> sqrt_w(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i)
        sqrt_w[size_t(i)] = std::sqrt(to_double(l.basis_weights[size_t(out.kept[size_t(i)])]));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            out.matrix(i, j) = to_double(l.mat(out.kept[size_t(i)], out.kept[size_t(j)])) *
                               sqrt_w[size_t(i)] / sqrt_w[size_t(j)];
    out.matrix = ((out.matrix + out.matrix.transpose()) / 2.0).eval();
    return out;
}

Spectrum spectrum_of(const LaplacianMatrix& l, double tol) {
    SymmetrizedBlock block = symmetrized_positive_block(l);
    Spectrum s = eigenvalues(block.matrix, tol);
    for (int i = 0; i < block.zero_count; ++i) s.values.push_back(0.0);
    std::sort(s.values.begin(), s.values.end());
    return s;
}

Spectrum laplacian_spectrum(const WeightedComplex& k, int n, LaplacianKind kind,
                            Weighting weighting, double tol) {
    return spectrum_of(laplacian(k, n, kind, weighting), tol);
}

bool multiset_contains(const Spectrum& a, const Spectrum& b, double tol) {
    size_t j = 0;
    for (double value : a.values) {
        while (j < b.values.size() && b.values[j] < value - tol) ++j;
        if (j == b.values.size() || b.values[j] > value + tol) return false;
        ++j;  // consume the matched entry
    }
    return true;
}

bool multiset_equal(const Spectrum& a, const Spectrum& b, double tol) {
    if (a.values.size() != b.values.size()) return false;
    for (size_t i = 0; i < a.values.size(); ++i)
        if (std::abs(a.values[i] - b.values[i]) > tol) return false;
    return true;
}

double padded_lookup(const Spectrum& s, int k, double low_pad, double high_pad) {
    if (k <= 0) return low_pad;
    if (k > int(s.values.size())) return high_pad;
    return s.values[size_t(k - 1)];
}

}  // namespace scx
