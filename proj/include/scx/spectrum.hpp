#pragma once

#include <Eigen/Dense>
#include <vector>

#include "scx/laplacian.hpp"

namespace scx {

/// Ascending real eigenvalue multiset with a comparison tolerance.
struct Spectrum {
    std::vector<double> values;
    double tol = 1e-7;

    int size() const { return int(values.size()); }
    double max() const { return values.empty() ? 0.0 : values.back(); }
    int zero_multiplicity() const;
};

/// Full spectrum of a symmetric matrix, ascending with multiplicity.
/// Throws NotSymmetric when the asymmetry exceeds 1e-10 (relative).
/// With check_residuals set, every pair is verified against
/// ||Mv - lambda v|| <= 1e-8 ||M||.
Spectrum eigenvalues(const Eigen::MatrixXd& m, double tol = 1e-7,
                     bool check_residuals = false);

/// Similarity transform W^{1/2} L W^{-1/2} restricted to the positive-weight
/// basis faces. Zero-weight faces contribute exact zero eigenvalues and are
/// reported through zero_count.
struct SymmetrizedBlock {
    Eigen::MatrixXd matrix;
    int zero_count = 0;
    std::vector<int> kept;  ///< basis indices with positive weight
};

SymmetrizedBlock symmetrized_positive_block(const LaplacianMatrix& l);

/// Spectrum of a Laplacian: eigensolve of the symmetrized positive block with
/// one zero appended per zero-weight basis face.
Spectrum spectrum_of(const LaplacianMatrix& l, double tol = 1e-7);

/// Spectrum of the chosen Laplace operator of K at dimension n.
Spectrum laplacian_spectrum(const WeightedComplex& k, int n, LaplacianKind kind,
                            Weighting weighting, double tol = 1e-7);

/// Greedy multiset inclusion: every value of `a` matches a distinct value of
/// `b` within tol.
bool multiset_contains(const Spectrum& a, const Spectrum& b, double tol);

/// Per-index match of two equal-length spectra within tol.
bool multiset_equal(const Spectrum& a, const Spectrum& b, double tol);

/// One-based lookup with padding: low_pad for k <= 0, high_pad past the end.
double padded_lookup(const Spectrum& s, int k, double low_pad, double high_pad);

}  // namespace scx
