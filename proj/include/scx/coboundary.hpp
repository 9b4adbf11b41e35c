#pragma once

#include <vector>

#include "scx/complex.hpp"
#include "scx/rational.hpp"

namespace scx {

/// Signed incidence of n-faces into (n+1)-faces, stored sparsely by row.
/// Rows are indexed by (n+1)-faces, columns by n-faces, both lexicographic.
/// entry(Fbar, F) = sgn([F], d[Fbar]) when F is a facet of Fbar, else 0.
struct CoboundaryMatrix {
    int n = 0;
    int rows = 0;
    int cols = 0;
    struct Entry {
        int col;
        int sign;
    };
    std::vector<std::vector<Entry>> row_entries;

    std::vector<std::vector<Integer>> to_integer() const;
    RationalMatrix to_rational() const;
};

/// The n-th coboundary matrix of K. Empty dimensions give 0-by-m matrices.
CoboundaryMatrix coboundary(const WeightedComplex& k, int n);

/// Diagonal of face weights at one dimension.
struct WeightDiagonal {
    int n = 0;
    std::vector<Rational> values;
};

WeightDiagonal weight_diagonal(const WeightedComplex& k, int n);

/// Formal adjoint of the coboundary under the weighted inner products:
/// A = P(W_n) D^T W_{n+1} with P the pseudo-inverse of the diagonal,
/// extended by zero on faces of weight zero. Rows are n-faces, columns
/// (n+1)-faces.
RationalMatrix formal_adjoint(const CoboundaryMatrix& d, const WeightDiagonal& w_n,
                              const WeightDiagonal& w_np1);

/// Exact rank of the n-th coboundary (weights never change it).
int coboundary_rank(const WeightedComplex& k, int n);

}  // namespace scx
