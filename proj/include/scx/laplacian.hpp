#pragma once

#include <string>
#include <vector>

#include "scx/coboundary.hpp"
#include "scx/complex.hpp"

namespace scx {

enum class LaplacianKind { up, down, full };
enum class Weighting { raw, combinatorial, normalized };

const char* to_string(LaplacianKind kind);
const char* to_string(Weighting weighting);
LaplacianKind laplacian_kind_from_string(const std::string& s);
Weighting weighting_from_string(const std::string& s);

/// A Laplace operator at one dimension in the elementary-cochain basis.
/// The matrix is exact; zero-weight basis faces carry identically zero rows
/// for the up part and zero columns for the down part.
struct LaplacianMatrix {
    int n = 0;
    LaplacianKind kind = LaplacianKind::up;
    Weighting weighting = Weighting::raw;
    bool relative = false;
    std::vector<Simplex> basis;          ///< n-faces indexing rows and columns
    std::vector<Rational> basis_weights; ///< weights of the basis faces
    RationalMatrix mat;
};

/// Weight transform backing the `weighting` parameter: raw keeps stored
/// weights, combinatorial replaces them all by 1, normalized applies
/// normalize_weights.
WeightedComplex resolve_weighting(const WeightedComplex& k, Weighting weighting);

/// Facets keep their stored weight; every non-facet F receives
/// w(F) = sum of the weights of its codimension-one cofaces, applied from the
/// top dimension downward. Requires a non-degenerate complex.
WeightedComplex normalize_weights(const WeightedComplex& k);

/// True iff w satisfies the normalizing condition exactly at every non-facet.
bool satisfies_normalizing_condition(const WeightedComplex& k);

LaplacianMatrix up_laplacian(const WeightedComplex& k, int n,
                             Weighting weighting = Weighting::raw);
LaplacianMatrix down_laplacian(const WeightedComplex& k, int n,
                               Weighting weighting = Weighting::raw);
LaplacianMatrix full_laplacian(const WeightedComplex& k, int n,
                               Weighting weighting = Weighting::raw);
LaplacianMatrix laplacian(const WeightedComplex& k, int n, LaplacianKind kind,
                          Weighting weighting = Weighting::raw);

/// Laplacian of the pair (K, K0): rows and columns are indexed by the n-faces
/// of K that are not in K0; the coboundaries are the relative ones (faces of
/// K0 dropped at every dimension). K0 must be a subcomplex with equal weights
/// on shared faces.
LaplacianMatrix relative_laplacian(const WeightedComplex& k, const WeightedComplex& k0,
                                   int n, LaplacianKind kind,
                                   Weighting weighting = Weighting::raw);

}  // namespace scx
