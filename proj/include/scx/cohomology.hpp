#pragma once

#include <vector>

#include "scx/laplacian.hpp"
#include "scx/spectrum.hpp"

namespace scx {

/// Per-dimension cochain dimensions, exact coboundary ranks and cohomology
/// dimensions, computed over the sign matrices in integer arithmetic.
struct CohomologyDims {
    std::vector<int> dim_cochain;     ///< dim C^n
    std::vector<int> rank_coboundary; ///< rank of delta_n
    std::vector<int> dim_cohomology;  ///< dim H^n

    int cochain(int n) const;
    int rank(int n) const;
    int cohomology(int n) const;
    int euler_characteristic() const;
};

CohomologyDims cohomology_dims(const WeightedComplex& k);

/// Degenerate-aware Hodge check at dimension n: the zero-eigenvalue
/// multiplicity of the full Laplacian must equal dim H^n of the positive part
/// plus the number of zero-weight n-faces.
bool hodge_check(const WeightedComplex& k, int n, Weighting weighting = Weighting::raw,
                 double tol = 1e-7);

}  // namespace scx
