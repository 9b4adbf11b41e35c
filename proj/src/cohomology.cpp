#include "scx/cohomology.hpp"

namespace scx {

int CohomologyDims::cochain(int n) const {
    return (n >= 0 && n < int(dim_cochain.size())) ? dim_cochain[size_t(n)] : 0;
}

int CohomologyDims::rank(int n) const {
    return (n >= 0 && n < int(rank_coboundary.size())) ? rank_coboundary[size_t(n)] : 0;
}

int CohomologyDims::cohomology(int n) const {
    return (n >= 0 && n < int(dim_cohomology.size())) ? dim_cohomology[size_t(n)] : 0;
}

int CohomologyDims::euler_characteristic() const {
    int chi = 0;
    for (size_t n = 0; n < dim_cochain.size(); ++n)
        chi += (n % 2 == 0 ? 1 : -1) * dim_cochain[n];
    return chi;
}

CohomologyDims cohomology_dims(const WeightedComplex& k) {
    CohomologyDims out;
    const int dim = k.dimension();
    for (int n = 0; n <= dim; ++n) {
        out.dim_cochain.push_back(k.num_faces(n));
        out.rank_coboundary.push_back(coboundary_rank(k, n));
    }
    for (int n = 0; n <= dim; ++n) {
        const int rank_below = n > 0 ? out.rank_coboundary[size_t(n - 1)] : 0;
        out.dim_cohomology.push_back(out.dim_cochain[size_t(n)] -
                                     out.rank_coboundary[size_t(n)] - rank_below);
    }
    return out;
}

bool hodge_check(const WeightedComplex& k, int n, Weighting weighting, double tol) {
    const WeightedComplex resolved = resolve_weighting(k, weighting);
    const WeightedComplex positive = nonzero_part(resolved);
    const CohomologyDims dims = cohomology_dims(positive);
    const Spectrum s = laplacian_spectrum(resolved, n, LaplacianKind::full, Weighting::raw, tol);
    const int expected = dims.cohomology(n) + resolved.zero_weight_count(n);
    return s.zero_multiplicity() == expected;
}

}  // namespace scx
