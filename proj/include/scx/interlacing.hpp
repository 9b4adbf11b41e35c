#pragma once

#include <optional>
#include <string>
#include <vector>

#include "scx/cohomology.hpp"
#include "scx/collapse.hpp"
#include "scx/simplicial_map.hpp"
#include "scx/spectrum.hpp"

namespace scx {

/// Topological shift constants entering the index windows.
struct ShiftConstants {
    int d_w = 0;  ///< dim C^{n+1}(H) - dim H^{n+1}(H) = rank of H's n-coboundary
    int d_h = 0;  ///< dim C^n(H)
    int d_z = 0;  ///< dim C^n(L) - dim C^{n+1}(L') + dim H^{n+1}(L')
    int z = 0;    ///< target n-faces hit by collapsed (n+1)-faces
    int m = 0;    ///< identified (n+1)-face pair count of a contraction
    int n_k = 0;  ///< eigenvalue count on the larger side
    int n_l = 0;  ///< eigenvalue count on the smaller side
};

/// One row of an interlacing check: lower <= theta_k <= upper with the
/// padded indices made explicit. An unchecked side holds a quiet NaN.
struct IndexRecord {
    int k = 0;
    int lower_index = 0;
    double lower = 0.0;
    double theta = 0.0;
    int upper_index = 0;
    double upper = 0.0;
    bool upper_checked = true;
    bool lower_checked = true;
    bool pass = false;
    double slack = 0.0;
};

struct InterlacingReport {
    std::string theorem;
    int dim = 0;
    ShiftConstants shifts;
    double tolerance = 1e-9;
    std::vector<IndexRecord> records;
    std::vector<std::string> notes;
    bool passed = false;
    double min_slack = 0.0;

    /// Lambda and theta spectra of the checked pair (kept for evidence).
    std::vector<double> lambda;
    std::vector<double> theta;
};

/// Index window lambda_{k-a} * lower_coef <= theta_k <= lambda_{k+b} * upper_coef.
struct WindowSpec {
    int lower_shift = 0;
    int upper_shift = 0;
    double lower_pad = 0.0;
    std::optional<double> upper_pad;  ///< absent: skip upper checks past the end
    double lower_coef = 1.0;
    double upper_coef = 1.0;
    bool check_lower = true;
    bool check_upper = true;
};

InterlacingReport check_window(std::string theorem, int n, ShiftConstants shifts,
                               const Spectrum& lambda, const Spectrum& theta,
                               const WindowSpec& window, double tol = 1e-9);

/// Subcomplex deletion (the main interlacing statement and its combinatorial
/// and normalized variants, which differ in the upper padding policy).
InterlacingReport verify_deletion(const WeightedComplex& k, const WeightedComplex& h,
                                  int n, Weighting weighting, double tol = 1e-9);

/// Two-sided ratio bounds with the exact-rank shift D_Z.
InterlacingReport verify_ratio_bounds(const WeightedComplex& k, const WeightedComplex& h,
                                      int n, double tol = 1e-9);

/// Maximum-eigenvalue bound at every dimension of the complex.
InterlacingReport verify_max_bound(const WeightedComplex& l, double tol = 1e-9);

/// Covering interlacing under rule-(ii) induced weights.
InterlacingReport verify_covering(const SimplicialMap& phi, int n, Weighting weighting,
                                  double tol = 1e-9);

/// Strong-covering spectrum inclusion. With evidence mode the check also runs
/// for non-strong coverings and reports the outcome instead of throwing.
InterlacingReport verify_strong_cover_inclusion(const SimplicialMap& phi, int n,
                                                Weighting flavor, bool evidence_mode = false,
                                                double tol = 1e-7);

/// Simplicial-map interlacing for the two induced-weight rules.
InterlacingReport verify_simplicial_map(const SimplicialMap& phi, int n, WeightRule rule,
                                        double tol = 1e-9);

/// Elementary contraction, with the type-dependent window. Contractions that
/// reduce to collapses are routed to verify_collapse.
InterlacingReport verify_contraction(const WeightedComplex& k, const ContractionSpec& spec,
                                     Weighting flavor, double tol = 1e-9);

/// Elementary collapse window at the dimension of the free face.
InterlacingReport verify_collapse(const WeightedComplex& k, const Simplex& fbar,
                                  const Simplex& f, Weighting flavor, double tol = 1e-9);

/// Relative-pair interlacing with a principal-submatrix cross-check.
InterlacingReport verify_relative(const WeightedComplex& k, const WeightedComplex& k0,
                                  int n, Weighting weighting, double tol = 1e-9);

}  // namespace scx
