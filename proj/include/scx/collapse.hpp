#pragma once

#include "scx/simplicial_map.hpp"

namespace scx {

/// Removes the free pair (Fbar, F): F must be a facet of Fbar and of no other
/// face of K. Weights are restricted. Throws NotFree.
WeightedComplex elementary_collapse(const WeightedComplex& k, const Simplex& fbar,
                                    const Simplex& f);

/// An elementary contraction: delete the (n+1)-face Fbar and identify the two
/// facets F and F'. Only those two facets may be incident to (n+1)-simplices
/// other than Fbar.
struct ContractionSpec {
    Simplex fbar;
    Simplex f;
    Simplex f_prime;
    // Classification, filled by elementary_contraction:
    int type = 0;  ///< 1 when any (n+1)-face pairs get identified, else 2
    int m = 0;     ///< number of identified (n+1)-face pairs
    bool reducible_to_collapses = false;  ///< F or F' has no outside coface
};

struct ContractionResult {
    WeightedComplex complex;  ///< the quotient with rule-induced weights
    SimplicialMap map;        ///< quotient map on the whole of K
    ContractionSpec spec;     ///< input spec with type and m filled
};

/// Performs the contraction; the returned weights follow the chosen rule
/// applied to K minus Fbar. Throws NotContractible when a third facet of Fbar
/// has outside cofaces or when K is not (dim Fbar)-dimensional.
ContractionResult elementary_contraction(const WeightedComplex& k, ContractionSpec spec,
                                         WeightRule rule = WeightRule::rule_ii);

}  // namespace scx
