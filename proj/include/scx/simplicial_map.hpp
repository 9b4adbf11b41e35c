#pragma once

#include <map>

#include "scx/complex.hpp"

namespace scx {

/// The two induced-weight conventions for a simplicial map. Rule ii sums the
/// weights of same-dimension preimages; rule i additionally subtracts the
/// weights of one-higher faces that collapse onto the target face.
enum class WeightRule { rule_i, rule_ii };

/// A simplicial map between weighted complexes, given by its vertex map.
/// Every source vertex must be mapped and every face image must span a face
/// of the target.
class SimplicialMap {
public:
    SimplicialMap(WeightedComplex source, WeightedComplex target,
                  std::map<int, int> vertex_map);

    const WeightedComplex& source() const { return source_; }
    const WeightedComplex& target() const { return target_; }
    const std::map<int, int>& vertex_map() const { return vertex_map_; }

    int apply(int vertex) const;

    /// Image face with the induced orientation sign: the parity of the
    /// permutation sorting the image vertex sequence, or 0 when the image has
    /// repeated vertices (the chain map sends such faces to zero).
    struct FaceImage {
        Simplex image;
        int sign;
    };
    FaceImage image(const Simplex& f) const;

private:
    WeightedComplex source_;
    WeightedComplex target_;
    std::map<int, int> vertex_map_;
};

/// The set of images of all faces of `source` (weights all 1).
WeightedComplex image_complex(const WeightedComplex& source,
                              const std::map<int, int>& vertex_map);

/// Target complex carrying the weights induced by the chosen rule.
/// Throws NegativeInducedWeight when rule i drives a weight below zero.
WeightedComplex apply_map(const SimplicialMap& phi, WeightRule rule);

/// True iff the preimage of every target face is a disjoint union of faces
/// each mapped bijectively. Requires a connected source.
bool is_covering(const SimplicialMap& phi);

/// True iff additionally every facet-coface incidence of the target lifts
/// through every preimage. Requires a covering.
bool is_strong_covering(const SimplicialMap& phi);

/// The constant preimage cardinality of a strong covering over a
/// path-connected target. Throws NotConstant when preimage sizes differ or
/// the target is not path-connected at some level.
int covering_degree(const SimplicialMap& phi);

}  // namespace scx
