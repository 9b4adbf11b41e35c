#pragma once

#include <map>
#include <optional>
#include <vector>

#include "scx/rational.hpp"
#include "scx/simplex.hpp"

namespace scx {

/// An abstract weighted simplicial complex. Faces are grouped by dimension and
/// kept in lexicographic order; that order fixes every matrix basis. Weights
/// are exact rationals, non-negative, and strictly positive unless the complex
/// was built with degenerate weights allowed. Immutable after construction.
class WeightedComplex {
public:
    WeightedComplex() = default;

    /// Faces must form a complex (closed under inclusion). Weight vectors run
    /// parallel to the face lists.
    WeightedComplex(std::vector<std::vector<Simplex>> faces,
                    std::vector<std::vector<Rational>> weights,
                    bool degenerate_allowed);

    /// Dimension of the complex, -1 when empty.
    int dimension() const { return int(faces_.size()) - 1; }
    bool empty() const { return faces_.empty(); }
    int num_vertices() const { return num_faces(0); }

    int num_faces(int dim) const {
        return (dim >= 0 && dim <= dimension()) ? int(faces_[size_t(dim)].size()) : 0;
    }
    int total_faces() const;

    const std::vector<Simplex>& faces(int dim) const;
    const std::vector<Rational>& weights(int dim) const;

    std::optional<int> face_index(const Simplex& s) const;
    bool has_face(const Simplex& s) const { return face_index(s).has_value(); }
    const Rational& weight(const Simplex& s) const;

    bool degenerate_allowed() const { return degenerate_allowed_; }
    bool has_zero_weight() const;
    int zero_weight_count(int dim) const;

    /// True when the face F has no coface in the complex (F is a facet of K).
    bool is_maximal(const Simplex& s) const;

    /// Cofaces of codimension one.
    std::vector<Simplex> cofaces(const Simplex& s) const;

    /// Copy with all weights replaced by the given constant.
    WeightedComplex with_constant_weights(const Rational& value) const;

    /// Copy with one face's weight replaced.
    WeightedComplex with_weight(const Simplex& s, const Rational& value) const;

    bool operator==(const WeightedComplex& other) const;

private:
    std::vector<std::vector<Simplex>> faces_;
    std::vector<std::vector<Rational>> weights_;
    std::vector<std::map<Simplex, int>> index_;
    bool degenerate_allowed_ = false;

    void build_index();
    void validate() const;
};

/// Downward closure of the given facets. Faces listed in `weights` get that
/// weight, everything else gets `default_weight`.
WeightedComplex build_complex(const std::vector<std::vector<int>>& facet_list,
                              const std::map<Simplex, Rational>& weights = {},
                              const Rational& default_weight = 1,
                              bool degenerate_allowed = false);

/// Faces of dimension <= n, weights retained.
WeightedComplex skeleton(const WeightedComplex& k, int n);

/// True iff every face of H is a face of K with w_H(F) <= w_K(F).
bool is_subcomplex(const WeightedComplex& h, const WeightedComplex& k);

/// The degenerate complex L with the face sets of K and w_L = w_K - w_H.
/// Throws NotASubcomplex, or NotProper when the positive-weight part fails to
/// be closed under inclusion.
WeightedComplex proper_difference(const WeightedComplex& k, const WeightedComplex& h);

/// The maximal subcomplex carried by faces of non-zero weight.
/// Throws NotAComplex when that face set is not closed under inclusion.
WeightedComplex nonzero_part(const WeightedComplex& l);

/// True iff every pair of (n+1)-simplices is joined by a chain of
/// (n+1)-simplices in which consecutive ones share an n-face.
bool is_n_path_connected(const WeightedComplex& k, int n);

/// Connectivity of the 1-skeleton (vertices joined through edges).
bool is_connected(const WeightedComplex& k);

}  // namespace scx
