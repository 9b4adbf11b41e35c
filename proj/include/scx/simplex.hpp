#pragma once

#include <iosfwd>
#include <vector>

#include "scx/errors.hpp"

namespace scx {

/// An abstract simplex: a strictly ascending list of non-negative vertex ids.
/// The ascending order is the canonical positive orientation.
class Simplex {
public:
    Simplex() = default;

    /// Requires vertices strictly increasing and non-negative.
    explicit Simplex(std::vector<int> vertices);

    /// Builds a simplex from an arbitrary list, sorting and deduplicating.
    static Simplex from_set(std::vector<int> vertices);

    int dimension() const { return int(vertices_.size()) - 1; }
    int size() const { return int(vertices_.size()); }
    const std::vector<int>& vertices() const { return vertices_; }
    int vertex(int i) const { return vertices_[size_t(i)]; }

    bool contains(int v) const;
    bool contains_all(const Simplex& other) const;

    /// The facet obtained by omitting the vertex at position i.
    Simplex facet_omitting(int i) const;

    /// All codimension-one faces, in omission order (index 0 first).
    std::vector<Simplex> facets() const;

    /// All non-empty subsets (the downward closure including this simplex).
    std::vector<Simplex> all_subfaces() const;

    bool operator==(const Simplex& other) const { return vertices_ == other.vertices_; }
    bool operator!=(const Simplex& other) const { return vertices_ != other.vertices_; }
    bool operator<(const Simplex& other) const;

private:
    std::vector<int> vertices_;
};

std::ostream& operator<<(std::ostream& os, const Simplex& s);

/// sgn([F], d[Fbar]) = (-1)^i where i is the position of the vertex of Fbar
/// missing from F. Throws NotAFacet unless F is a codimension-one face of Fbar.
int boundary_sign(const Simplex& f, const Simplex& fbar);

}  // namespace scx
