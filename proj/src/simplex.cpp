#include "scx/simplex.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace scx {

Simplex::Simplex(std::vector<int> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty())
        throw Error(ErrorCode::InvalidSimplex, "a simplex needs at least one vertex");
    for (size_t i = 0; i < vertices_.size(); ++i) {
        if (vertices_[i] < 0)
            throw Error(ErrorCode::InvalidSimplex, "vertex ids must be non-negative");
        if (i > 0 && vertices_[i] <= vertices_[i - 1])
            throw Error(ErrorCode::InvalidSimplex, "vertices must be strictly increasing");
    }
}

Simplex Simplex::from_set(std::vector<int> vertices) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    return Simplex(std::move(vertices));
}

bool Simplex::contains(int v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Simplex::contains_all(const Simplex& other) const {
    return std::includes(vertices_.begin(), vertices_.end(), other.vertices_.begin(),
                         other.vertices_.end());
}

Simplex Simplex::facet_omitting(int i) const {
    std::vector<int> v;
    v.reserve(vertices_.size() - 1);
    for (int j = 0; j < size(); ++j)
        if (j != i) v.push_back(vertices_[size_t(j)]);
    return Simplex(std::move(v));
}

std::vector<Simplex> Simplex::facets() const {
    std::vector<Simplex> out;
    if (dimension() == 0) return out;
    out.reserve(vertices_.size());
    for (int i = 0; i < size(); ++i) out.push_back(facet_omitting(i));
    return out;
}

std::vector<Simplex> Simplex::all_subfaces() const {
    std::vector<Simplex> out;
    const int n = size();
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> v;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) v.push_back(vertices_[size_t(i)]);
        out.emplace_back(std::move(v));
    }
    return out;
}

bool Simplex::operator<(const Simplex& other) const {
    if (vertices_.size() != other.vertices_.size())
        return vertices_.size() < other.vertices_.size();
    return vertices_ < other.vertices_;
}

std::ostream& operator<<(std::ostream& os, const Simplex& s) {
    os << '{';
    for (int i = 0; i < s.size(); ++i) {
        if (i) os << ',';
        os << s.vertex(i);
    }
    return os << '}';
}

int boundary_sign(const Simplex& f, const Simplex& fbar) {
    if (f.dimension() + 1 != fbar.dimension() || !fbar.contains_all(f)) {
        std::ostringstream msg;
        msg << f << " is not a facet of " << fbar;
        throw Error(ErrorCode::NotAFacet, msg.str());
    }
    for (int i = 0; i < fbar.size(); ++i)
        if (!f.contains(fbar.vertex(i))) return (i % 2 == 0) ? 1 : -1;
    throw Error(ErrorCode::NotAFacet, "no omitted vertex found");
}

}  // namespace scx
