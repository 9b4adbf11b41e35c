#include "scx/complex.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

namespace scx {

namespace {
const std::vector<Simplex> kNoFaces;
const std::vector<Rational> kNoWeights;
}  // namespace

WeightedComplex::WeightedComplex(std::vector<std::vector<Simplex>> faces,
                                 std::vector<std::vector<Rational>> weights,
                                 bool degenerate_allowed)
    : faces_(std::move(faces)),
      weights_(std::move(weights)),
      degenerate_allowed_(degenerate_allowed) {
    while (!faces_.empty() && faces_.back().empty()) {
        faces_.pop_back();
        weights_.pop_back();
    }
    build_index();
    validate();
}

void WeightedComplex::build_index() {
    index_.assign(faces_.size(), {});
    for (size_t d = 0; d < faces_.size(); ++d)
        for (size_t i = 0; i < faces_[d].size(); ++i) index_[d][faces_[d][i]] = int(i);
}

void WeightedComplex::validate() const {
    for (size_t d = 0; d < faces_.size(); ++d) {
        if (weights_[d].size() != faces_[d].size())
            throw Error(ErrorCode::NotAComplex, "weight list does not match face list");
        for (size_t i = 0; i < faces_[d].size(); ++i) {
            const Simplex& f = faces_[d][i];
            if (f.dimension() != int(d))
                throw Error(ErrorCode::NotAComplex, "face filed under the wrong dimension");
            if (i > 0 && !(faces_[d][i - 1] < f))
                throw Error(ErrorCode::NotAComplex, "face list not sorted or has duplicates");
            const Rational& w = weights_[d][i];
            if (w < 0) throw Error(ErrorCode::NegativeWeight, "face weight below zero");
            if (w == 0 && !degenerate_allowed_)
                throw Error(ErrorCode::NegativeWeight,
                            "zero weight on a non-degenerate complex");
            if (d > 0)
                for (const Simplex& facet : f.facets())
                    if (!index_[d - 1].count(facet)) {
                        std::ostringstream msg;
                        msg << "missing facet " << facet << " of " << f;
                        throw Error(ErrorCode::NotAComplex, msg.str());
                    }
        }
    }
}

int WeightedComplex::total_faces() const {
    int total = 0;
    for (const auto& level : faces_) total += int(level.size());
    return total;
}

const std::vector<Simplex>& WeightedComplex::faces(int dim) const {
    if (dim < 0 || dim > dimension()) return kNoFaces;
    return faces_[size_t(dim)];
}

const std::vector<Rational>& WeightedComplex::weights(int dim) const {
    if (dim < 0 || dim > dimension()) return kNoWeights;
    return weights_[size_t(dim)];
}

std::optional<int> WeightedComplex::face_index(const Simplex& s) const {
    const int d = s.dimension();
    if (d < 0 || d > dimension()) return std::nullopt;
    auto it = index_[size_t(d)].find(s);
    if (it == index_[size_t(d)].end()) return std::nullopt;
    return it->second;
}

const Rational& WeightedComplex::weight(const Simplex& s) const {
    auto idx = face_index(s);
    if (!idx) {
        std::ostringstream msg;
        msg << "face " << s << " not in complex";
        throw Error(ErrorCode::NotAComplex, msg.str());
    }
    return weights_[size_t(s.dimension())][size_t(*idx)];
}

bool WeightedComplex::has_zero_weight() const {
    for (const auto& level : weights_)
        for (const auto& w : level)
            if (w == 0) return true;
    return false;
}

int WeightedComplex::zero_weight_count(int dim) const {
    int count = 0;
    for (const auto& w : weights(dim))
        if (w == 0) ++count;
    return count;
}

bool WeightedComplex::is_maximal(const Simplex& s) const {
    return cofaces(s).empty();
}

std::vector<Simplex> WeightedComplex::cofaces(const Simplex& s) const {
    std::vector<Simplex> out;
    const int d = s.dimension();
    for (const Simplex& g : faces(d + 1))
        if (g.contains_all(s)) out.push_back(g);
    return out;
}

WeightedComplex WeightedComplex::with_constant_weights(const Rational& value) const {
    std::vector<std::vector<Rational>> weights(faces_.size());
    for (size_t d = 0; d < faces_.size(); ++d)
        weights[d].assign(faces_[d].size(), value);
    return WeightedComplex(faces_, std::move(weights), value == 0);
}

WeightedComplex WeightedComplex::with_weight(const Simplex& s, const Rational& value) const {
    auto idx = face_index(s);
    if (!idx) throw Error(ErrorCode::NotAComplex, "cannot set weight of a missing face");
    auto weights = weights_;
    weights[size_t(s.dimension())][size_t(*idx)] = value;
    return WeightedComplex(faces_, std::move(weights), degenerate_allowed_ || value == 0);
}

bool WeightedComplex::operator==(const WeightedComplex& other) const {
    return faces_ == other.faces_ && weights_ == other.weights_;
}

WeightedComplex build_complex(const std::vector<std::vector<int>>& facet_list,
                              const std::map<Simplex, Rational>& weights,
                              const Rational& default_weight,
                              bool degenerate_allowed) {
    std::set<Simplex> closure;
    for (const auto& facet : facet_list) {
        if (facet.empty()) throw Error(ErrorCode::EmptyFacet, "facet with no vertices");
        Simplex top = Simplex::from_set(facet);
        for (Simplex& sub : top.all_subfaces()) closure.insert(std::move(sub));
    }
    for (const auto& [face, w] : weights) {
        if (w < 0) throw Error(ErrorCode::NegativeWeight, "supplied weight below zero");
        if (!closure.count(face)) {
            std::ostringstream msg;
            msg << "weight given for face " << face << " outside the closure";
            throw Error(ErrorCode::NotAComplex, msg.str());
        }
    }
    if (default_weight < 0) throw Error(ErrorCode::NegativeWeight, "default weight below zero");

    int dim = -1;
    for (const Simplex& f : closure) dim = std::max(dim, f.dimension());
    std::vector<std::vector<Simplex>> faces(size_t(dim + 1));
    std::vector<std::vector<Rational>> w(size_t(dim + 1));
    for (const Simplex& f : closure) {
        auto it = weights.find(f);
        faces[size_t(f.dimension())].push_back(f);
        w[size_t(f.dimension())].push_back(it == weights.end() ? default_weight : it->second);
    }
    return WeightedComplex(std::move(faces), std::move(w), degenerate_allowed);
}

WeightedComplex skeleton(const WeightedComplex& k, int n) {
    if (n < 0) throw Error(ErrorCode::NotAComplex, "skeleton dimension must be >= 0");
    std::vector<std::vector<Simplex>> faces;
    std::vector<std::vector<Rational>> weights;
    for (int d = 0; d <= std::min(n, k.dimension()); ++d) {
        faces.push_back(k.faces(d));
        weights.push_back(k.weights(d));
    }
    return WeightedComplex(std::move(faces), std::move(weights), k.degenerate_allowed());
}

bool is_subcomplex(const WeightedComplex& h, const WeightedComplex& k) {
    for (int d = 0; d <= h.dimension(); ++d) {
        const auto& faces = h.faces(d);
        const auto& weights = h.weights(d);
        for (size_t i = 0; i < faces.size(); ++i) {
            auto idx = k.face_index(faces[i]);
            if (!idx) return false;
            if (weights[i] > k.weights(d)[size_t(*idx)]) return false;
        }
    }
    return true;
}

WeightedComplex proper_difference(const WeightedComplex& k, const WeightedComplex& h) {
    if (!is_subcomplex(h, k))
        throw Error(ErrorCode::NotASubcomplex, "difference needs a weighted subcomplex");
    std::vector<std::vector<Simplex>> faces;
    std::vector<std::vector<Rational>> weights;
    for (int d = 0; d <= k.dimension(); ++d) {
        faces.push_back(k.faces(d));
        std::vector<Rational> level = k.weights(d);
        const auto& hfaces = h.faces(d);
        const auto& hweights = h.weights(d);
        for (size_t i = 0; i < hfaces.size(); ++i)
            level[size_t(*k.face_index(hfaces[i]))] -= hweights[i];
        weights.push_back(std::move(level));
    }
    WeightedComplex l(std::move(faces), std::move(weights), true);
    // Definition requires the positive-weight part L' to be a complex.
    for (int d = 1; d <= l.dimension(); ++d) {
        const auto& lf = l.faces(d);
        const auto& lw = l.weights(d);
        for (size_t i = 0; i < lf.size(); ++i) {
            if (lw[i] == 0) continue;
            for (const Simplex& facet : lf[i].facets())
                if (l.weight(facet) == 0) {
                    std::ostringstream msg;
                    msg << "positive face " << lf[i] << " has zero-weight facet " << facet;
                    throw Error(ErrorCode::NotProper, msg.str());
                }
        }
    }
    return l;
}

WeightedComplex nonzero_part(const WeightedComplex& l) {
    std::vector<std::vector<Simplex>> faces;
    std::vector<std::vector<Rational>> weights;
    for (int d = 0; d <= l.dimension(); ++d) {
        std::vector<Simplex> lf;
        std::vector<Rational> lw;
        const auto& af = l.faces(d);
        const auto& aw = l.weights(d);
        for (size_t i = 0; i < af.size(); ++i)
            if (aw[i] != 0) {
                lf.push_back(af[i]);
                lw.push_back(aw[i]);
            }
        faces.push_back(std::move(lf));
        weights.push_back(std::move(lw));
    }
    try {
        return WeightedComplex(std::move(faces), std::move(weights), false);
    } catch (const Error& e) {
        throw Error(ErrorCode::NotAComplex,
                    std::string("positive-weight part is not a complex (") + e.what() + ")");
    }
}

bool is_n_path_connected(const WeightedComplex& k, int n) {
    const auto& tops = k.faces(n + 1);
    const int count = int(tops.size());
    if (count <= 1) return true;
    // Breadth-first search over the n-down-neighbour relation.
    std::vector<char> seen(size_t(count), 0);
    std::queue<int> queue;
    queue.push(0);
    seen[0] = 1;
    int reached = 1;
    auto shares_n_face = [&](const Simplex& a, const Simplex& b) {
        int common = 0;
        for (int v : a.vertices())
            if (b.contains(v)) ++common;
        return common == n + 1;
    };
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop();
        for (int j = 0; j < count; ++j)
            if (!seen[j] && shares_n_face(tops[size_t(cur)], tops[size_t(j)])) {
                seen[size_t(j)] = 1;
                ++reached;
                queue.push(j);
            }
    }
    return reached == count;
}

bool is_connected(const WeightedComplex& k) {
    const auto& vertices = k.faces(0);
    if (vertices.size() <= 1) return true;
    std::map<int, int> rank;
    for (size_t i = 0; i < vertices.size(); ++i) rank[vertices[i].vertex(0)] = int(i);
    std::vector<std::vector<int>> adjacency(vertices.size());
    for (const Simplex& e : k.faces(1)) {
        int a = rank[e.vertex(0)], b = rank[e.vertex(1)];
        adjacency[size_t(a)].push_back(b);
        adjacency[size_t(b)].push_back(a);
    }
    std::vector<char> seen(vertices.size(), 0);
    std::queue<int> queue;
    queue.push(0);
    seen[0] = 1;
    size_t reached = 1;
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop();
        for (int nb : adjacency[size_t(cur)])
            if (!seen[size_t(nb)]) {
                seen[size_t(nb)] = 1;
                ++reached;
                queue.push(nb);
            }
    }
    return reached == vertices.size();
}

}  // namespace scx
