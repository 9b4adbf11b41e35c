#include "scx/simplicial_map.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace scx {

namespace {

// Parity of the permutation sorting the sequence; 0 on repeated values.
int sort_parity(std::vector<int> values) {
    int inversions = 0;
    for (size_t i = 0; i < values.size(); ++i)
        for (size_t j = i + 1; j < values.size(); ++j) {
            if (values[i] == values[j]) return 0;
            if (values[i] > values[j]) ++inversions;
        }
    return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

SimplicialMap::SimplicialMap(WeightedComplex source, WeightedComplex target,
                             std::map<int, int> vertex_map)
    : source_(std::move(source)), target_(std::move(target)),
      vertex_map_(std::move(vertex_map)) {
    for (const Simplex& v : source_.faces(0))
        if (!vertex_map_.count(v.vertex(0))) {
            std::ostringstream msg;
            msg << "source vertex " << v.vertex(0) << " is not mapped";
            throw Error(ErrorCode::InvalidMap, msg.str());
        }
    for (int d = 0; d <= source_.dimension(); ++d)
        for (const Simplex& f : source_.faces(d)) {
            FaceImage img = image(f);
            if (!target_.has_face(img.image)) {
                std::ostringstream msg;
                msg << "image of " << f << " does not span a face of the target";
                throw Error(ErrorCode::InvalidMap, msg.str());
            }
        }
}

int SimplicialMap::apply(int vertex) const {
    auto it = vertex_map_.find(vertex);
    if (it == vertex_map_.end())
        throw Error(ErrorCode::InvalidMap, "vertex outside the map domain");
    return it->second;
}

SimplicialMap::FaceImage SimplicialMap::image(const Simplex& f) const {
    std::vector<int> mapped;
    mapped.reserve(size_t(f.size()));
    for (int v : f.vertices()) mapped.push_back(apply(v));
    int sign = sort_parity(mapped);
    return FaceImage{Simplex::from_set(std::move(mapped)), sign};
}

WeightedComplex image_complex(const WeightedComplex& source,
                              const std::map<int, int>& vertex_map) {
    std::set<Simplex> images;
    for (int d = 0; d <= source.dimension(); ++d)
        for (const Simplex& f : source.faces(d)) {
            std::vector<int> mapped;
            for (int v : f.vertices()) mapped.push_back(vertex_map.at(v));
            images.insert(Simplex::from_set(std::move(mapped)));
        }
    int dim = -1;
    for (const Simplex& f : images) dim = std::max(dim, f.dimension());
    std::vector<std::vector<Simplex>> faces(size_t(dim + 1));
    for (const Simplex& f : images) faces[size_t(f.dimension())].push_back(f);
    std::vector<std::vector<Rational>> weights(size_t(dim + 1));
    for (size_t d = 0; d < faces.size(); ++d) weights[d].assign(faces[d].size(), 1);
    return WeightedComplex(std::move(faces), std::move(weights), false);
}

WeightedComplex apply_map(const SimplicialMap& phi, WeightRule rule) {
    const WeightedComplex& k = phi.source();
    WeightedComplex shape = image_complex(k, phi.vertex_map());

    std::vector<std::vector<Simplex>> faces;
    std::vector<std::vector<Rational>> weights;
    bool has_zero = false;
    for (int d = 0; d <= shape.dimension(); ++d) {
        faces.push_back(shape.faces(d));
        weights.emplace_back(faces.back().size(), Rational(0));
    }
    for (int d = 0; d <= k.dimension(); ++d)
        for (const Simplex& f : k.faces(d)) {
            auto img = phi.image(f);
            const int id = img.image.dimension();
            const int col = *shape.face_index(img.image);
            if (id == d) {
                weights[size_t(id)][size_t(col)] += k.weight(f);
            } else if (rule == WeightRule::rule_i && id == d - 1) {
                weights[size_t(id)][size_t(col)] -= k.weight(f);
            }
        }
    for (const auto& level : weights)
        for (const auto& w : level) {
            if (w < 0)
                throw Error(ErrorCode::NegativeInducedWeight,
                            "rule i induced a negative weight");
            if (w == 0) has_zero = true;
        }
    return WeightedComplex(std::move(faces), std::move(weights), has_zero);
}

namespace {

// Condition (iii) alone: disjoint fibres, each mapped bijectively, every
// target face covered. Source connectivity is checked by is_covering.
bool covering_condition(const SimplicialMap& phi) {
    std::map<Simplex, std::vector<const Simplex*>> preimages;
    for (int d = 0; d <= phi.source().dimension(); ++d)
        for (const Simplex& f : phi.source().faces(d))
            preimages[phi.image(f).image].push_back(&f);
    for (int d = 0; d <= phi.target().dimension(); ++d)
        for (const Simplex& g : phi.target().faces(d)) {
            auto it = preimages.find(g);
            if (it == preimages.end()) return false;  // not surjective onto g
            const auto& fibre = it->second;
            for (const Simplex* f : fibre)
                if (f->dimension() != g.dimension()) return false;  // not bijective
            for (size_t i = 0; i < fibre.size(); ++i)
                for (size_t j = i + 1; j < fibre.size(); ++j)
                    for (int v : fibre[i]->vertices())
                        if (fibre[j]->contains(v)) return false;  // not disjoint
        }
    return true;
}

// The facet-coface lifting condition of a strong covering.
bool strong_condition(const SimplicialMap& phi) {
    const WeightedComplex& k = phi.source();
    const WeightedComplex& l = phi.target();
    for (int d = 0; d + 1 <= l.dimension(); ++d)
        for (const Simplex& gbar : l.faces(d + 1))
            for (const Simplex& g : gbar.facets())
                for (const Simplex& f : k.faces(d)) {
                    if (!(phi.image(f).image == g)) continue;
                    bool lifted = false;
                    for (const Simplex& fbar : k.cofaces(f))
                        if (phi.image(fbar).image == gbar) {
                            lifted = true;
                            break;
                        }
                    if (!lifted) return false;
                }
    return true;
}

}  // namespace

bool is_covering(const SimplicialMap& phi) {
    if (!is_connected(phi.source()))
        throw Error(ErrorCode::SourceNotConnected, "covering source must be connected");
    return covering_condition(phi);
}

bool is_strong_covering(const SimplicialMap& phi) {
    if (!is_covering(phi))
        throw Error(ErrorCode::NotACovering, "strong covering check needs a covering");
    return strong_condition(phi);
}

int covering_degree(const SimplicialMap& phi) {
    // Preimage counting does not need a connected source; a disjoint union of
    // covers still has a well-defined constant fibre size.
    if (!covering_condition(phi))
        throw Error(ErrorCode::NotACovering, "covering degree needs a covering");
    if (!strong_condition(phi))
        throw Error(ErrorCode::NotStrong, "covering degree needs a strong covering");
    const WeightedComplex& l = phi.target();
    for (int d = 0; d < l.dimension(); ++d)
        if (!is_n_path_connected(l, d))
            throw Error(ErrorCode::NotConstant,
                        "target is not path-connected; no constant degree");
    if (!is_connected(l))
        throw Error(ErrorCode::NotConstant, "target is disconnected; no constant degree");

    std::map<Simplex, int> counts;
    for (int d = 0; d <= phi.source().dimension(); ++d)
        for (const Simplex& f : phi.source().faces(d)) ++counts[phi.image(f).image];
    int degree = -1;
    for (int d = 0; d <= l.dimension(); ++d)
        for (const Simplex& g : l.faces(d)) {
            const int c = counts.count(g) ? counts[g] : 0;
            if (degree < 0) degree = c;
            if (c != degree)
                throw Error(ErrorCode::NotConstant, "preimage cardinality is not constant");
        }
    return degree < 0 ? 0 : degree;
}

}  // namespace scx
