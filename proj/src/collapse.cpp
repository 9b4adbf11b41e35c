#include "scx/collapse.hpp"

#include <algorithm>
#include <sstream>

namespace scx {

WeightedComplex elementary_collapse(const WeightedComplex& k, const Simplex& fbar,
                                    const Simplex& f) {
    if (!k.has_face(fbar) || !k.has_face(f))
        throw Error(ErrorCode::NotFree, "collapse pair must belong to the complex");
    if (f.dimension() + 1 != fbar.dimension() || !fbar.contains_all(f))
        throw Error(ErrorCode::NotFree, "collapse needs a facet-coface pair");
    const auto cofaces = k.cofaces(f);
    if (cofaces.size() != 1 || !(cofaces[0] == fbar)) {
        std::ostringstream msg;
        msg << f << " is not a free face of " << fbar;
        throw Error(ErrorCode::NotFree, msg.str());
    }
    std::vector<std::vector<Simplex>> faces;
    std::vector<std::vector<Rational>> weights;
    for (int d = 0; d <= k.dimension(); ++d) {
        std::vector<Simplex> lf;
        std::vector<Rational> lw;
        const auto& af = k.faces(d);
        const auto& aw = k.weights(d);
        for (size_t i = 0; i < af.size(); ++i) {
            if (af[i] == fbar || af[i] == f) continue;
            lf.push_back(af[i]);
            lw.push_back(aw[i]);
        }
        faces.push_back(std::move(lf));
        weights.push_back(std::move(lw));
    }
    return WeightedComplex(std::move(faces), std::move(weights), k.degenerate_allowed());
}

ContractionResult elementary_contraction(const WeightedComplex& k, ContractionSpec spec,
                                         WeightRule rule) {
    const int n1 = spec.fbar.dimension();
    if (!k.has_face(spec.fbar))
        throw Error(ErrorCode::NotContractible, "contracted face must belong to the complex");
    if (k.dimension() != n1)
        throw Error(ErrorCode::NotContractible,
                    "contraction needs a complex of the contracted face's dimension");
    auto is_facet_of_fbar = [&](const Simplex& s) {
        return s.dimension() + 1 == n1 && spec.fbar.contains_all(s);
    };
    if (!is_facet_of_fbar(spec.f) || !is_facet_of_fbar(spec.f_prime) ||
        spec.f == spec.f_prime)
        throw Error(ErrorCode::NotContractible,
                    "the identified faces must be two distinct facets of the deleted face");

    auto outside_cofaces = [&](const Simplex& s) {
        int count = 0;
        for (const Simplex& c : k.cofaces(s))
            if (!(c == spec.fbar)) ++count;
        return count;
    };
    for (const Simplex& facet : spec.fbar.facets())
        if (!(facet == spec.f) && !(facet == spec.f_prime) && outside_cofaces(facet) > 0) {
            std::ostringstream msg;
            msg << "facet " << facet << " has cofaces other than " << spec.fbar;
            throw Error(ErrorCode::NotContractible, msg.str());
        }
    spec.reducible_to_collapses =
        outside_cofaces(spec.f) == 0 || outside_cofaces(spec.f_prime) == 0;

    // Vertices being identified: the one omitted by F and the one omitted by F'.
    int x = -1, y = -1;
    for (int v : spec.fbar.vertices()) {
        if (!spec.f.contains(v)) x = v;
        if (!spec.f_prime.contains(v)) y = v;
    }
    const int keep = std::min(x, y);
    const int drop = std::max(x, y);
    std::map<int, int> vm;
    for (const Simplex& v : k.faces(0))
        vm[v.vertex(0)] = (v.vertex(0) == drop) ? keep : v.vertex(0);

    // Count identified (n+1)-face pairs; Fbar itself collapses in dimension.
    spec.m = 0;
    for (const Simplex& t : k.faces(n1)) {
        if (!t.contains(drop) || t.contains(keep)) continue;
        std::vector<int> partner;
        for (int v : t.vertices()) partner.push_back(v == drop ? keep : v);
        if (k.has_face(Simplex::from_set(partner))) ++spec.m;
    }
    spec.type = spec.m > 0 ? 1 : 2;

    // Delete Fbar (maximal), then take the quotient with rule-induced weights.
    std::vector<std::vector<Simplex>> faces;
    std::vector<std::vector<Rational>> weights;
    for (int d = 0; d <= k.dimension(); ++d) {
        std::vector<Simplex> lf;
        std::vector<Rational> lw;
        const auto& af = k.faces(d);
        const auto& aw = k.weights(d);
        for (size_t i = 0; i < af.size(); ++i) {
            if (af[i] == spec.fbar) continue;
            lf.push_back(af[i]);
            lw.push_back(aw[i]);
        }
        faces.push_back(std::move(lf));
        weights.push_back(std::move(lw));
    }
    WeightedComplex k_minus(std::move(faces), std::move(weights), k.degenerate_allowed());
    WeightedComplex quotient = apply_map(
        SimplicialMap(k_minus, image_complex(k_minus, vm), vm), rule);
    SimplicialMap full_map(k, quotient, vm);
    return ContractionResult{std::move(quotient), std::move(full_map), std::move(spec)};
}

}  // namespace scx
