#include "scx/random_instances.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace scx::gen {

namespace {

WeightedComplex make_complex(const std::map<Simplex, Rational>& entries, bool degenerate) {
    int dim = -1;
    for (const auto& [f, w] : entries) dim = std::max(dim, f.dimension());
    std::vector<std::vector<Simplex>> faces(size_t(dim + 1));
    std::vector<std::vector<Rational>> weights(size_t(dim + 1));
    for (const auto& [f, w] : entries) {
        faces[size_t(f.dimension())].push_back(f);
        weights[size_t(f.dimension())].push_back(w);
    }
    return WeightedComplex(std::move(faces), std::move(weights), degenerate);
}

WeightedComplex with_random_weights(Rng& rng, const WeightedComplex& k) {
    std::map<Simplex, Rational> entries;
    for (int d = 0; d <= k.dimension(); ++d)
        for (const Simplex& f : k.faces(d)) entries[f] = rng.weight();
    return entries.empty() ? k : make_complex(entries, false);
}

std::vector<Simplex> all_faces(const WeightedComplex& k) {
    std::vector<Simplex> out;
    for (int d = 0; d <= k.dimension(); ++d)
        for (const Simplex& f : k.faces(d)) out.push_back(f);
    return out;
}

}  // namespace

WeightedComplex random_complex(Rng& rng, const ComplexOptions& options) {
    const int v = rng.uniform(options.min_vertices, options.max_vertices);
    std::vector<std::vector<int>> facets;
    for (int a = 0; a < v; ++a) facets.push_back({a});
    for (int a = 0; a < v; ++a)
        for (int b = a + 1; b < v; ++b) {
            if (rng.chance(options.edge_p)) facets.push_back({a, b});
            for (int c = b + 1; c < v; ++c)
                if (rng.chance(options.triangle_p)) facets.push_back({a, b, c});
        }
    auto k = build_complex(facets);
    return options.rational_weights ? with_random_weights(rng, k) : k;
}

std::vector<Simplex> upward_closed_zero_set(Rng& rng, const WeightedComplex& k,
                                            double seed_p) {
    std::set<Simplex> zero;
    for (const Simplex& f : all_faces(k))
        if (rng.chance(seed_p)) zero.insert(f);
    // Saturate upward, dimension by dimension.
    for (int d = 0; d <= k.dimension(); ++d)
        for (const Simplex& f : k.faces(d))
            if (zero.count(f))
                for (const Simplex& c : k.cofaces(f)) zero.insert(c);
    return {zero.begin(), zero.end()};
}

namespace {

// H built from an upward-closed zero set plus extra partially-deleted faces.
DeletionInstance raw_style_instance(Rng& rng, bool courant_weyl) {
    const int n = rng.uniform(0, 1);
    ComplexOptions options;
    options.rational_weights = !courant_weyl;
    if (n == 1) options.triangle_p = 0.3;
    WeightedComplex k = random_complex(rng, options);
    if (k.dimension() > n + 1) k = skeleton(k, n + 1);

    std::set<Simplex> zero;
    if (courant_weyl) {
        // Zero only top faces: the n-cochain spaces must stay equal.
        for (const Simplex& f : k.faces(n + 1))
            if (rng.chance(0.4)) zero.insert(f);
    } else {
        auto z = upward_closed_zero_set(rng, k, 0.18);
        zero.insert(z.begin(), z.end());
    }

    std::map<Simplex, Rational> h_entries;
    for (const Simplex& f : zero)
        for (const Simplex& sub : f.all_subfaces())
            h_entries[sub] = 0;  // placeholder, filled below
    if (!courant_weyl)
        for (const Simplex& f : all_faces(k))
            if (rng.chance(0.12))
                for (const Simplex& sub : f.all_subfaces()) h_entries.emplace(sub, 0);
    for (auto& [f, w] : h_entries)
        w = zero.count(f) ? k.weight(f) : k.weight(f) * rng.fraction_below_one();

    DeletionInstance out;
    out.k = std::move(k);
    out.h = h_entries.empty() ? WeightedComplex() : make_complex(h_entries, true);
    out.n = n;
    return out;
}

}  // namespace

DeletionInstance random_deletion_instance(Rng& rng, Weighting weighting) {
    if (weighting == Weighting::raw) return raw_style_instance(rng, false);

    const int n = rng.uniform(0, 1);
    ComplexOptions options;
    if (n == 1) options.triangle_p = 0.3;
    WeightedComplex k = random_complex(rng, options);
    if (k.dimension() > n + 1) k = skeleton(k, n + 1);

    DeletionInstance out;
    out.n = n;
    if (weighting == Weighting::combinatorial) {
        auto zero = upward_closed_zero_set(rng, k, 0.2);
        std::map<Simplex, Rational> h_entries;
        for (const Simplex& f : zero)
            for (const Simplex& sub : f.all_subfaces()) h_entries.emplace(sub, 0);
        for (auto& [f, w] : h_entries)
            w = std::count(zero.begin(), zero.end(), f) ? 1 : 0;
        out.k = std::move(k);
        out.h = h_entries.empty() ? WeightedComplex() : make_complex(h_entries, true);
        return out;
    }

    // Normalized: random facet weights propagated downward, H built from a
    // subset of the facets so that K - H keeps the normalizing condition.
    std::map<Simplex, Rational> facet_weights;
    for (const Simplex& f : all_faces(k))
        if (k.is_maximal(f)) facet_weights[f] = rng.weight();
    WeightedComplex base = make_complex(
        [&] {
            std::map<Simplex, Rational> entries;
            for (const Simplex& f : all_faces(k))
                entries[f] = facet_weights.count(f) ? facet_weights[f] : Rational(1);
            return entries;
        }(),
        false);
    WeightedComplex normalized = normalize_weights(base);

    std::map<Simplex, Rational> h_entries;
    for (const auto& [facet, w] : facet_weights)
        if (rng.chance(0.35)) {
            const Rational q = rng.chance(0.5) ? Rational(1) : rng.fraction_below_one();
            if (q == 0) continue;
            h_entries[facet] = q * w;
        }
    if (!h_entries.empty()) {
        // Downward propagation of the deleted mass through the closure of the
        // chosen facets.
        std::set<Simplex> h_faces;
        for (const auto& [facet, w] : h_entries)
            for (const Simplex& sub : facet.all_subfaces()) h_faces.insert(sub);
        for (int d = normalized.dimension(); d >= 0; --d)
            for (const Simplex& f : h_faces) {
                if (f.dimension() != d || h_entries.count(f)) continue;
                Rational sum = 0;
                for (const Simplex& g : h_faces)
                    if (g.dimension() == d + 1 && g.contains_all(f) && h_entries.count(g))
                        sum += h_entries[g];
                h_entries[f] = sum;
            }
    }
    out.k = std::move(normalized);
    out.h = h_entries.empty() ? WeightedComplex() : make_complex(h_entries, true);
    return out;
}

DeletionInstance random_ratio_instance(Rng& rng) { return raw_style_instance(rng, false); }

DeletionInstance random_courant_weyl_instance(Rng& rng) {
    return raw_style_instance(rng, true);
}

MapInstance random_strong_cover_instance(Rng& rng, bool rational_weights) {
    const int v = rng.uniform(3, 6);
    std::set<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < v; ++i) edges.insert({i, i + 1});  // spanning path
    for (int a = 0; a < v; ++a)
        for (int b = a + 1; b < v; ++b)
            if (!edges.count({a, b}) && rng.chance(0.35)) edges.insert({a, b});
    // Voltages: zero on the path, at least one nontrivial chord.
    std::map<std::pair<int, int>, int> voltage;
    std::vector<std::pair<int, int>> chords;
    for (const auto& e : edges) {
        const bool tree = e.second == e.first + 1;
        voltage[e] = tree ? 0 : rng.uniform(0, 1);
        if (!tree) chords.push_back(e);
    }
    if (chords.empty()) {
        const auto chord = std::make_pair(0, v - 1);
        edges.insert(chord);
        chords.push_back(chord);
        voltage[chord] = 1;
    } else {
        voltage[chords[size_t(rng.uniform(0, int(chords.size()) - 1))]] = 1;
    }

    // Base triangles whose boundary voltage vanishes may be filled.
    std::vector<std::vector<int>> base_facets;
    for (const auto& e : edges) base_facets.push_back({e.first, e.second});
    std::vector<std::array<int, 3>> triangles;
    for (int a = 0; a < v; ++a)
        for (int b = a + 1; b < v; ++b)
            for (int c = b + 1; c < v; ++c) {
                if (!edges.count({a, b}) || !edges.count({b, c}) || !edges.count({a, c}))
                    continue;
                if ((voltage[{a, b}] + voltage[{b, c}] + voltage[{a, c}]) % 2 != 0) continue;
                if (rng.chance(0.5)) {
                    base_facets.push_back({a, b, c});
                    triangles.push_back({a, b, c});
                }
            }
    WeightedComplex base = build_complex(base_facets);

    // Double cover: vertex (u, i) becomes 2u + i.
    auto lift = [](int u, int i) { return 2 * u + i; };
    std::vector<std::vector<int>> cover_facets;
    for (const auto& e : edges)
        for (int i = 0; i <= 1; ++i)
            cover_facets.push_back(
                {lift(e.first, i), lift(e.second, (i + voltage[e]) % 2)});
    for (const auto& t : triangles) {
        const int sab = voltage[{t[0], t[1]}];
        const int sbc = voltage[{t[1], t[2]}];
        for (int i = 0; i <= 1; ++i)
            cover_facets.push_back({lift(t[0], i), lift(t[1], (i + sab) % 2),
                                    lift(t[2], (i + sab + sbc) % 2)});
    }
    WeightedComplex cover = build_complex(cover_facets);
    if (rational_weights) cover = with_random_weights(rng, cover);

    std::map<int, int> vm;
    for (int u = 0; u < v; ++u)
        for (int i = 0; i <= 1; ++i) vm[lift(u, i)] = u;

    MapInstance out{SimplicialMap(std::move(cover), std::move(base), std::move(vm)),
                    triangles.empty() ? 0 : rng.uniform(0, 1)};
    return out;
}

MapInstance random_covering_instance(Rng& rng, bool rational_weights) {
    if (rng.chance(0.5)) return random_strong_cover_instance(rng, rational_weights);
    // Cycle unrolling: a path winding k times around C_m; never strong.
    const int m = rng.uniform(3, 6);
    const int wraps = rng.uniform(1, 2);
    std::vector<std::vector<int>> path_edges;
    for (int i = 0; i < wraps * m; ++i) path_edges.push_back({i, i + 1});
    WeightedComplex path = build_complex(path_edges);
    if (rational_weights) path = with_random_weights(rng, path);
    std::vector<std::vector<int>> cycle_edges;
    for (int i = 0; i < m; ++i) cycle_edges.push_back({i, (i + 1) % m});
    WeightedComplex cycle = build_complex(cycle_edges);
    std::map<int, int> vm;
    for (int i = 0; i <= wraps * m; ++i) vm[i] = i % m;
    return MapInstance{SimplicialMap(std::move(path), std::move(cycle), std::move(vm)), 0};
}

MapInstance random_simplicial_map_instance(Rng& rng, WeightRule rule) {
    const int n = rng.uniform(0, 1);
    ComplexOptions options;
    options.max_vertices = 8;
    if (n == 1) options.triangle_p = 0.3;
    options.rational_weights = (rule == WeightRule::rule_ii) && rng.chance(0.5);
    WeightedComplex k = random_complex(rng, options);
    if (k.dimension() > n + 1) k = skeleton(k, n + 1);
    if (rule == WeightRule::rule_i) k = normalize_weights(k.with_constant_weights(1));

    // Merge a few vertex pairs, resolving chains to the final root.
    std::map<int, int> vm;
    for (const Simplex& vface : k.faces(0)) vm[vface.vertex(0)] = vface.vertex(0);
    std::function<int(int)> root = [&](int a) {
        return vm[a] == a ? a : vm[a] = root(vm[a]);
    };
    const int merges = rng.uniform(1, 2);
    const int nv = k.num_vertices();
    for (int i = 0; i < merges && nv > 1; ++i) {
        int a = k.faces(0)[size_t(rng.uniform(0, nv - 1))].vertex(0);
        int b = k.faces(0)[size_t(rng.uniform(0, nv - 1))].vertex(0);
        a = root(a);
        b = root(b);
        if (a != b) vm[std::max(a, b)] = std::min(a, b);
    }
    for (auto& [key, value] : vm) value = root(key);

    WeightedComplex target = image_complex(k, vm);
    return MapInstance{SimplicialMap(std::move(k), std::move(target), std::move(vm)), n};
}

std::optional<ContractionInstance> random_contraction_instance(Rng& rng, int type_wanted) {
    for (int attempt = 0; attempt < 40; ++attempt) {
        const int n = rng.uniform(0, 1);
        ComplexOptions options;
        options.min_vertices = 4;
        options.max_vertices = n == 0 ? 9 : 8;
        options.edge_p = n == 0 ? 0.5 : 0.25;
        options.triangle_p = n == 0 ? 0.0 : 0.4;
        WeightedComplex k = random_complex(rng, options);
        if (k.dimension() != n + 1) continue;

        std::vector<ContractionSpec> candidates;
        for (const Simplex& fbar : k.faces(n + 1)) {
            const auto facets = fbar.facets();
            for (size_t i = 0; i < facets.size(); ++i)
                for (size_t j = 0; j < facets.size(); ++j) {
                    if (i == j) continue;
                    const Simplex& f = facets[i];
                    const Simplex& fp = facets[j];
                    bool legal = true;
                    bool genuine = true;
                    for (const Simplex& other : facets) {
                        const int outside = int(k.cofaces(other).size()) - 1;
                        if (other == f || other == fp) {
                            if (outside == 0) genuine = false;
                        } else if (outside > 0) {
                            legal = false;
                        }
                    }
                    if (!legal || !genuine) continue;
                    // Classify: does any other top face merge with a partner?
                    int x = -1, y = -1;
                    for (int vtx : fbar.vertices()) {
                        if (!f.contains(vtx)) x = vtx;
                        if (!fp.contains(vtx)) y = vtx;
                    }
                    int m = 0;
                    for (const Simplex& t : k.faces(n + 1)) {
                        if (!t.contains(y) || t.contains(x)) continue;
                        std::vector<int> partner;
                        for (int vtx : t.vertices()) partner.push_back(vtx == y ? x : vtx);
                        if (k.has_face(Simplex::from_set(partner))) ++m;
                    }
                    const int type = m > 0 ? 1 : 2;
                    if (type_wanted != 0 && type != type_wanted) continue;
                    candidates.push_back(ContractionSpec{fbar, f, fp});
                    if (i < j) candidates.pop_back(), candidates.push_back(
                        ContractionSpec{fbar, f, fp});
                }
        }
        if (candidates.empty()) continue;
        ContractionSpec pick = candidates[size_t(rng.uniform(0, int(candidates.size()) - 1))];
        return ContractionInstance{std::move(k), std::move(pick)};
    }
    return std::nullopt;
}

std::optional<CollapseInstance> random_collapse_instance(Rng& rng) {
    for (int attempt = 0; attempt < 40; ++attempt) {
        ComplexOptions options;
        options.max_vertices = 9;
        options.triangle_p = 0.25;
        WeightedComplex k = random_complex(rng, options);
        std::vector<std::pair<Simplex, Simplex>> free_pairs;
        for (int d = 0; d + 1 <= k.dimension(); ++d)
            for (const Simplex& f : k.faces(d)) {
                const auto cofaces = k.cofaces(f);
                if (cofaces.size() == 1) free_pairs.emplace_back(cofaces[0], f);
            }
        if (free_pairs.empty()) continue;
        auto& pick = free_pairs[size_t(rng.uniform(0, int(free_pairs.size()) - 1))];
        return CollapseInstance{std::move(k), pick.first, pick.second};
    }
    return std::nullopt;
}

std::optional<RelativeInstance> random_relative_instance(Rng& rng) {
    for (int attempt = 0; attempt < 40; ++attempt) {
        ComplexOptions options;
        options.triangle_p = 0.25;
        options.rational_weights = rng.chance(0.5);
        WeightedComplex k = random_complex(rng, options);
        const int n = rng.uniform(0, std::min(1, int(k.dimension())));
        if (k.num_faces(n) == 0) continue;
        std::set<Simplex> chosen;
        for (const Simplex& f : k.faces(n))
            if (rng.chance(0.3)) chosen.insert(f);
        if (chosen.empty() && rng.chance(0.5))
            chosen.insert(k.faces(n)[size_t(rng.uniform(0, k.num_faces(n) - 1))]);
        std::map<Simplex, Rational> entries;
        for (const Simplex& f : chosen)
            for (const Simplex& sub : f.all_subfaces()) entries[sub] = k.weight(sub);
        RelativeInstance out;
        out.k = std::move(k);
        out.k0 = entries.empty() ? WeightedComplex() : make_complex(entries, false);
        out.n = n;
        return out;
    }
    return std::nullopt;
}

WeightedComplex random_degenerate_complex(Rng& rng) {
    ComplexOptions options;
    options.rational_weights = true;
    options.triangle_p = 0.25;
    WeightedComplex k = random_complex(rng, options);
    auto zero = upward_closed_zero_set(rng, k, 0.2);
    std::map<Simplex, Rational> entries;
    for (const Simplex& f : all_faces(k)) entries[f] = k.weight(f);
    for (const Simplex& f : zero) entries[f] = 0;
    return make_complex(entries, true);
}

const std::vector<std::string>& batch_kinds() {
    static const std::vector<std::string> kinds = {
        "deletion-raw",        "deletion-combinatorial",
        "deletion-normalized", "ratio",
        "courant-weyl",        "covering",
        "map-rule-ii",         "map-rule-i",
        "contraction-type-i",  "contraction-type-ii",
        "collapse",            "relative",
        "strong-inclusion",    "maxbound",
    };
    return kinds;
}

BatchResult run_random_batch(const std::string& kind, int count, uint64_t seed, double tol) {
    BatchResult result;
    result.kind = kind;
    result.requested = count;
    result.min_slack = std::numeric_limits<double>::infinity();
    const auto start = std::chrono::steady_clock::now();
    Rng rng(seed ^ std::hash<std::string>{}(kind));

    auto record = [&](const InterlacingReport& report) {
        ++result.run;
        result.min_slack = std::min(result.min_slack, report.min_slack);
        if (!report.passed) {
            ++result.failures;
            if (result.failure_notes.size() < 8) {
                std::ostringstream msg;
                msg << report.theorem << " dim " << report.dim << " min slack "
                    << report.min_slack;
                result.failure_notes.push_back(msg.str());
            }
        }
    };
    auto fail = [&](const std::string& why) {
        ++result.run;
        ++result.failures;
        if (result.failure_notes.size() < 8) result.failure_notes.push_back(why);
    };

    const int max_attempts = count * 50 + 100;
    int attempts = 0;
    while (result.run < count && attempts++ < max_attempts) {
        try {
            if (kind == "deletion-raw" || kind == "deletion-combinatorial" ||
                kind == "deletion-normalized") {
                const Weighting w = kind == "deletion-raw" ? Weighting::raw
                                    : kind == "deletion-combinatorial"
                                        ? Weighting::combinatorial
                                        : Weighting::normalized;
                auto inst = random_deletion_instance(rng, w);
                record(verify_deletion(inst.k, inst.h, inst.n, w, tol));
            } else if (kind == "ratio") {
                auto inst = random_ratio_instance(rng);
                record(verify_ratio_bounds(inst.k, inst.h, inst.n, tol));
            } else if (kind == "courant-weyl") {
                auto inst = random_courant_weyl_instance(rng);
                auto report = verify_ratio_bounds(inst.k, inst.h, inst.n, tol);
                record(report);
            } else if (kind == "covering") {
                const Weighting w = std::array<Weighting, 3>{
                    Weighting::raw, Weighting::combinatorial,
                    Weighting::normalized}[size_t(rng.uniform(0, 2))];
                auto inst = random_covering_instance(rng, w == Weighting::raw);
                record(verify_covering(inst.phi, inst.n, w, tol));
            } else if (kind == "map-rule-ii") {
                auto inst = random_simplicial_map_instance(rng, WeightRule::rule_ii);
                record(verify_simplicial_map(inst.phi, inst.n, WeightRule::rule_ii, tol));
            } else if (kind == "map-rule-i") {
                auto inst = random_simplicial_map_instance(rng, WeightRule::rule_i);
                record(verify_simplicial_map(inst.phi, inst.n, WeightRule::rule_i, tol));
            } else if (kind == "contraction-type-i" || kind == "contraction-type-ii") {
                const int type = kind == "contraction-type-i" ? 1 : 2;
                auto inst = random_contraction_instance(rng, type);
                if (!inst) continue;
                const Weighting flavor =
                    rng.chance(0.5) ? Weighting::combinatorial : Weighting::normalized;
                record(verify_contraction(inst->k, inst->spec, flavor, tol));
            } else if (kind == "collapse") {
                auto inst = random_collapse_instance(rng);
                if (!inst) continue;
                const Weighting flavor =
                    rng.chance(0.5) ? Weighting::combinatorial : Weighting::normalized;
                record(verify_collapse(inst->k, inst->fbar, inst->f, flavor, tol));
            } else if (kind == "relative") {
                auto inst = random_relative_instance(rng);
                if (!inst) continue;
                record(verify_relative(inst->k, inst->k0, inst->n, Weighting::raw, tol));
            } else if (kind == "strong-inclusion") {
                auto inst = random_strong_cover_instance(rng);
                const Weighting flavor =
                    rng.chance(0.5) ? Weighting::combinatorial : Weighting::normalized;
                record(verify_strong_cover_inclusion(inst.phi, inst.n, flavor, false,
                                                     std::max(tol, 1e-7)));
            } else if (kind == "maxbound") {
                ComplexOptions options;
                options.rational_weights = rng.chance(0.5);
                record(verify_max_bound(random_complex(rng, options), tol));
            } else {
                throw Error(ErrorCode::InvalidWeighting, "unknown batch kind '" + kind + "'");
            }
        } catch (const Error& e) {
            fail(std::string("exception: ") + e.what());
        }
    }
    if (!std::isfinite(result.min_slack)) result.min_slack = 0.0;
    result.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

}  // namespace scx::gen
