#include "scx/laplacian.hpp"

#include <algorithm>
#include <set>

namespace scx {

const char* to_string(LaplacianKind kind) {
    switch (kind) {
        case LaplacianKind::up: return "up";
        case LaplacianKind::down: return "down";
        case LaplacianKind::full: return "full";
    }
    return "?";
}

const char* to_string(Weighting weighting) {
    switch (weighting) {
        case Weighting::raw: return "raw";
        case Weighting::combinatorial: return "combinatorial";
        case Weighting::normalized: return "normalized";
    }
    return "?";
}

LaplacianKind laplacian_kind_from_string(const std::string& s) {
    if (s == "up") return LaplacianKind::up;
    if (s == "down") return LaplacianKind::down;
    if (s == "full") return LaplacianKind::full;
    throw Error(ErrorCode::InvalidWeighting, "unknown operator kind '" + s + "'");
}

Weighting weighting_from_string(const std::string& s) {
    if (s == "raw") return Weighting::raw;
    if (s == "combinatorial") return Weighting::combinatorial;
    if (s == "normalized") return Weighting::normalized;
    throw Error(ErrorCode::InvalidWeighting, "unknown weighting '" + s + "'");
}

WeightedComplex normalize_weights(const WeightedComplex& k) {
    if (k.has_zero_weight())
        throw Error(ErrorCode::InvalidWeighting, "normalize_weights needs positive weights");
    std::vector<std::vector<Simplex>> faces;
    std::vector<std::vector<Rational>> weights;
    for (int d = 0; d <= k.dimension(); ++d) {
        faces.push_back(k.faces(d));
        weights.push_back(k.weights(d));
    }
    // Top-down: weights at d+1 are final before dimension d is assigned.
    for (int d = k.dimension() - 1; d >= 0; --d) {
        std::map<Simplex, int> upper_index;
        for (size_t i = 0; i < faces[size_t(d) + 1].size(); ++i)
            upper_index[faces[size_t(d) + 1][i]] = int(i);
        for (size_t i = 0; i < faces[size_t(d)].size(); ++i) {
            Rational sum = 0;
            bool has_coface = false;
            for (const auto& [fbar, r] : upper_index)
                if (fbar.contains_all(faces[size_t(d)][i])) {
                    sum += weights[size_t(d) + 1][size_t(r)];
                    has_coface = true;
                }
            if (has_coface) weights[size_t(d)][i] = sum;
        }
    }
    return WeightedComplex(std::move(faces), std::move(weights), false);
}

bool satisfies_normalizing_condition(const WeightedComplex& k) {
    for (int d = 0; d < k.dimension(); ++d) {
        const auto& level = k.faces(d);
        for (size_t i = 0; i < level.size(); ++i) {
            Rational sum = 0;
            bool has_coface = false;
            for (const Simplex& fbar : k.faces(d + 1))
                if (fbar.contains_all(level[i])) {
                    sum += k.weight(fbar);
                    has_coface = true;
                }
            if (has_coface && sum != k.weights(d)[i]) return false;
        }
    }
    return true;
}

WeightedComplex resolve_weighting(const WeightedComplex& k, Weighting weighting) {
    switch (weighting) {
        case Weighting::raw: return k;
        case Weighting::combinatorial: return k.with_constant_weights(1);
        case Weighting::normalized: return normalize_weights(k);
    }
    return k;
}

namespace {

struct Basis {
    std::vector<Simplex> faces;
    std::vector<Rational> weights;
    std::map<Simplex, int> index;
};

// n-faces of K outside K0 (K0 empty for absolute operators).
Basis relative_basis(const WeightedComplex& k, const WeightedComplex* k0, int n) {
    Basis b;
    const auto& faces = k.faces(n);
    const auto& weights = k.weights(n);
    for (size_t i = 0; i < faces.size(); ++i) {
        if (k0 && k0->has_face(faces[i])) continue;
        b.index[faces[i]] = int(b.faces.size());
        b.faces.push_back(faces[i]);
        b.weights.push_back(weights[i]);
    }
    return b;
}

void add_up_part(const WeightedComplex& k, const WeightedComplex* k0, int n, Basis& b,
                 RationalMatrix& m) {
    for (const Simplex& fbar : k.faces(n + 1)) {
        if (k0 && k0->has_face(fbar)) continue;
        const Rational& w_top = k.weight(fbar);
        std::vector<std::pair<int, int>> incidences;  // (basis index, sign)
        for (int i = 0; i < fbar.size(); ++i) {
            auto it = b.index.find(fbar.facet_omitting(i));
            if (it != b.index.end())
                incidences.emplace_back(it->second, (i % 2 == 0) ? 1 : -1);
        }
        for (const auto& [row, srow] : incidences) {
            if (b.weights[size_t(row)] == 0) continue;  // formal adjoint: zero row
            const Rational coeff = w_top / b.weights[size_t(row)];
            for (const auto& [col, scol] : incidences)
                m(row, col) += Rational(srow * scol) * coeff;
        }
    }
}

void add_down_part(const WeightedComplex& k, const WeightedComplex* k0, int n, Basis& b,
                   RationalMatrix& m) {
    if (n < 1) return;  // L_down at n=0 is the zero operator by convention
    for (const Simplex& e : k.faces(n - 1)) {
        if (k0 && k0->has_face(e)) continue;
        const Rational& w_e = k.weight(e);
        if (w_e == 0) continue;  // formal adjoint extended by zero
        std::vector<std::pair<int, int>> incidences;
        for (const auto& [face, idx] : b.index)
            if (face.contains_all(e)) incidences.emplace_back(idx, boundary_sign(e, face));
        for (const auto& [row, srow] : incidences)
            for (const auto& [col, scol] : incidences)
                m(row, col) += Rational(srow * scol) * b.weights[size_t(col)] / w_e;
    }
}

LaplacianMatrix assemble(const WeightedComplex& input, const WeightedComplex* k0, int n,
                         LaplacianKind kind, Weighting weighting) {
    const WeightedComplex k = resolve_weighting(input, weighting);
    Basis b = relative_basis(k, k0, n);
    LaplacianMatrix out;
    out.n = n;
    out.kind = kind;
    out.weighting = weighting;
    out.relative = (k0 != nullptr);
    out.mat = RationalMatrix(int(b.faces.size()), int(b.faces.size()));
    if (kind == LaplacianKind::up || kind == LaplacianKind::full)
        add_up_part(k, k0, n, b, out.mat);
    if (kind == LaplacianKind::down || kind == LaplacianKind::full)
        add_down_part(k, k0, n, b, out.mat);
    out.basis = std::move(b.faces);
    out.basis_weights = std::move(b.weights);
    return out;
}

}  // namespace

LaplacianMatrix up_laplacian(const WeightedComplex& k, int n, Weighting weighting) {
    return assemble(k, nullptr, n, LaplacianKind::up, weighting);
}

LaplacianMatrix down_laplacian(const WeightedComplex& k, int n, Weighting weighting) {
    return assemble(k, nullptr, n, LaplacianKind::down, weighting);
}

LaplacianMatrix full_laplacian(const WeightedComplex& k, int n, Weighting weighting) {
    return assemble(k, nullptr, n, LaplacianKind::full, weighting);
}

LaplacianMatrix laplacian(const WeightedComplex& k, int n, LaplacianKind kind,
                          Weighting weighting) {
    return assemble(k, nullptr, n, kind, weighting);
}

LaplacianMatrix relative_laplacian(const WeightedComplex& k, const WeightedComplex& k0,
                                   int n, LaplacianKind kind, Weighting weighting) {
    if (!k0.empty()) {
        if (!is_subcomplex(k0, k))
            throw Error(ErrorCode::NotASubcomplex, "relative pair needs a subcomplex");
        if (weighting == Weighting::raw)
            for (int d = 0; d <= k0.dimension(); ++d)
                for (const Simplex& f : k0.faces(d))
                    if (k0.weight(f) != k.weight(f))
                        throw Error(ErrorCode::NotASubcomplex,
                                    "relative pair needs equal weights on shared faces");
    }
    return assemble(k, &k0, n, kind, weighting);
}

}  // namespace scx
