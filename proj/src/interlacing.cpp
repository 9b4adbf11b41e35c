#include "scx/interlacing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

namespace scx {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void finalize(InterlacingReport& report) {
    report.passed = true;
    report.min_slack = kInf;
    for (const auto& rec : report.records) {
        report.passed = report.passed && rec.pass;
        report.min_slack = std::min(report.min_slack, rec.slack);
    }
    if (report.records.empty()) report.min_slack = 0.0;
}

WeightedComplex truncated(const WeightedComplex& k, int n) {
    if (k.empty() || k.dimension() <= n + 1) return k;
    return skeleton(k, n + 1);
}

void require_combinatorial_pair(const WeightedComplex& k, const WeightedComplex& h) {
    for (int d = 0; d <= k.dimension(); ++d)
        for (const auto& w : k.weights(d))
            if (w != 1)
                throw Error(ErrorCode::InvalidWeighting,
                            "combinatorial deletion needs unit weights on K");
    for (int d = 0; d <= h.dimension(); ++d)
        for (const auto& w : h.weights(d))
            if (w != 0 && w != 1)
                throw Error(ErrorCode::InvalidWeighting,
                            "combinatorial deletion needs {0,1} weights on H");
}

}  // namespace

InterlacingReport check_window(std::string theorem, int n, ShiftConstants shifts,
                               const Spectrum& lambda, const Spectrum& theta,
                               const WindowSpec& window, double tol) {
    InterlacingReport report;
    report.theorem = std::move(theorem);
    report.dim = n;
    report.shifts = shifts;
    report.tolerance = tol;
    report.lambda = lambda.values;
    report.theta = theta.values;
    const int n_lambda = lambda.size();
    for (int k = 1; k <= theta.size(); ++k) {
        IndexRecord rec;
        rec.k = k;
        rec.theta = theta.values[size_t(k - 1)];
        rec.slack = kInf;
        rec.pass = true;

        rec.lower_index = k - window.lower_shift;
        rec.lower_checked = window.check_lower;
        if (window.check_lower) {
            rec.lower = (rec.lower_index <= 0)
                            ? window.lower_pad
                            : window.lower_coef *
                                  lambda.values[size_t(rec.lower_index - 1)];
            const double slack = rec.theta - rec.lower;
            rec.slack = std::min(rec.slack, slack);
            rec.pass = rec.pass && slack >= -tol;
        } else {
            rec.lower = -kInf;
        }

        rec.upper_index = k + window.upper_shift;
        rec.upper_checked = window.check_upper;
        if (window.check_upper && rec.upper_index > n_lambda && !window.upper_pad)
            rec.upper_checked = false;  // statement restricted to in-range indices
        if (rec.upper_checked) {
            rec.upper = (rec.upper_index > n_lambda)
                            ? *window.upper_pad
                            : window.upper_coef *
                                  lambda.values[size_t(rec.upper_index - 1)];
            const double slack = rec.upper - rec.theta;
            rec.slack = std::min(rec.slack, slack);
            rec.pass = rec.pass && slack >= -tol;
        } else {
            rec.upper = kInf;
        }
        if (!std::isfinite(rec.slack)) rec.slack = 0.0;
        report.records.push_back(rec);
    }
    finalize(report);
    return report;
}

InterlacingReport verify_deletion(const WeightedComplex& k, const WeightedComplex& h,
                                  int n, Weighting weighting, double tol) {
    const WeightedComplex k1 = truncated(k, n);
    const WeightedComplex h1 = truncated(h, n);
    if (weighting == Weighting::combinatorial) require_combinatorial_pair(k1, h1);
    const WeightedComplex l = proper_difference(k1, h1);
    if (weighting == Weighting::normalized) {
        if (!satisfies_normalizing_condition(k1) || !satisfies_normalizing_condition(l))
            throw Error(ErrorCode::InvalidWeighting,
                        "normalized deletion needs the normalizing condition on K and L");
    }

    ShiftConstants sc;
    sc.d_w = coboundary_rank(h1, n);
    sc.d_h = h1.num_faces(n);
    sc.n_k = sc.n_l = k1.num_faces(n);

    const Spectrum lambda = laplacian_spectrum(k1, n, LaplacianKind::up, Weighting::raw);
    const Spectrum theta = laplacian_spectrum(l, n, LaplacianKind::up, Weighting::raw);

    WindowSpec window;
    window.lower_shift = sc.d_w;
    window.upper_shift = sc.d_h;
    if (weighting == Weighting::combinatorial)
        window.upper_pad = double(k1.num_vertices());
    else if (weighting == Weighting::normalized)
        window.upper_pad = double(n + 2);

    std::string name = std::string("deletion/") + to_string(weighting);
    return check_window(std::move(name), n, sc, lambda, theta, window, tol);
}

InterlacingReport verify_ratio_bounds(const WeightedComplex& k, const WeightedComplex& h,
                                      int n, double tol) {
    const WeightedComplex k1 = truncated(k, n);
    const WeightedComplex h1 = truncated(h, n);
    const WeightedComplex l = proper_difference(k1, h1);
    const WeightedComplex lp = nonzero_part(l);

    ShiftConstants sc;
    sc.n_k = sc.n_l = k1.num_faces(n);
    sc.d_z = sc.n_k - coboundary_rank(lp, n);

    bool lower_vacuous = true;
    Rational c_min = 0;
    {
        const auto& faces = l.faces(n + 1);
        const auto& weights = l.weights(n + 1);
        for (size_t i = 0; i < faces.size(); ++i) {
            if (weights[i] == 0) continue;
            const Rational ratio = weights[i] / k1.weight(faces[i]);
            if (lower_vacuous || ratio < c_min) c_min = ratio;
            lower_vacuous = false;
        }
    }
    bool upper_vacuous = true;
    Rational c_max = 0;
    {
        const auto& faces = l.faces(n);
        const auto& weights = l.weights(n);
        for (size_t i = 0; i < faces.size(); ++i) {
            if (weights[i] == 0) continue;
            const Rational ratio = k1.weight(faces[i]) / weights[i];
            if (upper_vacuous || ratio > c_max) c_max = ratio;
            upper_vacuous = false;
        }
    }

    const Spectrum lambda = laplacian_spectrum(k1, n, LaplacianKind::up, Weighting::raw);
    const Spectrum theta = laplacian_spectrum(l, n, LaplacianKind::up, Weighting::raw);

    WindowSpec window;
    window.lower_shift = sc.d_z;
    window.upper_shift = 0;
    window.lower_coef = to_double(c_min);
    window.upper_coef = to_double(c_max);
    window.upper_pad = kInf;  // upper index never exceeds the range
    window.check_lower = !lower_vacuous;
    window.check_upper = !upper_vacuous;

    auto report = check_window("ratio-bounds", n, sc, lambda, theta, window, tol);
    if (lower_vacuous)
        report.notes.push_back("lower bound vacuous: L has no positive-weight (n+1)-face");
    if (upper_vacuous)
        report.notes.push_back("upper bound vacuous: L has no positive-weight n-face");
    return report;
}

InterlacingReport verify_max_bound(const WeightedComplex& l, double tol) {
    InterlacingReport report;
    report.theorem = "max-bound";
    report.dim = l.dimension();
    report.tolerance = tol;
    const int vertices = l.num_vertices();
    for (int n = 0; n <= l.dimension(); ++n) {
        if (l.num_faces(n) == 0) continue;
        Rational min_w = l.weights(n)[0];
        for (const auto& w : l.weights(n)) min_w = std::min(min_w, w);
        const Spectrum s = laplacian_spectrum(l, n, LaplacianKind::up, Weighting::raw);
        IndexRecord rec;
        rec.k = n;
        rec.theta = s.max();
        rec.lower = 0.0;
        if (min_w == 0) {
            rec.upper = kInf;
            rec.upper_checked = false;
            rec.pass = true;
            rec.slack = 0.0;
            report.notes.push_back("dimension " + std::to_string(n) +
                                   ": zero minimum weight, bound vacuous");
        } else {
            rec.upper = double(vertices) / to_double(min_w);
            rec.slack = rec.upper - rec.theta;
            rec.pass = rec.slack >= -tol;
        }
        report.records.push_back(rec);
    }
    finalize(report);
    return report;
}

InterlacingReport verify_covering(const SimplicialMap& phi, int n, Weighting weighting,
                                  double tol) {
    if (!is_covering(phi))
        throw Error(ErrorCode::NotACovering, "covering interlacing needs a covering map");
    const WeightedComplex source = resolve_weighting(phi.source(), weighting);
    SimplicialMap resolved(source, phi.target(), phi.vertex_map());
    const WeightedComplex target = apply_map(resolved, WeightRule::rule_ii);

    ShiftConstants sc;
    sc.n_k = source.num_faces(n);
    sc.n_l = target.num_faces(n);

    const Spectrum lambda = laplacian_spectrum(source, n, LaplacianKind::up, Weighting::raw);
    const Spectrum theta = laplacian_spectrum(target, n, LaplacianKind::up, Weighting::raw);

    WindowSpec window;
    window.lower_shift = 0;
    window.upper_shift = sc.n_k - sc.n_l;
    window.upper_pad = double(source.num_vertices());

    std::string name = std::string("covering/") + to_string(weighting);
    return check_window(std::move(name), n, sc, lambda, theta, window, tol);
}

InterlacingReport verify_strong_cover_inclusion(const SimplicialMap& phi, int n,
                                                Weighting flavor, bool evidence_mode,
                                                double tol) {
    const bool covering = is_covering(phi);
    const bool strong = covering && is_strong_covering(phi);
    if (!strong && !evidence_mode)
        throw Error(covering ? ErrorCode::NotStrong : ErrorCode::NotACovering,
                    "spectrum inclusion needs a strong covering");

    const WeightedComplex source = resolve_weighting(phi.source(), flavor);
    const WeightedComplex target = resolve_weighting(phi.target(), flavor);
    const Spectrum lambda = laplacian_spectrum(source, n, LaplacianKind::up, Weighting::raw);
    const Spectrum theta = laplacian_spectrum(target, n, LaplacianKind::up, Weighting::raw);

    InterlacingReport report;
    report.theorem = std::string("strong-cover-inclusion/") + to_string(flavor);
    report.dim = n;
    report.tolerance = tol;
    report.lambda = lambda.values;
    report.theta = theta.values;
    report.shifts.n_k = lambda.size();
    report.shifts.n_l = theta.size();

    // Greedy leftmost matching, recorded value by value.
    size_t j = 0;
    for (int k = 1; k <= theta.size(); ++k) {
        const double value = theta.values[size_t(k - 1)];
        IndexRecord rec;
        rec.k = k;
        rec.theta = value;
        rec.lower_checked = false;
        rec.lower = -kInf;
        while (j < lambda.values.size() && lambda.values[j] < value - tol) ++j;
        if (j < lambda.values.size() && std::abs(lambda.values[j] - value) <= tol) {
            rec.upper_index = int(j) + 1;
            rec.upper = lambda.values[j];
            rec.pass = true;
            rec.slack = tol - std::abs(lambda.values[j] - value);
            ++j;
        } else {
            rec.upper = kInf;
            rec.upper_index = 0;
            rec.pass = false;
            rec.slack = -kInf;
        }
        report.records.push_back(rec);
    }
    finalize(report);
    if (!std::isfinite(report.min_slack)) report.min_slack = -1.0;
    report.notes.push_back(covering ? "covering: yes" : "covering: no");
    report.notes.push_back(strong ? "strong: yes" : "strong: no");
    if (!strong) report.notes.push_back("inclusion reported as evidence only");
    return report;
}

InterlacingReport verify_simplicial_map(const SimplicialMap& phi, int n, WeightRule rule,
                                        double tol) {
    const WeightedComplex& source = phi.source();
    if (rule == WeightRule::rule_i && !satisfies_normalizing_condition(source))
        throw Error(ErrorCode::InvalidWeighting,
                    "rule i interlacing needs normalized source weights");
    const WeightedComplex target = apply_map(phi, rule);

    ShiftConstants sc;
    sc.n_k = source.num_faces(n);
    sc.n_l = target.num_faces(n);
    // z counts distinct target n-faces hit by collapsing (n+1)-faces.
    std::set<Simplex> hit;
    for (const Simplex& fbar : source.faces(n + 1)) {
        auto img = phi.image(fbar);
        if (img.image.dimension() == n) hit.insert(img.image);
    }
    sc.z = int(hit.size());

    const Spectrum lambda = laplacian_spectrum(source, n, LaplacianKind::up, Weighting::raw);
    const Spectrum theta = laplacian_spectrum(target, n, LaplacianKind::up, Weighting::raw);

    WindowSpec window;
    window.lower_shift = 0;
    if (rule == WeightRule::rule_ii) {
        window.upper_shift = sc.n_k - sc.n_l;
        window.upper_pad = double(source.num_vertices());
    } else {
        window.upper_shift = sc.z + sc.n_k - sc.n_l;
        // Normalized spectra stay below n+2; rule i requires normalized input.
        window.upper_pad = double(n + 2);
    }

    std::string name = std::string("simplicial-map/") +
                       (rule == WeightRule::rule_ii ? "rule-ii" : "rule-i");
    return check_window(std::move(name), n, sc, lambda, theta, window, tol);
}

InterlacingReport verify_contraction(const WeightedComplex& k, const ContractionSpec& spec,
                                     Weighting flavor, double tol) {
    const int n = spec.fbar.dimension() - 1;
    const WeightedComplex k1 = truncated(k, n);
    ContractionResult result = elementary_contraction(k1, spec, WeightRule::rule_ii);
    if (result.spec.reducible_to_collapses) {
        const Simplex& free_facet =
            k1.cofaces(result.spec.f_prime).size() == 1 ? result.spec.f_prime : result.spec.f;
        auto report = verify_collapse(k1, spec.fbar, free_facet, flavor, tol);
        report.notes.push_back("contraction reduces to collapses; collapse window checked");
        return report;
    }

    const WeightedComplex source = resolve_weighting(k1.with_constant_weights(1), flavor);
    const WeightedComplex target =
        resolve_weighting(result.complex.with_constant_weights(1), flavor);

    ShiftConstants sc;
    sc.m = result.spec.m;
    sc.n_k = source.num_faces(n);
    sc.n_l = target.num_faces(n);

    const Spectrum lambda = laplacian_spectrum(source, n, LaplacianKind::up, Weighting::raw);
    const Spectrum theta = laplacian_spectrum(target, n, LaplacianKind::up, Weighting::raw);

    WindowSpec window;
    window.upper_pad = double(source.num_vertices());
    if (result.spec.type == 1) {
        window.lower_shift = sc.m * (n + 2);
        window.upper_shift = sc.n_k - sc.n_l + sc.m * (n + 2);
    } else {
        window.lower_shift = 0;
        window.upper_shift = n + 2;
    }

    std::string name = std::string("contraction/type-") +
                       (result.spec.type == 1 ? "i" : "ii") + "/" + to_string(flavor);
    return check_window(std::move(name), n, sc, lambda, theta, window, tol);
}

InterlacingReport verify_collapse(const WeightedComplex& k, const Simplex& fbar,
                                  const Simplex& f, Weighting flavor, double tol) {
    const int n = f.dimension();
    const WeightedComplex k1 = truncated(k, n);
    const WeightedComplex collapsed = elementary_collapse(k1, fbar, f);

    const WeightedComplex source = resolve_weighting(k1.with_constant_weights(1), flavor);
    const WeightedComplex target = resolve_weighting(collapsed.with_constant_weights(1), flavor);

    ShiftConstants sc;
    sc.n_k = source.num_faces(n);
    sc.n_l = target.num_faces(n);

    const Spectrum lambda = laplacian_spectrum(source, n, LaplacianKind::up, Weighting::raw);
    const Spectrum theta = laplacian_spectrum(target, n, LaplacianKind::up, Weighting::raw);

    WindowSpec window;
    window.lower_shift = 0;
    window.upper_shift = n + 3;
    window.upper_pad = double(source.num_vertices());

    std::string name = std::string("collapse/") + to_string(flavor);
    return check_window(std::move(name), n, sc, lambda, theta, window, tol);
}

InterlacingReport verify_relative(const WeightedComplex& k, const WeightedComplex& k0,
                                  int n, Weighting weighting, double tol) {
    if (!is_subcomplex(k0, k))
        throw Error(ErrorCode::NotASubcomplex, "relative pair needs a subcomplex");
    for (int d = 0; d <= k0.dimension(); ++d)
        for (const Simplex& f : k0.faces(d)) {
            if (k0.weight(f) != k.weight(f))
                throw Error(ErrorCode::NotASubcomplex,
                            "relative pair needs equal weights on shared faces");
            if (k0.is_maximal(f) && f.dimension() != n) {
                std::ostringstream msg;
                msg << "subcomplex is not pure of dimension " << n;
                throw Error(ErrorCode::NotPure, msg.str());
            }
        }

    const WeightedComplex resolved = resolve_weighting(k, weighting);
    if (resolved.zero_weight_count(n) > 0)
        throw Error(ErrorCode::InvalidWeighting,
                    "relative interlacing needs positive weights at dimension n");
    const LaplacianMatrix absolute = up_laplacian(resolved, n, Weighting::raw);
    const LaplacianMatrix relative = relative_laplacian(resolved, k0, n, LaplacianKind::up);

    const Spectrum lambda = spectrum_of(absolute);
    const Spectrum theta = spectrum_of(relative);

    ShiftConstants sc;
    sc.n_k = lambda.size();
    sc.n_l = theta.size();

    WindowSpec window;
    window.lower_shift = 0;
    window.upper_shift = sc.n_k - sc.n_l;
    window.upper_pad = double(resolved.num_vertices());

    std::string name = std::string("relative/") + to_string(weighting);
    auto report = check_window(std::move(name), n, sc, lambda, theta, window, tol);

    // Cauchy cross-check: delete the same rows and columns from the
    // symmetrized absolute matrix and compare spectra and verdicts.
    SymmetrizedBlock block = symmetrized_positive_block(absolute);
    std::vector<int> keep;
    for (size_t i = 0; i < absolute.basis.size(); ++i)
        if (!k0.has_face(absolute.basis[i])) keep.push_back(int(i));
    Eigen::MatrixXd sub(keep.size(), keep.size());
    for (size_t i = 0; i < keep.size(); ++i)
        for (size_t j = 0; j < keep.size(); ++j)
            sub(long(i), long(j)) = block.matrix(keep[i], keep[j]);
    const Spectrum oracle = eigenvalues(sub, tol);
    const bool spectra_agree = multiset_equal(theta, oracle, 1e-9);
    auto oracle_report = check_window("cauchy-oracle", n, sc, lambda, oracle, window, tol);
    report.notes.push_back(spectra_agree ? "cauchy oracle: spectra agree"
                                         : "cauchy oracle: spectra disagree");
    if (oracle_report.passed != report.passed || !spectra_agree) {
        report.passed = false;
        report.notes.push_back("cauchy oracle verdict differs");
    }
    return report;
}

}  // namespace scx
