#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "scx/interlacing.hpp"

namespace scx::gen {

/// Deterministic source of randomness for instance generation.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    int uniform(int lo, int hi) {  // inclusive bounds
        return std::uniform_int_distribution<int>(lo, hi)(eng_);
    }
    bool chance(double p) { return std::uniform_real_distribution<double>(0, 1)(eng_) < p; }
    Rational weight() { return Rational(uniform(1, 6), uniform(1, 4)); }
    /// A rational in [0, 1).
    Rational fraction_below_one() { return Rational(uniform(0, 7), 8); }
    std::mt19937_64& engine() { return eng_; }

private:
    std::mt19937_64 eng_;
};

struct ComplexOptions {
    int min_vertices = 4;
    int max_vertices = 10;
    double edge_p = 0.40;
    double triangle_p = 0.15;
    bool rational_weights = false;
};

WeightedComplex random_complex(Rng& rng, const ComplexOptions& options = {});

/// A face set closed upward inside K (every coface of a member is a member);
/// zeroing exactly these weights keeps the positive part a complex.
std::vector<Simplex> upward_closed_zero_set(Rng& rng, const WeightedComplex& k,
                                            double seed_p);

struct DeletionInstance {
    WeightedComplex k;
    WeightedComplex h;
    int n = 0;
};

DeletionInstance random_deletion_instance(Rng& rng, Weighting weighting);
DeletionInstance random_ratio_instance(Rng& rng);
DeletionInstance random_courant_weyl_instance(Rng& rng);

struct MapInstance {
    SimplicialMap phi;
    int n = 0;
};

/// Voltage double cover of a random base (graph, optionally with triangles
/// whose boundary voltage vanishes). Always a strong covering of degree 2.
MapInstance random_strong_cover_instance(Rng& rng, bool rational_weights = false);

/// Mix of strong double covers and non-strong cycle unrollings.
MapInstance random_covering_instance(Rng& rng, bool rational_weights = false);

/// Random vertex-merging simplicial map; for rule i the source weights are
/// normalized first.
MapInstance random_simplicial_map_instance(Rng& rng, WeightRule rule);

struct ContractionInstance {
    WeightedComplex k;
    ContractionSpec spec;
};

/// type_wanted: 1, 2, or 0 for either. Nullopt when the sampled complexes
/// offer no legal contraction of that type.
std::optional<ContractionInstance> random_contraction_instance(Rng& rng, int type_wanted);

struct CollapseInstance {
    WeightedComplex k;
    Simplex fbar;
    Simplex f;
};

std::optional<CollapseInstance> random_collapse_instance(Rng& rng);

struct RelativeInstance {
    WeightedComplex k;
    WeightedComplex k0;
    int n = 0;
};

std::optional<RelativeInstance> random_relative_instance(Rng& rng);

/// Random complex with an upward-closed set of faces zeroed out (a proper
/// difference), possibly non-degenerate when the zero set comes up empty.
WeightedComplex random_degenerate_complex(Rng& rng);

/// One randomized verifier batch.
struct BatchResult {
    std::string kind;
    int requested = 0;
    int run = 0;
    int failures = 0;
    double min_slack = 0.0;
    double seconds = 0.0;
    std::vector<std::string> failure_notes;

    bool passed() const { return run == requested && failures == 0; }
};

const std::vector<std::string>& batch_kinds();

/// Runs `count` random instances of the named verifier kind with hypotheses
/// enforced by construction. Throws on unknown kinds.
BatchResult run_random_batch(const std::string& kind, int count, uint64_t seed,
                             double tol = 1e-9);

}  // namespace scx::gen
