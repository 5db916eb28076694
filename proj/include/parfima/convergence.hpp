#pragma once

/// @file
/// Successive-difference diagnostics for the AR weights Π_j(i):
///   δ_N(i) = |Π_N(i) - Π_{N+1}(i)|,   S_N(i) = Σ_{j=0}^{N} |Π_j(i)|.
/// Bounded partial sums certify absolute summability numerically.

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "parfima/fractional.hpp"
#include "parfima/params.hpp"

namespace parfima {

enum class Verdict { convergent, divergent, inconclusive };

std::string_view to_string(Verdict verdict) noexcept;

struct ConvergenceThresholds {
    /// CONVERGENT needs final δ <= decay_ratio * initial δ (and δ
    /// non-increasing across checkpoints) in every season.
    double decay_ratio = 0.5;
    /// DIVERGENT needs final δ > divergence_floor ...
    double divergence_floor = 0.1;
    /// ... and S at the last checkpoint > growth_factor * S at the first.
    double growth_factor = 2.0;
};

struct ConvergenceReport {
    SeasonalParams params;
    IndexingMode mode = IndexingMode::backward;
    std::vector<std::size_t> checkpoints;
    /// [season - 1][checkpoint index]
    std::vector<std::vector<double>> deltas;
    std::vector<std::vector<double>> partial_sums;
    /// inconclusive when fewer than three checkpoints were requested.
    Verdict verdict = Verdict::inconclusive;
};

/// Computes Π up to max(checkpoints) + 1 once per season. Checkpoints must be
/// non-empty and strictly increasing.
ConvergenceReport delta_table(const SeasonalParams& params,
                              const std::vector<std::size_t>& checkpoints,
                              IndexingMode mode = IndexingMode::backward,
                              const ConvergenceThresholds& thresholds = {});

/// Throws InvalidArgument with fewer than three checkpoints.
Verdict classify_convergence(const ConvergenceReport& report,
                             const ConvergenceThresholds& thresholds = {});

/// One column of a canned experiment: a (d_1, d_2) pair with published
/// δ values at the grid's checkpoints (season unlabelled in the source).
struct ReferenceColumn {
    double d1;
    double d2;
    std::vector<double> published;
};

struct ReferenceGrid {
    int id;
    Verdict expected;
    std::vector<std::size_t> checkpoints;
    std::vector<ReferenceColumn> columns;
};

/// Grid 1: ten invertible pairs. Grid 2: three non-invertible pairs.
/// Returns nullopt for any other id.
std::optional<ReferenceGrid> reference_grid(int id);

}  // namespace parfima
