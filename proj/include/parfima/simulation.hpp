#pragma once

/// @file
/// Sample paths from the truncated moving-average representation
///   x_t = Σ_{j=0}^{M} ψ_j(season(t)) ε_{t-j},   ε_t = σ_{season(t)} z_t,
/// and innovation recovery through the periodic AR filter Π.
///
/// The standard normal stream z starts at offset -(M + burn_in) relative to
/// the first reported value, so every reported x_t sees a full window of M
/// past innovations. Draws come from mt19937_64 through a Box-Muller
/// transform of 53-bit uniforms; both are fully specified algorithms, so a
/// given seed reproduces a path bit for bit on any conforming platform.

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "parfima/fractional.hpp"
#include "parfima/params.hpp"

namespace parfima {

inline constexpr std::string_view kGeneratorName = "mt19937_64+box-muller-53";

/// Seeded standard normal stream.
class GaussianStream {
public:
    explicit GaussianStream(std::uint64_t seed);

    double next();

private:
    double uniform_open();  // in (0, 1]

    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// Seed of the index-th independent stream derived from a master seed.
std::uint64_t derive_stream_seed(std::uint64_t master_seed, std::uint64_t index);

struct SimulationOptions {
    std::size_t truncation = 5000;  ///< M, number of MA lags kept
    std::size_t burn_in = 5000;     ///< discarded draws ahead of the window
    std::uint64_t seed = 0;
    int start_season = 1;           ///< season of the first reported value
};

struct PathMeta {
    std::uint64_t seed = 0;
    std::size_t truncation = 0;
    std::size_t burn_in = 0;
};

class SamplePath {
public:
    SamplePath(SeasonalParams params, int start_season, std::vector<double> values,
               std::vector<double> innovations, PathMeta meta);

    const SeasonalParams& params() const noexcept { return params_; }
    int start_season() const noexcept { return start_season_; }
    std::span<const double> values() const noexcept { return values_; }
    /// ε_t over the reported window, aligned with values().
    std::span<const double> innovations() const noexcept { return innovations_; }
    const PathMeta& meta() const noexcept { return meta_; }
    std::size_t size() const noexcept { return values_.size(); }

    /// Season of values()[t].
    int season_at(std::size_t t) const;

private:
    SeasonalParams params_;
    int start_season_;
    std::vector<double> values_;
    std::vector<double> innovations_;
    PathMeta meta_;
};

/// Requires classify_region(params).causal, n >= 1 and truncation >= 1.
SamplePath simulate_path(const SeasonalParams& params, std::size_t n,
                         const SimulationOptions& options = {});

/// Same filter driven by caller-supplied standardized draws z (for
/// non-Gaussian noise). z.size() must be n + truncation + burn_in; the draw
/// at index k belongs to offset k - truncation - burn_in. options.seed is
/// recorded but not used.
SamplePath simulate_path_from_draws(const SeasonalParams& params, std::size_t n,
                                    std::span<const double> z,
                                    const SimulationOptions& options = {});

/// count paths; path r uses seed derive_stream_seed(options.seed, r).
/// Paths are generated concurrently; output order is by r.
std::vector<SamplePath> simulate_ensemble(const SeasonalParams& params, std::size_t count,
                                          std::size_t n, const SimulationOptions& options = {});

/// ε̂_t = Σ_{j=0}^{K} Π_j(season(t)) x_{t-j} for t = K..n-1 (element 0 is
/// t = K). Requires an invertible model, K >= 1 and n > K.
std::vector<double> recover_innovations(const SamplePath& path, std::size_t filter_length,
                                        IndexingMode mode = IndexingMode::backward);

}  // namespace parfima
