#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace parfima {

/// Parameters of a periodic fractionally integrated model with period p:
///   (1 - B)^{d_i} X_{i+pm} = ε_{i+pm},  Var ε_{i+pm} = σ_i²,  i = 1..p.
/// Seasons are 1-based everywhere in the public interface.
class SeasonalParams {
public:
    /// Throws DimensionError when d or sigma do not have p entries (or p < 1),
    /// DomainError for a non-finite d_i or a sigma_i that is not > 0.
    SeasonalParams(int p, std::vector<double> d, std::vector<double> sigma);

    /// Unit innovation scales; p = d.size().
    explicit SeasonalParams(std::vector<double> d);

    int period() const noexcept { return static_cast<int>(d_.size()); }
    double d(int season) const { return d_.at(static_cast<std::size_t>(season - 1)); }
    double sigma(int season) const { return sigma_.at(static_cast<std::size_t>(season - 1)); }
    std::span<const double> d() const noexcept { return d_; }
    std::span<const double> sigma() const noexcept { return sigma_; }

    /// Same scales, memory orders negated.
    SeasonalParams negated() const;

    /// Seasons relabelled so that new season i is old season i + shift (cyclic).
    SeasonalParams rotated(int shift) const;

    friend bool operator==(const SeasonalParams&, const SeasonalParams&) = default;

private:
    std::vector<double> d_;
    std::vector<double> sigma_;
};

/// t = season + p * cycle with season in 1..p.
struct SeasonIndex {
    int season;
    std::int64_t cycle;

    friend bool operator==(const SeasonIndex&, const SeasonIndex&) = default;
};

SeasonIndex season_of(std::int64_t t, int p);

/// ((season - 1 + offset) mod p) + 1, for any signed offset.
int shift_season(int season, std::int64_t offset, int p);

/// Invertibility / causality classification.
///
/// Each property holds when one of two clauses holds jointly over all seasons:
///   invertible:  all -1/2 < d_i < 3/2   or   all |d_i| < 1
///   causal:      all -3/2 < d_i < 1/2   or   all |d_i| < 1
/// Inequalities are strict. A d_i sitting exactly on one of the interval
/// endpoints produces a warning string.
struct RegionReport {
    bool invertible = false;
    bool causal = false;
    bool invertible_interval_clause = false;
    bool invertible_unit_clause = false;
    bool causal_interval_clause = false;
    bool causal_unit_clause = false;
    std::vector<std::string> warnings;
};

RegionReport classify_region(const SeasonalParams& params);

}  // namespace parfima
