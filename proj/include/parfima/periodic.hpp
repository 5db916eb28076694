#pragma once

/// @file
/// Infinite-order AR and MA representations of the periodic model.
///
/// Writing X_t = Σ_j ψ_j(i) ε_{t-j} for a time t in season i, the AR weights
/// Π_j(i) that satisfy ε_t = Σ_j Π_j(i) X_{t-j} follow from substituting the
/// MA expansion of every lagged observation. With φ_j(i) = -Π_j(i):
///
///   φ_j(i) = ψ_j(i) - Σ_{l=1}^{j-1} φ_l(i) ψ_{j-l}(s(i, l)),   Π_0(i) = 1,
///
/// where s(i, l) is the season whose MA weights expand the lag-l observation.
/// The MA side Ψ_j(i) uses the same recursion with π in place of ψ:
///
///   Ψ_j(i) = -(π_j(i) + Σ_{l=1}^{j-1} Ψ_l(i) π_{j-l}(s(i, l))),   Ψ_0(i) = 1.
///
/// The model places X_{t-l} in season i - l, which is IndexingMode::backward.
/// IndexingMode::paper_literal uses season i + k with k ≡ l (mod p), k in 1..p;
/// both agree whenever p <= 2.
///
/// Cost is O(n²) per season. Sums accumulate in long double.

#include <cstddef>
#include <vector>

#include "parfima/fractional.hpp"
#include "parfima/params.hpp"

namespace parfima {

/// Season that supplies the inner weights for lag l of season i.
int inner_season(int season, std::size_t lag, int p, IndexingMode mode);

/// Π_0(i)..Π_n(i).
CoefficientSeries big_pi(const SeasonalParams& params, int season, std::size_t n,
                         IndexingMode mode = IndexingMode::backward);

/// Ψ_0(i)..Ψ_n(i).
CoefficientSeries big_psi(const SeasonalParams& params, int season, std::size_t n,
                          IndexingMode mode = IndexingMode::backward);

/// r_j = Σ_{l=0}^{j} Π_l(i) ψ_{j-l}(s(i, l)) for j = 1..n (element j-1 holds
/// r_j), with s(i, 0) = i. Every r_j is zero in exact arithmetic: applying the
/// AR filter to the MA representation returns the innovation.
std::vector<double> convolution_residual(const SeasonalParams& params, int season,
                                         std::size_t n,
                                         IndexingMode mode = IndexingMode::backward);

/// Per-season Π (or Ψ) series of common length n + 1.
class PeriodicFilter {
public:
    /// kind must be ar_big_pi or ma_big_psi. Seasons are computed concurrently.
    PeriodicFilter(SeasonalParams params, CoefficientKind kind, std::size_t n,
                   IndexingMode mode = IndexingMode::backward);

    const SeasonalParams& params() const noexcept { return params_; }
    CoefficientKind kind() const noexcept { return kind_; }
    IndexingMode indexing_mode() const noexcept { return mode_; }
    std::size_t order() const noexcept { return order_; }
    const CoefficientSeries& season(int i) const {
        return series_.at(static_cast<std::size_t>(i - 1));
    }

private:
    SeasonalParams params_;
    CoefficientKind kind_;
    IndexingMode mode_;
    std::size_t order_;
    std::vector<CoefficientSeries> series_;
};

}  // namespace parfima
