#pragma once

/// @file
/// Periodic autocovariances: the long-lag power laws of the stationary
/// long-memory regime 0 < d_i < 1/2 and a moment estimator for sample paths.
///
/// For season i and lag h, the lag pairs season i with k = i + h (mod p) and
///   γ^i(h) ≈ σ_i² R^{i,k} h^{d_i + d_k - 1},
///   R^{i,k} = v_i v_k Γ(d_i) Γ(1 - d_i - d_k) / Γ(1 - d_k),   v_i = 1 / Γ(d_i).
/// By the reflection identity the constant also equals
///   Γ(d_i)Γ(d_k)/Γ(d_i + d_k) · v_i v_k sin(π d_k) / sin(π(d_i + d_k)).

#include <cstddef>
#include <span>
#include <vector>

#include "parfima/params.hpp"

namespace parfima {

class SamplePath;

enum class RForm {
    sin_form,   ///< gamma-ratio times the sine ratio
    beta_form,  ///< v_i v_k Γ(d_i) Γ(1 - d_i - d_k) / Γ(1 - d_k)
};

/// p×p matrix of asymptotic cross-season constants, row-major, 1-based access.
class RMatrix {
public:
    RMatrix(int p, std::vector<double> entries, RForm form);

    int period() const noexcept { return p_; }
    RForm form() const noexcept { return form_; }
    double operator()(int i, int k) const {
        return entries_.at(static_cast<std::size_t>((i - 1) * p_ + (k - 1)));
    }

private:
    int p_;
    std::vector<double> entries_;
    RForm form_;
};

/// Throws PoleError when some d_i + d_k is an integer and DomainError when a
/// d_i is outside (0, 1/2).
RMatrix r_matrix(const SeasonalParams& params, RForm form = RForm::beta_form);

/// σ_i² Γ(1 - d_i - d_k) / (Γ(d_k) Γ(1 - d_k)) · h^{d_i + d_k - 1}, h >= 1.
double asymptotic_acvf(const SeasonalParams& params, int season, std::size_t lag);

/// Entry (i, k) = σ_i² R^{i,k} h^{d_i + d_k - 1}; row-major p×p.
std::vector<double> matrix_acvf_asymptotic(const SeasonalParams& params, std::size_t lag);

enum class AcfSource { empirical, asymptotic };

/// Per-season autocovariance sequences over lags first_lag..max_lag.
class PeriodicAcf {
public:
    PeriodicAcf(AcfSource source, std::size_t first_lag, std::vector<std::vector<double>> values);

    AcfSource source() const noexcept { return source_; }
    int period() const noexcept { return static_cast<int>(values_.size()); }
    std::size_t first_lag() const noexcept { return first_lag_; }
    std::size_t max_lag() const noexcept { return first_lag_ + values_.front().size() - 1; }
    double at(int season, std::size_t lag) const;
    std::span<const double> season(int i) const {
        return values_.at(static_cast<std::size_t>(i - 1));
    }

private:
    AcfSource source_;
    std::size_t first_lag_;
    std::vector<std::vector<double>> values_;
};

/// asymptotic_acvf for every season over lags 1..max_lag.
PeriodicAcf asymptotic_periodic_acvf(const SeasonalParams& params, std::size_t max_lag);

struct AcfOptions {
    /// Subtract per-season sample means before forming products.
    bool centered = false;
};

/// γ̂^i(h) = (1/n_i) Σ x_t x_{t-h} over every t in season i with t - h >= 0,
/// n_i the number of such products, for h = 0..max_lag. values[t] belongs to
/// season ((start_season - 1 + t) mod p) + 1. Requires n >= p (max_lag + 2).
PeriodicAcf empirical_periodic_acvf(std::span<const double> values, int start_season, int p,
                                    std::size_t max_lag, AcfOptions options = {});
PeriodicAcf empirical_periodic_acvf(const SamplePath& path, std::size_t max_lag,
                                    AcfOptions options = {});

/// Lag-by-lag mean of several empirical estimates, reduced with pairwise
/// summation in input order.
PeriodicAcf average_acvf(std::span<const PeriodicAcf> estimates);

/// Pairwise (cascade) summation.
double pairwise_sum(std::span<const double> values);

}  // namespace parfima
