#include "parfima/covariance.hpp"

#include <cmath>
#include <sstream>

#include "parfima/errors.hpp"
#include "parfima/gamma.hpp"
#include "parfima/simulation.hpp"

namespace parfima {

namespace {

void check_season(const SeasonalParams& params, int season) {
    if (season < 1 || season > params.period()) {
        std::ostringstream msg;
        msg << "season " << season << " outside 1.." << params.period();
        throw InvalidArgument(msg.str());
    }
}

bool is_integer(double x) { return x == std::floor(x); }

// Pole check comes first: d_i = d_k = 1/2 reports the sin(π) singularity,
// not the open-interval violation.
void check_pair(double di, double dk, int i, int k) {
    if (is_integer(di + dk)) {
        std::ostringstream msg;
        msg << "d_" << i << " + d_" << k << " = " << di + dk
            << " is an integer: reflection pole in the covariance constant";
        throw PoleError(msg.str());
    }
    for (auto [d, s] : {std::pair{di, i}, std::pair{dk, k}}) {
        if (!(d > 0.0 && d < 0.5)) {
            std::ostringstream msg;
            msg << "asymptotic covariances need 0 < d < 1/2, got d_" << s << " = " << d;
            throw DomainError(msg.str());
        }
    }
}

double r_entry(double di, double dk, RForm form) {
    const double vi = 1.0 / gamma(di);
    const double vk = 1.0 / gamma(dk);
    switch (form) {
        case RForm::beta_form:
            return vi * vk * gamma(di) * gamma(1.0 - di - dk) / gamma(1.0 - dk);
        case RForm::sin_form:
            return gamma(di) * gamma(dk) / gamma(di + dk) *
                   (vi * vk * sin_pi(dk) / sin_pi(di + dk));
    }
    return std::nan("");
}

}  // namespace

RMatrix::RMatrix(int p, std::vector<double> entries, RForm form)
    : p_(p), entries_(std::move(entries)), form_(form) {
    if (p < 1 || entries_.size() != static_cast<std::size_t>(p) * static_cast<std::size_t>(p)) {
        throw DimensionError("R matrix needs p*p entries");
    }
    for (double e : entries_) {
        if (!std::isfinite(e)) throw DomainError("R matrix entries must be finite");
    }
}

RMatrix r_matrix(const SeasonalParams& params, RForm form) {
    const int p = params.period();
    for (int i = 1; i <= p; ++i) {
        for (int k = 1; k <= p; ++k) check_pair(params.d(i), params.d(k), i, k);
    }
    std::vector<double> entries;
    entries.reserve(static_cast<std::size_t>(p * p));
    for (int i = 1; i <= p; ++i) {
        for (int k = 1; k <= p; ++k) entries.push_back(r_entry(params.d(i), params.d(k), form));
    }
    return {p, std::move(entries), form};
}

double asymptotic_acvf(const SeasonalParams& params, int season, std::size_t lag) {
    check_season(params, season);
    if (lag < 1) throw DomainError("asymptotic_acvf: lag must be >= 1");
    const int p = params.period();
    const int k = shift_season(season, static_cast<std::int64_t>(lag % static_cast<std::size_t>(p)), p);
    const double di = params.d(season);
    const double dk = params.d(k);
    check_pair(di, dk, season, k);
    const double log_const =
        log_gamma(1.0 - di - dk).log_abs - log_gamma(dk).log_abs - log_gamma(1.0 - dk).log_abs;
    const double sigma = params.sigma(season);
    return sigma * sigma * std::exp(log_const) *
           std::pow(static_cast<double>(lag), di + dk - 1.0);
}

std::vector<double> matrix_acvf_asymptotic(const SeasonalParams& params, std::size_t lag) {
    if (lag < 1) throw DomainError("matrix_acvf_asymptotic: lag must be >= 1");
    const RMatrix r = r_matrix(params, RForm::beta_form);
    const int p = params.period();
    const auto h = static_cast<double>(lag);
    // h^{D - I/2} R h^{D - I/2} with diagonal D.
    std::vector<double> scale(static_cast<std::size_t>(p));
    for (int i = 1; i <= p; ++i) scale[static_cast<std::size_t>(i - 1)] = std::pow(h, params.d(i) - 0.5);
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(p * p));
    for (int i = 1; i <= p; ++i) {
        const double s2 = params.sigma(i) * params.sigma(i);
        for (int k = 1; k <= p; ++k) {
            out.push_back(s2 * scale[static_cast<std::size_t>(i - 1)] * r(i, k) *
                          scale[static_cast<std::size_t>(k - 1)]);
        }
    }
    return out;
}

PeriodicAcf::PeriodicAcf(AcfSource source, std::size_t first_lag,
                         std::vector<std::vector<double>> values)
    : source_(source), first_lag_(first_lag), values_(std::move(values)) {
    if (values_.empty() || values_.front().empty()) {
        throw InvalidArgument("periodic ACF needs at least one season and one lag");
    }
    for (const auto& v : values_) {
        if (v.size() != values_.front().size()) {
            throw DimensionError("periodic ACF seasons must cover the same lags");
        }
    }
}

double PeriodicAcf::at(int season, std::size_t lag) const {
    if (lag < first_lag_ || lag > max_lag()) {
        std::ostringstream msg;
        msg << "lag " << lag << " outside " << first_lag_ << ".." << max_lag();
        throw InvalidArgument(msg.str());
    }
    return values_.at(static_cast<std::size_t>(season - 1))[lag - first_lag_];
}

PeriodicAcf asymptotic_periodic_acvf(const SeasonalParams& params, std::size_t max_lag) {
    if (max_lag < 1) throw DomainError("asymptotic ACF needs max_lag >= 1");
    std::vector<std::vector<double>> values(static_cast<std::size_t>(params.period()));
    for (int i = 1; i <= params.period(); ++i) {
        auto& row = values[static_cast<std::size_t>(i - 1)];
        row.reserve(max_lag);
        for (std::size_t h = 1; h <= max_lag; ++h) row.push_back(asymptotic_acvf(params, i, h));
    }
    return {AcfSource::asymptotic, 1, std::move(values)};
}

PeriodicAcf empirical_periodic_acvf(std::span<const double> values, int start_season, int p,
                                    std::size_t max_lag, AcfOptions options) {
    if (p < 1) throw DimensionError("period must be >= 1");
    if (start_season < 1 || start_season > p) throw InvalidArgument("start season outside 1..p");
    const std::size_t n = values.size();
    const std::size_t needed = static_cast<std::size_t>(p) * (max_lag + 2);
    if (n < needed) {
        std::ostringstream msg;
        msg << "empirical ACF up to lag " << max_lag << " with period " << p << " needs at least "
            << needed << " observations, got " << n;
        throw InsufficientData(msg.str());
    }

    const auto up = static_cast<std::size_t>(p);
    // Offset within a cycle -> season index (0-based).
    std::vector<std::size_t> season_at(up);
    for (std::size_t r = 0; r < up; ++r) {
        season_at[r] = static_cast<std::size_t>(
            shift_season(start_season, static_cast<std::int64_t>(r), p) - 1);
    }

    std::vector<double> mean(up, 0.0);
    if (options.centered) {
        std::vector<long double> sum(up, 0.0L);
        std::vector<std::size_t> count(up, 0);
        for (std::size_t t = 0; t < n; ++t) {
            sum[season_at[t % up]] += values[t];
            ++count[season_at[t % up]];
        }
        for (std::size_t s = 0; s < up; ++s) mean[s] = static_cast<double>(sum[s] / count[s]);
    }

    std::vector<std::vector<double>> out(up, std::vector<double>(max_lag + 1));
    for (std::size_t r = 0; r < up; ++r) {
        const std::size_t s = season_at[r];
        for (std::size_t h = 0; h <= max_lag; ++h) {
            // First t of this season with t - h >= 0.
            std::size_t t = r;
            if (t < h) t += ((h - t + up - 1) / up) * up;
            const std::size_t lagged_season = season_at[(r + up - h % up) % up];
            long double sum = 0.0L;
            std::size_t count = 0;
            for (; t < n; t += up, ++count) {
                sum += static_cast<long double>(values[t] - mean[s]) *
                       (values[t - h] - mean[lagged_season]);
            }
            out[s][h] = static_cast<double>(sum / static_cast<long double>(count));
        }
    }
    return {AcfSource::empirical, 0, std::move(out)};
}

PeriodicAcf empirical_periodic_acvf(const SamplePath& path, std::size_t max_lag,
                                    AcfOptions options) {
    return empirical_periodic_acvf(path.values(), path.start_season(), path.params().period(),
                                   max_lag, options);
}

double pairwise_sum(std::span<const double> values) {
    constexpr std::size_t kBlock = 8;
    if (values.size() <= kBlock) {
        double s = 0.0;
        for (double v : values) s += v;
        return s;
    }
    const std::size_t half = values.size() / 2;
    return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

PeriodicAcf average_acvf(std::span<const PeriodicAcf> estimates) {
    if (estimates.empty()) throw InvalidArgument("average_acvf: no estimates");
    const PeriodicAcf& first = estimates.front();
    const int p = first.period();
    const std::size_t lags = first.max_lag() - first.first_lag() + 1;
    for (const auto& e : estimates) {
        if (e.period() != p || e.first_lag() != first.first_lag() || e.max_lag() != first.max_lag()) {
            throw DimensionError("average_acvf: estimates cover different seasons or lags");
        }
    }
    std::vector<std::vector<double>> out(static_cast<std::size_t>(p), std::vector<double>(lags));
    std::vector<double> column(estimates.size());
    for (int i = 1; i <= p; ++i) {
        for (std::size_t h = 0; h < lags; ++h) {
            for (std::size_t r = 0; r < estimates.size(); ++r) column[r] = estimates[r].season(i)[h];
            out[static_cast<std::size_t>(i - 1)][h] =
                pairwise_sum(column) / static_cast<double>(estimates.size());
        }
    }
    return {first.source(), first.first_lag(), std::move(out)};
}

}  // namespace parfima
