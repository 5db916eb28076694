#include "parfima/periodic.hpp"

#include <future>
#include <sstream>

#include "parfima/errors.hpp"

namespace parfima {

namespace {

using WideSeries = std::vector<long double>;

void check_season(const SeasonalParams& params, int season) {
    if (season < 1 || season > params.period()) {
        std::ostringstream msg;
        msg << "season " << season << " outside 1.." << params.period();
        throw InvalidArgument(msg.str());
    }
}

// Single-season weights for every season, computed with memory sign * d_i.
std::vector<WideSeries> season_weights(const SeasonalParams& params, double sign,
                                       std::size_t n) {
    std::vector<WideSeries> weights;
    weights.reserve(static_cast<std::size_t>(params.period()));
    for (double d : params.d()) weights.push_back(detail::fractional_recurrence(sign * d, n));
    return weights;
}

// c_0 = 1, c_j = -(a_j(i) + Σ_{l=1}^{j-1} c_l a_{j-l}(s(i, l))).
//
// Accumulated row by row: once c_l is final it is scattered into every later
// partial sum. Each acc[j] still receives its terms in increasing l.
std::vector<double> periodic_inverse(const std::vector<WideSeries>& weights, int season,
                                     std::size_t n, IndexingMode mode) {
    const int p = static_cast<int>(weights.size());
    std::vector<long double> acc(n + 1, 0.0L);
    std::vector<long double> c(n + 1, 0.0L);
    c[0] = 1.0L;
    const WideSeries& own = weights[static_cast<std::size_t>(season - 1)];
    for (std::size_t j = 1; j <= n; ++j) {
        c[j] = -(own[j] + acc[j]);
        const WideSeries& inner =
            weights[static_cast<std::size_t>(inner_season(season, j, p, mode) - 1)];
        const long double cj = c[j];
        for (std::size_t m = j + 1; m <= n; ++m) acc[m] += cj * inner[m - j];
    }
    return {c.begin(), c.end()};
}

}  // namespace

int inner_season(int season, std::size_t lag, int p, IndexingMode mode) {
    const auto l = static_cast<std::int64_t>(lag % static_cast<std::size_t>(p));
    switch (mode) {
        case IndexingMode::backward: return shift_season(season, -l, p);
        case IndexingMode::paper_literal: {
            const std::int64_t k = l == 0 ? p : l;  // k ≡ l (mod p), k in 1..p
            return shift_season(season, k, p);
        }
    }
    return season;
}

CoefficientSeries big_pi(const SeasonalParams& params, int season, std::size_t n,
                         IndexingMode mode) {
    check_season(params, season);
    const auto weights = season_weights(params, 1.0, n);
    return {CoefficientKind::ar_big_pi, season, mode, periodic_inverse(weights, season, n, mode)};
}

CoefficientSeries big_psi(const SeasonalParams& params, int season, std::size_t n,
                          IndexingMode mode) {
    check_season(params, season);
    const auto weights = season_weights(params, -1.0, n);
    return {CoefficientKind::ma_big_psi, season, mode,
            periodic_inverse(weights, season, n, mode)};
}

std::vector<double> convolution_residual(const SeasonalParams& params, int season,
                                         std::size_t n, IndexingMode mode) {
    if (n < 1) throw InvalidArgument("convolution_residual: n must be >= 1");
    const CoefficientSeries pi = big_pi(params, season, n, mode);
    const auto psi = season_weights(params, 1.0, n);
    const int p = params.period();
    std::vector<double> residual(n);
    for (std::size_t j = 1; j <= n; ++j) {
        long double r = 0.0L;
        for (std::size_t l = 0; l <= j; ++l) {
            const auto& inner = psi[static_cast<std::size_t>(inner_season(season, l, p, mode) - 1)];
            r += static_cast<long double>(pi[l]) * inner[j - l];
        }
        residual[j - 1] = static_cast<double>(r);
    }
    return residual;
}

PeriodicFilter::PeriodicFilter(SeasonalParams params, CoefficientKind kind, std::size_t n,
                               IndexingMode mode)
    : params_(std::move(params)), kind_(kind), mode_(mode), order_(n) {
    if (kind != CoefficientKind::ar_big_pi && kind != CoefficientKind::ma_big_psi) {
        throw InvalidArgument("PeriodicFilter holds big-pi or big-psi series only");
    }
    std::vector<std::future<CoefficientSeries>> pending;
    for (int i = 1; i <= params_.period(); ++i) {
        pending.push_back(std::async(std::launch::async, [this, i] {
            return kind_ == CoefficientKind::ar_big_pi ? big_pi(params_, i, order_, mode_)
                                                       : big_psi(params_, i, order_, mode_);
        }));
    }
    series_.reserve(pending.size());
    for (auto& f : pending) series_.push_back(f.get());
}

}  // namespace parfima
