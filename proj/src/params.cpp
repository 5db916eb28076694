#include "parfima/params.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "parfima/errors.hpp"

namespace parfima {

SeasonalParams::SeasonalParams(int p, std::vector<double> d, std::vector<double> sigma)
    : d_(std::move(d)), sigma_(std::move(sigma)) {
    if (p < 1) throw DimensionError("period must be >= 1");
    const auto expected = static_cast<std::size_t>(p);
    if (d_.size() != expected || sigma_.size() != expected) {
        std::ostringstream msg;
        msg << "period " << p << " needs " << p << " memory and scale values, got "
            << d_.size() << " and " << sigma_.size();
        throw DimensionError(msg.str());
    }
    for (std::size_t i = 0; i < expected; ++i) {
        if (!std::isfinite(d_[i])) {
            std::ostringstream msg;
            msg << "d_" << i + 1 << " must be finite";
            throw DomainError(msg.str());
        }
        if (!(sigma_[i] > 0.0) || !std::isfinite(sigma_[i])) {
            std::ostringstream msg;
            msg << "sigma_" << i + 1 << " must be positive and finite, got " << sigma_[i];
            throw DomainError(msg.str());
        }
    }
}

SeasonalParams::SeasonalParams(std::vector<double> d)
    : SeasonalParams(static_cast<int>(d.size()), d, std::vector<double>(d.size(), 1.0)) {}

SeasonalParams SeasonalParams::negated() const {
    std::vector<double> d(d_.size());
    std::transform(d_.begin(), d_.end(), d.begin(), [](double x) { return -x; });
    return {period(), std::move(d), sigma_};
}

SeasonalParams SeasonalParams::rotated(int shift) const {
    const int p = period();
    std::vector<double> d(d_.size()), sigma(sigma_.size());
    for (int i = 1; i <= p; ++i) {
        const int from = shift_season(i, shift, p);
        d[static_cast<std::size_t>(i - 1)] = this->d(from);
        sigma[static_cast<std::size_t>(i - 1)] = this->sigma(from);
    }
    return {p, std::move(d), std::move(sigma)};
}

SeasonIndex season_of(std::int64_t t, int p) {
    if (p < 1) throw DimensionError("period must be >= 1");
    const std::int64_t shifted = t - 1;
    std::int64_t cycle = shifted / p;
    std::int64_t rem = shifted % p;
    if (rem < 0) {
        rem += p;
        cycle -= 1;
    }
    return {static_cast<int>(rem) + 1, cycle};
}

int shift_season(int season, std::int64_t offset, int p) {
    return season_of(static_cast<std::int64_t>(season) + offset, p).season;
}

namespace {

struct Interval {
    double lo;
    double hi;
    bool contains(double x) const { return lo < x && x < hi; }
};

constexpr Interval kInvertibleInterval{-0.5, 1.5};
constexpr Interval kCausalInterval{-1.5, 0.5};
constexpr Interval kUnitInterval{-1.0, 1.0};

}  // namespace

RegionReport classify_region(const SeasonalParams& params) {
    RegionReport report;
    const auto d = params.d();
    const auto all_in = [&](Interval iv) {
        return std::all_of(d.begin(), d.end(), [&](double x) { return iv.contains(x); });
    };
    report.invertible_interval_clause = all_in(kInvertibleInterval);
    report.causal_interval_clause = all_in(kCausalInterval);
    report.invertible_unit_clause = all_in(kUnitInterval);
    report.causal_unit_clause = report.invertible_unit_clause;
    report.invertible = report.invertible_interval_clause || report.invertible_unit_clause;
    report.causal = report.causal_interval_clause || report.causal_unit_clause;

    constexpr std::array<double, 6> boundaries = {-1.5, -1.0, -0.5, 0.5, 1.0, 1.5};
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (std::find(boundaries.begin(), boundaries.end(), d[i]) != boundaries.end()) {
            std::ostringstream msg;
            msg << "d_" << i + 1 << " = " << d[i]
                << " lies on a region boundary; strict inequalities exclude it";
            report.warnings.push_back(msg.str());
        }
    }
    return report;
}

}  // namespace parfima
