#include "parfima/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>
#include <optional>
#include <sstream>
#include <thread>

#include "parfima/errors.hpp"
#include "parfima/periodic.hpp"

namespace parfima {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Fixed-order dot product with four partial sums.
double dot(const double* a, const double* b, std::size_t n) {
    double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        s0 += a[i] * b[i];
        s1 += a[i + 1] * b[i + 1];
        s2 += a[i + 2] * b[i + 2];
        s3 += a[i + 3] * b[i + 3];
    }
    for (; i < n; ++i) s0 += a[i] * b[i];
    return (s0 + s1) + (s2 + s3);
}

std::vector<double> reversed(std::span<const double> v) { return {v.rbegin(), v.rend()}; }

void check_start_season(const SeasonalParams& params, int start_season) {
    if (start_season < 1 || start_season > params.period()) {
        std::ostringstream msg;
        msg << "start season " << start_season << " outside 1.." << params.period();
        throw InvalidArgument(msg.str());
    }
}

}  // namespace

GaussianStream::GaussianStream(std::uint64_t seed) : engine_(seed) {}

double GaussianStream::uniform_open() {
    return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
}

double GaussianStream::next() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const double u1 = uniform_open();
    const double u2 = uniform_open();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

std::uint64_t derive_stream_seed(std::uint64_t master_seed, std::uint64_t index) {
    return splitmix64(master_seed ^ splitmix64(index));
}

SamplePath::SamplePath(SeasonalParams params, int start_season, std::vector<double> values,
                       std::vector<double> innovations, PathMeta meta)
    : params_(std::move(params)),
      start_season_(start_season),
      values_(std::move(values)),
      innovations_(std::move(innovations)),
      meta_(meta) {
    check_start_season(params_, start_season_);
    if (!innovations_.empty() && innovations_.size() != values_.size()) {
        throw DimensionError("innovations must align with path values");
    }
}

int SamplePath::season_at(std::size_t t) const {
    return shift_season(start_season_, static_cast<std::int64_t>(t), params_.period());
}

SamplePath simulate_path_from_draws(const SeasonalParams& params, std::size_t n,
                                    std::span<const double> z, const SimulationOptions& options) {
    if (n < 1) throw InvalidArgument("simulate: n must be >= 1");
    if (options.truncation < 1) throw InvalidArgument("simulate: truncation must be >= 1");
    check_start_season(params, options.start_season);
    if (!classify_region(params).causal) {
        throw NotCausal("simulate: parameters are outside the causal region");
    }
    const std::size_t m = options.truncation;
    const std::size_t lead = m + options.burn_in;
    if (z.size() != n + lead) {
        std::ostringstream msg;
        msg << "simulate: expected " << n + lead << " draws, got " << z.size();
        throw DimensionError(msg.str());
    }

    const int p = params.period();
    std::vector<std::vector<double>> reversed_psi;
    reversed_psi.reserve(static_cast<std::size_t>(p));
    for (int i = 1; i <= p; ++i) {
        reversed_psi.push_back(reversed(ma_coefficients(Memory(params.d(i)), m).values()));
    }

    // Offset k - lead is the time of draw k; season of the first reported
    // value is start_season.
    std::vector<double> eps(z.size());
    const std::int64_t first = -static_cast<std::int64_t>(lead);
    for (std::size_t k = 0; k < z.size(); ++k) {
        const int s = shift_season(options.start_season, first + static_cast<std::int64_t>(k), p);
        eps[k] = params.sigma(s) * z[k];
    }

    std::vector<double> values(n);
    for (std::size_t t = 0; t < n; ++t) {
        const int s = shift_season(options.start_season, static_cast<std::int64_t>(t), p);
        // Window eps[t + burn_in .. t + lead] against ψ_M..ψ_0.
        values[t] = dot(reversed_psi[static_cast<std::size_t>(s - 1)].data(),
                        eps.data() + t + options.burn_in, m + 1);
    }
    std::vector<double> innovations(eps.begin() + static_cast<std::ptrdiff_t>(lead), eps.end());
    return {params, options.start_season, std::move(values), std::move(innovations),
            PathMeta{options.seed, options.truncation, options.burn_in}};
}

SamplePath simulate_path(const SeasonalParams& params, std::size_t n,
                         const SimulationOptions& options) {
    if (n < 1) throw InvalidArgument("simulate: n must be >= 1");
    if (options.truncation < 1) throw InvalidArgument("simulate: truncation must be >= 1");
    if (!classify_region(params).causal) {
        throw NotCausal("simulate: parameters are outside the causal region");
    }
    GaussianStream stream(options.seed);
    std::vector<double> z(n + options.truncation + options.burn_in);
    for (double& v : z) v = stream.next();
    return simulate_path_from_draws(params, n, z, options);
}

std::vector<SamplePath> simulate_ensemble(const SeasonalParams& params, std::size_t count,
                                          std::size_t n, const SimulationOptions& options) {
    std::vector<std::optional<SamplePath>> slots(count);
    const std::size_t workers =
        std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(count, 1));
    std::vector<std::future<void>> pending;
    for (std::size_t w = 0; w < workers; ++w) {
        pending.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t r = w; r < count; r += workers) {
                SimulationOptions local = options;
                local.seed = derive_stream_seed(options.seed, r);
                slots[r].emplace(simulate_path(params, n, local));
            }
        }));
    }
    for (auto& f : pending) f.get();
    std::vector<SamplePath> paths;
    paths.reserve(count);
    for (auto& s : slots) paths.push_back(std::move(*s));
    return paths;
}

std::vector<double> recover_innovations(const SamplePath& path, std::size_t filter_length,
                                        IndexingMode mode) {
    if (filter_length < 1) throw InvalidArgument("recover: filter length must be >= 1");
    if (path.size() <= filter_length) {
        std::ostringstream msg;
        msg << "recover: path of length " << path.size() << " is too short for filter length "
            << filter_length;
        throw InsufficientData(msg.str());
    }
    const SeasonalParams& params = path.params();
    if (!classify_region(params).invertible) {
        throw NotInvertible("recover: parameters are outside the invertible region");
    }
    const PeriodicFilter filter(params, CoefficientKind::ar_big_pi, filter_length, mode);
    std::vector<std::vector<double>> reversed_pi;
    for (int i = 1; i <= params.period(); ++i) reversed_pi.push_back(reversed(filter.season(i).values()));

    const auto x = path.values();
    std::vector<double> out;
    out.reserve(path.size() - filter_length);
    for (std::size_t t = filter_length; t < path.size(); ++t) {
        const auto& w = reversed_pi[static_cast<std::size_t>(path.season_at(t) - 1)];
        out.push_back(dot(w.data(), x.data() + (t - filter_length), filter_length + 1));
    }
    return out;
}

}  // namespace parfima
