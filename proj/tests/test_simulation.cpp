#include <doctest.h>

#include <cmath>
#include <numeric>

#include "oracles.hpp"
#include "parfima/errors.hpp"
#include "parfima/simulation.hpp"

using namespace parfima;

namespace {

SimulationOptions small_options(std::uint64_t seed, std::size_t m = 200) {
    SimulationOptions o;
    o.truncation = m;
    o.burn_in = m;
    o.seed = seed;
    return o;
}

double correlation(std::span<const double> a, std::span<const double> b) {
    const auto n = static_cast<double>(a.size());
    const double ma = std::accumulate(a.begin(), a.end(), 0.0) / n;
    const double mb = std::accumulate(b.begin(), b.end(), 0.0) / n;
    double sab = 0.0, saa = 0.0, sbb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        sab += (a[i] - ma) * (b[i] - mb);
        saa += (a[i] - ma) * (a[i] - ma);
        sbb += (b[i] - mb) * (b[i] - mb);
    }
    return sab / std::sqrt(saa * sbb);
}

}  // namespace

TEST_CASE("GaussianStream is standard normal and reproducible") {
    GaussianStream a(123), b(123);
    double sum = 0.0, sq = 0.0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
        const double z = a.next();
        REQUIRE(z == b.next());
        sum += z;
        sq += z * z;
    }
    CHECK(std::fabs(sum / n) <= 0.01);
    CHECK(std::fabs(sq / n - 1.0) <= 0.015);
}

TEST_CASE("derive_stream_seed separates streams") {
    CHECK(derive_stream_seed(1, 0) != derive_stream_seed(1, 1));
    CHECK(derive_stream_seed(1, 0) != derive_stream_seed(2, 0));
    CHECK(derive_stream_seed(7, 3) == derive_stream_seed(7, 3));
}

TEST_CASE("zero memory: path equals innovations") {
    const SeasonalParams params(2, {0.0, 0.0}, {1.0, 3.0});
    const auto path = simulate_path(params, 500, small_options(9));
    for (std::size_t t = 0; t < path.size(); ++t) REQUIRE(path.values()[t] == path.innovations()[t]);
    const auto eps_hat = recover_innovations(path, 10);
    for (std::size_t t = 10; t < path.size(); ++t) REQUIRE(eps_hat[t - 10] == path.values()[t]);
}

TEST_CASE("same seed, same path") {
    const SeasonalParams params({0.2, 0.3});
    const auto a = simulate_path(params, 300, small_options(7));
    const auto b = simulate_path(params, 300, small_options(7));
    const auto c = simulate_path(params, 300, small_options(8));
    CHECK(std::equal(a.values().begin(), a.values().end(), b.values().begin()));
    CHECK_FALSE(std::equal(a.values().begin(), a.values().end(), c.values().begin()));
    CHECK(a.meta().seed == 7);
    CHECK(a.meta().truncation == 200);
}

TEST_CASE("scaling sigma scales the path") {
    const SeasonalParams base(2, {0.2, 0.35}, {1.0, 0.7});
    const SeasonalParams doubled(2, {0.2, 0.35}, {2.0, 1.4});
    const SeasonalParams tripled(2, {0.2, 0.35}, {3.0, 2.1});
    const auto a = simulate_path(base, 300, small_options(4));
    const auto b = simulate_path(doubled, 300, small_options(4));
    const auto c = simulate_path(tripled, 300, small_options(4));
    for (std::size_t t = 0; t < 300; ++t) {
        CHECK(b.values()[t] == 2.0 * a.values()[t]);
        CHECK(c.values()[t] == doctest::Approx(3.0 * a.values()[t]).epsilon(1e-12).scale(1.0));
    }
}

TEST_CASE("path is the truncated MA of the supplied draws") {
    const SeasonalParams params(3, {0.1, 0.35, -0.2}, {1.0, 0.5, 2.0});
    SimulationOptions opts = small_options(0, 40);
    opts.burn_in = 7;
    opts.start_season = 2;
    const std::size_t n = 60;
    const std::size_t lead = opts.truncation + opts.burn_in;
    std::vector<double> z(n + lead);
    for (std::size_t k = 0; k < z.size(); ++k) z[k] = std::sin(0.7 * static_cast<double>(k)) + 0.01 * k;

    const auto path = simulate_path_from_draws(params, n, z, opts);
    auto season = [&](std::int64_t t) { return oracle::season_of(opts.start_season + t, 3); };
    for (std::size_t t = 0; t < n; ++t) {
        const int s = season(static_cast<std::int64_t>(t));
        double x = 0.0;
        for (std::size_t j = 0; j <= opts.truncation; ++j) {
            const std::int64_t tau = static_cast<std::int64_t>(t) - static_cast<std::int64_t>(j);
            const double eps = params.sigma(season(tau)) * z[static_cast<std::size_t>(tau + static_cast<std::int64_t>(lead))];
            x += oracle::psi(params.d(s), j) * eps;
        }
        CAPTURE(t);
        CHECK(path.values()[t] == doctest::Approx(x).epsilon(1e-12).scale(1.0));
        CHECK(path.season_at(t) == s);
        CHECK(path.innovations()[t] == params.sigma(s) * z[t + lead]);
    }
    CHECK_THROWS_AS(simulate_path_from_draws(params, n + 1, z, opts), DimensionError);
}

TEST_CASE("per-season variance matches the truncated MA variance") {
    const SeasonalParams params({0.2, 0.3});
    SimulationOptions opts = small_options(2024, 2000);
    const std::size_t n = 10000;
    const auto paths = simulate_ensemble(params, 8, n, opts);
    for (int i = 1; i <= 2; ++i) {
        double theory = 0.0;
        for (std::size_t j = 0; j <= opts.truncation; ++j) {
            const double w = oracle::psi(params.d(i), j);
            theory += w * w;
        }
        double sum = 0.0;
        std::size_t count = 0;
        for (const auto& path : paths) {
            for (std::size_t t = 0; t < n; ++t) {
                if (path.season_at(t) != i) continue;
                sum += path.values()[t] * path.values()[t];
                ++count;
            }
        }
        CAPTURE(i);
        CHECK(sum / static_cast<double>(count) == doctest::Approx(theory).epsilon(0.1));
    }
}

TEST_CASE("ensemble path r uses the derived seed") {
    const SeasonalParams params({0.25});
    const auto paths = simulate_ensemble(params, 3, 100, small_options(5, 50));
    REQUIRE(paths.size() == 3);
    for (std::size_t r = 0; r < 3; ++r) {
        const auto single = simulate_path(params, 100, small_options(derive_stream_seed(5, r), 50));
        CHECK(std::equal(single.values().begin(), single.values().end(), paths[r].values().begin()));
    }
}

TEST_CASE("recovery with constant d is classical fractional differencing") {
    const SeasonalParams params({0.4});
    const auto path = simulate_path(params, 400, small_options(17));
    const std::size_t k = 150;
    const auto eps_hat = recover_innovations(path, k);
    REQUIRE(eps_hat.size() == 400 - k);
    for (std::size_t t = k; t < 400; t += 37) {
        double ref = 0.0;
        for (std::size_t j = 0; j <= k; ++j) ref += oracle::pi(0.4, j) * path.values()[t - j];
        CHECK(eps_hat[t - k] == doctest::Approx(ref).epsilon(1e-10).scale(1.0));
    }
}

TEST_CASE("roundtrip recovers the innovations") {
    const SeasonalParams params(2, {0.2, 0.3}, {1.0, 1.5});
    const std::size_t m = 800;
    const auto path = simulate_path(params, 2000, small_options(31, m));
    const auto eps_hat = recover_innovations(path, m);
    const auto eps = path.innovations().subspan(m);
    CHECK(correlation(eps_hat, eps) >= 0.99);
}

TEST_CASE("simulation and recovery errors") {
    CHECK_THROWS_AS(simulate_path(SeasonalParams({1.2, 0.1}), 10, small_options(1)), NotCausal);
    CHECK_THROWS_AS(simulate_path(SeasonalParams({0.1}), 0, small_options(1)), InvalidArgument);
    CHECK_THROWS_AS(simulate_path(SeasonalParams({0.1}), 10, small_options(1, 0)), InvalidArgument);
    SimulationOptions bad_season = small_options(1);
    bad_season.start_season = 3;
    CHECK_THROWS_AS(simulate_path(SeasonalParams({0.1, 0.2}), 10, bad_season), InvalidArgument);

    const auto path = simulate_path(SeasonalParams({0.1}), 20, small_options(1));
    CHECK_THROWS_AS(recover_innovations(path, 20), InsufficientData);
    CHECK_THROWS_AS(recover_innovations(path, 0), InvalidArgument);

    const auto non_invertible = simulate_path(SeasonalParams({-0.6, -1.2}), 50, small_options(1));
    CHECK_THROWS_AS(recover_innovations(non_invertible, 10), NotInvertible);
}
