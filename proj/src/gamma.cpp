#include "parfima/gamma.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "parfima/errors.hpp"

namespace parfima {

namespace {

// Godfrey's coefficients for g = 607/128.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczos = {
    0.99999999999999709182,     57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,   .33994649984811888699e-4,
    .46523628927048575665e-4,   -.98374475304879564677e-4, .15808870322491248884e-3,
    -.21026444172410488319e-3,  .21743961811521264320e-3,  -.16431810653676389022e-3,
    .84418223983852743293e-4,   -.26190838401581408670e-4, .36899182659531622704e-5,
};

// ln Γ(x) for x >= 1/2.
double lanczos_log_gamma(double x) {
    const double z = x - 1.0;
    double sum = kLanczos[0];
    for (std::size_t k = 1; k < kLanczos.size(); ++k) {
        sum += kLanczos[k] / (z + static_cast<double>(k));
    }
    const double t = z + kLanczosG + 0.5;
    const double half_log_two_pi = 0.5 * std::log(2.0 * std::numbers::pi);
    return half_log_two_pi + (z + 0.5) * std::log(t) - t + std::log(sum);
}

// Small positive integers: (x-1)! is exact in a double up to 22!.
constexpr double kExactFactorialLimit = 23.0;

// (x-1)! for a positive integer x.
double factorial(double x) {
    double f = 1.0;
    for (double k = 2.0; k < x; k += 1.0) f *= k;
    return f;
}

}  // namespace

double sin_pi(double x) {
    if (!std::isfinite(x)) return std::numeric_limits<double>::quiet_NaN();
    double r = std::fmod(x, 2.0);  // exact, r in (-2, 2)
    if (r > 1.0) r -= 2.0;
    if (r <= -1.0) r += 2.0;       // r in (-1, 1]
    const double sign = r < 0.0 ? -1.0 : 1.0;
    double a = std::fabs(r);
    if (a > 0.5) a = 1.0 - a;      // exact by Sterbenz
    return sign * std::sin(std::numbers::pi * a);
}

LogGamma log_gamma(double x) {
    if (std::isnan(x)) throw DomainError("log_gamma: argument is NaN");
    if (x <= 0.0 && x == std::floor(x)) {
        std::ostringstream msg;
        msg << "log_gamma: pole at x = " << x;
        throw PoleError(msg.str());
    }
    if (x == std::floor(x) && x <= kExactFactorialLimit) return {std::log(factorial(x)), 1};
    if (x >= 0.5) return {lanczos_log_gamma(x), 1};

    const double s = sin_pi(x);
    const double log_abs =
        std::log(std::numbers::pi) - std::log(std::fabs(s)) - lanczos_log_gamma(1.0 - x);
    return {log_abs, s < 0.0 ? -1 : 1};
}

double gamma(double x) {
    if (x > 0.0 && x == std::floor(x) && x <= kExactFactorialLimit) return factorial(x);
    const LogGamma lg = log_gamma(x);
    return lg.sign * std::exp(lg.log_abs);
}

}  // namespace parfima
