#pragma once

/// @file
/// Log-gamma with the sign of the gamma function carried separately, so that
/// ratios of gammas at negative non-integer arguments stay computable.

namespace parfima {

struct LogGamma {
    double log_abs;  ///< ln|Γ(x)|
    int sign;        ///< +1 or -1, the sign of Γ(x)
};

/// ln|Γ(x)| and sign(Γ(x)).
///
/// Positive arguments use a Lanczos approximation (g = 607/128, 15 terms).
/// Arguments below 1/2 go through the reflection identity
/// Γ(x)Γ(1-x) = π / sin(πx), with sin(πx) evaluated after exact range
/// reduction so that large negative arguments keep full accuracy.
///
/// Throws PoleError for x in {0, -1, -2, ...} and DomainError for NaN.
LogGamma log_gamma(double x);

/// Γ(x) = sign · exp(ln|Γ(x)|), exact at positive integers up to 23.
/// Overflows to ±inf for large x.
double gamma(double x);

/// sin(πx) with exact reduction of x modulo 2.
double sin_pi(double x);

}  // namespace parfima
