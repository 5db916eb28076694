#pragma once

/// @file
/// Single-season fractional differencing coefficients.
///
/// For memory order d the operator (1 - B)^{-d} expands as Σ ψ_j(d) B^j and
/// (1 - B)^{d} as Σ π_j(d) B^j, with
///   ψ_j(d) = Γ(j + d) / (Γ(j + 1) Γ(d)),   π_j(d) = Γ(j - d) / (Γ(j + 1) Γ(-d)).
/// Both are produced by the multiplicative recurrence
///   c_0 = 1,  c_j = c_{j-1} (j - 1 + a) / j,
/// with a = d for ψ and a = -d for π. The recurrence never overflows and gives
/// the limiting value at the gamma poles (non-negative integer d for π,
/// non-positive integer d for ψ), where the gamma-ratio form is 0/∞.

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace parfima {

/// Fractional-integration order d. Always finite.
class Memory {
public:
    /// Throws DomainError when d is NaN or infinite.
    explicit Memory(double d);

    double value() const noexcept { return d_; }
    Memory operator-() const { return Memory(-d_); }

private:
    double d_;
};

enum class CoefficientKind {
    ar_pi,       ///< single-season π_j
    ma_psi,      ///< single-season ψ_j
    ar_big_pi,   ///< periodic Π_j(i)
    ma_big_psi,  ///< periodic Ψ_j(i)
};

/// Season assignment of the inner weights in the periodic recursions.
enum class IndexingMode {
    backward,       ///< lag-l term uses season ((i - l - 1) mod p) + 1
    paper_literal,  ///< lag-l term uses season ((i + k - 1) mod p) + 1, k ≡ l [p]
};

std::string_view to_string(CoefficientKind kind) noexcept;
std::string_view to_string(IndexingMode mode) noexcept;
/// Accepts "backward" and "paper" / "paper_literal". Throws InvalidArgument.
IndexingMode parse_indexing_mode(std::string_view text);

/// Finite prefix c_0..c_n of one coefficient sequence, tagged with its season
/// (1-based; 1 for non-periodic sequences). c_0 = 1 for every kind.
class CoefficientSeries {
public:
    CoefficientSeries(CoefficientKind kind, int season, IndexingMode mode,
                      std::vector<double> values);

    CoefficientKind kind() const noexcept { return kind_; }
    int season() const noexcept { return season_; }
    /// Only meaningful for the periodic kinds.
    IndexingMode indexing_mode() const noexcept { return mode_; }

    /// Highest index n; the series holds n + 1 values.
    std::size_t order() const noexcept { return values_.size() - 1; }
    std::size_t size() const noexcept { return values_.size(); }
    double operator[](std::size_t j) const { return values_[j]; }
    std::span<const double> values() const noexcept { return values_; }

private:
    CoefficientKind kind_;
    int season_;
    IndexingMode mode_;
    std::vector<double> values_;
};

/// ψ_0..ψ_n for memory d.
CoefficientSeries ma_coefficients(Memory d, std::size_t n);

/// π_0..π_n for memory d. Bitwise equal to ma_coefficients(-d, n).
CoefficientSeries ar_coefficients(Memory d, std::size_t n);

/// Leading-order tail ψ_j(d) ≈ j^{d-1} / Γ(d). Requires d > 0 and j >= 1.
double ma_asymptotic(Memory d, std::size_t j);

namespace detail {

/// The recurrence c_j = c_{j-1} (j - 1 + a) / j in extended precision.
std::vector<long double> fractional_recurrence(double a, std::size_t n);

}  // namespace detail

}  // namespace parfima
