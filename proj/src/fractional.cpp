#include "parfima/fractional.hpp"

#include <cmath>
#include <sstream>

#include "parfima/errors.hpp"
#include "parfima/gamma.hpp"

namespace parfima {

Memory::Memory(double d) : d_(d) {
    if (!std::isfinite(d)) {
        std::ostringstream msg;
        msg << "memory parameter must be finite, got " << d;
        throw DomainError(msg.str());
    }
}

std::string_view to_string(CoefficientKind kind) noexcept {
    switch (kind) {
        case CoefficientKind::ar_pi: return "pi";
        case CoefficientKind::ma_psi: return "psi";
        case CoefficientKind::ar_big_pi: return "big-pi";
        case CoefficientKind::ma_big_psi: return "big-psi";
    }
    return "unknown";
}

std::string_view to_string(IndexingMode mode) noexcept {
    switch (mode) {
        case IndexingMode::backward: return "backward";
        case IndexingMode::paper_literal: return "paper";
    }
    return "unknown";
}

IndexingMode parse_indexing_mode(std::string_view text) {
    if (text == "backward") return IndexingMode::backward;
    if (text == "paper" || text == "paper_literal") return IndexingMode::paper_literal;
    throw InvalidArgument("unknown indexing mode '" + std::string(text) +
                          "' (expected backward|paper)");
}

CoefficientSeries::CoefficientSeries(CoefficientKind kind, int season, IndexingMode mode,
                                     std::vector<double> values)
    : kind_(kind), season_(season), mode_(mode), values_(std::move(values)) {
    if (values_.empty()) throw InvalidArgument("coefficient series must hold at least c_0");
    if (values_.front() != 1.0) throw InvalidArgument("coefficient series must start with c_0 = 1");
    if (season_ < 1) throw InvalidArgument("season index is 1-based");
}

namespace detail {

std::vector<long double> fractional_recurrence(double a, std::size_t n) {
    std::vector<long double> c(n + 1);
    c[0] = 1.0L;
    const long double shift = static_cast<long double>(a) - 1.0L;
    for (std::size_t j = 1; j <= n; ++j) {
        const auto lj = static_cast<long double>(j);
        c[j] = c[j - 1] * (lj + shift) / lj;
    }
    return c;
}

}  // namespace detail

namespace {

std::vector<double> narrow(const std::vector<long double>& wide) {
    return {wide.begin(), wide.end()};
}

}  // namespace

CoefficientSeries ma_coefficients(Memory d, std::size_t n) {
    return {CoefficientKind::ma_psi, 1, IndexingMode::backward,
            narrow(detail::fractional_recurrence(d.value(), n))};
}

CoefficientSeries ar_coefficients(Memory d, std::size_t n) {
    return {CoefficientKind::ar_pi, 1, IndexingMode::backward,
            narrow(detail::fractional_recurrence(-d.value(), n))};
}

double ma_asymptotic(Memory d, std::size_t j) {
    if (!(d.value() > 0.0)) {
        std::ostringstream msg;
        msg << "ma_asymptotic: requires d > 0, got d = " << d.value();
        throw DomainError(msg.str());
    }
    if (j == 0) throw DomainError("ma_asymptotic: requires j >= 1");
    const LogGamma lg = log_gamma(d.value());
    return std::exp((d.value() - 1.0) * std::log(static_cast<double>(j)) - lg.log_abs);
}

}  // namespace parfima
