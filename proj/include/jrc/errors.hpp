#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace jrc {

/// A configuration value violates a modeling invariant.
class ValidationError : public std::invalid_argument {
public:
    ValidationError(std::string field, const std::string& what)
        : std::invalid_argument(field + ": " + what), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

/// Malformed scenario text. Line numbers are 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Caller broke a documented precondition.
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A metric has no finite value for the given input (zero Fisher information,
/// all-zero rate vector).
class UndefinedMetricError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The requested QoS / power split cannot be met.
/// kappa_min, when present, is the smallest communications power share
/// that would have made the problem feasible.
class InfeasibleError : public std::domain_error {
public:
    explicit InfeasibleError(const std::string& what, std::optional<double> kappa_min = std::nullopt)
        : std::domain_error(what), kappa_min_(kappa_min) {}

    std::optional<double> kappa_min() const noexcept { return kappa_min_; }

private:
    std::optional<double> kappa_min_;
};

/// Monte Carlo input is below the asymptotic-region SNR guard.
class BelowThresholdError : public std::domain_error {
public:
    BelowThresholdError(double snr_db, double required_db);

    double snr_db() const noexcept { return snr_db_; }

private:
    double snr_db_;
};

}  // namespace jrc
