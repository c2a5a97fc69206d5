// SPDX-License-Identifier: Apache-2.0
//
// Exception hierarchy shared by all fairhp modules.

#ifndef FAIRHP_ERRORS_HPP
#define FAIRHP_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fairhp {

class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class SingularMatrixError : public std::runtime_error {
public:
    explicit SingularMatrixError(const std::string& what, double condition_estimate = 0.0)
        : std::runtime_error(what), condition_estimate_(condition_estimate) {}

    // 0 when a zero pivot was hit before an estimate could be formed.
    double condition_estimate() const noexcept { return condition_estimate_; }

private:
    double condition_estimate_;
};

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Raised when fewer quantized angle pairs qualify for a group than RF chains requested.
class InsufficientBeamsError : public std::runtime_error {
public:
    InsufficientBeamsError(std::size_t group, std::size_t qualifying, std::size_t requested)
        : std::runtime_error("group " + std::to_string(group) + ": only " + std::to_string(qualifying) +
                             " quantized angle pairs qualify, " + std::to_string(requested) + " requested"),
          group_(group), qualifying_(qualifying), requested_(requested) {}

    std::size_t group() const noexcept { return group_; }
    std::size_t qualifying_count() const noexcept { return qualifying_; }
    std::size_t requested_count() const noexcept { return requested_; }

private:
    std::size_t group_;
    std::size_t qualifying_;
    std::size_t requested_;
};

// Invalid configuration. field() names the offending entry as a dotted path (e.g. "groups[1].ue_count").
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string field, const std::string& message)
        : std::runtime_error(field.empty() ? message : field + ": " + message), field_(std::move(field)),
          message_(message) {}

    const std::string& field() const noexcept { return field_; }
    const std::string& message() const noexcept { return message_; }

private:
    std::string field_;
    std::string message_;
};

class CampaignError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace fairhp

#endif // FAIRHP_ERRORS_HPP
