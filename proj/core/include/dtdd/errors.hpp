#pragma once

#include <stdexcept>
#include <string>

namespace dtdd {

/// Argument outside the region where a formula is defined or guaranteed to converge.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Requested inverse does not exist (e.g. the SINR map at full power-control compensation).
class NonInvertibleError : public DomainError {
public:
    using DomainError::DomainError;
};

/// An infinite series hit its term cap before meeting the stopping rule.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, int terms_used)
        : std::runtime_error(what), terms_(terms_used) {}

    int terms_used() const noexcept { return terms_; }

private:
    int terms_;
};

}  // namespace dtdd
