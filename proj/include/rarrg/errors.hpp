#pragma once
#include <stdexcept>
#include <string>

namespace rarrg {

// Bad input: malformed files, violated preconditions, config mistakes.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// A remote dependency (embedding endpoint, generation backend) failed.
class ExternalServiceError : public std::runtime_error {
public:
    explicit ExternalServiceError(const std::string& msg) : std::runtime_error(msg) {}
};

// Non-finite values or other numeric breakdown.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace rarrg
