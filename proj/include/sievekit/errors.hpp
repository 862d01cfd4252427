#pragma once

#include <stdexcept>
#include <string>

namespace sievekit {

struct NonPolynomialError : std::runtime_error {
    explicit NonPolynomialError(const std::string& what) : std::runtime_error(what) {}
};

struct PoleError : std::runtime_error {
    explicit PoleError(const std::string& what) : std::runtime_error(what) {}
};

struct NotRationalError : std::runtime_error {
    explicit NotRationalError(const std::string& what) : std::runtime_error(what) {}
};

struct NonIntegralError : std::runtime_error {
    explicit NonIntegralError(const std::string& what) : std::runtime_error(what) {}
};

struct IndeterminateSignError : std::runtime_error {
    explicit IndeterminateSignError(const std::string& what) : std::runtime_error(what) {}
};

struct NotSymmetricError : std::runtime_error {
    explicit NotSymmetricError(const std::string& what) : std::runtime_error(what) {}
};

struct ConditionViolatedError : std::runtime_error {
    explicit ConditionViolatedError(const std::string& what) : std::runtime_error(what) {}
};

struct NotTriangulationError : std::runtime_error {
    explicit NotTriangulationError(const std::string& what) : std::runtime_error(what) {}
};

struct NonConstantError : std::runtime_error {
    explicit NonConstantError(const std::string& what) : std::runtime_error(what) {}
};

struct OutOfBandError : std::runtime_error {
    explicit OutOfBandError(const std::string& what) : std::runtime_error(what) {}
};

struct UnsupportedOrderError : std::runtime_error {
    explicit UnsupportedOrderError(const std::string& what) : std::runtime_error(what) {}
};

// Carries the first prefix index at which the ballot property fails.
struct NotBallotError : std::runtime_error {
    long position;
    NotBallotError(const std::string& what, long pos)
        : std::runtime_error(what), position(pos) {}
};

struct InvalidInputError : std::runtime_error {
    explicit InvalidInputError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace sievekit
