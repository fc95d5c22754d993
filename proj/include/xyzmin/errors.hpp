#pragma once

#include <stdexcept>
#include <string>

namespace xyzmin {

struct NotHermitian : std::invalid_argument {
    explicit NotHermitian(const std::string& what) : std::invalid_argument(what) {}
};

// A matrix that should be a two-qubit density matrix is not one.
struct StateInvalid : std::invalid_argument {
    explicit StateInvalid(const std::string& what) : std::invalid_argument(what) {}
};

// The trace-MIN closed form only covers states with a diagonal Pauli correlation matrix.
struct NotDiagonalCorrelation : std::invalid_argument {
    explicit NotDiagonalCorrelation(const std::string& what) : std::invalid_argument(what) {}
};

struct DomainError : std::domain_error {
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

struct ConventionMismatch : std::runtime_error {
    explicit ConventionMismatch(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace xyzmin
