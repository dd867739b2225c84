#pragma once

#include <stdexcept>
#include <string>

namespace localg {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Mismatched dimensions, value variants, singularity sets or families.
class StructuralError : public Error {
public:
    using Error::Error;
};

// A violated domain precondition (uncertified containment, empty Z minus
// Sigma, division by zero, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// The queried point lies in the singularity set.
class SingularPoint : public DomainError {
public:
    using DomainError::DomainError;
};

// No chart of the family is assigned to the queried regular point.
class UncoveredPoint : public DomainError {
public:
    using DomainError::DomainError;
};

// Malformed textual or JSON input.
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace localg
