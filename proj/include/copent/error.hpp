#pragma once

#include <stdexcept>
#include <string>

namespace copent {

// Failure categories. The CLI maps each category to an exit code, so the
// hierarchy is part of the public contract.
enum class ErrorKind {
    InvalidInput,
    DegenerateInput,
    Domain,
    SingularMatrix,
    DuplicatePoints,
    Io,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what);
    ErrorKind kind() const noexcept { return kind_; }

    // True for failures of the numerics rather than of the caller's input.
    bool is_numerical() const noexcept;

private:
    ErrorKind kind_;
};

class InvalidInputError : public Error {
public:
    explicit InvalidInputError(const std::string& what) : Error(ErrorKind::InvalidInput, what) {}
};

class DegenerateInputError : public Error {
public:
    explicit DegenerateInputError(const std::string& what) : Error(ErrorKind::DegenerateInput, what) {}
};

class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(ErrorKind::Domain, what) {}
};

class SingularMatrixError : public Error {
public:
    explicit SingularMatrixError(const std::string& what) : Error(ErrorKind::SingularMatrix, what) {}
};

class DuplicatePointsError : public Error {
public:
    explicit DuplicatePointsError(const std::string& what) : Error(ErrorKind::DuplicatePoints, what) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error(ErrorKind::Io, what) {}
};

const char* to_string(ErrorKind kind) noexcept;

}  // namespace copent
