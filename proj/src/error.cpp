#include "copent/error.hpp"

namespace copent {

Error::Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

bool Error::is_numerical() const noexcept
{
    return kind_ == ErrorKind::SingularMatrix || kind_ == ErrorKind::DuplicatePoints;
}

const char* to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::InvalidInput: return "invalid input";
    case ErrorKind::DegenerateInput: return "degenerate input";
    case ErrorKind::Domain: return "domain error";
    case ErrorKind::SingularMatrix: return "singular matrix";
    case ErrorKind::DuplicatePoints: return "duplicate points";
    case ErrorKind::Io: return "i/o error";
    }
    return "unknown error";
}

}  // namespace copent
