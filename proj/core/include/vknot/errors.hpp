#pragma once

#include <stdexcept>
#include <string>

namespace vknot {

// Raised when textual input (Gauss codes, patterns, certificates, catalogs)
// cannot be parsed.  The message identifies the offending token or line.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised when an operation is applied outside its domain: an illegal move,
// a saddle on a missing arc, a non-positive diagram passed to the positive
// genus formula, and so on.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace vknot
