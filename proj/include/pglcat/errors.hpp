#pragma once

#include <stdexcept>
#include <string>

namespace pglcat {

// Mathematically invalid arguments (p not prime, parameters out of range, ...).
class DomainError : public std::runtime_error {
public:
  explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed data files or payloads.
class DataError : public std::runtime_error {
public:
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace pglcat
