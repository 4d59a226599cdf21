#pragma once

#include <stdexcept>
#include <string>

namespace tropkit {

// Error taxonomy mirrored by the CLI exit codes: domain -> 1, parse -> 2,
// resource -> 3.

class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what, std::size_t position = npos)
      : std::runtime_error(what), position_(position) {}
  std::size_t position() const { return position_; }
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::size_t position_;
};

class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tropkit
