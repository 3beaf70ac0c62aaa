#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ahyp {

/// Parameters outside the domain of a type or real-form family.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Requested computation exceeds the supported rank for an explicit enumeration.
class UnsupportedRank : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed algebra expression. `position()` is the 0-based byte offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// The rank profiles of (G, H) cannot come from a closed reductive subgroup H of G.
class NotASubgroupPair : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace ahyp
