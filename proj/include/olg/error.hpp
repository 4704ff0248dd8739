// SPDX-License-Identifier: Apache-2.0

#ifndef OLG_ERROR_HPP
#define OLG_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace olg {

/// Bad argument to a constructor or generator (e.g. K_0, a loop, an
/// out-of-range endpoint).
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed graph6 input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string &what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
  [[nodiscard]] std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

enum class Hypothesis {
  Regular,
  Connected,
  DegreeAtLeast3,
  Orientation,
};

const char *to_string(Hypothesis h);

/// A graph fails a precondition of one of the characteristic-polynomial
/// identities.
class HypothesisError : public std::runtime_error {
 public:
  HypothesisError(Hypothesis violated, const std::string &detail)
      : std::runtime_error(std::string(to_string(violated)) + ": " + detail), violated_(violated) {}
  [[nodiscard]] Hypothesis violated() const { return violated_; }

 private:
  Hypothesis violated_;
};

}  // namespace olg

#endif  // OLG_ERROR_HPP
