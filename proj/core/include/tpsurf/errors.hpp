#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tpsurf {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or unusable input (bad syntax, wrong bidegree, dependent generators).
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InputError(what + " at position " + std::to_string(position)), detail_(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string detail_;
  std::size_t position_;
};

// The instance lies outside the supported setting: no singly graded syzygy,
// b < 2n - 1, basepoints, failed case thresholds.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

// An identity that must hold exactly did not. Either the input violates an
// unchecked hypothesis or there is a bug; never silently ignored.
class CertificateError : public Error {
 public:
  using Error::Error;
};

}  // namespace tpsurf
