#pragma once

#include <stdexcept>
#include <string>

namespace projconn {

/// Malformed or out-of-range input (bad exponents, shape mismatch,
/// unknown variable, a functional that does not annihilate the relations).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured resource bound was hit, e.g. the Groebner degree cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The operation is not implemented for this size (determinants above 4x4).
class UnsupportedSizeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace projconn
