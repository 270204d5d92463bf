#pragma once

#include <stdexcept>
#include <string>

namespace hdpart {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An array that should be a d-dimensional partition violates monotonicity.
class InvalidPartition : public Error {
 public:
  using Error::Error;
};

class RankMismatch : public Error {
 public:
  using Error::Error;
};

class UnsupportedRank : public Error {
 public:
  using Error::Error;
};

// Bad argument value (out-of-range parameter, malformed input, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A documented soft resource limit was exceeded.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace hdpart
