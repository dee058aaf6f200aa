#pragma once

#include <stdexcept>
#include <string>

namespace moblike {

// Base of every error thrown by the library. Callers that only care about
// "something went wrong in moblike" catch this.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Requested interval or checkpoint exceeds the supported range.
class range_error : public error {
 public:
  using error::error;
};

// An exact integer summation would leave int64 range.
class overflow_error : public error {
 public:
  using error::error;
};

// Evaluation point coincides (numerically) with a pole.
class pole_error : public error {
 public:
  using error::error;
};

class invalid_split : public error {
 public:
  using error::error;
};

class insufficient_data : public error {
 public:
  using error::error;
};

// Omega constant requested for a zero that is cancelled by L(s, chi) or not simple.
class cancelled_zero : public error {
 public:
  using error::error;
};

class config_error : public error {
 public:
  using error::error;
};

class capacity_error : public error {
 public:
  using error::error;
};

}  // namespace moblike
