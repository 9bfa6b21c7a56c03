#pragma once

#include <stdexcept>
#include <string>

namespace approx {

// Base for every error the library raises on purpose. Anything else escaping
// a solver is treated as an internal failure.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text, invariant violation, unknown names, incompatible inputs.
class InputError : public Error {
 public:
  using Error::Error;
};

// An exact oracle or exponential algorithm was asked to run past its
// configured size limit.
class CapExceeded : public Error {
 public:
  CapExceeded(std::string cap_name, long long limit, long long requested);

  const std::string& cap_name() const noexcept { return cap_name_; }
  long long limit() const noexcept { return limit_; }
  long long requested() const noexcept { return requested_; }

 private:
  std::string cap_name_;
  long long limit_;
  long long requested_;
};

}  // namespace approx
