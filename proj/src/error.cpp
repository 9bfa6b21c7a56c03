#include "approx/error.hpp"

#include <utility>

namespace approx {

CapExceeded::CapExceeded(std::string cap_name, long long limit, long long requested)
    : Error(cap_name + " cap exceeded: limit " + std::to_string(limit) + ", requested " +
            std::to_string(requested)),
      cap_name_(std::move(cap_name)),
      limit_(limit),
      requested_(requested) {}

}  // namespace approx
