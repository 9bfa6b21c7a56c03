#pragma once

#include "json.hpp"

namespace approx {

// Insertion-ordered so every document keeps its documented key order.
using Json = nlohmann::ordered_json;

}  // namespace approx
