#pragma once

#include <json.hpp>

namespace hic {

// Insertion-ordered so emitted documents keep their documented key order.
using Json = nlohmann::ordered_json;

}  // namespace hic
