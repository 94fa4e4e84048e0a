#pragma once

#include "supersplit/bundle.hpp"

namespace supersplit {

/// Named bundles: "O", "O(a)", "split:a1,a2;b1,b2" (even twists before the
/// semicolon, odd after), "tangent", "cotangent".
Bundle builtin_bundle(const std::string& name, SuperSpaceSig space);

std::vector<std::string> builtin_names();

}  // namespace supersplit
