#pragma once

#include <map>
#include <string>

#include "oblivcrn/dickson.hpp"

namespace obliv {

// Reference evaluators for the worked examples, usable as verification
// oracles and probe targets.
struct Builtin {
  int dim = 0;
  PointFn fn;
};

const std::map<std::string, Builtin>& builtin_functions();

// Throws std::invalid_argument for unknown names, listing the known ones.
const Builtin& builtin_function(const std::string& name);

}  // namespace obliv
