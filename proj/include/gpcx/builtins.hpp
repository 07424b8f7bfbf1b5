#pragma once

#include <string>
#include <vector>

#include "gpcx/presentation.hpp"

namespace gpcx {

// Named example graphs.  References stay valid for the whole process.
// Throws ParseError for an unknown name.
const PresentationGraph& builtin(const std::string& name);

const std::vector<std::string>& builtin_names();

}  // namespace gpcx
