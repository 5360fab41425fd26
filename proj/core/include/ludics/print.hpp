#pragma once

// Pretty-printing of designs and definition systems in the textual grammar.
// Internally generated variables (reserved prefix) are renamed back to
// friendly names; output is deterministic.

#include <string>

#include "ludics/design.hpp"

namespace ludics {

std::string print_design(const DesignPtr& d);
std::string print_defs(const DefSystem& defs);

}  // namespace ludics
