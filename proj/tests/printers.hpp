#pragma once

#include <ostream>

#include "fareykit/slope.hpp"

namespace fareykit {

inline void PrintTo(const Slope& s, std::ostream* os) { *os << to_string(s); }

}  // namespace fareykit
