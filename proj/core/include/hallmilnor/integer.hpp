#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace hallmilnor {

// All coefficient arithmetic is exact; no modular shortcuts, no rounding.
using Int = boost::multiprecision::cpp_int;

} // namespace hallmilnor
