#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace knotcalc {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace knotcalc
