#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace coxpoly {

// All arithmetic in this library is exact. Entries of Coxeter-matrix powers
// grow geometrically, so fixed-width integers are not an option anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;

}  // namespace coxpoly
