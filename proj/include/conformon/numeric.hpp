#pragma once

#include <cmath>
#include <cstddef>

namespace conformon {

inline constexpr double kPi = 3.14159265358979323846;

inline double sech(double x) { return 1.0 / std::cosh(x); }

inline bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace conformon
