#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace tmc {

// Exact nonnegative counts (group orders, arrangement counts).
using BigCount = boost::multiprecision::cpp_int;

inline BigCount factorial(unsigned n) {
  BigCount r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

inline std::string to_string(const BigCount& v) { return v.str(); }

}  // namespace tmc
