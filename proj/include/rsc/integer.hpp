#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace rsc {

using Integer = boost::multiprecision::cpp_int;

Integer factorial(std::uint64_t n);

inline std::string to_decimal(const Integer& x) { return x.str(); }

} // namespace rsc
