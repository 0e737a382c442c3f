#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace qs {

// Expression templates off: plain value semantics in ?:, auto and lambdas.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

inline std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace qs
