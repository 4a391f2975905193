#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace tri3 {

/// Arbitrary-precision integer used for all exact linear algebra.
using Integer = boost::multiprecision::cpp_int;

}  // namespace tri3
