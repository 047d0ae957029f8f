#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <span>
#include <string>
#include <vector>

namespace qnormal {

/// Arbitrary-precision signed integer used for every coordinate and coefficient.
using Integer = boost::multiprecision::cpp_int;

inline std::string to_string(const Integer& value) { return value.str(); }

Integer parse_integer(const std::string& text);

/// gcd of the absolute values of all entries; 0 for an all-zero span.
Integer gcd_of(std::span<const Integer> entries);

/// Exact dot product.
Integer dot(std::span<const Integer> a, std::span<const Integer> b);

}  // namespace qnormal
