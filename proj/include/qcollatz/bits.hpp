#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qcollatz {

using BigInt = boost::multiprecision::cpp_int;

/// A finite bit sequence, index 0 first. Written as '0'/'1' characters in
/// the same order ("110" is 1, 1, 0).
using Bits = std::vector<bool>;

Bits bits_from_string(std::string_view text);
std::string to_string(const Bits& bits);

}  // namespace qcollatz
