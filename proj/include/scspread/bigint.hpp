#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace scspread {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt bigint_pow(const BigInt& base, unsigned long exponent) {
    return boost::multiprecision::pow(base, exponent);
}

}  // namespace scspread
