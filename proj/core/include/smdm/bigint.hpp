#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace smdm {

using BigInt = boost::multiprecision::cpp_int;

// floor(log2(x)) for x > 0
inline std::uint64_t floor_log2(const BigInt& x) {
    if (x <= 0) throw std::domain_error("floor_log2: argument must be positive");
    return boost::multiprecision::msb(x);
}

// log2(x) as double, usable far beyond the double range
inline double log2_as_double(const BigInt& x) {
    if (x <= 0) throw std::domain_error("log2_as_double: argument must be positive");
    const std::uint64_t bits = boost::multiprecision::msb(x);
    if (bits <= 62) return std::log2(x.convert_to<double>());
    const std::uint64_t shift = bits - 62;
    const BigInt top = x >> shift;
    return static_cast<double>(shift) + std::log2(top.convert_to<double>());
}

// num/den as double; exact to ~1 ulp when both operands survive the range
// reduction, log-domain fallback for extreme magnitude ratios
inline double ratio_as_double(const BigInt& num, const BigInt& den) {
    if (den <= 0) throw std::domain_error("ratio_as_double: denominator must be positive");
    if (num == 0) return 0.0;
    if (num < 0) return -ratio_as_double(-num, den);
    const std::uint64_t nb = boost::multiprecision::msb(num);
    const std::uint64_t db = boost::multiprecision::msb(den);
    const std::uint64_t top = nb > db ? nb : db;
    if (top <= 1000) return num.convert_to<double>() / den.convert_to<double>();
    const std::uint64_t shift = top - 1000;
    const BigInt ns = num >> shift;
    const BigInt ds = den >> shift;
    if (ns == 0 || ds == 0) return std::exp2(log2_as_double(num) - log2_as_double(den));
    return ns.convert_to<double>() / ds.convert_to<double>();
}

}  // namespace smdm
