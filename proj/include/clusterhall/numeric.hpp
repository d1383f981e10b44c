#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

namespace clusterhall {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

bool is_prime(std::uint32_t p);
// Primes p <= 64 usable by the field kernels, ascending.
const std::vector<std::uint32_t>& supported_primes();

// [n choose k]_q
BigInt gaussian_binomial(int n, int k, const BigInt& q);

inline std::string to_string(const BigInt& x) { return x.str(); }
std::string to_string(const Rational& x);

}  // namespace clusterhall
