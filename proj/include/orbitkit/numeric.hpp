#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace orbitkit {

// All arithmetic in this project is exact: arbitrary-precision integers and
// rationals, never floating point.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int int_gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int int_abs(const Int& a) { return boost::multiprecision::abs(a); }

bool is_prime(long n);
std::vector<long> distinct_prime_factors(long n);

// Largest power of p dividing n (n >= 1).
long p_part(long n, long p);

// True iff n = p^k for some k >= 0 (so 1 counts as a p-power).
bool is_prime_power_of(long n, long p);

std::string to_string(const Int& v);
std::string to_string(const Rat& v);

}  // namespace orbitkit
