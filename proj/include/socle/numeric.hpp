#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

namespace socle {

// Every integer that can grow (matrix entries, exponents, torsion
// coefficients) is a cpp_int. Indices and orders of materialized finite
// groups stay machine ints; those are capped elsewhere.
using Int = boost::multiprecision::cpp_int;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;

// Strict decimal parse (optional leading '-'), rejects junk.
Int parse_int(std::string_view text);

std::string to_string(const Int& n);

// Deterministic primality for the small primes that appear in J-sets.
// Trial division; exact for any size, fast for anything sane.
bool is_prime(const Int& n);

}  // namespace socle
