#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lens {

using Integer = mpz_class;
using Rational = mpq_class;

// Bad arguments: non-coprime pairs, out-of-range rotation numbers, malformed
// numerals. The CLI maps this to exit code 2.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Arguments that are well formed but structurally incompatible, e.g. a
// covering degree that does not divide p. CLI exit code 3.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The request is valid but would enumerate more objects than we allow.
class CapacityError : public DomainError {
 public:
  using DomainError::DomainError;
};

Integer gcd(const Integer& a, const Integer& b);

// Residue of a modulo m in [0, m). Requires m > 0.
Integer mod_floor(const Integer& a, const Integer& m);

// Inverse of a modulo m in [0, m); throws DomainError if it does not exist.
Integer mod_inverse(const Integer& a, const Integer& m);

Integer floor_div(const Integer& a, const Integer& b);
Integer ceil_div(const Integer& a, const Integer& b);

// Largest x >= 0 with x*x <= floor(r). r must be non-negative.
Integer floor_sqrt(const Rational& r);

// Parses an optionally signed decimal numeral. Throws DomainError.
Integer parse_integer(std::string_view text);

// Comma separated list of integers, e.g. "3,-5". Empty string gives {}.
std::vector<Integer> parse_integer_list(std::string_view text);

std::string to_string(const Integer& x);
std::string to_string(const Rational& x);

// "[3,2,4]"
std::string format_list(const std::vector<Integer>& xs);

// Prime factorization: trial division, then Pollard-Brent rho. Throws
// CapacityError if a cofactor resists the iteration budget.
std::map<Integer, unsigned long> factorize(const Integer& n);

inline constexpr size_t kMaxDivisors = 1'000'000;

// Positive divisors of n in increasing order.
std::vector<Integer> divisors(const Integer& n);

bool is_prime(const Integer& n);

// n = s^k for an odd prime s and k >= 1.
bool is_odd_prime_power(const Integer& n);

// Narrowing with a range check; throws CapacityError when x does not fit.
long to_long(const Integer& x, std::string_view what);

}  // namespace lens
