#pragma once

#include <utility>
#include <vector>

#include "lens/arith.hpp"

namespace lens {

// Negative (Hirzebruch-Jung) continued fraction
//
//   p/q = a_1 - 1/(a_2 - 1/(... - 1/a_l)),   a_i >= 2.
//
// The lens space L(1,0) = S^3 is represented by p = 1, q = 0 and an empty
// coefficient list.
struct NegCFrac {
  Integer p;
  Integer q;
  std::vector<Integer> coeffs;

  size_t length() const { return coeffs.size(); }
  bool is_sphere() const { return coeffs.empty(); }

  friend bool operator==(const NegCFrac&, const NegCFrac&) = default;
};

// Requires 0 < q < p and gcd(p, q) = 1, or (p, q) = (1, 0).
NegCFrac expand(const Integer& p, const Integer& q);

// Exact value of [a_1, ..., a_l] as a reduced fraction (p, q). Every entry
// must be >= 2 and the list non-empty.
std::pair<Integer, Integer> evaluate(const std::vector<Integer>& coeffs);

// Expansion of p/(p-q) by Riemenschneider's staircase of dots: row i holds
// a_i - 1 dots and starts in the column of the last dot of row i-1; the dual
// coefficient of column j is one more than the number of dots in it.
NegCFrac riemenschneider_dual(const NegCFrac& cf);

// (length of p/q, length of p/(p-q)). The dual length is read off the dot
// staircase without materializing it.
std::pair<size_t, size_t> length_pair(const Integer& p, const Integer& q);

// Exact length of the dual expansion, (a_1 - 1) + sum_{i>1} (a_i - 2).
Integer dual_length(const NegCFrac& cf);

// Numerator and denominator continuants of the prefixes of a coefficient
// list: prefix(k) = [a_1..a_k] = num[k]/den[k] for k = 0..l, with
// num[0] = 1, den[0] = 0.
struct Continuants {
  std::vector<Integer> num;
  std::vector<Integer> den;
};
Continuants prefix_continuants(const std::vector<Integer>& coeffs);

// Throws DomainError unless 0 < q < p and gcd(p, q) = 1.
void require_lens_pair(const Integer& p, const Integer& q);

// Upper bound on the number of coefficients or dots we are willing to
// materialize.
inline constexpr long kMaxMaterialized = 2'000'000;

}  // namespace lens
