#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lens/covers.hpp"
#include "lens/lattice.hpp"
#include "lens/tight.hpp"

namespace lens {

struct ChiBounds {
  Integer chi_min;
  Integer chi_max;

  friend bool operator==(const ChiBounds&, const ChiBounds&) = default;
};

// chi_max = 1 + length(p/q); chi_min = 2 for virtually overtwisted, else 1.
ChiBounds chi_bounds(const TightStructure& ts);

struct RationalBallTest {
  bool possible = false;  // c_1^2 = -n, equivalently d_3 = -1/2
  bool in_family = false;  // (p, q) is L(m^2, mk - 1)
  Rational c1_squared;
  Rational d3;
  std::string reason;

  friend bool operator==(const RationalBallTest&, const RationalBallTest&) = default;
};

RationalBallTest rational_ball_obstruction(const TightStructure& ts);

// p = m^2 and q = mk - 1 mod p for some 0 < k < m with gcd(m, k) = 1.
bool in_rational_ball_family(const Integer& p, const Integer& q);

struct ChiExact {
  std::optional<Integer> chi;  // present when c_1(xi) = 0 and chi is a positive integer
  bool c1_vanishes = false;
  bool contradiction = false;  // c_1(xi) = 0 but 4 d_3 + 3 is not a positive integer

  friend bool operator==(const ChiExact&, const ChiExact&) = default;
};

// When PD(e) = 0 every Stein filling has c_1 = 0 and sigma = 1 - chi, so
// chi = 4 d_3 + 3.
ChiExact chi_exact_if_c1_zero(const TightStructure& ts);

// p in {2, 4, s^k, 2 s^k} with s an odd prime.
bool homeo_unique_flag(const Integer& p);

struct Exclusion {
  Integer order;                     // excluded |pi_1| = e
  std::vector<std::string> reasons;  // every rule that excludes it

  friend bool operator==(const Exclusion&, const Exclusion&) = default;
};

struct Pi1Candidates {
  std::vector<Integer> candidates;  // sorted divisors e of p
  std::vector<Exclusion> excluded;  // sorted by order
  std::vector<std::string> notes;

  friend bool operator==(const Pi1Candidates&, const Pi1Candidates&) = default;
};

// Candidate orders of pi_1(X) = Z/e for Stein fillings X.
//  R1: a cover with pi_1-order h on which the lift is certainly overtwisted
//      forces ker(i_*) not inside that subgroup, excluding every e with
//      (p/e) | h.
//  R2: chi(X) <= (1 + length(p'/q'))/e with p' = p/e, compared with the lower
//      bound (2 for virtually overtwisted) and with the exact chi if known.
//  R3: p prime gives {1}.
Pi1Candidates pi1_candidates(const TightStructure& ts);

struct FillingReport {
  Integer p, q;
  IntVector coeffs;
  IntVector rot;
  bool universally_tight = false;
  EulerClassValue euler;
  Rational c1_squared;
  Rational d3;
  ChiBounds chi;
  ChiExact chi_exact;
  RationalBallTest ball;
  bool rational_ball_possible = false;  // ball.possible and not virtually overtwisted
  bool homeo_unique_at_max_b2 = false;
  Pi1Candidates pi1;
  // maximal filling lattice
  size_t b2_max = 0;
  size_t ambient_rank = 0;
  IntVector dual_coeffs;
  size_t complement_rank = 0;
  Integer complement_det;
  bool complement_negative_definite = false;
  bool complement_has_minus_one = false;
  bool minus_one_search_complete = false;
  IntMatrix complement_gram;
  std::vector<std::string> notes;

  friend bool operator==(const FillingReport&, const FillingReport&) = default;
};

FillingReport report(const Integer& p, const Integer& q, const IntVector& rot);

}  // namespace lens
