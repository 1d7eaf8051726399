#pragma once

#include <string>
#include <vector>

#include "lens/cfrac.hpp"
#include "lens/lattice.hpp"

namespace lens {

// Dividing slope (-q, p) of a convex torus, standing for the fraction -p/q.
// Always in lowest terms with p, q >= 1.
struct Slope {
  Integer q;
  Integer p;

  Rational value() const { return Rational(-p, q); }
  std::string str() const;  // "(-q,p)"

  friend bool operator==(const Slope&, const Slope&) = default;
};

struct Slice {
  size_t lower = 0;  // index into slopes, more negative end
  size_t upper = 0;
  Integer contribution;  // p_lower - p_upper
  size_t component = 0;  // 0-based chain component owning this slice
};

struct SliceDecomposition {
  NegCFrac cf;
  std::vector<Slope> slopes;  // from -p_1/q_1 up to -1/1
  std::vector<Slice> slices;  // in slope order
  // blocks[i] lists the slices of component i (a_i - 2 of them). The walk
  // produces the block of the last component first.
  std::vector<std::vector<size_t>> blocks;
};

// Honda's walk: decrement the last coefficient of [a_1..a_n] one step at a
// time, contracting a trailing 1, until reaching [1] = 1/1. Requires p >= 2.
SliceDecomposition slope_sequence(const Integer& p, const Integer& q);

struct BlockSigns {
  Integer plus;
  Integer minus;

  friend bool operator==(const BlockSigns&, const BlockSigns&) = default;
};

// plus - minus = rot_i and plus + minus = a_i - 2 for every component.
std::vector<BlockSigns> signs_from_rot(const SliceDecomposition& dec, const IntVector& rot);

// +1 / -1 per slice: in each block the pluses come first.
std::vector<int> slice_signs(const SliceDecomposition& dec, const IntVector& rot);

// Signed sum of contributions, reduced mod p.
Integer euler_pd_slices(const SliceDecomposition& dec, const IntVector& rot);

}  // namespace lens
