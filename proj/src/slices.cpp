#include "lens/slices.hpp"

namespace lens {

std::string Slope::str() const { return "(-" + to_string(q) + "," + to_string(p) + ")"; }

SliceDecomposition slope_sequence(const Integer& p, const Integer& q) {
  SliceDecomposition dec;
  dec.cf = expand(p, q);
  if (dec.cf.is_sphere()) throw DomainError("no slice decomposition for S^3");
  const IntVector& a = dec.cf.coeffs;
  const size_t n = a.size();

  Integer total = 0;
  for (const auto& c : a) total += c - 2;
  if (total > kMaxMaterialized) throw CapacityError("too many basic slices to list");

  // [a_1..a_{m-1}, x] = (x num[m-1] - num[m-2]) / (x den[m-1] - den[m-2]).
  Continuants c = prefix_continuants(a);
  auto slope_at = [&](size_t m, const Integer& x) {
    Integer num = x * c.num[m - 1] - (m >= 2 ? c.num[m - 2] : Integer(0));
    Integer den = x * c.den[m - 1] - (m >= 2 ? c.den[m - 2] : Integer(-1));
    Integer g = gcd(num, den);
    return Slope{den / g, num / g};
  };

  dec.blocks.assign(n, {});
  for (size_t m = n; m >= 1; --m) {
    // The first value of every later block, x = a_m - 1, is the contracted
    // last value of the previous block.
    Integer x = a[m - 1] - 1;
    if (m == n) dec.slopes.push_back(slope_at(m, x));
    for (--x; x >= 1; --x) {
      dec.slopes.push_back(slope_at(m, x));
      Slice s;
      s.lower = dec.slopes.size() - 2;
      s.upper = dec.slopes.size() - 1;
      s.contribution = dec.slopes[s.lower].p - dec.slopes[s.upper].p;
      s.component = m - 1;
      dec.blocks[m - 1].push_back(dec.slices.size());
      dec.slices.push_back(std::move(s));
    }
  }
  return dec;
}

std::vector<BlockSigns> signs_from_rot(const SliceDecomposition& dec, const IntVector& rot) {
  const IntVector& a = dec.cf.coeffs;
  if (rot.size() != a.size())
    throw DomainError("rotation vector has " + std::to_string(rot.size()) + " entries, expected " +
                      std::to_string(a.size()));
  std::vector<BlockSigns> out;
  for (size_t i = 0; i < a.size(); ++i) {
    Integer size = a[i] - 2;
    if (abs(rot[i]) > size || mod_floor(rot[i] - size, 2) != 0)
      throw DomainError("rotation number " + to_string(rot[i]) + " out of range for a=" +
                        to_string(a[i]));
    Integer plus = (size + rot[i]) / 2;
    out.push_back(BlockSigns{plus, size - plus});
  }
  return out;
}

std::vector<int> slice_signs(const SliceDecomposition& dec, const IntVector& rot) {
  std::vector<BlockSigns> counts = signs_from_rot(dec, rot);
  std::vector<int> signs(dec.slices.size(), 0);
  for (size_t i = 0; i < dec.blocks.size(); ++i) {
    Integer left = counts[i].plus;
    for (size_t idx : dec.blocks[i]) {
      signs[idx] = left > 0 ? 1 : -1;
      if (left > 0) --left;
    }
  }
  return signs;
}

Integer euler_pd_slices(const SliceDecomposition& dec, const IntVector& rot) {
  std::vector<int> signs = slice_signs(dec, rot);
  Integer sum = 0;
  for (size_t k = 0; k < dec.slices.size(); ++k) sum += signs[k] * dec.slices[k].contribution;
  return mod_floor(sum, dec.cf.p);
}

}  // namespace lens
