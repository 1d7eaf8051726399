#include "lens/tight.hpp"

#include <map>

namespace lens {

namespace {

constexpr long kMaxStructures = 5'000'000;

}  // namespace

IntVector ut_rotation(const IntVector& coeffs) {
  IntVector y;
  y.reserve(coeffs.size());
  for (const auto& a : coeffs) y.push_back(2 - a);
  return y;
}

bool TightStructure::universally_tight() const {
  const IntVector y = ut_rotation(cf.coeffs);
  if (rot == y) return true;
  for (size_t i = 0; i < rot.size(); ++i)
    if (rot[i] != -y[i]) return false;
  return true;
}

TightStructure make_structure(const Integer& p, const Integer& q, const IntVector& rot) {
  NegCFrac cf = expand(p, q);
  if (cf.is_sphere()) throw DomainError("S^3 carries a single tight structure with no chain");
  if (rot.size() != cf.length())
    throw DomainError("rotation vector has " + std::to_string(rot.size()) +
                      " entries but " + format_list(cf.coeffs) + " has " +
                      std::to_string(cf.length()) + " components");
  for (size_t i = 0; i < rot.size(); ++i) {
    const Integer& a = cf.coeffs[i];
    Integer r = rot[i];
    if (abs(r) > a - 2 || mod_floor(r - a, 2) != 0)
      throw DomainError("rotation number " + to_string(r) + " is invalid for component " +
                        std::to_string(i + 1) + " with a=" + to_string(a));
  }
  return TightStructure{std::move(cf), rot};
}

Integer count_tight(const NegCFrac& cf) {
  Integer n = 1;
  for (const auto& a : cf.coeffs) n *= a - 1;
  return n;
}

std::vector<TightStructure> enumerate_tight(const Integer& p, const Integer& q) {
  NegCFrac cf = expand(p, q);
  if (cf.is_sphere()) throw DomainError("no chain for S^3");
  if (count_tight(cf) > kMaxStructures)
    throw CapacityError("L(" + to_string(p) + "," + to_string(q) + ") has " +
                        to_string(count_tight(cf)) + " tight structures; too many to list");

  const size_t n = cf.length();
  std::vector<TightStructure> out;
  IntVector rot(n);
  for (size_t i = 0; i < n; ++i) rot[i] = 2 - cf.coeffs[i];
  while (true) {
    out.push_back(TightStructure{cf, rot});
    // odometer, last coordinate fastest, step 2 from -(a-2) to a-2
    size_t i = n;
    while (i > 0) {
      --i;
      if (rot[i] < cf.coeffs[i] - 2) {
        rot[i] += 2;
        break;
      }
      rot[i] = 2 - cf.coeffs[i];
      if (i == 0) return out;
    }
  }
}

std::vector<std::vector<size_t>> contactomorphism_classes(const std::vector<TightStructure>& all) {
  std::map<IntVector, size_t> group_of;
  std::vector<std::vector<size_t>> groups;
  for (size_t i = 0; i < all.size(); ++i) {
    IntVector neg = all[i].rot;
    for (auto& v : neg) v = -v;
    auto it = group_of.find(neg);
    if (it != group_of.end()) {
      groups[it->second].push_back(i);
      group_of[all[i].rot] = it->second;
    } else {
      group_of[all[i].rot] = groups.size();
      groups.push_back({i});
    }
  }
  return groups;
}

IntVector meridian_multipliers(const IntVector& coeffs, const Integer& p) {
  IntVector m;
  if (coeffs.empty()) return m;
  m.push_back(mod_floor(1, p));
  if (coeffs.size() > 1) m.push_back(mod_floor(coeffs[0], p));
  for (size_t i = 2; i < coeffs.size(); ++i)
    m.push_back(mod_floor(coeffs[i - 1] * m[i - 1] - m[i - 2], p));
  return m;
}

EulerClassValue make_euler_value(const Integer& value, const Integer& modulus) {
  EulerClassValue e;
  e.modulus = modulus;
  e.residue = mod_floor(value, modulus);
  Integer other = mod_floor(-e.residue, modulus);
  e.canonical = e.residue < other ? e.residue : other;
  return e;
}

EulerClassValue euler_pd(const TightStructure& ts) {
  IntVector m = meridian_multipliers(ts.cf.coeffs, ts.p());
  Integer sum = 0;
  for (size_t i = 0; i < m.size(); ++i) sum += ts.rot[i] * m[i];
  return make_euler_value(sum, ts.p());
}

Rational c1_squared(const TightStructure& ts) {
  return qform(linking_matrix(ts.cf.coeffs), ts.rot);
}

Rational d3_from_c1_squared(const Rational& c1sq, size_t n) {
  const Rational sigma(-static_cast<long>(n));
  const Rational chi(static_cast<long>(n) + 1);
  Rational r = (c1sq - 3 * sigma - 2 * chi) / 4;
  r.canonicalize();
  return r;
}

Rational d3(const TightStructure& ts) { return d3_from_c1_squared(c1_squared(ts), ts.cf.length()); }

}  // namespace lens
