#pragma once

#include <vector>

#include "lens/cfrac.hpp"
#include "lens/lattice.hpp"

namespace lens {

// One isotopy class of tight contact structures on L(p,q), given by the
// rotation numbers of the Legendrian chain for [a_1, ..., a_n]. Components
// are in the left-to-right order of the expansion.
struct TightStructure {
  NegCFrac cf;
  IntVector rot;

  const Integer& p() const { return cf.p; }
  const Integer& q() const { return cf.q; }

  // rot = y or rot = -y with y_i = 2 - a_i.
  bool universally_tight() const;

  friend bool operator==(const TightStructure&, const TightStructure&) = default;
};

// y = (2 - a_1, ..., 2 - a_n)
IntVector ut_rotation(const IntVector& coeffs);

// Validates |rot_i| <= a_i - 2 and rot_i = a_i (mod 2).
TightStructure make_structure(const Integer& p, const Integer& q, const IntVector& rot);

// All prod(a_i - 1) structures in lexicographic order of rot.
std::vector<TightStructure> enumerate_tight(const Integer& p, const Integer& q);

// Number of isotopy classes, prod(a_i - 1), without enumerating.
Integer count_tight(const NegCFrac& cf);

// Classes up to contactomorphism: {rot, -rot} merged. Each group lists
// indices into `all`, groups ordered by their first member.
std::vector<std::vector<size_t>> contactomorphism_classes(const std::vector<TightStructure>& all);

// m_1 = 1, m_2 = a_1, m_{i+1} = a_i m_i - m_{i-1}, reduced mod p. The
// meridians of the surgery link satisfy mu_i = m_i mu_1 in H_1 = Z/p.
IntVector meridian_multipliers(const IntVector& coeffs, const Integer& p);

struct EulerClassValue {
  Integer residue;    // in [0, p)
  Integer canonical;  // min(residue, p - residue)
  Integer modulus;

  friend bool operator==(const EulerClassValue&, const EulerClassValue&) = default;
};

EulerClassValue make_euler_value(const Integer& value, const Integer& modulus);

// PD(e) = sum rot_i m_i in Z/p, in units of mu_1.
EulerClassValue euler_pd(const TightStructure& ts);

// c_1^2 of the chain plumbing, rot^T Q^{-1} rot.
Rational c1_squared(const TightStructure& ts);

// d_3 = (c_1^2 - 3 sigma - 2 chi) / 4 with sigma = -n, chi = n + 1.
Rational d3(const TightStructure& ts);
Rational d3_from_c1_squared(const Rational& c1sq, size_t n);

}  // namespace lens
