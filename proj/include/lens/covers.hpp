#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lens/slices.hpp"
#include "lens/tight.hpp"

namespace lens {

// Degree-d cover L(p', q') -> L(p, q) with p' = p/d and q' = q mod p'.
// p' = 1 is S^3 (q' = 0).
struct CoverSpec {
  Integer p, q, d;
  Integer cover_p, cover_q;

  bool is_sphere() const { return cover_p == 1; }
  std::string name() const;  // "L(17,7)" or "S^3"

  friend bool operator==(const CoverSpec&, const CoverSpec&) = default;
};

// Throws StructuralError when d does not divide p, DomainError when d < 2.
CoverSpec cover_spec(const Integer& p, const Integer& q, const Integer& d);

// One entry per divisor d >= 2 of p, increasing in d.
std::vector<CoverSpec> covering_lattice(const Integer& p, const Integer& q);

// q < p < d q: the whole base decomposition pulls back into the standard
// neighborhood of slope -1, so virtually overtwisted structures lift
// overtwisted.
bool quick_criterion(const Integer& p, const Integer& q, const Integer& d);

struct RelaxedCriterion {
  Integer q_star;      // q^{-1} mod p
  Integer slope_p;     // p - q*: first Honda slope -slope_p/slope_q = [a_1..a_n - 1]
  Integer slope_q;     // (q*)^{-1} mod slope_p
  Integer remark_p;    // p + q*, the sum form; equals the numerator of [a_1..a_n + 1]
  Integer remark_q;    // (q*)^{-1} mod remark_p
  bool fires = false;  // slope_p < d * slope_q
};

RelaxedCriterion relaxed_details(const Integer& p, const Integer& q, const Integer& d);
bool relaxed_criterion(const Integer& p, const Integer& q, const Integer& d);

// (-q, p) -> (-d q, p) in lowest terms.
Slope slope_pullback(const Slope& s, const Integer& d);

enum class Placement {
  BelowRange,   // pulls back below the cover's first slope
  AboveRange,   // pulls back past -1, into the other solid torus
  AcrossRange,  // spans both sides of a cover with no slices
  Within,       // inside exactly one cover slice
  Straddle,     // meets several cover slices, or a cover slice and a range end
};

struct SliceImage {
  Placement kind = Placement::BelowRange;
  std::vector<size_t> cover_slices;  // met cover slices, increasing
};

struct SliceCorrespondence {
  std::vector<SliceImage> images;  // one per base slice
  bool straddle = false;
};

// cover is absent for the universal cover S^3.
SliceCorrespondence slice_correspondence(const SliceDecomposition& base,
                                         const SliceDecomposition* cover, const Integer& d);

struct CompatibleAssignment {
  IntVector base_rot;
  IntVector cover_rot;

  friend auto operator<=>(const CompatibleAssignment&, const CompatibleAssignment&) = default;
  friend bool operator==(const CompatibleAssignment&, const CompatibleAssignment&) = default;
};

struct CompatibilityResult {
  std::vector<CompatibleAssignment> solutions;  // sorted, unique
  bool straddle = false;
};

// Sign choices on base and cover slices such that base slices lying over a
// cover slice carry that slice's sign and
//   sum(base signs * contributions) = sum(cover signs * contributions) mod p'.
// Requires d | p and d < p.
CompatibilityResult compatible_assignments(const Integer& p, const Integer& q, const Integer& d);

// Every tight structure on L(p, q) is universally tight. True for S^3.
bool only_universally_tight(const Integer& p, const Integer& q);

enum class LiftKind { Tight, Overtwisted, Inconclusive };

enum class LiftReason {
  UniversallyTight,
  ToS3,
  OnlyUTOnCover,
  QuickCriterion,
  RelaxedCriterion,
  NoCompatibleSigns,
  CompatibleSigns,
  Conservative,  // no compatible signs, but a straddling slice was over-constrained
};

std::string to_string(LiftKind k);
std::string to_string(LiftReason r);
std::optional<LiftKind> lift_kind_from_string(const std::string& s);
std::optional<LiftReason> lift_reason_from_string(const std::string& s);

struct LiftVerdict {
  LiftKind kind = LiftKind::Inconclusive;
  LiftReason reason = LiftReason::CompatibleSigns;
  CoverSpec cover;
  std::vector<IntVector> witnesses;  // cover rotation vectors, Inconclusive only

  friend bool operator==(const LiftVerdict&, const LiftVerdict&) = default;
};

LiftVerdict classify_lift(const Integer& p, const Integer& q, const IntVector& rot,
                          const Integer& d);

// Caches compatible_assignments per degree; use for many structures on one
// lens space.
class LiftClassifier {
 public:
  LiftClassifier(Integer p, Integer q);
  LiftVerdict classify(const TightStructure& ts, const Integer& d);

 private:
  Integer p_, q_;
  std::map<Integer, CompatibilityResult> compat_;
};

}  // namespace lens
