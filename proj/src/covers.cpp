#include "lens/covers.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace lens {

std::string CoverSpec::name() const {
  if (is_sphere()) return "S^3";
  return "L(" + lens::to_string(cover_p) + "," + lens::to_string(cover_q) + ")";
}

CoverSpec cover_spec(const Integer& p, const Integer& q, const Integer& d) {
  require_lens_pair(p, q);
  if (d < 2) throw DomainError("covering degree must be at least 2, got " + to_string(d));
  if (p % d != 0)
    throw StructuralError("degree " + to_string(d) + " does not divide p=" + to_string(p));
  CoverSpec c{p, q, d, p / d, 0};
  c.cover_q = c.cover_p == 1 ? Integer(0) : mod_floor(q, c.cover_p);
  return c;
}

std::vector<CoverSpec> covering_lattice(const Integer& p, const Integer& q) {
  require_lens_pair(p, q);
  std::vector<CoverSpec> out;
  for (const auto& d : divisors(p))
    if (d >= 2) out.push_back(cover_spec(p, q, d));
  return out;
}

bool quick_criterion(const Integer& p, const Integer& q, const Integer& d) {
  cover_spec(p, q, d);
  return q < p && p < d * q;
}

RelaxedCriterion relaxed_details(const Integer& p, const Integer& q, const Integer& d) {
  cover_spec(p, q, d);
  RelaxedCriterion r;
  r.q_star = mod_inverse(q, p);
  r.slope_p = p - r.q_star;
  r.slope_q = mod_inverse(r.q_star, r.slope_p);
  if (r.slope_p == 1) r.slope_q = 1;  // [a_1..a_n - 1] = 1/1 when p/q = 2/1
  r.remark_p = p + r.q_star;
  r.remark_q = mod_inverse(r.q_star, r.remark_p);
  r.fires = r.slope_p < d * r.slope_q;
  return r;
}

bool relaxed_criterion(const Integer& p, const Integer& q, const Integer& d) {
  return relaxed_details(p, q, d).fires;
}

Slope slope_pullback(const Slope& s, const Integer& d) {
  if (d < 1) throw DomainError("covering degree must be positive");
  Integer dq = d * s.q;
  Integer g = gcd(dq, s.p);
  return Slope{dq / g, s.p / g};
}

SliceCorrespondence slice_correspondence(const SliceDecomposition& base,
                                         const SliceDecomposition* cover, const Integer& d) {
  if (base.cf.p % d != 0) throw StructuralError("degree does not divide p");
  if (cover) {
    if (cover->cf.p * d != base.cf.p || cover->cf.q != mod_floor(base.cf.q, cover->cf.p))
      throw DomainError("cover decomposition does not match the degree");
  } else if (d != base.cf.p) {
    throw DomainError("missing cover decomposition");
  }

  // Work with positive values p/q; the slope order reverses.
  auto value = [](const Slope& s) { return Rational(s.p, s.q); };
  const Rational top = cover ? value(cover->slopes.front()) : Rational(1);
  const Rational one(1);

  SliceCorrespondence out;
  for (const auto& slice : base.slices) {
    Rational hi = value(slope_pullback(base.slopes[slice.lower], d));
    Rational lo = value(slope_pullback(base.slopes[slice.upper], d));
    bool below = hi > top;
    bool above = lo < one;
    SliceImage img;
    if (cover) {
      for (size_t k = 0; k < cover->slices.size(); ++k) {
        Rational b = value(cover->slopes[cover->slices[k].lower]);
        Rational a = value(cover->slopes[cover->slices[k].upper]);
        if (lo < b && a < hi) img.cover_slices.push_back(k);
      }
    }
    const size_t met = img.cover_slices.size() + (below ? 1 : 0) + (above ? 1 : 0);
    if (img.cover_slices.empty()) {
      img.kind = below && above ? Placement::AcrossRange
                 : below        ? Placement::BelowRange
                                : Placement::AboveRange;
    } else if (met == 1) {
      img.kind = Placement::Within;
    } else {
      img.kind = Placement::Straddle;
      out.straddle = true;
    }
    out.images.push_back(std::move(img));
  }
  return out;
}

namespace {

// One independent sign variable of the compatibility system and what flipping
// it to +1 adds to the partial rotation vectors and to the residue
// sum(base) - sum(cover).
struct SignVariable {
  std::vector<long> base_delta;
  std::vector<long> cover_delta;
  Integer residue_delta;
};

struct UnionFind {
  std::vector<size_t> parent;
  explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  size_t find(size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(size_t a, size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

CompatibilityResult compatible_assignments(const Integer& p, const Integer& q, const Integer& d) {
  CoverSpec spec = cover_spec(p, q, d);
  if (spec.is_sphere()) throw DomainError("compatible_assignments needs a cover other than S^3");

  SliceDecomposition base = slope_sequence(p, q);
  SliceDecomposition cover = slope_sequence(spec.cover_p, spec.cover_q);
  SliceCorrespondence corr = slice_correspondence(base, &cover, d);

  const size_t nb = base.cf.length(), nc = cover.cf.length();
  const Integer& modulus = spec.cover_p;

  // Cover slices tied together by a straddling base slice share one sign.
  UnionFind uf(cover.slices.size());
  for (const auto& img : corr.images)
    for (size_t k = 1; k < img.cover_slices.size(); ++k)
      uf.unite(img.cover_slices[0], img.cover_slices[k]);

  std::map<size_t, SignVariable> tied;
  auto fresh = [&] { return SignVariable{std::vector<long>(nb, 0), std::vector<long>(nc, 0), 0}; };
  for (size_t k = 0; k < cover.slices.size(); ++k) {
    auto [it, inserted] = tied.try_emplace(uf.find(k), fresh());
    it->second.cover_delta[cover.slices[k].component] += 1;
    it->second.residue_delta -= cover.slices[k].contribution;
  }
  std::vector<SignVariable> vars;
  for (size_t j = 0; j < base.slices.size(); ++j) {
    const auto& img = corr.images[j];
    const auto& slice = base.slices[j];
    if (img.cover_slices.empty()) {
      SignVariable v = fresh();
      v.base_delta[slice.component] = 1;
      v.residue_delta = slice.contribution;
      vars.push_back(std::move(v));
    } else {
      SignVariable& v = tied.at(uf.find(img.cover_slices[0]));
      v.base_delta[slice.component] += 1;
      v.residue_delta += slice.contribution;
    }
  }
  for (auto& [root, v] : tied) vars.push_back(std::move(v));

  // States: base partial rot, cover partial rot, residue mod p'.
  const long mod = to_long(modulus, "cover order");
  std::set<std::vector<long>> states{std::vector<long>(nb + nc + 1, 0)};
  for (const auto& v : vars) {
    const long r = to_long(mod_floor(v.residue_delta, modulus), "residue");
    std::set<std::vector<long>> next;
    for (const auto& s : states) {
      for (int sign : {1, -1}) {
        std::vector<long> t = s;
        for (size_t i = 0; i < nb; ++i) t[i] += sign * v.base_delta[i];
        for (size_t i = 0; i < nc; ++i) t[nb + i] += sign * v.cover_delta[i];
        long& res = t[nb + nc];
        res = ((res + sign * r) % mod + mod) % mod;
        next.insert(std::move(t));
      }
    }
    states = std::move(next);
  }

  CompatibilityResult result;
  result.straddle = corr.straddle;
  for (const auto& s : states) {
    if (s[nb + nc] != 0) continue;
    CompatibleAssignment a;
    for (size_t i = 0; i < nb; ++i) a.base_rot.emplace_back(s[i]);
    for (size_t i = 0; i < nc; ++i) a.cover_rot.emplace_back(s[nb + i]);
    result.solutions.push_back(std::move(a));
  }
  std::sort(result.solutions.begin(), result.solutions.end());
  result.solutions.erase(std::unique(result.solutions.begin(), result.solutions.end()),
                         result.solutions.end());
  return result;
}

bool only_universally_tight(const Integer& p, const Integer& q) {
  if (p == 1) return true;
  NegCFrac cf = expand(p, q);
  size_t threes = 0;
  for (const auto& a : cf.coeffs) {
    if (a > 3) return false;
    if (a == 3) ++threes;
  }
  return threes <= 1;
}

std::string to_string(LiftKind k) {
  switch (k) {
    case LiftKind::Tight: return "Tight";
    case LiftKind::Overtwisted: return "Overtwisted";
    case LiftKind::Inconclusive: return "Inconclusive";
  }
  return "";
}

std::string to_string(LiftReason r) {
  switch (r) {
    case LiftReason::UniversallyTight: return "UniversallyTight";
    case LiftReason::ToS3: return "ToS3";
    case LiftReason::OnlyUTOnCover: return "OnlyUTOnCover";
    case LiftReason::QuickCriterion: return "QuickCriterion";
    case LiftReason::RelaxedCriterion: return "RelaxedCriterion";
    case LiftReason::NoCompatibleSigns: return "NoCompatibleSigns";
    case LiftReason::CompatibleSigns: return "CompatibleSigns";
    case LiftReason::Conservative: return "Conservative";
  }
  return "";
}

std::optional<LiftKind> lift_kind_from_string(const std::string& s) {
  for (auto k : {LiftKind::Tight, LiftKind::Overtwisted, LiftKind::Inconclusive})
    if (to_string(k) == s) return k;
  return std::nullopt;
}

std::optional<LiftReason> lift_reason_from_string(const std::string& s) {
  for (auto r : {LiftReason::UniversallyTight, LiftReason::ToS3, LiftReason::OnlyUTOnCover,
                 LiftReason::QuickCriterion, LiftReason::RelaxedCriterion,
                 LiftReason::NoCompatibleSigns, LiftReason::CompatibleSigns,
                 LiftReason::Conservative})
    if (to_string(r) == s) return r;
  return std::nullopt;
}

LiftClassifier::LiftClassifier(Integer p, Integer q) : p_(std::move(p)), q_(std::move(q)) {
  require_lens_pair(p_, q_);
}

LiftVerdict LiftClassifier::classify(const TightStructure& ts, const Integer& d) {
  if (ts.p() != p_ || ts.q() != q_) throw DomainError("structure lives on another lens space");
  LiftVerdict v;
  v.cover = cover_spec(p_, q_, d);
  auto overtwisted = [&](LiftReason r) {
    v.kind = LiftKind::Overtwisted;
    v.reason = r;
    return v;
  };
  if (ts.universally_tight()) {
    v.kind = LiftKind::Tight;
    v.reason = LiftReason::UniversallyTight;
    return v;
  }
  if (v.cover.is_sphere()) return overtwisted(LiftReason::ToS3);
  if (only_universally_tight(v.cover.cover_p, v.cover.cover_q))
    return overtwisted(LiftReason::OnlyUTOnCover);
  if (quick_criterion(p_, q_, d)) return overtwisted(LiftReason::QuickCriterion);
  if (relaxed_criterion(p_, q_, d)) return overtwisted(LiftReason::RelaxedCriterion);

  auto it = compat_.find(d);
  if (it == compat_.end()) it = compat_.emplace(d, compatible_assignments(p_, q_, d)).first;
  for (const auto& s : it->second.solutions)
    if (s.base_rot == ts.rot) v.witnesses.push_back(s.cover_rot);
  if (!v.witnesses.empty()) {
    v.kind = LiftKind::Inconclusive;
    v.reason = LiftReason::CompatibleSigns;
    return v;
  }
  if (it->second.straddle) {
    v.kind = LiftKind::Inconclusive;
    v.reason = LiftReason::Conservative;
    return v;
  }
  return overtwisted(LiftReason::NoCompatibleSigns);
}

LiftVerdict classify_lift(const Integer& p, const Integer& q, const IntVector& rot,
                          const Integer& d) {
  TightStructure ts = make_structure(p, q, rot);
  LiftClassifier c(p, q);
  return c.classify(ts, d);
}

}  // namespace lens
