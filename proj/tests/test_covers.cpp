#include <doctest.h>

#include "lens/covers.hpp"
#include "oracles.hpp"

using namespace lens;

namespace {

bool has_vot_base(const CompatibilityResult& r, const IntVector& coeffs) {
  IntVector y = ut_rotation(coeffs), ny;
  for (const auto& v : y) ny.push_back(-v);
  for (const auto& s : r.solutions)
    if (s.base_rot != y && s.base_rot != ny) return true;
  return false;
}

}  // namespace

TEST_SUITE("covers") {

TEST_CASE("cover specs") {
  auto c = cover_spec(34, 7, 2);
  CHECK(c.cover_p == 17);
  CHECK(c.cover_q == 7);
  CHECK(c.name() == "L(17,7)");
  CHECK(cover_spec(34, 7, 34).is_sphere());
  CHECK(cover_spec(34, 7, 34).name() == "S^3");
  CHECK(cover_spec(56, 15, 7).name() == "L(8,7)");
  CHECK_THROWS_AS(cover_spec(34, 7, 3), StructuralError);
  CHECK_THROWS_AS(cover_spec(34, 7, 1), DomainError);
  CHECK_THROWS_AS(cover_spec(34, 7, 0), DomainError);
  auto all = covering_lattice(56, 15);
  REQUIRE(all.size() == 7);
  CHECK(all.front().d == 2);
  CHECK(all.back().d == 56);
}

TEST_CASE("quick and relaxed criteria") {
  CHECK(quick_criterion(56, 15, 7));
  CHECK_FALSE(quick_criterion(56, 15, 2));
  CHECK_FALSE(quick_criterion(34, 7, 2));
  auto r = relaxed_details(34, 7, 2);
  CHECK(r.q_star == 5);
  CHECK(r.remark_p == 39);
  CHECK(r.remark_q == 8);
  CHECK(r.slope_p == 29);
  CHECK(r.slope_q == 6);
  CHECK_FALSE(r.fires);
  CHECK_FALSE(relaxed_criterion(34, 7, 2));
  // the sum form is [a_1..a_n + 1]
  for (auto [p, q] : oracle::coprime_pairs(60, 3)) {
    NegCFrac cf = expand(p, q);
    auto rd = relaxed_details(p, q, p);
    IntVector plus = cf.coeffs;
    plus.back() += 1;
    CHECK(oracle::hj_value(plus) == Rational(rd.remark_p, rd.remark_q));
    if (cf.coeffs.back() > 2) {
      IntVector minus = cf.coeffs;
      minus.back() -= 1;
      CHECK(oracle::hj_value(minus) == Rational(rd.slope_p, rd.slope_q));
    }
  }
  for (auto [p, q] : oracle::coprime_pairs(80))
    for (const auto& d : divisors(p))
      if (d > 1 && quick_criterion(p, q, d)) CHECK(relaxed_criterion(p, q, d));
}

TEST_CASE("slope pullback") {
  CHECK(slope_pullback(Slope{7, 34}, 2) == Slope{7, 17});
  CHECK(slope_pullback(Slope{1, 4}, 2) == Slope{1, 2});
  CHECK(slope_pullback(Slope{1, 3}, 2) == Slope{2, 3});
}

TEST_CASE("compatible assignments: fixtures") {
  auto r34 = compatible_assignments(34, 7, 2);
  REQUIRE(r34.solutions.size() == 2);
  for (const auto& s : r34.solutions) {
    IntVector y = ut_rotation({5, 7});
    IntVector ny = {-y[0], -y[1]};
    CHECK((s.base_rot == y || s.base_rot == ny));
  }
  CHECK(compatible_assignments(52, 11, 2).solutions.size() == 2);
  auto r56 = compatible_assignments(56, 15, 2);
  CHECK(r56.straddle);
  CHECK(has_vot_base(r56, {4, 4, 4}));
  bool golla = false;
  for (const auto& s : r56.solutions)
    golla = golla || (s.base_rot == IntVector{2, 0, 2} && s.cover_rot == IntVector{0, 2, 0});
  CHECK(golla);
  CHECK_THROWS_AS(compatible_assignments(34, 7, 34), DomainError);
}

TEST_CASE("DP agrees with exhaustive sign enumeration") {
  size_t compared = 0;
  for (auto [p, q] : oracle::coprime_pairs(40))
    for (const auto& d : divisors(p)) {
      if (d == 1 || d == p) continue;
      auto spec = cover_spec(p, q, d);
      auto base = slope_sequence(p, q);
      auto cover = slope_sequence(spec.cover_p, spec.cover_q);
      if (base.slices.size() + cover.slices.size() > 18) continue;
      auto dp = compatible_assignments(p, q, d);
      auto bf = oracle::brute_force_compatible(p, q, d);
      CHECK(std::vector<CompatibleAssignment>(bf.begin(), bf.end()) == dp.solutions);
      ++compared;
    }
  CHECK(compared > 100);
  auto bf = oracle::brute_force_compatible(34, 7, 2);
  CHECK(bf.size() == 2);
}

TEST_CASE("solutions are closed under global negation and contain the UT pairs") {
  for (auto [p, q] : oracle::coprime_pairs(60))
    for (const auto& d : divisors(p)) {
      if (d == 1 || d == p) continue;
      auto r = compatible_assignments(p, q, d);
      std::set<CompatibleAssignment> set(r.solutions.begin(), r.solutions.end());
      for (const auto& s : r.solutions) {
        CompatibleAssignment n;
        for (const auto& x : s.base_rot) n.base_rot.push_back(-x);
        for (const auto& x : s.cover_rot) n.cover_rot.push_back(-x);
        CHECK(set.count(n) == 1);
      }
      // the UT structure pulls back to UT: all pluses everywhere is compatible
      IntVector y = ut_rotation(expand(p, q).coeffs);
      bool found = false;
      for (const auto& s : r.solutions) found = found || s.base_rot == y;
      CHECK(found);
    }
}

TEST_CASE("only universally tight") {
  CHECK(only_universally_tight(4, 3));
  CHECK(only_universally_tight(8, 7));
  CHECK(only_universally_tight(2, 1));
  CHECK(only_universally_tight(1, 0));
  CHECK_FALSE(only_universally_tight(17, 7));
  CHECK_FALSE(only_universally_tight(4, 1));
  CHECK(only_universally_tight(5, 2));  // [3,2]
  CHECK_FALSE(only_universally_tight(8, 3));  // [3,3]
}

TEST_CASE("lift verdicts") {
  for (const auto& ts : enumerate_tight(34, 7)) {
    auto v = classify_lift(34, 7, ts.rot, 2);
    if (ts.universally_tight()) {
      CHECK(v.kind == LiftKind::Tight);
    } else {
      CHECK(v.kind == LiftKind::Overtwisted);
      CHECK(v.reason == LiftReason::NoCompatibleSigns);
    }
  }
  auto v13 = classify_lift(52, 11, {1, 0, 1}, 13);
  CHECK(v13.kind == LiftKind::Overtwisted);
  CHECK(v13.reason == LiftReason::OnlyUTOnCover);
  CHECK(v13.cover.name() == "L(4,3)");
  auto g = classify_lift(56, 15, {2, 0, 2}, 2);
  CHECK(g.kind == LiftKind::Inconclusive);
  CHECK(g.reason == LiftReason::CompatibleSigns);
  CHECK(g.witnesses == std::vector<IntVector>{{0, 2, 0}});
  CHECK(classify_lift(56, 15, {0, 0, 0}, 56).reason == LiftReason::ToS3);
  CHECK(classify_lift(56, 15, {2, 2, 2}, 2).kind == LiftKind::Tight);
  CHECK_THROWS_AS(classify_lift(56, 15, {0, 0, 0}, 3), StructuralError);
}

TEST_CASE("every VOT structure on L(52,11) lifts overtwisted to every cover") {
  LiftClassifier lc(52, 11);
  for (const auto& ts : enumerate_tight(52, 11)) {
    if (ts.universally_tight()) continue;
    for (const auto& d : divisors(52))
      if (d > 1) CHECK(lc.classify(ts, d).kind == LiftKind::Overtwisted);
  }
}

TEST_CASE("verdict properties") {
  for (auto [p, q] : oracle::coprime_pairs(40)) {
    LiftClassifier lc(p, q);
    for (const auto& ts : enumerate_tight(p, q))
      for (const auto& d : divisors(p)) {
        if (d == 1) continue;
        auto v = lc.classify(ts, d);
        CHECK(v == classify_lift(p, q, ts.rot, d));
        if (ts.universally_tight()) CHECK(v.kind == LiftKind::Tight);
        if (v.kind == LiftKind::Inconclusive && v.reason == LiftReason::CompatibleSigns)
          CHECK(!v.witnesses.empty());
        if (v.kind != LiftKind::Inconclusive) CHECK(v.witnesses.empty());
        if (!ts.universally_tight() && d == p) CHECK(v.reason == LiftReason::ToS3);
      }
  }
}

TEST_CASE("tag names round trip") {
  for (auto k : {LiftKind::Tight, LiftKind::Overtwisted, LiftKind::Inconclusive})
    CHECK(lift_kind_from_string(to_string(k)) == k);
  for (auto r : {LiftReason::UniversallyTight, LiftReason::ToS3, LiftReason::OnlyUTOnCover,
                 LiftReason::QuickCriterion, LiftReason::RelaxedCriterion,
                 LiftReason::NoCompatibleSigns, LiftReason::CompatibleSigns,
                 LiftReason::Conservative})
    CHECK(lift_reason_from_string(to_string(r)) == r);
  CHECK_FALSE(lift_kind_from_string("Bogus").has_value());
}

}
