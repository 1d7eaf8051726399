#include <doctest.h>

#include "lens/slices.hpp"
#include "lens/tight.hpp"
#include "oracles.hpp"

using namespace lens;

namespace {

std::vector<std::string> slope_strings(const SliceDecomposition& d) {
  std::vector<std::string> out;
  for (const auto& s : d.slopes) out.push_back(s.str());
  return out;
}

std::vector<Integer> contributions(const SliceDecomposition& d) {
  std::vector<Integer> out;
  for (const auto& s : d.slices) out.push_back(s.contribution);
  return out;
}

}  // namespace

TEST_SUITE("slices") {

TEST_CASE("slope sequence of 34/7") {
  auto d = slope_sequence(34, 7);
  CHECK(slope_strings(d) == std::vector<std::string>{"(-6,29)", "(-5,24)", "(-4,19)",
                                                     "(-3,14)", "(-2,9)", "(-1,4)", "(-1,3)",
                                                     "(-1,2)", "(-1,1)"});
  CHECK(contributions(d) == std::vector<Integer>{5, 5, 5, 5, 5, 1, 1, 1});
  CHECK(d.blocks.size() == 2);
  CHECK(d.blocks[0].size() == 3);
  CHECK(d.blocks[1].size() == 5);
}

TEST_CASE("slope sequences of 17/7, 56/15, 28/15") {
  CHECK(slope_strings(slope_sequence(17, 7)) ==
        std::vector<std::string>{"(-5,12)", "(-3,7)", "(-1,2)", "(-1,1)"});
  CHECK(slope_strings(slope_sequence(56, 15)) ==
        std::vector<std::string>{"(-11,41)", "(-7,26)", "(-3,11)", "(-2,7)",
                                 "(-1,3)", "(-1,2)", "(-1,1)"});
  auto d = slope_sequence(28, 15);
  CHECK(d.slices.size() == 6);
  for (const auto& s : d.slices) CHECK(s.contribution == 2);
  CHECK(d.slopes[0].str() == "(-7,13)");
  CHECK_THROWS_AS(slope_sequence(1, 0), DomainError);
}

TEST_CASE("walk structure: Farey neighbours, increasing, block sizes a_i - 2") {
  for (auto [p, q] : oracle::coprime_pairs(120)) {
    auto d = slope_sequence(p, q);
    REQUIRE(!d.slopes.empty());
    CHECK(d.slopes.size() == d.slices.size() + 1);
    CHECK(d.slopes.back() == Slope{1, 1});
    for (size_t i = 0; i + 1 < d.slopes.size(); ++i) {
      const Slope& a = d.slopes[i];
      const Slope& b = d.slopes[i + 1];
      CHECK(abs(a.p * b.q - b.p * a.q) == 1);
      CHECK(a.value() < b.value());
    }
    size_t total = 0;
    for (size_t i = 0; i < d.cf.length(); ++i) {
      CHECK(Integer(static_cast<unsigned long>(d.blocks[i].size())) ==
            d.cf.coeffs[i] - 2);
      total += d.blocks[i].size();
    }
    CHECK(total == d.slices.size());
    IntVector m = meridian_multipliers(d.cf.coeffs, p);
    for (const auto& s : d.slices) {
      CHECK(s.contribution == d.slopes[s.lower].p - d.slopes[s.upper].p);
      CHECK(mod_floor(s.contribution, p) == m[s.component]);
    }
    // the walk starts at [a_1..a_n - 1] and stays strictly above -p/q
    CHECK(d.slopes.front().value() > Rational(-p, q));
    if (d.cf.coeffs.back() > 2) {
      IntVector a = d.cf.coeffs;
      a.back() -= 1;
      CHECK(oracle::hj_value(a) == -d.slopes.front().value());
    }
  }
}

TEST_CASE("signs realise rot and the slice Euler class equals the matrix one") {
  for (auto [p, q] : oracle::coprime_pairs(60)) {
    auto d = slope_sequence(p, q);
    for (const auto& ts : enumerate_tight(p, q)) {
      auto bs = signs_from_rot(d, ts.rot);
      auto signs = slice_signs(d, ts.rot);
      for (size_t i = 0; i < ts.rot.size(); ++i) {
        CHECK(bs[i].plus - bs[i].minus == ts.rot[i]);
        CHECK(bs[i].plus + bs[i].minus == ts.cf.coeffs[i] - 2);
        long sum = 0;
        for (size_t k : d.blocks[i]) sum += signs[k];
        CHECK(sum == ts.rot[i]);
      }
      CHECK(euler_pd_slices(d, ts.rot) == euler_pd(ts).residue);
    }
  }
}

}
