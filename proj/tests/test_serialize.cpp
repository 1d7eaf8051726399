#include <doctest.h>

#include "lens/serialize.hpp"
#include "oracles.hpp"

using namespace lens;

TEST_SUITE("serialize") {

TEST_CASE("scalars") {
  Integer big = parse_integer("-98765432109876543210987654321");
  CHECK(to_json(big) == Json("-98765432109876543210987654321"));
  CHECK(integer_from_json(to_json(big)) == big);
  Rational r(-6, 8);
  r.canonicalize();
  Json j = to_json(r);
  CHECK(j.dump() == R"({"num":"-3","den":"4"})");
  CHECK(rational_from_json(j) == r);
  CHECK_THROWS_AS(integer_from_json(Json(5)), DomainError);
  IntMatrix m = {{1, -2}, {3, 4}};
  CHECK(int_matrix_from_json(to_json(m)) == m);
}

TEST_CASE("reports round trip") {
  for (auto [p, q] : oracle::coprime_pairs(25))
    for (const auto& ts : enumerate_tight(p, q)) {
      FillingReport r = report(p, q, ts.rot);
      Json j = to_json(r);
      FillingReport back = filling_report_from_json(Json::parse(j.dump()));
      CHECK(back == r);
      CHECK(to_json(back).dump() == j.dump());
    }
}

TEST_CASE("field order is stable") {
  Json j = to_json(report(17, 7, {1, 0, 2}));
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys.front() == "p");
  CHECK(keys[1] == "q");
  CHECK(keys.back() == "notes");
}

TEST_CASE("verdicts round trip") {
  for (const auto& d : {2, 4, 7, 56}) {
    for (const auto& ts : enumerate_tight(56, 15)) {
      LiftVerdict v = classify_lift(56, 15, ts.rot, d);
      Json j = to_json(v);
      CHECK(j.contains("kind"));
      CHECK(j.contains("reason"));
      CHECK(lift_verdict_from_json(Json::parse(j.dump())) == v);
    }
  }
  Json bad = to_json(classify_lift(56, 15, {2, 0, 2}, 2));
  bad["kind"] = "Maybe";
  CHECK_THROWS_AS(lift_verdict_from_json(bad), DomainError);
}

}
