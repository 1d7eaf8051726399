#include "lens/serialize.hpp"

namespace lens {

Json to_json(const Integer& x) { return to_string(x); }

Json to_json(const Rational& x) {
  Rational c(x);
  c.canonicalize();
  Json j;
  j["num"] = to_string(c.get_num());
  j["den"] = to_string(c.get_den());
  return j;
}

Json to_json(const IntVector& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(to_string(x));
  return j;
}

Json to_json(const IntMatrix& m) {
  Json j = Json::array();
  for (const auto& row : m) j.push_back(to_json(row));
  return j;
}

Integer integer_from_json(const Json& j) {
  if (!j.is_string()) throw DomainError("expected a decimal string");
  return parse_integer(j.get<std::string>());
}

Rational rational_from_json(const Json& j) {
  Rational r(integer_from_json(j.at("num")), integer_from_json(j.at("den")));
  if (r.get_den() == 0) throw DomainError("zero denominator");
  r.canonicalize();
  return r;
}

IntVector int_vector_from_json(const Json& j) {
  IntVector v;
  for (const auto& x : j) v.push_back(integer_from_json(x));
  return v;
}

IntMatrix int_matrix_from_json(const Json& j) {
  IntMatrix m;
  for (const auto& row : j) m.push_back(int_vector_from_json(row));
  return m;
}

Json to_json(const NegCFrac& cf) {
  Json j;
  j["p"] = to_json(cf.p);
  j["q"] = to_json(cf.q);
  j["coeffs"] = to_json(cf.coeffs);
  j["length"] = cf.length();
  return j;
}

Json to_json(const CoverSpec& c) {
  Json j;
  j["degree"] = to_json(c.d);
  j["p"] = to_json(c.p);
  j["q"] = to_json(c.q);
  j["cover_p"] = to_json(c.cover_p);
  j["cover_q"] = to_json(c.cover_q);
  j["name"] = c.name();
  return j;
}

CoverSpec cover_spec_from_json(const Json& j) {
  return CoverSpec{integer_from_json(j.at("p")), integer_from_json(j.at("q")),
                   integer_from_json(j.at("degree")), integer_from_json(j.at("cover_p")),
                   integer_from_json(j.at("cover_q"))};
}

Json to_json(const LiftVerdict& v) {
  Json j;
  j["kind"] = to_string(v.kind);
  j["reason"] = to_string(v.reason);
  j["cover"] = to_json(v.cover);
  Json w = Json::array();
  for (const auto& r : v.witnesses) w.push_back(to_json(r));
  j["witnesses"] = w;
  return j;
}

LiftVerdict lift_verdict_from_json(const Json& j) {
  LiftVerdict v;
  auto kind = lift_kind_from_string(j.at("kind").get<std::string>());
  auto reason = lift_reason_from_string(j.at("reason").get<std::string>());
  if (!kind || !reason) throw DomainError("unknown verdict tag");
  v.kind = *kind;
  v.reason = *reason;
  v.cover = cover_spec_from_json(j.at("cover"));
  for (const auto& w : j.at("witnesses")) v.witnesses.push_back(int_vector_from_json(w));
  return v;
}

Json to_json(const SliceDecomposition& dec) {
  Json j;
  j["p"] = to_json(dec.cf.p);
  j["q"] = to_json(dec.cf.q);
  j["coeffs"] = to_json(dec.cf.coeffs);
  Json slopes = Json::array();
  for (const auto& s : dec.slopes) slopes.push_back(Json::array({to_json(Integer(-s.q)), to_json(s.p)}));
  j["slopes"] = slopes;
  Json slices = Json::array();
  for (const auto& s : dec.slices) {
    Json e;
    e["lower"] = s.lower;
    e["upper"] = s.upper;
    e["contribution"] = to_json(s.contribution);
    e["component"] = s.component + 1;
    slices.push_back(e);
  }
  j["slices"] = slices;
  Json blocks = Json::array();
  for (const auto& b : dec.blocks) blocks.push_back(b.size());
  j["block_sizes"] = blocks;
  return j;
}

Json to_json(const FillingReport& r) {
  Json j;
  j["p"] = to_json(r.p);
  j["q"] = to_json(r.q);
  j["coeffs"] = to_json(r.coeffs);
  j["rot"] = to_json(r.rot);
  j["universally_tight"] = r.universally_tight;
  j["euler_pd"] = to_json(r.euler.residue);
  j["euler_pd_canonical"] = to_json(r.euler.canonical);
  j["c1_squared"] = to_json(r.c1_squared);
  j["d3"] = to_json(r.d3);
  j["chi_min"] = to_json(r.chi.chi_min);
  j["chi_max"] = to_json(r.chi.chi_max);
  j["chi_exact"] = r.chi_exact.chi ? to_json(*r.chi_exact.chi) : Json(nullptr);
  j["c1_vanishes"] = r.chi_exact.c1_vanishes;
  j["chi_contradiction"] = r.chi_exact.contradiction;
  Json ball;
  ball["possible"] = r.ball.possible;
  ball["in_family"] = r.ball.in_family;
  ball["reason"] = r.ball.reason;
  j["rational_ball_test"] = ball;
  j["rational_ball_possible"] = r.rational_ball_possible;
  j["homeo_unique_at_max_b2"] = r.homeo_unique_at_max_b2;
  j["pi1_candidates"] = to_json(r.pi1.candidates);
  Json excl = Json::array();
  for (const auto& e : r.pi1.excluded) {
    Json x;
    x["order"] = to_json(e.order);
    x["reasons"] = e.reasons;
    excl.push_back(x);
  }
  j["pi1_excluded"] = excl;
  j["pi1_notes"] = r.pi1.notes;
  Json lat;
  lat["b2_max"] = r.b2_max;
  lat["ambient_rank"] = r.ambient_rank;
  lat["dual_coeffs"] = to_json(r.dual_coeffs);
  lat["complement_rank"] = r.complement_rank;
  lat["complement_det"] = to_json(r.complement_det);
  lat["negative_definite"] = r.complement_negative_definite;
  lat["has_minus_one_vector"] = r.complement_has_minus_one;
  lat["search_complete"] = r.minus_one_search_complete;
  lat["gram"] = to_json(r.complement_gram);
  j["lattice"] = lat;
  j["notes"] = r.notes;
  return j;
}

FillingReport filling_report_from_json(const Json& j) {
  FillingReport r;
  r.p = integer_from_json(j.at("p"));
  r.q = integer_from_json(j.at("q"));
  r.coeffs = int_vector_from_json(j.at("coeffs"));
  r.rot = int_vector_from_json(j.at("rot"));
  r.universally_tight = j.at("universally_tight").get<bool>();
  r.euler = make_euler_value(integer_from_json(j.at("euler_pd")), r.p);
  r.c1_squared = rational_from_json(j.at("c1_squared"));
  r.d3 = rational_from_json(j.at("d3"));
  r.chi.chi_min = integer_from_json(j.at("chi_min"));
  r.chi.chi_max = integer_from_json(j.at("chi_max"));
  if (!j.at("chi_exact").is_null()) r.chi_exact.chi = integer_from_json(j.at("chi_exact"));
  r.chi_exact.c1_vanishes = j.at("c1_vanishes").get<bool>();
  r.chi_exact.contradiction = j.at("chi_contradiction").get<bool>();
  const Json& ball = j.at("rational_ball_test");
  r.ball.possible = ball.at("possible").get<bool>();
  r.ball.in_family = ball.at("in_family").get<bool>();
  r.ball.reason = ball.at("reason").get<std::string>();
  r.ball.c1_squared = r.c1_squared;
  r.ball.d3 = r.d3;
  r.rational_ball_possible = j.at("rational_ball_possible").get<bool>();
  r.homeo_unique_at_max_b2 = j.at("homeo_unique_at_max_b2").get<bool>();
  r.pi1.candidates = int_vector_from_json(j.at("pi1_candidates"));
  for (const auto& x : j.at("pi1_excluded"))
    r.pi1.excluded.push_back(
        Exclusion{integer_from_json(x.at("order")), x.at("reasons").get<std::vector<std::string>>()});
  r.pi1.notes = j.at("pi1_notes").get<std::vector<std::string>>();
  const Json& lat = j.at("lattice");
  r.b2_max = lat.at("b2_max").get<size_t>();
  r.ambient_rank = lat.at("ambient_rank").get<size_t>();
  r.dual_coeffs = int_vector_from_json(lat.at("dual_coeffs"));
  r.complement_rank = lat.at("complement_rank").get<size_t>();
  r.complement_det = integer_from_json(lat.at("complement_det"));
  r.complement_negative_definite = lat.at("negative_definite").get<bool>();
  r.complement_has_minus_one = lat.at("has_minus_one_vector").get<bool>();
  r.minus_one_search_complete = lat.at("search_complete").get<bool>();
  r.complement_gram = int_matrix_from_json(lat.at("gram"));
  r.notes = j.at("notes").get<std::vector<std::string>>();
  return r;
}

}  // namespace lens
