#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "lens/covers.hpp"
#include "lens/fillings.hpp"
#include "lens/lattice.hpp"
#include "lens/serialize.hpp"
#include "lens/slices.hpp"
#include "lens/tight.hpp"

using namespace lens;

namespace {

struct Options {
  bool json = false;
  bool quiet = false;
  std::string p, q, d, rot;
  bool has_rot = false;
};

std::string rot_str(const IntVector& rot) {
  std::string s = "(";
  for (size_t i = 0; i < rot.size(); ++i) {
    if (i) s += ",";
    s += to_string(rot[i]);
  }
  return s + ")";
}

std::string join(const std::vector<Integer>& xs, const std::string& sep) {
  std::string s;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) s += sep;
    s += to_string(xs[i]);
  }
  return s;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string verdict_str(const LiftVerdict& v) {
  std::string s = to_string(v.kind) + "(" + to_string(v.reason);
  if (v.reason == LiftReason::OnlyUTOnCover || v.reason == LiftReason::ToS3)
    s += ": " + v.cover.name();
  s += ")";
  if (!v.witnesses.empty()) {
    s += " witnesses:";
    for (const auto& w : v.witnesses) s += " " + rot_str(w);
  }
  return s;
}

// Structures selected by --rot, or all of them.
std::vector<TightStructure> structures(const Options& o, const Integer& p, const Integer& q) {
  if (o.has_rot) return {make_structure(p, q, parse_integer_list(o.rot))};
  return enumerate_tight(p, q);
}

int cmd_cf(const Options& o) {
  Integer p = parse_integer(o.p), q = parse_integer(o.q);
  NegCFrac cf = expand(p, q);
  if (cf.is_sphere()) {
    if (o.json) {
      Json j = to_json(cf);
      j["sphere"] = true;
      emit(j);
    } else {
      std::cout << "[], l=0, S^3\n";
    }
    return 0;
  }
  Integer columns = cf.coeffs[0] - 1;
  Integer sum = 0;
  for (size_t i = 0; i < cf.coeffs.size(); ++i) {
    sum += cf.coeffs[i] - 1;
    if (i) columns += cf.coeffs[i] - 2;
  }
  Integer l(static_cast<unsigned long>(cf.length()));
  bool holds = l + columns == 1 + sum;
  std::optional<NegCFrac> dual;
  if (columns <= kMaxMaterialized) dual = riemenschneider_dual(cf);

  if (o.json) {
    Json j = to_json(cf);
    j["dual"] = dual ? to_json(dual->coeffs) : Json(nullptr);
    j["dual_length"] = to_json(columns);
    j["identity_holds"] = holds;
    emit(j);
    return 0;
  }
  if (o.quiet) {
    std::cout << format_list(cf.coeffs) << "\n";
    return 0;
  }
  std::string terms;
  for (size_t i = 0; i < cf.coeffs.size(); ++i) {
    if (i) terms += "+";
    terms += to_string(Integer(cf.coeffs[i] - 1));
  }
  std::cout << format_list(cf.coeffs) << ", l=" << cf.length()
            << ", dual=" << (dual ? format_list(dual->coeffs) : std::string("(not materialized)"))
            << ", lν=" << to_string(columns) << ", " << cf.length() << "+" << to_string(columns)
            << "=1+(" << terms << ") " << (holds ? "✓" : "✗") << "\n";
  return 0;
}

int cmd_tight(const Options& o) {
  Integer p = parse_integer(o.p), q = parse_integer(o.q);
  auto all = structures(o, p, q);
  std::optional<SliceDecomposition> dec;
  if (p >= 2) {
    try {
      dec = slope_sequence(p, q);
    } catch (const CapacityError&) {
    }
  }
  Json rows = Json::array();
  if (!o.json && !o.quiet)
    std::cout << "L(" << to_string(p) << "," << to_string(q) << ") = "
              << format_list(all.front().cf.coeffs) << ", " << all.size()
              << " tight structure(s)\nrot\tclass\tPD\tPD(slices)\tc1^2\td3\n";
  for (const auto& ts : all) {
    EulerClassValue e = euler_pd(ts);
    std::optional<Integer> pd_slices;
    if (dec) pd_slices = euler_pd_slices(*dec, ts.rot);
    Rational c1 = c1_squared(ts), d = d3(ts);
    bool ut = ts.universally_tight();
    if (o.json) {
      Json r;
      r["rot"] = to_json(ts.rot);
      r["class"] = ut ? "UT" : "VOT";
      r["euler_pd"] = to_json(e.residue);
      r["euler_pd_slices"] = pd_slices ? to_json(*pd_slices) : Json();
      r["c1_squared"] = to_json(c1);
      r["d3"] = to_json(d);
      rows.push_back(r);
    } else {
      std::cout << rot_str(ts.rot) << "\t" << (ut ? "UT" : "VOT") << "\t" << to_string(e.residue)
                << "\t" << (pd_slices ? to_string(*pd_slices) : std::string("-")) << "\t"
                << to_string(c1) << "\t" << to_string(d)
                << "\n";
    }
  }
  if (o.json) emit(rows);
  return 0;
}

int cmd_slices(const Options& o) {
  Integer p = parse_integer(o.p), q = parse_integer(o.q);
  SliceDecomposition dec = slope_sequence(p, q);
  std::optional<TightStructure> ts;
  if (o.has_rot) ts = make_structure(p, q, parse_integer_list(o.rot));
  if (o.json) {
    Json j = to_json(dec);
    if (ts) {
      j["rot"] = to_json(ts->rot);
      j["signs"] = slice_signs(dec, ts->rot);
      j["euler_pd"] = to_json(euler_pd_slices(dec, ts->rot));
    }
    emit(j);
    return 0;
  }
  std::string path;
  for (size_t i = 0; i < dec.slopes.size(); ++i) {
    if (i) path += " ";
    path += dec.slopes[i].str();
  }
  if (!o.quiet)
    std::cout << "L(" << to_string(p) << "," << to_string(q) << ") = "
              << format_list(dec.cf.coeffs) << ", " << dec.slices.size() << " basic slices\n";
  std::cout << "slopes: " << path << "\n";
  std::vector<int> signs;
  if (ts) signs = slice_signs(dec, ts->rot);
  for (size_t k = 0; k < dec.slices.size(); ++k) {
    const Slice& s = dec.slices[k];
    std::cout << dec.slopes[s.lower].str() << " -> " << dec.slopes[s.upper].str()
              << "  component " << s.component + 1 << "  contribution "
              << to_string(s.contribution);
    if (ts) std::cout << "  sign " << (signs[k] > 0 ? "+" : "-");
    std::cout << "\n";
  }
  if (ts) std::cout << "PD(e) = " << to_string(euler_pd_slices(dec, ts->rot)) << " mod " << to_string(p) << "\n";
  return 0;
}

int cmd_covers(const Options& o) {
  Integer p = parse_integer(o.p), q = parse_integer(o.q);
  require_lens_pair(p, q);
  std::vector<CoverSpec> covers;
  if (o.d.empty()) {
    covers = covering_lattice(p, q);
  } else {
    covers.push_back(cover_spec(p, q, parse_integer(o.d)));
  }
  Json rows = Json::array();
  if (!o.json && !o.quiet)
    std::cout << "covers of L(" << to_string(p) << "," << to_string(q) << ")\n"
              << "d\tcover\tquick\trelaxed\tfirst slope\n";
  for (const auto& c : covers) {
    RelaxedCriterion rc = relaxed_details(p, q, c.d);
    bool quick = quick_criterion(p, q, c.d);
    bool only_ut = only_universally_tight(c.cover_p, c.cover_q);
    if (o.json) {
      Json r = to_json(c);
      r["quick"] = quick;
      r["relaxed"] = rc.fires;
      r["q_star"] = to_json(rc.q_star);
      r["first_slope"] = Json::array({to_json(Integer(-rc.slope_q)), to_json(rc.slope_p)});
      r["sum_form"] = Json::array({to_json(rc.remark_p), to_json(rc.remark_q)});
      r["cover_only_ut"] = only_ut;
      rows.push_back(r);
    } else {
      std::cout << to_string(c.d) << "\t" << c.name() << "\t" << (quick ? "yes" : "no") << "\t"
                << (rc.fires ? "yes" : "no") << "\t(-" << to_string(rc.slope_q) << ","
                << to_string(rc.slope_p) << ")";
      if (only_ut) std::cout << "\tcover supports only UT";
      std::cout << "\n";
    }
  }
  if (o.json) emit(rows);
  return 0;
}

int cmd_lift(const Options& o) {
  Integer p = parse_integer(o.p), q = parse_integer(o.q), d = parse_integer(o.d);
  require_lens_pair(p, q);
  cover_spec(p, q, d);
  auto all = structures(o, p, q);
  LiftClassifier lc(p, q);
  Json rows = Json::array();
  if (!o.json && !o.quiet)
    std::cout << "degree " << to_string(d) << " cover of L(" << to_string(p) << ","
              << to_string(q) << ")\n";
  for (const auto& ts : all) {
    LiftVerdict v = lc.classify(ts, d);
    if (o.json) {
      Json r;
      r["rot"] = to_json(ts.rot);
      r["class"] = ts.universally_tight() ? "UT" : "VOT";
      r["verdict"] = to_json(v);
      rows.push_back(r);
    } else {
      std::cout << rot_str(ts.rot) << "\t" << (ts.universally_tight() ? "UT" : "VOT") << "\t"
                << verdict_str(v) << "\n";
    }
  }
  if (o.json) emit(rows);
  return 0;
}

void render(const FillingReport& r, bool quiet) {
  std::cout << "L(" << to_string(r.p) << "," << to_string(r.q) << ") = " << format_list(r.coeffs)
            << " rot " << rot_str(r.rot) << " " << (r.universally_tight ? "UT" : "VOT") << "\n";
  std::cout << "PD(e) = " << to_string(r.euler.residue) << " mod " << to_string(r.p)
            << ", c1^2 = " << to_string(r.c1_squared) << ", d3 = " << to_string(r.d3) << "\n";
  std::cout << "chi in [" << to_string(r.chi.chi_min) << "," << to_string(r.chi.chi_max) << "]";
  if (r.chi_exact.chi) std::cout << ", chi_exact=" << to_string(*r.chi_exact.chi);
  if (r.chi_exact.contradiction) std::cout << ", c1 = 0 is inconsistent with the bounds";
  std::cout << "\n";
  std::cout << "rational ball: " << (r.rational_ball_possible ? "possible" : "excluded")
            << (r.ball.in_family ? " (L(m^2,mk-1) family)" : "") << "\n";
  std::cout << "pi1={" << join(r.pi1.candidates, ",") << "}\n";
  std::cout << "homeo_unique=" << (r.homeo_unique_at_max_b2 ? "true" : "false") << " at b2="
            << r.b2_max << "\n";
  if (r.complement_rank) {
    std::cout << "maximal lattice: dual " << format_list(r.dual_coeffs) << " in <-1>^"
              << r.ambient_rank << ", complement rank " << r.complement_rank << ", det "
              << to_string(r.complement_det) << ", "
              << (r.complement_negative_definite ? "negative definite" : "indefinite") << ", "
              << (r.complement_has_minus_one ? "has" : "no") << " (-1)-vector"
              << (r.minus_one_search_complete ? "" : " (search incomplete)") << "\n";
  }
  if (quiet) return;
  for (const auto& e : r.pi1.excluded)
    for (const auto& why : e.reasons) std::cout << "  exclude " << to_string(e.order) << ": " << why << "\n";
  for (const auto& n : r.pi1.notes) std::cout << "  note: " << n << "\n";
  for (const auto& n : r.notes) std::cout << "  note: " << n << "\n";
}

int cmd_fillings(const Options& o) {
  Integer p = parse_integer(o.p), q = parse_integer(o.q);
  auto all = structures(o, p, q);
  Json rows = Json::array();
  bool first = true;
  for (const auto& ts : all) {
    FillingReport r = report(p, q, ts.rot);
    if (o.json) {
      rows.push_back(to_json(r));
    } else {
      if (!first) std::cout << "\n";
      render(r, o.quiet);
    }
    first = false;
  }
  if (o.json) emit(o.has_rot ? rows.at(0) : rows);
  return 0;
}

int cmd_embed(const Options& o) {
  Integer p = parse_integer(o.p), q = parse_integer(o.q);
  require_lens_pair(p, q);
  MaximalFillingLattice lat = maximal_filling_lattice(p, q);
  IntVector weights;
  for (const auto& c : lat.dual_coeffs) weights.push_back(-c);
  EmbeddingMatrix e = maximal_embedding(weights);
  bool gram_ok = e.gram() == linking_matrix(lat.dual_coeffs).dense();
  if (o.json) {
    Json j;
    j["p"] = to_json(p);
    j["q"] = to_json(q);
    j["dual_coeffs"] = to_json(lat.dual_coeffs);
    j["ambient_rank"] = lat.ambient_rank;
    j["embedding"] = to_json(e.rows);
    j["gram_matches_chain"] = gram_ok;
    j["complement_basis"] = to_json(lat.complement.basis);
    j["complement_gram"] = to_json(lat.complement.gram);
    j["complement_rank"] = lat.complement.rank;
    j["complement_det"] = to_json(lat.complement_det);
    j["negative_definite"] = lat.negative_definite;
    j["minus_one_witness"] = lat.minus_one.witness ? to_json(*lat.minus_one.witness) : Json(nullptr);
    j["search_bound_required"] = to_json(lat.minus_one.required_bound);
    j["search_complete"] = lat.minus_one.complete;
    emit(j);
    return 0;
  }
  std::cout << "dual chain " << format_list(lat.dual_coeffs) << " -> <-1>^" << lat.ambient_rank
            << ", gram " << (gram_ok ? "matches" : "differs from") << " chain\n";
  if (!o.quiet)
    for (const auto& row : e.rows) std::cout << "  " << format_list(row) << "\n";
  std::cout << "complement rank " << lat.complement.rank << ", det " << to_string(lat.complement_det)
            << ", " << (lat.negative_definite ? "negative definite" : "not negative definite")
            << "\n";
  if (!o.quiet)
    for (const auto& row : lat.complement.gram) std::cout << "  " << format_list(row) << "\n";
  std::cout << "(-1)-vector: "
            << (lat.minus_one.witness ? format_list(*lat.minus_one.witness) : std::string("none"))
            << (lat.minus_one.complete ? " (complete search)" : " (search incomplete)") << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tight contact structures on lens spaces: invariants, covers, fillings"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Machine-readable output");
  app.add_flag("--quiet", o.quiet, "Terse output");

  auto pq = [&](CLI::App* sub) {
    sub->add_option("p", o.p, "p")->required();
    sub->add_option("q", o.q, "q")->required();
  };
  auto rot = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--rot", o.rot,
                                "Rotation numbers in expansion order, e.g. --rot=3,-5");
    if (required) opt->required();
  };

  auto* cf = app.add_subcommand("cf", "Negative continued fraction and its dual");
  pq(cf);
  auto* tight = app.add_subcommand("tight", "Tight structures with PD(e), c1^2, d3");
  pq(tight);
  rot(tight, false);
  auto* slices = app.add_subcommand("slices", "Honda slope sequence and basic slices");
  pq(slices);
  rot(slices, false);
  auto* covers = app.add_subcommand("covers", "Cyclic covers and the lifting criteria");
  pq(covers);
  covers->add_option("d", o.d, "degree (default: every divisor)");
  auto* lift = app.add_subcommand("lift", "Classify lifts to the degree-d cover");
  pq(lift);
  lift->add_option("d", o.d, "degree")->required();
  rot(lift, false);
  auto* fillings = app.add_subcommand("fillings", "Constraints on Stein fillings");
  pq(fillings);
  rot(fillings, false);
  auto* embed = app.add_subcommand("embed", "Maximal embedding of the dual chain");
  pq(embed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  for (auto* sub : {tight, slices, lift, fillings})
    if (sub->parsed() && sub->count("--rot")) o.has_rot = true;

  try {
    if (cf->parsed()) return cmd_cf(o);
    if (tight->parsed()) return cmd_tight(o);
    if (slices->parsed()) return cmd_slices(o);
    if (covers->parsed()) return cmd_covers(o);
    if (lift->parsed()) return cmd_lift(o);
    if (fillings->parsed()) return cmd_fillings(o);
    if (embed->parsed()) return cmd_embed(o);
  } catch (const StructuralError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
