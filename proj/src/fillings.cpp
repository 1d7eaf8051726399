#include "lens/fillings.hpp"

#include <algorithm>

namespace lens {

namespace {

// Beyond this ambient rank the report skips the complement computation.
constexpr size_t kMaxLatticeRank = 400;

size_t lens_length(const Integer& p, const Integer& q) {
  if (p == 1) return 0;
  return expand(p, mod_floor(q, p)).length();
}

std::string lens_name(const Integer& p, const Integer& q) {
  if (p == 1) return "S^3";
  return "L(" + to_string(p) + "," + to_string(mod_floor(q, p)) + ")";
}

}  // namespace

ChiBounds chi_bounds(const TightStructure& ts) {
  return ChiBounds{ts.universally_tight() ? Integer(1) : Integer(2),
                   Integer(static_cast<unsigned long>(1 + ts.cf.length()))};
}

bool in_rational_ball_family(const Integer& p, const Integer& q) {
  if (p < 4 || !mpz_perfect_square_p(p.get_mpz_t())) return false;
  Integer m;
  mpz_sqrt(m.get_mpz_t(), p.get_mpz_t());
  // q = mk - 1 (mod m^2) forces k = (q + 1)/m (mod m); check that residue.
  Integer qq = mod_floor(q + 1, p);
  if (qq % m != 0) return false;
  Integer k = mod_floor(qq / m, m);
  return k > 0 && gcd(m, k) == 1;
}

RationalBallTest rational_ball_obstruction(const TightStructure& ts) {
  RationalBallTest t;
  const long n = static_cast<long>(ts.cf.length());
  t.c1_squared = c1_squared(ts);
  t.d3 = d3_from_c1_squared(t.c1_squared, ts.cf.length());
  t.in_family = in_rational_ball_family(ts.p(), ts.q());
  t.possible = t.c1_squared == Rational(-n);
  if (t.possible) {
    t.reason = "c1^2 = " + to_string(t.c1_squared) + " = sigma, d3 = -1/2";
  } else {
    t.reason = "c1^2 = " + to_string(t.c1_squared) + " != sigma = " + std::to_string(-n) +
               " (d3 = " + to_string(t.d3) + " != -1/2)";
  }
  return t;
}

ChiExact chi_exact_if_c1_zero(const TightStructure& ts) {
  ChiExact out;
  out.c1_vanishes = euler_pd(ts).residue == 0;
  if (!out.c1_vanishes) return out;
  Rational chi = 4 * d3(ts) + 3;
  chi.canonicalize();
  ChiBounds b = chi_bounds(ts);
  if (chi.get_den() != 1 || chi.get_num() < b.chi_min || chi.get_num() > b.chi_max) {
    out.contradiction = true;
    return out;
  }
  out.chi = chi.get_num();
  return out;
}

bool homeo_unique_flag(const Integer& p) {
  if (p < 2) throw DomainError("p must be at least 2");
  if (p == 2 || p == 4) return true;
  if (is_odd_prime_power(p)) return true;
  return p % 2 == 0 && is_odd_prime_power(p / 2);
}

Pi1Candidates pi1_candidates(const TightStructure& ts) {
  const Integer& p = ts.p();
  const Integer& q = ts.q();
  Pi1Candidates out;
  std::vector<Integer> divs = divisors(p);
  if (ts.universally_tight()) {
    if (is_prime(p)) {
      out.candidates = {1};
      out.excluded.push_back(Exclusion{
          p, {"R3: p = " + to_string(p) +
              " is prime; pi_1 = Z/p would make the universal cover a Stein filling of the "
              "tight S^3, hence B^4 with a free Z/p action"}});
      return out;
    }
    out.candidates = divs;
    out.notes.push_back("universally tight: every cover is tight, no order is excluded");
    return out;
  }

  std::map<Integer, std::vector<std::string>> reasons;

  // R1
  LiftClassifier lifts(p, q);
  for (const auto& h : divs) {
    if (h == p) continue;
    Integer d = p / h;
    LiftVerdict v = lifts.classify(ts, d);
    if (v.kind != LiftKind::Overtwisted) {
      out.notes.push_back("R1: lift to " + v.cover.name() + " (degree " + to_string(d) +
                          ") is " + to_string(v.kind) + "(" + to_string(v.reason) +
                          "); no exclusion");
      continue;
    }
    for (const auto& e : divs) {
      if (e == 1 || h % (p / e) != 0) continue;
      reasons[e].push_back("R1: lift to " + v.cover.name() + " (degree " + to_string(d) +
                           ", subgroup of order " + to_string(h) + ") is Overtwisted(" +
                           to_string(v.reason) + "), and ker i_* of order " + to_string(Integer(p / e)) +
                           " would lie in it");
    }
  }

  // R2
  const ChiBounds bounds = chi_bounds(ts);
  const ChiExact exact = chi_exact_if_c1_zero(ts);
  for (const auto& e : divs) {
    if (e == 1) continue;
    const Integer cp = p / e;
    const size_t lp = lens_length(cp, q);
    Rational bound(Integer(static_cast<unsigned long>(1 + lp)), e);
    bound.canonicalize();
    const std::string head = "R2: pi_1 = Z/" + to_string(e) + " gives chi <= (1+" +
                             std::to_string(lp) + ")/" + to_string(e) + " = " +
                             to_string(bound) + " via " + lens_name(cp, q);
    if (bound < Rational(bounds.chi_min))
      reasons[e].push_back(head + " < " + to_string(bounds.chi_min) + " = chi_min");
    if (exact.chi && bound < Rational(*exact.chi))
      reasons[e].push_back(head + " < " + to_string(*exact.chi) + " = chi_exact");
  }

  // R3
  if (is_prime(p)) {
    for (const auto& e : divs)
      if (e != 1) reasons[e].push_back("R3: p = " + to_string(p) + " is prime");
  }

  for (const auto& e : divs) {
    auto it = reasons.find(e);
    if (it == reasons.end()) {
      out.candidates.push_back(e);
    } else {
      out.excluded.push_back(Exclusion{e, it->second});
    }
  }
  return out;
}

FillingReport report(const Integer& p, const Integer& q, const IntVector& rot) {
  TightStructure ts = make_structure(p, q, rot);
  FillingReport r;
  r.p = p;
  r.q = q;
  r.coeffs = ts.cf.coeffs;
  r.rot = rot;
  r.universally_tight = ts.universally_tight();
  r.euler = euler_pd(ts);
  r.ball = rational_ball_obstruction(ts);
  r.c1_squared = r.ball.c1_squared;
  r.d3 = r.ball.d3;
  r.chi = chi_bounds(ts);
  r.chi_exact = chi_exact_if_c1_zero(ts);
  r.rational_ball_possible = r.ball.possible && r.universally_tight;
  r.homeo_unique_at_max_b2 = homeo_unique_flag(p);
  r.pi1 = pi1_candidates(ts);

  r.notes.push_back("chi_max = 1 + length(p/q) = " + to_string(r.chi.chi_max));
  r.notes.push_back(r.universally_tight
                        ? std::string("chi_min = 1 (b_1 = b_3 = 0 for Stein fillings)")
                        : std::string("chi_min = 2 (virtually overtwisted structures bound no "
                                      "Stein rational ball)"));
  if (r.chi_exact.chi)
    r.notes.push_back("c1(xi) = 0: every Stein filling has chi = 4 d3 + 3 = " +
                      to_string(*r.chi_exact.chi));
  if (r.chi_exact.contradiction)
    r.notes.push_back("c1(xi) = 0 but 4 d3 + 3 = " + to_string(Rational(4 * r.d3 + 3)) +
                      " is not an admissible Euler characteristic");
  if (r.ball.possible && !r.universally_tight)
    r.notes.push_back("c1^2 = sigma holds but the structure is virtually overtwisted; no Stein "
                      "rational ball");
  r.notes.push_back("rational ball test: " + r.ball.reason);

  r.b2_max = ts.cf.length();
  // ambient rank of the maximal embedding of the dual chain: l + l_dual
  const Integer rank = Integer(static_cast<unsigned long>(ts.cf.length())) + dual_length(ts.cf);
  if (rank <= static_cast<unsigned long>(kMaxLatticeRank)) {
    MaximalFillingLattice lat = maximal_filling_lattice(p, q);
    r.ambient_rank = lat.ambient_rank;
    r.dual_coeffs = lat.dual_coeffs;
    r.complement_rank = lat.complement.rank;
    r.complement_det = lat.complement_det;
    r.complement_negative_definite = lat.negative_definite;
    r.complement_has_minus_one = lat.minus_one.witness.has_value();
    r.minus_one_search_complete = lat.minus_one.complete;
    r.complement_gram = lat.complement.gram;
  } else {
    if (rank.fits_ulong_p()) r.ambient_rank = rank.get_ui();
    r.notes.push_back("maximal embedding has ambient rank " + to_string(rank) +
                      "; complement lattice not computed");
  }
  return r;
}

}  // namespace lens
