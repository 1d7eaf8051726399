#include <doctest.h>

#include "lens/cfrac.hpp"
#include "lens/lattice.hpp"
#include "oracles.hpp"

using namespace lens;

TEST_SUITE("lattice") {

TEST_CASE("linking matrix of 17/7") {
  LinkingMatrix q = linking_matrix({3, 2, 4});
  IntMatrix expect = {{-3, 1, 0}, {1, -2, 1}, {0, 1, -4}};
  CHECK(q.dense() == expect);
  CHECK(det(q) == -17);
  RatMatrix inv = inverse(q);
  CHECK(inv == oracle::gauss_jordan_inverse(expect));
  CHECK_THROWS_AS(linking_matrix({3, 1}), DomainError);
}

TEST_CASE("det and inverse against Gauss-Jordan and cofactors") {
  for (auto [p, q] : oracle::coprime_pairs(60)) {
    NegCFrac cf = expand(p, q);
    LinkingMatrix lm = linking_matrix(cf.coeffs);
    IntMatrix dense = lm.dense();
    Integer d = det(lm);
    CHECK(abs(d) == p);
    CHECK(Rational(d) == oracle::gauss_det(dense));
    CHECK(d == determinant(dense));
    if (cf.length() <= 7) CHECK(d == oracle::cofactor_det(dense));
    RatMatrix inv = inverse(lm);
    CHECK(inv == oracle::gauss_jordan_inverse(dense));
    for (const auto& row : inv)
      for (const auto& x : row) CHECK(x < 0);
    CHECK(is_negative_definite(dense));
    CHECK(oracle::sylvester_negative_definite(dense));
  }
}

TEST_CASE("qform and InverseForm agree with the explicit inverse") {
  for (auto [p, q] : oracle::coprime_pairs(40)) {
    NegCFrac cf = expand(p, q);
    LinkingMatrix lm = linking_matrix(cf.coeffs);
    RatMatrix inv = oracle::gauss_jordan_inverse(lm.dense());
    InverseForm form(lm);
    IntVector x(cf.length());
    for (size_t i = 0; i < x.size(); ++i) x[i] = Integer(static_cast<long>(i * 3 % 5)) - 2;
    CHECK(qform(lm, x) == oracle::quadratic(inv, x));
    CHECK(form(x) == oracle::quadratic(inv, x));
  }
}

TEST_CASE("maximal embedding") {
  EmbeddingMatrix e = maximal_embedding({-2, -4, -2, -2});
  CHECK(e.ambient_rank == 1 + (1 + 3 + 1 + 1));
  CHECK(e.gram() == oracle::chain_matrix({2, 4, 2, 2}));
  for (auto [p, q] : oracle::coprime_pairs(60)) {
    NegCFrac cf = expand(p, q);
    IntVector w;
    Integer t = 1;
    for (const auto& a : cf.coeffs) {
      w.push_back(-a);
      t += a - 1;
    }
    EmbeddingMatrix em = maximal_embedding(w);
    CHECK(Integer(static_cast<unsigned long>(em.ambient_rank)) == t);
    CHECK(em.gram() == oracle::chain_matrix(cf.coeffs));
  }
}

TEST_CASE("integer kernel") {
  IntMatrix a = {{1, 2, 3}, {0, 1, 1}};
  IntMatrix k = integer_kernel(a, 3);
  REQUIRE(k.size() == 1);
  for (const auto& row : a) {
    Integer s = 0;
    for (size_t j = 0; j < 3; ++j) s += row[j] * k[0][j];
    CHECK(s == 0);
  }
  // saturated: primitive vector
  CHECK(gcd(gcd(k[0][0], k[0][1]), k[0][2]) == 1);
  IntMatrix z = integer_kernel({{2, 4}}, 2);
  REQUIRE(z.size() == 1);
  CHECK(abs(z[0][0]) == 2);
  CHECK(abs(z[0][1]) == 1);
}

TEST_CASE("complement of the maximal embedding") {
  for (auto [p, q] : oracle::coprime_pairs(40)) {
    auto lat = maximal_filling_lattice(p, q);
    NegCFrac cf = expand(p, q);
    CHECK(lat.dual_coeffs == expand(p, p - q).coeffs);
    CHECK(lat.complement.rank == cf.length());
    CHECK(abs(lat.complement_det) == p);
    CHECK(lat.complement_det == oracle::gauss_det(lat.complement.gram));
    CHECK(lat.negative_definite);
    CHECK(oracle::sylvester_negative_definite(lat.complement.gram));
    CHECK(lat.minus_one.complete);
    CHECK_FALSE(lat.minus_one.witness.has_value());
    // a norm -1 vector of <-1>^t is some +-e_k, and e_k is in the complement
    // exactly when column k of the embedding vanishes
    IntVector w;
    for (const auto& c : lat.dual_coeffs) w.push_back(-c);
    EmbeddingMatrix e = maximal_embedding(w);
    bool zero_column = false;
    for (size_t k = 0; k < e.ambient_rank; ++k) {
      bool zero = true;
      for (const auto& row : e.rows) zero = zero && row[k] == 0;
      zero_column = zero_column || zero;
    }
    CHECK_FALSE(zero_column);
  }
}

TEST_CASE("minus-one search against the box oracle") {
  IntMatrix g = {{-2, 1, 0}, {1, -2, 1}, {0, 1, -1}};
  auto hits = oracle::box_search(g, 3, -1);
  auto s = search_minus_one(g, 3);
  CHECK(s.complete);
  CHECK(s.witness.has_value() == !hits.empty());
  if (s.witness) {
    Integer v = 0;
    for (size_t i = 0; i < 3; ++i)
      for (size_t j = 0; j < 3; ++j) v += g[i][j] * (*s.witness)[i] * (*s.witness)[j];
    CHECK(v == -1);
  }
  for (auto [p, q] : oracle::coprime_pairs(20)) {
    auto lat = maximal_filling_lattice(p, q);
    if (lat.complement.rank > 4) continue;
    CHECK(oracle::box_search(lat.complement.gram, 3, -1).empty());
  }
  // A lattice with a (-1)-vector: <-1> + <-2>
  auto t = search_minus_one({{-2, 0}, {0, -1}}, 2);
  REQUIRE(t.witness.has_value());
  CHECK(t.witness->at(0) == 0);
  CHECK(abs(t.witness->at(1)) == 1);
}

TEST_CASE("negative definiteness") {
  CHECK(is_negative_definite({{-2, 1}, {1, -2}}));
  CHECK_FALSE(is_negative_definite({{-1, 2}, {2, -1}}));
  CHECK_FALSE(is_negative_definite({{0}}));
}

}
