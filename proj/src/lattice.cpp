#include "lens/lattice.hpp"

#include <algorithm>
#include <cmath>

#include "lens/cfrac.hpp"

namespace lens {

IntMatrix LinkingMatrix::dense() const {
  const size_t n = rank();
  IntMatrix m(n, IntVector(n, 0));
  for (size_t i = 0; i < n; ++i) {
    m[i][i] = -coeffs[i];
    if (i + 1 < n) m[i][i + 1] = m[i + 1][i] = 1;
  }
  return m;
}

LinkingMatrix linking_matrix(const IntVector& coeffs) {
  if (coeffs.empty()) throw DomainError("linking matrix of an empty chain");
  for (const auto& a : coeffs)
    if (a < 2) throw DomainError("chain weight -" + to_string(a) + " is above -2");
  return LinkingMatrix{coeffs};
}

namespace {

// tail[i] = numerator of [a_i..a_n] (1-indexed), tail[n+1] = 1.
IntVector suffix_continuants(const IntVector& coeffs) {
  const size_t n = coeffs.size();
  IntVector tail(n + 2, 0);
  tail[n + 1] = 1;
  Integer after = 0;
  for (size_t i = n; i >= 1; --i) {
    Integer t = coeffs[i - 1] * tail[i + 1] - after;
    after = tail[i + 1];
    tail[i] = t;
  }
  return tail;
}

// -<u_i, u_j> over the nonzero entries only.
IntMatrix negative_gram(const IntMatrix& rows, size_t width) {
  const size_t n = rows.size();
  std::vector<std::vector<size_t>> support(n);
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < width; ++k)
      if (sgn(rows[i][k]) != 0) support[i].push_back(k);
  IntMatrix g(n, IntVector(n, 0));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i; j < n; ++j) {
      Integer s = 0;
      const auto& a = support[i];
      const auto& b = support[j];
      for (size_t x = 0, y = 0; x < a.size() && y < b.size();) {
        if (a[x] < b[y]) {
          ++x;
        } else if (b[y] < a[x]) {
          ++y;
        } else {
          mpz_submul(s.get_mpz_t(), rows[i][a[x]].get_mpz_t(), rows[j][a[x]].get_mpz_t());
          ++x;
          ++y;
        }
      }
      g[i][j] = s;
      g[j][i] = s;
    }
  }
  return g;
}

}  // namespace

Integer det(const LinkingMatrix& q) {
  Integer num = prefix_continuants(q.coeffs).num.back();
  return q.rank() % 2 == 0 ? num : Integer(-num);
}

InverseForm::InverseForm(const LinkingMatrix& q)
    : head_(prefix_continuants(q.coeffs).num), tail_(suffix_continuants(q.coeffs)) {
  p_ = head_.back();
}

Rational InverseForm::operator()(const IntVector& x) const {
  const size_t n = rank();
  if (x.size() != n)
    throw DomainError("vector has dimension " + std::to_string(x.size()) + ", expected " +
                      std::to_string(n));
  // sum_{i<=j} weight(i,j) x_i x_j with weight = head[i-1] * tail[j+1],
  // off-diagonal terms counted twice.
  Integer total = 0, prefix = 0;
  for (size_t j = 1; j <= n; ++j) {
    const Integer& xj = x[j - 1];
    total += tail_[j + 1] * xj * (2 * prefix + head_[j - 1] * xj);
    prefix += head_[j - 1] * xj;
  }
  Rational r(-total, p_);
  r.canonicalize();
  return r;
}

RatMatrix inverse(const LinkingMatrix& q) {
  const size_t n = q.rank();
  IntVector head = prefix_continuants(q.coeffs).num;
  IntVector tail = suffix_continuants(q.coeffs);
  const Integer& p = head[n];
  RatMatrix inv(n, std::vector<Rational>(n));
  for (size_t i = 1; i <= n; ++i) {
    for (size_t j = i; j <= n; ++j) {
      Rational e(-(head[i - 1] * tail[j + 1]), p);
      e.canonicalize();
      inv[i - 1][j - 1] = e;
      inv[j - 1][i - 1] = e;
    }
  }
  return inv;
}

Rational qform(const LinkingMatrix& q, const IntVector& x) { return InverseForm(q)(x); }

IntMatrix EmbeddingMatrix::gram() const { return negative_gram(rows, ambient_rank); }

EmbeddingMatrix maximal_embedding(const IntVector& weights) {
  if (weights.empty()) throw DomainError("embedding of an empty chain");
  Integer t = 1;
  for (const auto& w : weights) {
    if (w > -2) throw DomainError("chain weight " + to_string(w) + " is above -2");
    t += -w - 1;
  }
  EmbeddingMatrix e;
  e.ambient_rank = static_cast<size_t>(to_long(t, "ambient rank"));
  if (static_cast<long>(e.ambient_rank) > kMaxMaterialized)
    throw CapacityError("ambient lattice too large");
  size_t start = 0;
  for (size_t i = 0; i < weights.size(); ++i) {
    IntVector row(e.ambient_rank, 0);
    const size_t width = static_cast<size_t>(Integer(-weights[i]).get_si());
    for (size_t k = 0; k < width; ++k) row[start + k] = 1;
    if (i > 0) row[start] = -1;
    e.rows.push_back(std::move(row));
    start += width - 1;
  }
  return e;
}

namespace {

// (first, second) <- (s*first + t*second, -y*first + x*second), unimodular
// when s*x + t*y = 1.
void combine(Integer& first, Integer& second, const Integer& s, const Integer& t,
             const Integer& x, const Integer& y) {
  if (sgn(first) == 0 && sgn(second) == 0) return;
  Integer f = s * first + t * second;
  Integer g = -y * first + x * second;
  first = std::move(f);
  second = std::move(g);
}

void hermite_rows(IntMatrix& k, size_t cols) {
  size_t r = 0;
  for (size_t col = 0; col < cols && r < k.size(); ++col) {
    for (size_t i = r + 1; i < k.size(); ++i) {
      if (k[i][col] == 0) continue;
      if (k[r][col] == 0) {
        std::swap(k[r], k[i]);
        continue;
      }
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), k[r][col].get_mpz_t(),
                 k[i][col].get_mpz_t());
      Integer x = k[r][col] / g, y = k[i][col] / g;
      for (size_t c = 0; c < cols; ++c) combine(k[r][c], k[i][c], s, t, x, y);
    }
    if (k[r][col] == 0) continue;
    if (k[r][col] < 0)
      for (auto& v : k[r]) v = -v;
    for (size_t i = 0; i < r; ++i) {
      Integer f = floor_div(k[i][col], k[r][col]);
      if (f != 0)
        for (size_t c = 0; c < cols; ++c) k[i][c] -= f * k[r][c];
    }
    ++r;
  }
}

// LDL^T of a symmetric matrix read off one fraction-free elimination pass:
// the k-th pivot is the leading minor M_{k+1}, d_k = M_{k+1}/M_k and
// l_ik = b_ik / M_{k+1} with b_ik the column entry when k is the pivot.
// Returns false on a non-positive pivot.
bool ldl_positive(const IntMatrix& g, std::vector<Rational>& d, RatMatrix& l) {
  const size_t n = g.size();
  d.assign(n, 0);
  l.assign(n, std::vector<Rational>(n, 0));
  // the trailing block stays symmetric, so only j >= i is kept current
  IntMatrix m = g;
  Integer prev = 1;
  for (size_t k = 0; k < n; ++k) {
    const Integer& pivot = m[k][k];
    if (pivot <= 0) return false;
    d[k] = Rational(pivot, prev);
    d[k].canonicalize();
    l[k][k] = 1;
    for (size_t i = k + 1; i < n; ++i) {
      l[i][k] = Rational(m[k][i], pivot);
      l[i][k].canonicalize();
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = i; j < n; ++j) {
        mpz_ptr e = m[i][j].get_mpz_t();
        mpz_mul(e, e, pivot.get_mpz_t());
        mpz_submul(e, m[k][i].get_mpz_t(), m[k][j].get_mpz_t());
        mpz_divexact(e, e, prev.get_mpz_t());
      }
    prev = pivot;
  }
  return true;
}

IntMatrix negate(const IntMatrix& m) {
  IntMatrix out = m;
  for (auto& row : out)
    for (auto& v : row) v = -v;
  return out;
}

// Fincke-Pohst over x^T G x = 1 with G = L D L^T. Coordinates are clipped to
// the box; any feasible coordinate outside it is remembered in `largest` and
// makes the search incomplete.
struct PohstSearch {
  const std::vector<Rational>& d;
  const RatMatrix& l;
  const Integer& bound;
  IntVector x;
  Integer largest = 0;
  bool clipped = false;

  bool descend(long i, const Rational& budget) {
    if (i < 0) return budget == 0;
    const size_t n = d.size();
    Rational center = 0;
    for (size_t r = static_cast<size_t>(i) + 1; r < n; ++r) center -= l[r][i] * x[r];
    double c = center.get_d();
    double radius = std::sqrt(Rational(budget / d[i]).get_d());
    Integer lo = Integer(std::floor(c - radius)) - 1;
    Integer hi = Integer(std::ceil(c + radius)) + 1;
    for (Integer v = lo; v <= hi; ++v) {
      Rational diff = Rational(v) - center;
      Rational used = d[i] * diff * diff;
      if (used > budget) continue;
      Integer a = abs(v);
      if (a > largest) largest = a;
      if (a > bound) {
        clipped = true;
        continue;
      }
      x[i] = v;
      if (descend(i - 1, budget - used)) return true;
    }
    x[i] = 0;
    return false;
  }
};

}  // namespace

IntMatrix integer_kernel(const IntMatrix& a, size_t cols) {
  IntMatrix m = a;
  IntMatrix u(cols, IntVector(cols, 0));
  for (size_t i = 0; i < cols; ++i) u[i][i] = 1;
  auto swap_cols = [&](size_t c1, size_t c2) {
    for (auto& row : m) std::swap(row[c1], row[c2]);
    for (auto& row : u) std::swap(row[c1], row[c2]);
  };
  size_t pc = 0;
  for (size_t i = 0; i < m.size() && pc < cols; ++i) {
    for (size_t j = pc + 1; j < cols; ++j) {
      if (m[i][j] == 0) continue;
      if (m[i][pc] == 0) {
        swap_cols(pc, j);
        continue;
      }
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), m[i][pc].get_mpz_t(),
                 m[i][j].get_mpz_t());
      Integer x = m[i][pc] / g, y = m[i][j] / g;
      for (auto& row : m) combine(row[pc], row[j], s, t, x, y);
      for (auto& row : u) combine(row[pc], row[j], s, t, x, y);
    }
    if (m[i][pc] != 0) ++pc;
  }
  IntMatrix kernel;
  for (size_t c = pc; c < cols; ++c) {
    IntVector v(cols);
    for (size_t r = 0; r < cols; ++r) v[r] = u[r][c];
    kernel.push_back(std::move(v));
  }
  hermite_rows(kernel, cols);
  return kernel;
}

ComplementLattice orthogonal_complement(const EmbeddingMatrix& e) {
  ComplementLattice c;
  c.basis = integer_kernel(e.rows, e.ambient_rank);
  c.rank = c.basis.size();
  c.gram = negative_gram(c.basis, e.ambient_rank);
  return c;
}

Integer determinant(const IntMatrix& input) {
  const size_t n = input.size();
  if (n == 0) return 1;
  IntMatrix m = input;
  Integer sign = 1, prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

bool is_negative_definite(const IntMatrix& m) {
  std::vector<Rational> d;
  RatMatrix l;
  return ldl_positive(negate(m), d, l);
}

namespace {

MinusOneSearch pohst_minus_one(const std::vector<Rational>& d, const RatMatrix& l,
                               const Integer& bound) {
  MinusOneSearch result;
  PohstSearch search{d, l, bound, IntVector(d.size(), 0)};
  if (search.descend(static_cast<long>(d.size()) - 1, Rational(1))) result.witness = search.x;
  result.required_bound = search.largest;
  result.complete = result.witness.has_value() || !search.clipped;
  return result;
}

}  // namespace

MinusOneSearch search_minus_one(const IntMatrix& gram, const Integer& bound) {
  std::vector<Rational> d;
  RatMatrix l;
  if (!ldl_positive(negate(gram), d, l)) throw DomainError("form is not negative definite");
  return pohst_minus_one(d, l, bound);
}

bool has_minus_one_vector(const ComplementLattice& c, const Integer& bound) {
  if (c.rank == 0) return false;
  return search_minus_one(c.gram, bound).witness.has_value();
}

MaximalFillingLattice maximal_filling_lattice(const Integer& p, const Integer& q,
                                              const Integer& bound) {
  NegCFrac dual = riemenschneider_dual(expand(p, q));
  MaximalFillingLattice out;
  out.dual_coeffs = dual.coeffs;
  IntVector weights;
  for (const auto& c : dual.coeffs) weights.push_back(-c);
  EmbeddingMatrix e = maximal_embedding(weights);
  out.ambient_rank = e.ambient_rank;
  out.complement = orthogonal_complement(e);
  const size_t n = out.complement.rank;
  std::vector<Rational> d;
  RatMatrix l;
  out.negative_definite = ldl_positive(negate(out.complement.gram), d, l);
  if (out.negative_definite) {
    Rational prod = 1;
    for (const auto& v : d) prod *= v;
    out.complement_det = n % 2 ? Integer(-prod.get_num()) : prod.get_num();
  } else {
    out.complement_det = determinant(out.complement.gram);
  }
  if (n > 0 && out.negative_definite) {
    out.minus_one = pohst_minus_one(d, l, bound);
    while (!out.minus_one.complete)
      out.minus_one = pohst_minus_one(d, l, out.minus_one.required_bound);
  } else {
    out.minus_one.required_bound = 0;
    out.minus_one.complete = true;
  }
  return out;
}

}  // namespace lens
