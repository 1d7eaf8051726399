#include "lens/cfrac.hpp"

namespace lens {

void require_lens_pair(const Integer& p, const Integer& q) {
  if (!(q > 0 && q < p))
    throw DomainError("need 0 < q < p, got p=" + to_string(p) + " q=" + to_string(q));
  if (gcd(p, q) != 1)
    throw DomainError("p and q must be coprime, got p=" + to_string(p) + " q=" + to_string(q));
}

NegCFrac expand(const Integer& p, const Integer& q) {
  if (p == 1 && q == 0) return NegCFrac{1, 0, {}};
  require_lens_pair(p, q);
  NegCFrac cf{p, q, {}};
  Integer num = p, den = q;
  while (den != 0) {
    Integer a = ceil_div(num, den);
    cf.coeffs.push_back(a);
    Integer rest = a * den - num;
    num = den;
    den = rest;
    if (static_cast<long>(cf.coeffs.size()) > kMaxMaterialized)
      throw CapacityError("continued fraction too long to expand");
  }
  return cf;
}

std::pair<Integer, Integer> evaluate(const std::vector<Integer>& coeffs) {
  if (coeffs.empty()) throw DomainError("empty expansion evaluates to 1/0");
  for (const auto& a : coeffs)
    if (a < 2) throw DomainError("coefficient " + to_string(a) + " is below 2");
  Integer num = coeffs.back(), den = 1;
  for (auto it = coeffs.rbegin() + 1; it != coeffs.rend(); ++it) {
    Integer next = *it * num - den;
    den = num;
    num = next;
  }
  Integer g = gcd(num, den);
  return {num / g, den / g};
}

NegCFrac riemenschneider_dual(const NegCFrac& cf) {
  if (cf.is_sphere()) throw DomainError("S^3 has no dual expansion");
  auto [p, q] = evaluate(cf.coeffs);
  if (p != cf.p || q != cf.q) throw DomainError("inconsistent NegCFrac");

  Integer dots = 0;
  for (const auto& a : cf.coeffs) dots += a - 1;
  if (dots > kMaxMaterialized) throw CapacityError("dual expansion too long to materialize");

  // column heights of the staircase
  std::vector<long> columns(cf.coeffs[0].get_si() - 1, 1);
  for (size_t i = 1; i < cf.coeffs.size(); ++i) {
    long row = cf.coeffs[i].get_si() - 1;
    columns.back() += 1;
    columns.insert(columns.end(), row - 1, 1);
  }
  NegCFrac dual{p, p - q, {}};
  dual.coeffs.reserve(columns.size());
  for (long c : columns) dual.coeffs.emplace_back(c + 1);
  return dual;
}

Integer dual_length(const NegCFrac& cf) {
  if (cf.is_sphere()) throw DomainError("dual length is undefined for S^3");
  Integer columns = cf.coeffs[0] - 1;
  for (size_t i = 1; i < cf.coeffs.size(); ++i) columns += cf.coeffs[i] - 2;
  return columns;
}

std::pair<size_t, size_t> length_pair(const Integer& p, const Integer& q) {
  NegCFrac cf = expand(p, q);
  if (cf.is_sphere()) throw DomainError("length_pair is undefined for S^3");
  return {cf.length(), static_cast<size_t>(to_long(dual_length(cf), "dual length"))};
}

Continuants prefix_continuants(const std::vector<Integer>& coeffs) {
  Continuants c;
  c.num.reserve(coeffs.size() + 1);
  c.den.reserve(coeffs.size() + 1);
  c.num.push_back(1);
  c.den.push_back(0);
  Integer num_prev = 0, den_prev = -1;
  for (const auto& a : coeffs) {
    Integer n = a * c.num.back() - num_prev;
    Integer d = a * c.den.back() - den_prev;
    num_prev = c.num.back();
    den_prev = c.den.back();
    c.num.push_back(n);
    c.den.push_back(d);
  }
  return c;
}

}  // namespace lens
