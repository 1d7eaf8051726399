#include "lens/arith.hpp"

#include <algorithm>
#include <cctype>
#include <climits>

namespace lens {

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer mod_floor(const Integer& a, const Integer& m) {
  if (m <= 0) throw DomainError("modulus must be positive");
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer mod_inverse(const Integer& a, const Integer& m) {
  if (m <= 0) throw DomainError("modulus must be positive");
  if (m == 1) return 0;
  Integer r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw DomainError(to_string(a) + " is not invertible modulo " + to_string(m));
  return mod_floor(r, m);
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer ceil_div(const Integer& a, const Integer& b) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer floor_sqrt(const Rational& r) {
  if (r < 0) throw DomainError("square root of a negative number");
  Integer fl = floor_div(r.get_num(), r.get_den());
  Integer s;
  mpz_sqrt(s.get_mpz_t(), fl.get_mpz_t());
  return s;
}

Integer parse_integer(std::string_view text) {
  std::string s(text);
  size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size()) throw DomainError("expected an integer, got '" + s + "'");
  for (size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw DomainError("expected an integer, got '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s, 10);
}

std::vector<Integer> parse_integer_list(std::string_view text) {
  std::vector<Integer> out;
  if (text.empty()) return out;
  size_t pos = 0;
  while (true) {
    size_t comma = text.find(',', pos);
    out.push_back(parse_integer(text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string to_string(const Integer& x) { return x.get_str(10); }

std::string to_string(const Rational& x) {
  Rational c(x);
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str(10);
  return c.get_num().get_str(10) + "/" + c.get_den().get_str(10);
}

std::string format_list(const std::vector<Integer>& xs) {
  std::string s = "[";
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ",";
    s += to_string(xs[i]);
  }
  return s + "]";
}

namespace {

// Pollard-Brent rho; returns a nontrivial factor of the odd composite n, or 0
// when the iteration budget runs out.
Integer rho_factor(const Integer& n) {
  constexpr unsigned long kBudget = 2'000'000;
  unsigned long spent = 0;
  for (unsigned long c = 1; spent < kBudget; ++c) {
    Integer y = 2, x, ys, g = 1, q = 1;
    auto f = [&](Integer& v) {
      v = v * v + c;
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    unsigned long r = 1;
    const unsigned long m = 128;
    while (g == 1 && spent < kBudget) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) f(y);
      for (unsigned long k = 0; k < r && g == 1; k += m) {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          f(y);
          q = q * abs(Integer(x - y)) % n;
        }
        g = gcd(q, n);
        spent += m;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        f(ys);
        g = gcd(abs(Integer(x - ys)), n);
      } while (g == 1);
    }
    if (g != n && g != 1) return g;
  }
  return 0;
}

void factor_into(const Integer& n, std::map<Integer, unsigned long>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  Integer root;
  for (unsigned long k = 2; mpz_sizeinbase(n.get_mpz_t(), 2) >= k; ++k)
    if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
      std::map<Integer, unsigned long> sub;
      factor_into(root, sub);
      for (const auto& [pr, e] : sub) out[pr] += e * k;
      return;
    }
  Integer d = rho_factor(n);
  if (d == 0) throw CapacityError("could not factor " + to_string(n));
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::map<Integer, unsigned long> factorize(const Integer& n) {
  if (n <= 0) throw DomainError("factorization of a non-positive number");
  std::map<Integer, unsigned long> out;
  Integer m = n;
  for (unsigned long d = 2; d <= 10'000 && Integer(d) * d <= m; ++d)
    while (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), d);
      ++out[Integer(d)];
    }
  factor_into(m, out);
  return out;
}

std::vector<Integer> divisors(const Integer& n) {
  std::vector<Integer> out{1};
  for (const auto& [pr, e] : factorize(n)) {
    const size_t base = out.size();
    if (base * (e + 1) > kMaxDivisors) throw CapacityError(to_string(n) + " has too many divisors");
    Integer power = 1;
    for (unsigned long k = 1; k <= e; ++k) {
      power *= pr;
      for (size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  // 50 Miller-Rabin rounds after BPSW; deterministic below 2^64.
  return mpz_probab_prime_p(n.get_mpz_t(), 50) != 0;
}

bool is_odd_prime_power(const Integer& n) {
  if (n < 3 || n % 2 == 0) return false;
  if (is_prime(n)) return true;
  for (unsigned long k = 2;; ++k) {
    Integer root;
    bool exact = mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0;
    if (root < 3) return false;
    if (exact && is_prime(root)) return true;
  }
}

long to_long(const Integer& x, std::string_view what) {
  if (!x.fits_slong_p())
    throw CapacityError(std::string(what) + " is too large: " + to_string(x));
  return x.get_si();
}

}  // namespace lens
