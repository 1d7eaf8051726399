#include <doctest.h>

#include "lens/arith.hpp"

using namespace lens;

TEST_SUITE("arith") {

TEST_CASE("modular helpers") {
  CHECK(mod_floor(-3, 17) == 14);
  CHECK(mod_floor(34, 17) == 0);
  CHECK(mod_inverse(7, 34) == 5);
  CHECK(mod_inverse(15, 56) == 15);
  CHECK(mod_inverse(3, 1) == 0);
  CHECK_THROWS_AS(mod_inverse(2, 4), DomainError);
  CHECK(floor_div(-7, 2) == -4);
  CHECK(ceil_div(-7, 2) == -3);
  CHECK(ceil_div(17, 7) == 3);
  CHECK(floor_sqrt(Rational(17, 2)) == 2);
  CHECK(floor_sqrt(Rational(9)) == 3);
}

TEST_CASE("parsing is exact for any size") {
  Integer big = parse_integer("123456789012345678901234567890");
  CHECK(to_string(big) == "123456789012345678901234567890");
  CHECK(parse_integer("-5") == -5);
  CHECK(parse_integer("+5") == 5);
  CHECK_THROWS_AS(parse_integer(""), DomainError);
  CHECK_THROWS_AS(parse_integer("3x"), DomainError);
  CHECK_THROWS_AS(parse_integer("1.5"), DomainError);
  CHECK(parse_integer_list("3,-5") == std::vector<Integer>{3, -5});
  CHECK(parse_integer_list("").empty());
  CHECK_THROWS_AS(parse_integer_list("1,,2"), DomainError);
}

TEST_CASE("formatting") {
  CHECK(format_list({3, 2, 4}) == "[3,2,4]");
  CHECK(to_string(Rational(2, 4)) == "1/2");
  CHECK(to_string(Rational(-4, 2)) == "-2");
}

TEST_CASE("divisors and primality") {
  CHECK(divisors(56) == std::vector<Integer>{1, 2, 4, 7, 8, 14, 28, 56});
  CHECK(divisors(1) == std::vector<Integer>{1});
  for (long n = 1; n <= 300; ++n) {
    std::vector<Integer> naive;
    for (long k = 1; k <= n; ++k)
      if (n % k == 0) naive.push_back(k);
    CHECK(divisors(n) == naive);
    bool prime = n > 1 && naive.size() == 2;
    CHECK(is_prime(n) == prime);
  }
  CHECK(is_odd_prime_power(27));
  CHECK(is_odd_prime_power(17));
  CHECK_FALSE(is_odd_prime_power(8));
  CHECK_FALSE(is_odd_prime_power(15));
  CHECK_FALSE(is_odd_prime_power(1));
}

TEST_CASE("narrowing") {
  CHECK(to_long(Integer(42), "x") == 42);
  CHECK_THROWS_AS(to_long(parse_integer("100000000000000000000000"), "x"), CapacityError);
}

}

TEST_SUITE("arith") {

TEST_CASE("factorization of large numbers") {
  Integer a = parse_integer("1000000007"), b = parse_integer("998244353");
  Integer n = a * b * 12;
  auto f = factorize(n);
  CHECK(f.size() == 4);
  CHECK(f[2] == 2);
  CHECK(f[3] == 1);
  CHECK(f[a] == 1);
  CHECK(f[b] == 1);
  auto d = divisors(n);
  CHECK(d.size() == 3 * 2 * 2 * 2);
  CHECK(d.front() == 1);
  CHECK(d.back() == n);
  for (const auto& x : d) CHECK(n % x == 0);
  Integer sq = a * a * b;
  CHECK(divisors(sq).size() == 6);
  Integer pr = parse_integer("1000000000000000000000000000057");
  auto g = factorize(pr);
  Integer back = 1;
  for (const auto& [p, e] : g) {
    CHECK(is_prime(p));
    for (unsigned long k = 0; k < e; ++k) back *= p;
  }
  CHECK(back == pr);
  CHECK_THROWS_AS(divisors(0), DomainError);
}

}
