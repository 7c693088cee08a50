#include <doctest.h>

#include <random>
#include <set>

#include "bargmann/multiindex.hpp"

using namespace bargmann;

namespace {

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

mpz_class naive_factorial(const MultiIndex& a) {
  mpz_class r = 1;
  for (int x : a.entries()) {
    for (int m = 2; m <= x; ++m) r *= m;
  }
  return r;
}

}  // namespace

TEST_CASE("construction validates dimension and entries") {
  CHECK_THROWS_AS(MultiIndex(std::size_t{0}), std::invalid_argument);
  CHECK_THROWS_AS(MultiIndex({1, -1}), std::invalid_argument);
  const MultiIndex a{3, 2};
  CHECK(a.dimension() == 2);
  CHECK(a.degree() == 5);
  CHECK(a.to_string() == "(3,2)");
  CHECK(MultiIndex(3).is_zero());
}

TEST_CASE("enumerate_upto examples") {
  CHECK(enumerate_upto(1, 2) == std::vector<MultiIndex>{MultiIndex{0}, MultiIndex{1}, MultiIndex{2}});
  CHECK(enumerate_upto(2, 1) == std::vector<MultiIndex>{MultiIndex{0, 0}, MultiIndex{1, 0}, MultiIndex{0, 1}});
  CHECK(enumerate_upto(3, 4).size() == 35);
}

TEST_CASE("enumerate_upto counts, uniqueness and ordering") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (int k = 0; k <= 8; ++k) {
      const auto list = enumerate_upto(n, k);
      REQUIRE(mpz_class(list.size()) == binomial(n + k, n));
      CHECK(list.size() == count_upto(n, k));
      std::set<MultiIndex> seen(list.begin(), list.end());
      CHECK(seen.size() == list.size());
      for (std::size_t i = 1; i < list.size(); ++i) {
        CHECK(list[i - 1].degree() <= list[i].degree());
        if (list[i - 1].degree() == list[i].degree()) CHECK(list[i] < list[i - 1]);
      }
      for (const auto& a : list) CHECK(a.degree() <= k);
    }
  }
}

TEST_CASE("enumerate_exact and enumerate_box") {
  CHECK(enumerate_exact(2, 2) == std::vector<MultiIndex>{MultiIndex{2, 0}, MultiIndex{1, 1}, MultiIndex{0, 2}});
  CHECK(enumerate_box(MultiIndex{1, 2}).size() == 6);
}

TEST_CASE("factorial examples") {
  CHECK(factorial(MultiIndex{0, 0}) == 1);
  CHECK(factorial(MultiIndex{3, 2}) == 12);
  CHECK(factorial(MultiIndex{10, 10}) == mpz_class("13168189440000"));
}

TEST_CASE("factorial is exact and super-multiplicative") {
  for (const auto& a : enumerate_upto(2, 20)) CHECK(factorial(a) == naive_factorial(a));
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> d(0, 9);
  for (int trial = 0; trial < 100; ++trial) {
    const MultiIndex a{d(rng), d(rng), d(rng)}, b{d(rng), d(rng), d(rng)};
    CHECK(factorial(a + b) >= factorial(a) * factorial(b));
  }
}

TEST_CASE("try_subtract examples and properties") {
  CHECK(try_subtract(MultiIndex{2, 1}, MultiIndex{1, 1}) == MultiIndex{1, 0});
  CHECK_FALSE(try_subtract(MultiIndex{1, 0}, MultiIndex{0, 1}).has_value());
  CHECK(try_subtract(MultiIndex{5, 5}, MultiIndex{5, 5}) == MultiIndex{0, 0});
  CHECK_THROWS_AS(try_subtract(MultiIndex{1}, MultiIndex{1, 0}), std::invalid_argument);
  const auto list = enumerate_upto(2, 4);
  for (const auto& a : list) {
    for (const auto& b : list) {
      const auto d = try_subtract(a, b);
      CHECK(d.has_value() == b.le(a));
      if (d) CHECK(*d + b == a);
    }
  }
}
