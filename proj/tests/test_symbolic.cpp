#include <doctest.h>

#include <cmath>
#include <random>

#include "bargmann/formal_symbol.hpp"
#include "bargmann/gaussian_rational.hpp"

using namespace bargmann;
using cd = std::complex<double>;

namespace {

const GaussianRational I = GaussianRational::i();

FormalSymbol z1() { return FormalSymbol::z(1, 0); }
FormalSymbol zb1() { return FormalSymbol::zbar(1, 0); }
FormalSymbol one(std::size_t n = 1) { return FormalSymbol::constant(n, 1); }
FormalSymbol tt(std::size_t n = 1) { return FormalSymbol::t(n); }

GaussianRational q(long a, long b = 1) { return GaussianRational(mpq_class(a, b)); }

}  // namespace

TEST_CASE("GaussianRational arithmetic is exact") {
  const GaussianRational a(mpq_class(1, 3), mpq_class(-2, 5));
  const GaussianRational b(mpq_class(7, 2), mpq_class(1, 4));
  CHECK((a * b) / b == a);
  CHECK(a - a == GaussianRational(0));
  CHECK(I * I == GaussianRational(-1));
  CHECK(a.conj().conj() == a);
  CHECK(a * a.conj() == GaussianRational(a.norm()));
  CHECK_THROWS_AS(a / GaussianRational(0), std::domain_error);
  CHECK(GaussianRational(mpq_class(1, 2), mpq_class(-3, 4)).to_string() == "(1/2 - 3/4 i)");
}

TEST_CASE("rational_from_decimal keeps decimal literals exact") {
  CHECK(rational_from_decimal("0.125") == mpq_class(1, 8));
  CHECK(rational_from_decimal("3e-2") == mpq_class(3, 100));
  CHECK(rational_from_decimal("2.5E1") == 25);
  CHECK(rational_from_decimal("7") == 7);
  CHECK_THROWS(rational_from_decimal("1.2.3"));
}

TEST_CASE("add and multiply") {
  const FormalSymbol p = z1() * zb1();
  CHECK(p.terms().size() == 1);
  CHECK(p.coefficient(Monomial{MultiIndex{1}, MultiIndex{1}, 0}) == GaussianRational(1));
  const FormalSymbol ci = FormalSymbol::constant(1, I);
  CHECK((z1() + ci) * (z1() - ci) == z1() * z1() + one());
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const FormalSymbol f = random_symbol(rng, 2, 3);
    CHECK(multiply(f, one(2)) == f);
    CHECK(add(f, -f).is_zero());
  }
  CHECK_THROWS_AS(z1() + FormalSymbol::z(2, 0), std::invalid_argument);
}

TEST_CASE("canonical form strips zero coefficients") {
  const FormalSymbol f = z1() - z1();
  CHECK(f.is_zero());
  CHECK(f.terms().empty());
  CHECK(f.degree() == -1);
  CHECK(f.to_string() == "0");
}

TEST_CASE("canonical text") {
  CHECK((z1() * zb1() - tt()).to_string() == "(-1 + 0 i) * t^1 + (1 + 0 i) * z1^1 * zbar1^1");
  CHECK(FormalSymbol::s(1).to_string() == "(1 + 0 i) * s^1");
}

TEST_CASE("conjugate") {
  CHECK(conjugate(z1()) == zb1());
  const FormalSymbol f = FormalSymbol::z(2, 0) * FormalSymbol::zbar(2, 1) * I;
  const FormalSymbol expected = FormalSymbol::monomial(2, Monomial{MultiIndex{0, 1}, MultiIndex{1, 0}, 0}, -I);
  CHECK(conjugate(f) == expected);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const FormalSymbol g = random_symbol(rng, 2, 3);
    CHECK(conjugate(conjugate(g)) == g);
  }
}

TEST_CASE("differentiate") {
  CHECK(differentiate(z1() * z1(), MultiIndex{1}, Wirtinger::holomorphic) == z1() * q(2));
  CHECK(differentiate(z1() * z1(), MultiIndex{1}, Wirtinger::antiholomorphic).is_zero());
  const FormalSymbol f = z1() * z1() * zb1() * zb1();
  const FormalSymbol d = differentiate(differentiate(f, MultiIndex{2}, Wirtinger::holomorphic), MultiIndex{2},
                                       Wirtinger::antiholomorphic);
  CHECK(d == FormalSymbol::constant(1, 4));
  // Repeated first derivatives agree with one higher derivative.
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const FormalSymbol g = random_symbol(rng, 2, 4);
    FormalSymbol step = g;
    step = differentiate(step, MultiIndex{1, 0}, Wirtinger::holomorphic);
    step = differentiate(step, MultiIndex{1, 0}, Wirtinger::holomorphic);
    step = differentiate(step, MultiIndex{0, 1}, Wirtinger::holomorphic);
    CHECK(step == differentiate(g, MultiIndex{2, 1}, Wirtinger::holomorphic));
  }
}

TEST_CASE("conjugation swaps Wirtinger derivatives") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const FormalSymbol f = random_symbol(rng, 2, 4);
    for (const auto& alpha : enumerate_upto(2, 3)) {
      CHECK(conjugate(differentiate(f, alpha, Wirtinger::holomorphic)) ==
            differentiate(conjugate(f), alpha, Wirtinger::antiholomorphic));
    }
  }
}

TEST_CASE("heat transform examples") {
  CHECK(heat_transform_formal(one()) == one());
  CHECK(heat_transform_formal(z1() * zb1()) == z1() * zb1() + tt());
  const FormalSymbol f = z1() * z1() * zb1() * zb1();
  CHECK(heat_transform_formal(f) == f + tt() * z1() * zb1() * q(4) + tt() * tt() * q(2));
}

TEST_CASE("heat transform fixes harmonic polynomials") {
  const std::size_t n = 2;
  const FormalSymbol z = FormalSymbol::z(n, 0), w = FormalSymbol::zbar(n, 1);
  const FormalSymbol harmonic = z * z * z + w * w + z * w * q(3, 2) + FormalSymbol::zbar(n, 0) * FormalSymbol::z(n, 1);
  REQUIRE(laplacian(harmonic).is_zero());
  CHECK(heat_transform_formal(harmonic) == harmonic);
}

TEST_CASE("heat transform semigroup") {
  std::mt19937_64 rng(17);
  const std::vector<std::pair<mpq_class, mpq_class>> params{{1, 1}, {mpq_class(1, 3), mpq_class(5, 7)}, {2, mpq_class(1, 2)}};
  for (int trial = 0; trial < 20; ++trial) {
    const FormalSymbol f = random_symbol(rng, 2, 4);
    for (const auto& [a, b] : params) {
      CHECK(heat_transform_formal(heat_transform_formal(f, a), b) == heat_transform_formal(f, a + b));
    }
  }
}

TEST_CASE("translation covariance of the heat transform") {
  std::mt19937_64 rng(19);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int trial = 0; trial < 20; ++trial) {
    const FormalSymbol f = random_symbol(rng, 2, 4);
    const std::vector<GaussianRational> a{GaussianRational(mpq_class(d(rng), 3), mpq_class(d(rng), 4)),
                                          GaussianRational(mpq_class(d(rng), 5), mpq_class(d(rng), 2))};
    const std::vector<cd> shift{a[0].to_complex(), a[1].to_complex()};
    const std::vector<cd> z{{0.3, -0.7}, {-0.2, 0.5}};
    const std::vector<cd> z_shift{z[0] + shift[0], z[1] + shift[1]};
    for (double t : {0.1, 0.5, 1.0}) {
      const cd lhs = evaluate(heat_transform_formal(f), z_shift, t);
      const cd rhs = evaluate(heat_transform_formal(translate(f, a)), z, t);
      CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(lhs)));
    }
  }
}

TEST_CASE("sharp product") {
  const FormalSymbol g = z1() * zb1() * zb1() + FormalSymbol::constant(1, I);
  CHECK(sharp_formal(one(), g) == g);
  CHECK(sharp_formal(z1(), zb1()) == z1() * zb1() - tt());
  CHECK(sharp_formal(zb1(), z1()) == zb1() * z1());
  CHECK(sharp_formal(z1(), zb1(), 0) == z1() * zb1());
}

TEST_CASE("Berezin star product") {
  const FormalSymbol h = z1() * z1() + z1();
  const FormalSymbol g = zb1() * z1() * q(3);
  CHECK(star_berezin(h, g) == h * g);
  CHECK(star_berezin(zb1(), z1()) == zb1() * z1() + tt());
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    const FormalSymbol a = random_symbol(rng, 2, 3), b = random_symbol(rng, 2, 3);
    CHECK(star_berezin(a, b, 0) == a * b);
  }
}

TEST_CASE("Poisson bracket") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 10; ++trial) {
    const FormalSymbol f = random_symbol(rng, 2, 3);
    CHECK(poisson_bracket(f, f).is_zero());
  }
  const FormalSymbol p1 = (z1() - zb1()) * GaussianRational(0, mpq_class(-1, 2));
  const FormalSymbol q1 = (z1() + zb1()) * q(1, 2);
  CHECK(poisson_bracket(p1, q1) == FormalSymbol::constant(1, q(1, 2)));
  CHECK(poisson_bracket(z1(), zb1()) == FormalSymbol::constant(1, I));
}

TEST_CASE("evaluate") {
  const std::vector<cd> z{{1.0, 1.0}};
  CHECK(evaluate(one(), z, 0.7) == cd(1.0));
  CHECK(std::abs(evaluate(z1() * zb1() + tt(), z, 0.5) - cd(2.5)) < 1e-15);
  const std::vector<cd> two{{2.0, 0.0}};
  CHECK(std::abs(evaluate(tt() * z1(), two, 0.25) - cd(0.5)) < 1e-15);
  CHECK_THROWS_AS(evaluate(one(), z, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(evaluate(one(), std::vector<cd>(2), 1.0), std::invalid_argument);
}

TEST_CASE("t valuation") {
  CHECK(t_valuation(FormalSymbol(1)).is_infinite());
  CHECK(t_valuation(tt() * tt() * z1() + tt() * tt() * tt()).value() == 2);
  const Valuation half = t_valuation(FormalSymbol::s(1) * zb1());
  CHECK(half.value() == mpq_class(1, 2));
  CHECK(half.to_string() == "1/2");
  CHECK(half.at_least(mpq_class(1, 2)));
  CHECK_FALSE(half.at_least(1));
  CHECK(Valuation::infinite().at_least(100));
}

TEST_CASE("random symbols are seeded and nonzero") {
  std::mt19937_64 a(99), b(99);
  for (int trial = 0; trial < 20; ++trial) {
    const FormalSymbol f = random_symbol(a, 2, 3);
    CHECK(f == random_symbol(b, 2, 3));
    CHECK_FALSE(f.is_zero());
    CHECK(f.degree() <= 3);
    CHECK_FALSE(f.has_s());
  }
}
