#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "bargmann/fock.hpp"
#include "bargmann/matrix_io.hpp"

using namespace bargmann;
using cd = std::complex<double>;

namespace {

FormalSymbol z1() { return FormalSymbol::z(1, 0); }
FormalSymbol zb1() { return FormalSymbol::zbar(1, 0); }
FormalSymbol tt() { return FormalSymbol::t(1); }

double max_abs_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) { return (a - b).cwiseAbs().maxCoeff(); }

OperatorMatrix random_matrix(const TruncatedBasis& basis, std::mt19937_64& rng) {
  std::normal_distribution<double> d;
  const auto m = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXcd e(m, m);
  for (Eigen::Index r = 0; r < m; ++r) {
    for (Eigen::Index c = 0; c < m; ++c) e(r, c) = cd(d(rng), d(rng));
  }
  return OperatorMatrix(basis, e);
}

}  // namespace

TEST_CASE("truncated basis") {
  const TruncatedBasis b(2, 3, 0.5);
  CHECK(b.size() == 10);
  CHECK(b.indices() == enumerate_upto(2, 3));
  CHECK(b.index_of(MultiIndex{0, 1}) == std::size_t{2});
  CHECK_FALSE(b.index_of(MultiIndex{4, 0}).has_value());
  CHECK_THROWS(TruncatedBasis(1, -1, 1.0));
  CHECK_THROWS(TruncatedBasis(1, 3, 0.0));
}

TEST_CASE("project_monomial") {
  CHECK(project_monomial(MultiIndex{1}, MultiIndex{1}) == tt());
  CHECK(project_monomial(MultiIndex{0}, MultiIndex{1}).is_zero());
  CHECK(project_monomial(MultiIndex{2}, MultiIndex{1}) == tt() * z1() * GaussianRational(2));
  CHECK(project_monomial(MultiIndex{3, 1}, MultiIndex{1, 1}) ==
        FormalSymbol::t(2) * FormalSymbol::t(2) * FormalSymbol::z(2, 0) * FormalSymbol::z(2, 0) * GaussianRational(3));
}

TEST_CASE("toeplitz_formal actions") {
  const FormalOperator id = toeplitz_formal(FormalSymbol::constant(1, 1));
  const FormalOperator tz = toeplitz_formal(z1());
  const FormalOperator tzb = toeplitz_formal(zb1());
  for (int a = 0; a <= 6; ++a) {
    const MultiIndex alpha{a};
    CHECK(id.apply(alpha) == FormalSymbol::monomial(1, Monomial{alpha, MultiIndex{0}, 0}));
    CHECK(tz.apply(alpha) == FormalSymbol::monomial(1, Monomial{MultiIndex{a + 1}, MultiIndex{0}, 0}));
    if (a == 0) {
      CHECK(tzb.apply(alpha).is_zero());
    } else {
      CHECK(tzb.apply(alpha) == FormalSymbol::monomial(1, Monomial{MultiIndex{a - 1}, MultiIndex{0}, 2}, a));
    }
  }
}

TEST_CASE("compose_formal and equal_on") {
  const FormalOperator tz = toeplitz_formal(z1());
  const FormalOperator tzb = toeplitz_formal(zb1());
  const FormalOperator c = compose_formal(tz, tzb, 6);
  for (int a = 0; a <= 6; ++a) {
    const auto image = c.apply(MultiIndex{a});
    if (a == 0) {
      CHECK(image.is_zero());
    } else {
      CHECK(image == FormalSymbol::monomial(1, Monomial{MultiIndex{a}, MultiIndex{0}, 2}, a));
    }
  }
  CHECK(equal_on(c, toeplitz_formal(z1() * zb1() - tt()), 6));
  CHECK_FALSE(equal_on(c, toeplitz_formal(z1() * zb1()), 6));
  CHECK(equal_on(tz, tz, 5));
  CHECK(c.domain_cap() == 6);
  CHECK_THROWS_AS(c.apply(MultiIndex{7}), std::out_of_range);
  CHECK_THROWS_AS(tz.apply(zb1()), std::invalid_argument);
}

TEST_CASE("product expansion holds exactly on random polynomials") {
  std::mt19937_64 rng(2024);
  for (std::size_t n : {1, 2}) {
    for (int trial = 0; trial < 15; ++trial) {
      const FormalSymbol p = random_symbol(rng, n, 3), q = random_symbol(rng, n, 3);
      CHECK(equal_on(compose_formal(toeplitz_formal(p), toeplitz_formal(q), 8), toeplitz_formal(sharp_formal(p, q)), 8));
    }
  }
}

TEST_CASE("dropping the correction terms breaks the identity") {
  const FormalSymbol p = z1() * z1(), q = zb1() * zb1();
  CHECK_FALSE(equal_on(compose_formal(toeplitz_formal(p), toeplitz_formal(q), 8), toeplitz_formal(sharp_formal(p, q, 1)), 8));
}

TEST_CASE("heat-transformed symbols compose through the sharp product") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 10; ++trial) {
    const FormalSymbol f = random_symbol(rng, 1, 3), g = random_symbol(rng, 1, 3);
    const FormalSymbol hf = heat_transform_formal(f), hg = heat_transform_formal(g);
    CHECK(equal_on(compose_formal(toeplitz_formal(hf), toeplitz_formal(hg), 8), toeplitz_formal(sharp_formal(hf, hg)), 8));
  }
}

TEST_CASE("toeplitz_matrix_formal examples") {
  const TruncatedBasis b(1, 8, 1.0);
  CHECK(max_abs_diff(toeplitz_matrix_formal(FormalSymbol::constant(1, 1), b).entries(),
                     OperatorMatrix::identity(b).entries()) == 0.0);
  const OperatorMatrix tz = toeplitz_matrix_formal(z1(), b);
  for (int a = 0; a < 8; ++a) CHECK(std::abs(tz(a + 1, a) - std::sqrt(a + 1.0)) <= 1e-14);
  const TruncatedBasis bt(1, 8, 0.3);
  const OperatorMatrix n = toeplitz_matrix_formal(z1() * zb1(), bt);
  for (int a = 0; a <= 8; ++a) CHECK(n(a, a).real() == doctest::Approx((a + 1) * 0.3).epsilon(1e-14));
}

TEST_CASE("adjoint symmetry of formal matrices") {
  std::mt19937_64 rng(31);
  for (std::size_t n : {1, 2}) {
    const TruncatedBasis b(n, 6, 0.7);
    for (int trial = 0; trial < 10; ++trial) {
      const FormalSymbol f = random_symbol(rng, n, 3);
      const OperatorMatrix a = toeplitz_matrix_formal(f, b);
      const OperatorMatrix c = toeplitz_matrix_formal(conjugate(f), b);
      CHECK(max_abs_diff(c.entries(), a.adjoint().entries()) <= 1e-12);
    }
  }
}

TEST_CASE("formal_operator_matrix reproduces toeplitz_matrix_formal") {
  std::mt19937_64 rng(37);
  const TruncatedBasis b(2, 5, 0.4);
  for (int trial = 0; trial < 10; ++trial) {
    const FormalSymbol f = random_symbol(rng, 2, 3);
    CHECK(max_abs_diff(formal_operator_matrix(toeplitz_formal(f), b).entries(),
                       toeplitz_matrix_formal(f, b).entries()) <= 1e-12);
  }
}

TEST_CASE("toeplitz_matrix_sampled examples") {
  const TruncatedBasis b(1, 10, 1.0);
  const SampledSymbol unit(1, [](Point) { return cd(1.0); }, {}, 1.0);
  CHECK(max_abs_diff(toeplitz_matrix_sampled(unit, b, gauss_hermite(30)).entries(), OperatorMatrix::identity(b).entries()) <=
        1e-10);

  const TruncatedBasis b8(1, 8, 0.5);
  const FormalSymbol number = z1() * zb1();
  CHECK(max_abs_diff(toeplitz_matrix_sampled(sampled_from_formal(number), b8, gauss_hermite(40)).entries(),
                     toeplitz_matrix_formal(number, b8).entries()) <= 1e-8);

  for (double t : {0.5, 0.1, 0.01}) {
    const OperatorMatrix c = toeplitz_matrix_sampled(cos_re(1, 0), TruncatedBasis(1, 4, t), gauss_hermite(40));
    CHECK(std::abs(c(0, 0) - cd(std::exp(-t / 4))) <= 1e-12);
  }
}

TEST_CASE("sampled and formal matrices agree on random polynomials") {
  std::mt19937_64 rng(41);
  for (std::size_t n : {1, 2}) {
    const TruncatedBasis b(n, n == 1 ? 8 : 4, 0.6);
    for (int trial = 0; trial < 5; ++trial) {
      const FormalSymbol f = random_symbol(rng, n, 3);
      const double diff = max_abs_diff(toeplitz_matrix_sampled(sampled_from_formal(f), b, gauss_hermite(13)).entries(),
                                       toeplitz_matrix_formal(f, b).entries());
      CHECK(diff <= 1e-8);
    }
  }
}

TEST_CASE("sampled matrices flag entries beyond the symbol bound") {
  const SampledSymbol liar(1, [](Point) { return cd(1.0); }, {}, 0.01);
  CHECK_THROWS_AS(toeplitz_matrix_sampled(liar, TruncatedBasis(1, 4, 1.0), gauss_hermite(20)), IllConditionedError);
}

TEST_CASE("matrix operations") {
  std::mt19937_64 rng(43);
  const TruncatedBasis b(1, 6, 1.0);
  const OperatorMatrix a = random_matrix(b, rng), c = random_matrix(b, rng);
  CHECK(commutator(a, a).entries().cwiseAbs().maxCoeff() == 0.0);
  CHECK(max_abs_diff(matrix_compose(OperatorMatrix::identity(b), c).entries(), c.entries()) == 0.0);
  CHECK_THROWS_AS(matrix_compose(a, OperatorMatrix::identity(TruncatedBasis(1, 6, 0.5))), BasisMismatch);
  CHECK_THROWS_AS(a + OperatorMatrix::identity(TruncatedBasis(1, 5, 1.0)), BasisMismatch);

  const double t = 0.8;
  const TruncatedBasis bt(1, 12, t);
  const OperatorMatrix p = toeplitz_matrix_formal((z1() - zb1()) * GaussianRational(0, mpq_class(-1, 2)), bt);
  const OperatorMatrix q = toeplitz_matrix_formal((z1() + zb1()) * GaussianRational(mpq_class(1, 2)), bt);
  const OperatorMatrix inner = interior_block(commutator(p, q), 1);
  const auto m = static_cast<Eigen::Index>(inner.size());
  CHECK(max_abs_diff(inner.entries(), cd(0, t / 2) * Eigen::MatrixXcd::Identity(m, m)) <= 1e-12);
}

TEST_CASE("spectral norm") {
  const TruncatedBasis b(1, 2, 1.0);
  CHECK(spectral_norm(OperatorMatrix::identity(b)) == doctest::Approx(1.0).epsilon(1e-12));
  Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(3, 3);
  d(0, 0) = 1.0;
  d(1, 1) = 2.0;
  d(2, 2) = 0.5;
  CHECK(spectral_norm(OperatorMatrix(b, d)) == doctest::Approx(2.0).epsilon(1e-12));
  for (int N : {5, 12, 20}) {
    CHECK(spectral_norm(toeplitz_matrix_formal(z1(), TruncatedBasis(1, N, 1.0))) ==
          doctest::Approx(std::sqrt(N)).epsilon(1e-10));
  }
  d(1, 2) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(spectral_norm(OperatorMatrix(b, d)), std::domain_error);
}

TEST_CASE("interior_block") {
  std::mt19937_64 rng(47);
  const TruncatedBasis b(2, 5, 1.0);
  const OperatorMatrix a = random_matrix(b, rng);
  CHECK(max_abs_diff(interior_block(a, 0).entries(), a.entries()) == 0.0);
  const OperatorMatrix corner = interior_block(a, 5);
  CHECK(corner.size() == 1);
  CHECK(corner(0, 0) == a(0, 0));
  CHECK_THROWS_AS(interior_block(a, 6), std::out_of_range);
  CHECK_THROWS_AS(interior_block(a, -1), std::out_of_range);
  for (int trial = 0; trial < 5; ++trial) {
    const OperatorMatrix r = random_matrix(b, rng);
    double previous = spectral_norm(r);
    for (int m = 1; m <= 5; ++m) {
      const double current = spectral_norm(interior_block(r, m));
      CHECK(current <= previous * (1 + 1e-12));
      previous = current;
    }
  }
}

TEST_CASE("matrix dump round trip") {
  const TruncatedBasis b(2, 3, 0.37);
  std::mt19937_64 rng(53);
  const OperatorMatrix a = random_matrix(b, rng);
  const MatrixHeader header{2, 3, 0.37, "z1*conj(z2)", "formal"};
  const MatrixHeader parsed = parse_matrix_header(matrix_header_json(header));
  CHECK(parsed.n == 2);
  CHECK(parsed.N == 3);
  CHECK(parsed.t == 0.37);
  CHECK(parsed.symbol == "z1*conj(z2)");
  CHECK(parsed.mode == "formal");
  std::stringstream csv;
  write_matrix_csv(csv, a);
  const OperatorMatrix back = read_matrix_csv(csv, parsed);
  CHECK(back.entries() == a.entries());
  std::stringstream bad("row,col,re,im\n0,99,1,0\n");
  CHECK_THROWS_AS(read_matrix_csv(bad, parsed), std::runtime_error);
}
