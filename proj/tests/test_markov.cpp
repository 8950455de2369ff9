#include <random>

#include "doctest.h"
#include "rslevy/markov.hpp"

using namespace rslevy;

namespace {

Matrix random_generator(int n, std::mt19937_64& rng, double rate_scale = 2.0) {
  std::uniform_real_distribution<double> unif(0.0, rate_scale);
  Matrix q = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      if (i != j) q(i, j) = unif(rng);
    q(i, i) = -q.row(i).sum();
  }
  return q;
}

}  // namespace

TEST_CASE("validate_generator accepts proper generators") {
  Matrix q(2, 2);
  q << -1, 1, 2, -2;
  CHECK_NOTHROW(validate_generator(q));

  Matrix absorbing(1, 1);
  absorbing << 0.0;
  CHECK_NOTHROW(validate_generator(absorbing));
}

TEST_CASE("validate_generator reports the first violated invariant") {
  Matrix bad_sum(2, 2);
  bad_sum << -1, 0.5, 1, -1;
  CHECK_THROWS_WITH_AS(validate_generator(bad_sum),
                       "generator row 0 sums to -0.5", InvalidInput);

  Matrix bad_offdiag(2, 2);
  bad_offdiag << 1, -1, 2, -2;
  CHECK_THROWS_AS(validate_generator(bad_offdiag), InvalidInput);
}

TEST_CASE("matrix_exp on trivial inputs") {
  CMatrix zero = CMatrix::Zero(3, 3);
  CHECK((matrix_exp(zero) - CMatrix::Identity(3, 3)).cwiseAbs().maxCoeff() ==
        doctest::Approx(0.0));

  CMatrix diag = CMatrix::Zero(2, 2);
  diag(0, 0) = Complex(0.3, 0.2);
  diag(1, 1) = Complex(-1.5, 0.0);
  CMatrix e = matrix_exp(diag);
  CHECK(std::abs(e(0, 0) - std::exp(Complex(0.3, 0.2))) < 1e-14);
  CHECK(std::abs(e(1, 1) - std::exp(Complex(-1.5, 0.0))) < 1e-14);
  CHECK(std::abs(e(0, 1)) == 0.0);
}

TEST_CASE("matrix_exp matches a truncated Taylor series") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  CMatrix m(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = Complex(unif(rng), unif(rng));

  CMatrix taylor = CMatrix::Identity(4, 4);
  CMatrix term = CMatrix::Identity(4, 4);
  for (int k = 1; k <= 60; ++k) {
    term = (term * m / static_cast<double>(k)).eval();
    taylor += term;
  }
  CHECK((matrix_exp(m) - taylor).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("matrix_exp rejects non-finite input") {
  CMatrix m = CMatrix::Zero(2, 2);
  m(0, 1) = Complex(std::numeric_limits<double>::quiet_NaN(), 0.0);
  CHECK_THROWS_AS(matrix_exp(m), InvalidInput);
}

TEST_CASE("semigroup_with_potential basic identities") {
  std::mt19937_64 rng(11);
  GeneratorMatrix q(random_generator(3, rng));

  SUBCASE("zero potential gives the transition semigroup") {
    CMatrix p = semigroup_with_potential(q, CVector::Zero(3), 0.8);
    for (int i = 0; i < 3; ++i)
      CHECK(std::abs(p.row(i).sum() - 1.0) < 1e-12);
    CHECK(p.imag().cwiseAbs().maxCoeff() < 1e-14);
    CHECK((p.real().array() >= -1e-12).all());
  }

  SUBCASE("scalar case") {
    Matrix single(1, 1);
    single << 0.0;
    GeneratorMatrix q1(single);
    CVector b(1);
    b << Complex(-0.4, 0.1);
    CMatrix p = semigroup_with_potential(q1, b, 2.0);
    CHECK(std::abs(p(0, 0) - std::exp(2.0 * b(0))) < 1e-14);
  }

  SUBCASE("dimension mismatch") {
    CHECK_THROWS_AS(semigroup_with_potential(q, CVector::Zero(2), 1.0),
                    InvalidInput);
  }
}

// chain-path Monte Carlo oracle for the Feynman-Kac identity
TEST_CASE("semigroup_with_potential agrees with simulated chain paths") {
  Matrix qm(2, 2);
  qm << -0.7, 0.7, 1.1, -1.1;
  GeneratorMatrix q(qm);
  CVector b(2);
  b << Complex(-0.03, 0.0), Complex(-0.05, 0.0);
  const double t = 1.0;

  CMatrix expected = semigroup_with_potential(q, b, t);

  std::mt19937_64 rng(123);
  std::exponential_distribution<double> expo(1.0);
  const int n_paths = 200000;
  Matrix sum = Matrix::Zero(2, 2);
  Matrix sumsq = Matrix::Zero(2, 2);
  for (int p = 0; p < n_paths; ++p) {
    const int start = p % 2;
    int state = start;
    double clock = 0.0, integral = 0.0;
    while (true) {
      const double hold = expo(rng) / (-qm(state, state));
      if (clock + hold >= t) {
        integral += (t - clock) * b(state).real();
        break;
      }
      integral += hold * b(state).real();
      clock += hold;
      state = 1 - state;
    }
    const double value = std::exp(integral);
    sum(start, state) += value;
    sumsq(start, state) += value * value;
  }
  for (int i = 0; i < 2; ++i) {
    const double n_i = n_paths / 2.0;
    for (int j = 0; j < 2; ++j) {
      const double mean = sum(i, j) / n_i;
      const double var = sumsq(i, j) / n_i - mean * mean;
      const double se = std::sqrt(var / n_i);
      CHECK(std::abs(mean - expected(i, j).real()) < 3.0 * se + 1e-12);
    }
  }
}

TEST_CASE("semigroup satisfies Chapman-Kolmogorov") {
  std::mt19937_64 rng(17);
  GeneratorMatrix q(random_generator(4, rng));
  CVector b(4);
  for (int i = 0; i < 4; ++i) b(i) = Complex(-0.1 * i, 0.05 * i);
  const double s = 0.4, t = 1.3;
  CMatrix lhs = semigroup_with_potential(q, b, s + t);
  CMatrix rhs = semigroup_with_potential(q, b, s) *
                semigroup_with_potential(q, b, t);
  CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("resolvent trivial cases and identity") {
  CMatrix zero = CMatrix::Zero(1, 1);
  CHECK(std::abs(resolvent(zero, Complex(2.0, 0.5))(0, 0) -
                 1.0 / Complex(2.0, 0.5)) < 1e-14);

  CMatrix m(1, 1);
  m << Complex(-1.0, 0.0);
  CHECK(std::abs(resolvent(m, 2.0)(0, 0) - 1.0 / 3.0) < 1e-14);

  std::mt19937_64 rng(23);
  Matrix sub = random_generator(4, rng);
  sub.diagonal().array() -= 0.5;  // killed chain
  CMatrix mc = sub.cast<Complex>();
  const Complex q(1.7, 0.8);
  CMatrix res = resolvent(mc, q);
  CMatrix a = -mc;
  a.diagonal().array() += q;
  CHECK((a * res - CMatrix::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-10);
}

// time-quadrature oracle: int_0^inf e^{-qt} exp(tM) dt
TEST_CASE("resolvent matches the Laplace-time quadrature") {
  std::mt19937_64 rng(29);
  Matrix sub = random_generator(3, rng);
  sub.diagonal().array() -= 0.8;
  CMatrix m = sub.cast<Complex>();
  const double q = 1.2;
  CMatrix expected = resolvent(m, q);

  // composite Simpson in t, truncated where e^{-qt} is negligible
  const double horizon = 40.0 / q;
  const int n = 4000;
  const double h = horizon / n;
  CMatrix acc = CMatrix::Zero(3, 3);
  for (int k = 0; k <= n; ++k) {
    const double t = k * h;
    double w = (k == 0 || k == n) ? 1.0 : (k % 2 == 1 ? 4.0 : 2.0);
    acc += w * std::exp(-q * t) * matrix_exp(CMatrix(t * m));
  }
  acc *= h / 3.0;
  CHECK((acc - expected).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("resolvent flags singular systems") {
  CMatrix m(1, 1);
  m << Complex(2.0, 0.0);  // violates the spectral precondition
  CHECK_THROWS_AS(resolvent(m, 2.0), NumericalError);
}

TEST_CASE("spectral_abscissa") {
  std::mt19937_64 rng(31);
  Matrix q = random_generator(5, rng);
  CHECK(spectral_abscissa(q) <= 1e-10);

  Matrix d(2, 2);
  d << -1, 0, 0, -2;
  CHECK(spectral_abscissa(d) == doctest::Approx(-1.0));

  // Q - D with min Re(d_i) = 0.3
  CMatrix shifted = q.cast<Complex>();
  CVector diag(5);
  for (int i = 0; i < 5; ++i) diag(i) = Complex(0.3 + 0.2 * i, 0.1 * i);
  shifted.diagonal() -= diag;
  CHECK(spectral_abscissa(shifted) <= -0.3 + 1e-10);
}

TEST_CASE("transition semigroup is stochastic for random generators") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    GeneratorMatrix q(random_generator(n, rng));
    std::uniform_real_distribution<double> tdist(0.0, 5.0);
    const double t = tdist(rng);
    CMatrix p = semigroup_with_potential(q, CVector::Zero(n), t);
    CHECK(p.imag().cwiseAbs().maxCoeff() < 1e-12);
    CHECK((p.real().array() >= -1e-10).all());
    for (int i = 0; i < n; ++i)
      CHECK(std::abs(p.row(i).sum().real() - 1.0) < 1e-10);
  }
}
