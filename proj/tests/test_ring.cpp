#include <doctest.h>

#include <numeric>
#include <random>

#include "kpalg/ring.hpp"

using namespace kpalg;

namespace {

RingValue q(long n, long d = 1) { return RingValue::fraction(RingSpec::rationals(), n, d); }

std::vector<RingValue> times(const Matrix& m, const Vector& x) {
  std::vector<RingValue> out(m.rows(), RingValue::zero(m.spec()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out[r] += m.at(r, c) * x[c];
  }
  return out;
}

Matrix random_matrix(RingSpec spec, std::mt19937& rng, std::size_t rows, std::size_t cols) {
  Matrix m(spec, rows, cols);
  std::uniform_int_distribution<long> entry(-3, 3);
  std::bernoulli_distribution dense(0.5);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (dense(rng)) m.set(r, c, RingValue(spec, entry(rng)));
    }
  }
  return m;
}

}  // namespace

TEST_CASE("ring arithmetic") {
  CHECK((q(1, 2) + q(1, 3)).to_string() == "5/6");
  CHECK(q(2, 4) == q(1, 2));
  CHECK(q(-1, -2) == q(1, 2));
  auto f2 = RingSpec::prime_field(2);
  CHECK((RingValue(f2, 1) + RingValue(f2, 1)).is_zero());
  auto f3 = RingSpec::prime_field(3);
  CHECK(RingValue(f3, -1).to_string() == "2");
  CHECK(RingValue::fraction(f3, 1, 2).to_string() == "2");
  CHECK((RingValue(f3, 2).inverse() * RingValue(f3, 2)).is_one());
  CHECK((q(3, 7).inverse()).to_string() == "7/3");

  auto z = RingSpec::integers();
  CHECK_THROWS_WITH_AS(RingValue(z, 2).inverse(), doctest::Contains("not a field"), RingError);
  CHECK_THROWS_WITH_AS(q(0).inverse(), doctest::Contains("inverse of zero"), RingError);
  CHECK_THROWS_AS(RingValue::fraction(z, 1, 2), RingError);
  CHECK(RingValue::fraction(z, 4, 2).to_string() == "2");
  CHECK_THROWS_AS(RingValue::fraction(f3, 1, 3), RingError);
  CHECK_THROWS_AS(RingValue(z, 1) + q(1), RingError);
  CHECK_THROWS_AS(RingSpec::prime_field(4), RingError);
  CHECK(RingSpec::parse("Fp:7") == RingSpec::prime_field(7));
  CHECK(RingSpec::parse("Z") == z);
  CHECK_THROWS_AS(RingSpec::parse("R"), RingError);
  CHECK(RingSpec::prime_field(5).to_string() == "Fp:5");

  mpz_class big("123456789012345678901234567890");
  RingValue b = RingValue::fraction(z, big, 1);
  CHECK((b * b - b * b).is_zero());
}

TEST_CASE("kernel examples") {
  Matrix zero(RingSpec::rationals(), 2, 2);
  auto k0 = kernel(zero);
  REQUIRE(k0.size() == 2);
  CHECK(k0[0] == Vector{q(1), q(0)});
  CHECK(k0[1] == Vector{q(0), q(1)});

  auto f2 = RingSpec::prime_field(2);
  Matrix ones(f2, 1, 2);
  ones.set(0, 0, RingValue(f2, 1));
  ones.set(0, 1, RingValue(f2, 1));
  auto k1 = kernel(ones);
  REQUIRE(k1.size() == 1);
  CHECK(k1[0] == Vector{RingValue(f2, 1), RingValue(f2, 1)});

  auto z = RingSpec::integers();
  Matrix m(z, 1, 2);
  m.set(0, 0, RingValue(z, 2));
  m.set(0, 1, RingValue(z, 4));
  auto k2 = kernel(m);
  REQUIRE(k2.size() == 1);
  CHECK(k2[0] == Vector{RingValue(z, 2), RingValue(z, -1)});
  // Brute force: every integer kernel vector with small entries is a multiple.
  for (long a = -6; a <= 6; ++a) {
    for (long b = -6; b <= 6; ++b) {
      if (2 * a + 4 * b != 0) continue;
      CHECK(a % 2 == 0);
      CHECK(b == -a / 2);
    }
  }
}

TEST_CASE("kernel properties on random matrices") {
  std::mt19937 rng(7);
  for (RingSpec spec : {RingSpec::rationals(), RingSpec::prime_field(2), RingSpec::prime_field(3),
                        RingSpec::prime_field(101), RingSpec::integers()}) {
    INFO(spec.to_string());
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t rows = std::uniform_int_distribution<std::size_t>(1, 5)(rng);
      const std::size_t cols = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
      Matrix m = random_matrix(spec, rng, rows, cols);
      auto basis = kernel(m);
      for (const auto& x : basis) {
        for (const auto& y : times(m, x)) CHECK(y.is_zero());
        // leading entry: 1 over fields, positive over Z
        auto lead = std::find_if(x.begin(), x.end(), [](const RingValue& v) { return !v.is_zero(); });
        REQUIRE(lead != x.end());
        if (spec.is_field()) {
          CHECK(lead->is_one());
        } else {
          CHECK(lead->sign() > 0);
          mpz_class g = 0;
          for (const auto& v : x) g = gcd(g, mpz_class(v.value().get_num()));
          CHECK(g == 1);
        }
      }
      CHECK(rank(m) + basis.size() == cols);
      // pivots strictly increase
      std::size_t last = 0;
      for (std::size_t i = 0; i < basis.size(); ++i) {
        std::size_t lead = 0;
        while (basis[i][lead].is_zero()) ++lead;
        if (i) CHECK(lead > last);
        last = lead;
      }
    }
  }
}

TEST_CASE("integer kernel spans the lattice") {
  // Every small integer solution is an integer combination of the basis.
  std::mt19937 rng(11);
  auto z = RingSpec::integers();
  for (int trial = 0; trial < 25; ++trial) {
    Matrix m = random_matrix(z, rng, 1, 3);
    auto basis = kernel(m);
    if (basis.size() != 2) continue;
    for (long a = -4; a <= 4; ++a) {
      for (long b = -4; b <= 4; ++b) {
        for (long c = -4; c <= 4; ++c) {
          Vector x{RingValue(z, a), RingValue(z, b), RingValue(z, c)};
          auto y = times(m, x);
          if (!y[0].is_zero()) continue;
          // basis is in echelon form: solve by forward substitution over Q.
          std::size_t p0 = 0, p1 = 0;
          while (basis[0][p0].is_zero()) ++p0;
          while (basis[1][p1].is_zero()) ++p1;
          mpq_class t0 = x[p0].value() / basis[0][p0].value();
          mpq_class rest = x[p1].value() - t0 * basis[1 - 1][p1].value();
          mpq_class t1 = rest / basis[1][p1].value();
          CHECK(t0.get_den() == 1);
          CHECK(t1.get_den() == 1);
          for (std::size_t i = 0; i < 3; ++i) {
            CHECK(t0 * basis[0][i].value() + t1 * basis[1][i].value() == x[i].value());
          }
        }
      }
    }
  }
}

TEST_CASE("sparse kernel agrees with dense kernel") {
  std::mt19937 rng(3);
  for (RingSpec spec : {RingSpec::rationals(), RingSpec::prime_field(5), RingSpec::integers()}) {
    for (int trial = 0; trial < 30; ++trial) {
      Matrix m = random_matrix(spec, rng, 4, 5);
      std::vector<SparseRow> rows;
      for (std::size_t r = 0; r < m.rows(); ++r) {
        SparseRow row;
        for (std::size_t c = 0; c < m.cols(); ++c) {
          if (!m.at(r, c).is_zero()) row.emplace_back(c, m.at(r, c).value());
        }
        rows.push_back(row);
      }
      CHECK(kernel(spec, m.cols(), rows) == kernel(m));
    }
  }
}
