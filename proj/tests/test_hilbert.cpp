#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>

#include "multibaker/hilbert.hpp"

using namespace multibaker;

namespace {

double max_abs_diff(const InternalOperator& a, const InternalOperator& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

InternalVector random_normalized(int dim, unsigned seed) {
  std::mt19937 gen(seed);
  std::normal_distribution<double> dist;
  InternalVector v(dim);
  for (int i = 0; i < dim; ++i) v(i) = Complex(dist(gen), dist(gen));
  v.normalize();
  return v;
}

}  // namespace

TEST_CASE("map params validation") {
  CHECK_THROWS_AS(MapParams(5, 2), config_error);   // odd dimension
  CHECK_THROWS_AS(MapParams(0, 1), config_error);
  CHECK_THROWS_AS(MapParams(-4, 1), config_error);
  CHECK_THROWS_AS(MapParams(8, 0), config_error);
  CHECK_THROWS_AS(MapParams(8, 8), config_error);

  const MapParams p(32, 17);
  CHECK(p.right_dim() == 15);
  CHECK(p.split() == doctest::Approx(17.0 / 32.0).epsilon(1e-15));
  CHECK(p.mirror() == MapParams(32, 15));
  CHECK(p.mirror().mirror() == p);
}

TEST_CASE("antiperiodic fourier transform entries") {
  CHECK_THROWS_AS(antiperiodic_fourier(0), config_error);

  const InternalOperator g1 = antiperiodic_fourier(1);
  CHECK(std::abs(g1(0, 0) - Complex(0.0, -1.0)) < 1e-15);

  // dim = 2 from the entry formula evaluated independently: exponents
  // (k+1/2)(l+1/2) are {1/4, 3/4, 3/4, 9/4}
  const InternalOperator g2 = antiperiodic_fourier(2);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(g2(0, 0) - std::polar(inv_sqrt2, -M_PI / 4.0)) < 1e-15);
  CHECK(std::abs(g2(0, 1) - std::polar(inv_sqrt2, -3.0 * M_PI / 4.0)) < 1e-15);
  CHECK(std::abs(g2(1, 0) - std::polar(inv_sqrt2, -3.0 * M_PI / 4.0)) < 1e-15);
  CHECK(std::abs(g2(1, 1) - std::polar(inv_sqrt2, -9.0 * M_PI / 4.0)) < 1e-15);
  // which collapses to +-0.5 -+ 0.5i
  CHECK(std::abs(g2(0, 0) - Complex(0.5, -0.5)) < 1e-15);
  CHECK(std::abs(g2(0, 1) - Complex(-0.5, -0.5)) < 1e-15);
}

TEST_CASE("antiperiodic fourier transform is unitary") {
  for (int dim : {2, 4, 8, 16, 32, 64}) {
    CAPTURE(dim);
    CHECK(unitarity_error(antiperiodic_fourier(dim)) <= kUnitarityTol);
  }
}

TEST_CASE("fourier kernel symmetries hold bit-exactly") {
  for (int dim : {3, 8, 17, 32}) {
    const InternalOperator g = antiperiodic_fourier(dim);
    for (int k = 0; k < dim; ++k)
      for (int l = 0; l < dim; ++l) {
        CHECK(g(k, l) == g(l, k));
        CHECK(g(dim - 1 - k, dim - 1 - l) == g(k, l));
      }
  }
}

TEST_CASE("baker operator at dim 2 equals -i times the adjoint transform") {
  const InternalOperator b = baker_operator(MapParams(2, 1));
  const InternalOperator expected = Complex(0.0, -1.0) * antiperiodic_fourier(2).adjoint();
  CHECK(max_abs_diff(b, expected) < 1e-15);
  CHECK(std::abs(b(0, 0) - Complex(0.5, -0.5)) < 1e-15);
  CHECK(std::abs(b(0, 1) - Complex(0.5, 0.5)) < 1e-15);
  CHECK(std::abs(b(1, 0) - Complex(0.5, 0.5)) < 1e-15);
  CHECK(std::abs(b(1, 1) - Complex(0.5, -0.5)) < 1e-15);
}

TEST_CASE("baker operator matches a literal transcription at dim 4") {
  // independent dense composition of the block construction
  const auto kernel = [](int dim) {
    InternalOperator g(dim, dim);
    for (int k = 0; k < dim; ++k)
      for (int l = 0; l < dim; ++l)
        g(k, l) = std::exp(Complex(0.0, -2.0 * M_PI * (k + 0.5) * (l + 0.5) / dim)) /
                  std::sqrt(static_cast<double>(dim));
    return g;
  };
  InternalOperator blocks = InternalOperator::Zero(4, 4);
  blocks.topLeftCorner(2, 2) = kernel(2);
  blocks.bottomRightCorner(2, 2) = kernel(2);
  const InternalOperator expected = kernel(4).adjoint() * blocks;
  CHECK(max_abs_diff(baker_operator(MapParams(4, 2)), expected) < 1e-13);
}

TEST_CASE("baker operator is unitary across parameter choices") {
  for (int left = 1; left <= 31; left += 6)
    CHECK(unitarity_error(baker_operator(MapParams(32, left))) <= kUnitarityTol);
  CHECK(unitarity_error(baker_operator(MapParams(64, 62))) <= kUnitarityTol);
}

TEST_CASE("baker operator block structure") {
  const MapParams params(8, 3);
  const InternalOperator b = baker_operator(params);
  const InternalOperator g = antiperiodic_fourier(8);
  const InternalOperator g_left = antiperiodic_fourier(3);
  const InternalOperator g_right = antiperiodic_fourier(5);
  for (int j = 0; j < 8; ++j) {
    const InternalVector mapped = g * b.col(j);
    if (j < 3) {
      for (int k = 3; k < 8; ++k) CHECK(std::abs(mapped(k)) < 1e-12);
      for (int k = 0; k < 3; ++k) CHECK(std::abs(mapped(k) - g_left(k, j)) < 1e-12);
    } else {
      for (int k = 0; k < 3; ++k) CHECK(std::abs(mapped(k)) < 1e-12);
      for (int k = 3; k < 8; ++k) CHECK(std::abs(mapped(k) - g_right(k - 3, j - 3)) < 1e-12);
    }
  }
}

TEST_CASE("apply_operator") {
  const InternalOperator identity = InternalOperator::Identity(6, 6);
  const InternalVector v = random_normalized(6, 42);
  CHECK((apply_operator(identity, v) - v).norm() < 1e-15);

  const InternalOperator g = antiperiodic_fourier(6);
  const InternalVector round_trip = apply_operator(g.adjoint().eval(), apply_operator(g, v));
  CHECK((round_trip - v).norm() < 1e-12);

  const InternalOperator b = baker_operator(MapParams(16, 11));
  for (unsigned seed = 0; seed < 8; ++seed) {
    const InternalVector w = random_normalized(16, 100 + seed);
    CHECK(std::abs(apply_operator(b, w).norm() - 1.0) < 1e-12);
  }

  CHECK_THROWS_AS(apply_operator(g, random_normalized(4, 7)), config_error);
}
