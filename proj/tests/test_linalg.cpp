#include <gtest/gtest.h>

#include "checks.hpp"
#include "generators.hpp"
#include "matexp/linalg.hpp"

using namespace matexp;
using namespace matexp::testing;

TEST(Linalg, IdentityTimesIdentity) { EXPECT_EQ(Mat2::identity() * Mat2::identity(), Mat2::identity()); }

TEST(Linalg, ApplyByHand) {
  const Vec2 r = Mat2{{3, 2}, {-8, -5}} * Vec2{1, -1};
  EXPECT_EQ(r, (Vec2{1, -3}));
}

TEST(Linalg, ScaleByZero) {
  Rng rng(1);
  EXPECT_EQ(0.0 * random_matrix<3>(rng), Mat3::zero());
}

TEST(Linalg, TraceDetOfRepeatedExample) {
  const Mat2 a{{3, 2}, {-8, -5}};
  EXPECT_EQ(trace(a), -2.0);
  EXPECT_EQ(det(a), 1.0);
}

TEST(Linalg, IdentityInvariants) {
  const Mat3 i = Mat3::identity();
  EXPECT_EQ(det(i), 1.0);
  EXPECT_EQ(trace(i), 3.0);
  EXPECT_EQ(minor_sum(i), 3.0);
}

TEST(Linalg, MinorSumMatchesLeibnizExpansion) {
  const Mat3 a{{2, -1, 2}, {5, -3, 3}, {-1, 0, -2}};
  const auto c = leibniz_char_poly(a);  // (x + 1)^3
  EXPECT_EQ(c[3], 1.0);
  EXPECT_EQ(c[2], 3.0);
  EXPECT_EQ(c[1], 3.0);
  EXPECT_EQ(c[0], 1.0);
  EXPECT_EQ(minor_sum(a), 3.0);
  EXPECT_EQ(trace(a), -3.0);
  EXPECT_EQ(det(a), -1.0);
}

TEST(Linalg, InvertIdentity) { EXPECT_EQ(invert(Mat2::identity()), Mat2::identity()); }

TEST(Linalg, InvertTransitionMatrix) {
  const Mat2 t{{2, 0}, {-4, 1}};
  const Mat2 ti = invert(t);
  EXPECT_EQ(ti, (Mat2{{0.5, 0}, {2, 1}}));
  EXPECT_EQ(t * ti, Mat2::identity());
}

TEST(Linalg, InvertZeroIsSingular) {
  try {
    invert(Mat2::zero());
    FAIL() << "expected SingularMatrix";
  } catch (const SingularMatrix& e) {
    EXPECT_EQ(e.det(), 0.0);
  }
  EXPECT_THROW(invert(Mat3::zero()), SingularMatrix);
}

TEST(Linalg, SingularityThresholdIsScaleAware) {
  // det = 1e-13 with unit entries is below 1e-12; the same shape scaled up is not.
  EXPECT_THROW(invert(Mat2{{1, 1}, {1, 1 + 1e-13}}), SingularMatrix);
  EXPECT_NO_THROW(invert(Mat2{{1e-3, 0}, {0, 1e-3}}));
}

TEST(Linalg, MaxAbs) {
  EXPECT_EQ(max_abs(Mat3::zero()), 0.0);
  EXPECT_EQ(max_abs(Mat2::identity()), 1.0);
  EXPECT_EQ(max_abs(Mat2{{4, 2}, {-8, -4}}), 8.0);
}

TEST(Linalg, RejectsNonFiniteEntries) {
  const double inf = std::numeric_limits<double>::infinity();
  EXPECT_THROW((Mat2{{1, inf}, {0, 1}}), NonFiniteEntry);
  EXPECT_THROW((Vec3{0, std::nan(""), 0}), NonFiniteEntry);
  EXPECT_THROW(Mat3::diagonal({1, 2, inf}), NonFiniteEntry);
  EXPECT_THROW((Mat2{{1, 2}}), InputError);
}

TEST(Linalg, FromColumnsAndColumn) {
  const Mat3 m = Mat3::from_columns({Vec3{1, 2, 3}, Vec3{4, 5, 6}, Vec3{7, 8, 9}});
  EXPECT_EQ(m(1, 0), 2.0);
  EXPECT_EQ(m(0, 2), 7.0);
  EXPECT_EQ(m.column(1), (Vec3{4, 5, 6}));
}

template <std::size_t N>
void associativity(std::uint64_t seed) {
  Rng rng(seed);
  for (int i = 0; i < 1000; ++i) {
    const auto a = random_matrix<N>(rng), b = random_matrix<N>(rng), c = random_matrix<N>(rng);
    const auto l = (a * b) * c, r = a * (b * c);
    // Elementwise, relative to the size of the products that feed each entry.
    const double ref = max_abs(a) * max_abs(b) * max_abs(c) * N * N;
    ASSERT_LE(max_abs(l - r), 1e-12 * ref);
  }
}

TEST(LinalgProperty, MultiplicationIsAssociative2) { associativity<2>(11); }
TEST(LinalgProperty, MultiplicationIsAssociative3) { associativity<3>(12); }

template <std::size_t N>
void det_multiplicative(std::uint64_t seed) {
  Rng rng(seed);
  for (int i = 0; i < 1000; ++i) {
    const auto a = random_matrix<N>(rng), b = random_matrix<N>(rng);
    const double lhs = det(a * b), rhs = det(a) * det(b);
    // Relative to the magnitude of the terms that cancel in det.
    const double ref = std::pow(max_abs(a) * max_abs(b) * N, static_cast<double>(N));
    ASSERT_LE(std::abs(lhs - rhs), 1e-10 * std::max(std::abs(rhs), 1e-3 * ref));
  }
}

TEST(LinalgProperty, DetIsMultiplicative2) { det_multiplicative<2>(21); }
TEST(LinalgProperty, DetIsMultiplicative3) { det_multiplicative<3>(22); }

template <std::size_t N>
void double_inverse(std::uint64_t seed) {
  Rng rng(seed);
  int tested = 0;
  while (tested < 1000) {
    const auto a = random_matrix<N>(rng);
    if (std::abs(det(a)) < 0.1) continue;
    ++tested;
    ASSERT_LE(rel_err(invert(invert(a)), a), 1e-10);
    const auto prod = a * invert(a);
    ASSERT_LE(max_abs(prod - Mat<N>::identity()), 1e-12 * max_abs(a) * max_abs(invert(a)) * N);
  }
}

TEST(LinalgProperty, InverseOfInverse2) { double_inverse<2>(31); }
TEST(LinalgProperty, InverseOfInverse3) { double_inverse<3>(32); }

template <std::size_t N>
void char_poly_coefficients(std::uint64_t seed) {
  Rng rng(seed);
  for (int i = 0; i < 100; ++i) {
    const auto a = random_int_matrix<N>(rng, -9, 9);
    const auto c = leibniz_char_poly(a);
    // Monic convention: x^N - tr x^{N-1} + ... + (-1)^N det.
    ASSERT_EQ(c[N], 1.0);
    ASSERT_EQ(c[N - 1], -trace(a));
    ASSERT_EQ(c[0], (N % 2 == 0 ? 1.0 : -1.0) * det(a));
    if constexpr (N == 3) {
      ASSERT_EQ(c[1], minor_sum(a));
    }
  }
}

TEST(LinalgProperty, CharPolyCoefficientsMatchBruteForce2) { char_poly_coefficients<2>(41); }
TEST(LinalgProperty, CharPolyCoefficientsMatchBruteForce3) { char_poly_coefficients<3>(42); }
