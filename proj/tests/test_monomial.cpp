#include <array>
#include <cmath>
#include <complex>
#include <numbers>

#include <gtest/gtest.h>

#include "envelope/casestudy.hpp"
#include "envelope/error.hpp"
#include "envelope/monomial.hpp"

using envelope::DyadicRoot;
using envelope::MonomialElem;
using envelope::SymScalar;

namespace {

using Cx = std::complex<double>;
using Mat = std::array<Cx, 4>;  // row-major

// Stand-ins for the free generators; any multiplicatively independent
// positive reals keep distinct monomials numerically apart at this size.
const double kGenerators[] = {1.7, 2.9, 0.43, 5.3};

Cx evaluate(const SymScalar& s) {
  Cx v = std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(s.root().numerator()) /
                             std::ldexp(1.0, static_cast<int>(s.root().log2_denominator())));
  for (std::size_t i = 0; i < s.arity(); ++i) v *= std::pow(kGenerators[i], static_cast<double>(s.exponents()[i]));
  return v;
}

Mat evaluate(const MonomialElem& x) {
  if (x.swap) return {Cx(0), evaluate(x.a), evaluate(x.b), Cx(0)};
  return {evaluate(x.a), Cx(0), Cx(0), evaluate(x.b)};
}

Mat mul(const Mat& x, const Mat& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
          x[2] * y[1] + x[3] * y[3]};
}

Mat inv(const Mat& x) {
  Cx det = x[0] * x[3] - x[1] * x[2];
  return {x[3] / det, -x[1] / det, -x[2] / det, x[0] / det};
}

bool near(const Mat& x, const Mat& y) {
  for (int i = 0; i < 4; ++i)
    if (std::abs(x[i] - y[i]) > 1e-9 * (1 + std::abs(y[i]))) return false;
  return true;
}

SymScalar t(std::size_t i) { return SymScalar::generator(i); }

}  // namespace

TEST(DyadicRootTest, ReducedForm) {
  EXPECT_EQ(DyadicRoot::make(2, 2), DyadicRoot::make(1, 1));
  EXPECT_EQ(DyadicRoot::make(4, 2), DyadicRoot());
  EXPECT_EQ(DyadicRoot::make(7, 2), DyadicRoot::make(3, 2));
  auto z = DyadicRoot::make(6, 4);
  EXPECT_EQ(z.numerator(), 3u);
  EXPECT_EQ(z.log2_denominator(), 3u);
  EXPECT_TRUE(DyadicRoot().is_one());
}

TEST(DyadicRootTest, GroupLaw) {
  for (std::uint32_t k = 0; k <= 10; ++k) {
    auto z = DyadicRoot::primitive(k);
    EXPECT_EQ(z.order_log2(), k);
    EXPECT_TRUE(z.pow(std::int64_t{1} << k).is_one());
    if (k > 0) {
      EXPECT_FALSE(z.pow(std::int64_t{1} << (k - 1)).is_one());
    }
    EXPECT_TRUE((z * z.inverse()).is_one());
    EXPECT_EQ(z.pow(-3), z.inverse().pow(3));
  }
  EXPECT_EQ(DyadicRoot::make(1, 3) * DyadicRoot::make(1, 2), DyadicRoot::make(3, 3));
  EXPECT_EQ(DyadicRoot::make(1, 1) * DyadicRoot::make(1, 1), DyadicRoot());
  EXPECT_EQ(DyadicRoot::primitive(DyadicRoot::kMaxLog2).order_log2(), DyadicRoot::kMaxLog2);
}

TEST(SymScalarTest, GroupLaw) {
  auto x = t(0) * t(1).pow(-2) * SymScalar::root_of_unity(DyadicRoot::primitive(3));
  EXPECT_TRUE((x * x.inverse()).is_one());
  EXPECT_EQ(x / x, SymScalar::one());
  EXPECT_FALSE(x.is_torsion());
  EXPECT_TRUE(SymScalar::root_of_unity(DyadicRoot::primitive(5)).is_torsion());
  EXPECT_EQ(x.pow(2).exponents(), (std::vector<std::int64_t>{2, -4, 0}));
  EXPECT_EQ(x.pow(2).root(), DyadicRoot::primitive(2));
}

TEST(SymScalarTest, ArityMismatch) {
  auto a = SymScalar::one(2), b = SymScalar::one(3);
  try {
    auto c = a * b;
    (void)c;
    FAIL();
  } catch (const envelope::Error& e) {
    EXPECT_EQ(e.code(), envelope::ErrorCode::ArityMismatch);
  }
  EXPECT_THROW(sym_mul(MonomialElem::identity(2), MonomialElem::identity(3)), envelope::Error);
}

TEST(MonomialElemTest, Examples) {
  auto w = MonomialElem::swap_matrix();
  EXPECT_TRUE(sym_mul(w, w).is_identity());
  auto x = MonomialElem::diag(t(0), t(1));
  auto y = MonomialElem::diag(t(2), SymScalar::root_of_unity(DyadicRoot::primitive(2)));
  EXPECT_TRUE(sym_commutator(x, y).is_identity());

  // [w, diag(t, 1)] = w diag(t^-1, 1) w diag(t, 1) = diag(1, t^-1) diag(t, 1).
  auto c = sym_commutator(w, MonomialElem::diag(t(0), SymScalar::one()));
  EXPECT_EQ(c, MonomialElem::diag(t(0), t(0).inverse()));
  EXPECT_TRUE(near(evaluate(c), mul(mul(inv(evaluate(w)), inv(evaluate(MonomialElem::diag(t(0), SymScalar::one())))),
                                    mul(evaluate(w), evaluate(MonomialElem::diag(t(0), SymScalar::one()))))));
}

TEST(MonomialElemTest, MatchesMatrixArithmetic) {
  envelope::ElementSampler sampler(11);
  for (int i = 0; i < 2000; ++i) {
    auto x = sampler.ambient(), y = sampler.ambient();
    ASSERT_TRUE(near(evaluate(sym_mul(x, y)), mul(evaluate(x), evaluate(y)))) << x.to_string() << " " << y.to_string();
    ASSERT_TRUE(near(evaluate(sym_inv(x)), inv(evaluate(x)))) << x.to_string();
    auto expected = mul(mul(inv(evaluate(x)), inv(evaluate(y))), mul(evaluate(x), evaluate(y)));
    ASSERT_TRUE(near(evaluate(sym_commutator(x, y)), expected)) << x.to_string() << " " << y.to_string();
    ASSERT_TRUE(sym_mul(x, sym_inv(x)).is_identity());
  }
}

TEST(MonomialElemTest, Associative) {
  envelope::ElementSampler sampler(5);
  for (int i = 0; i < 1000; ++i) {
    auto x = sampler.ambient(), y = sampler.ambient(), z = sampler.ambient();
    ASSERT_EQ(sym_mul(sym_mul(x, y), z), sym_mul(x, sym_mul(y, z)));
  }
}

TEST(Sampler, SeededStreamsRepeat) {
  envelope::ElementSampler a(99), b(99), c(100);
  bool differs = false;
  for (int i = 0; i < 50; ++i) {
    auto x = a.ambient();
    EXPECT_EQ(x, b.ambient());
    differs = differs || !(x == c.ambient());
  }
  EXPECT_TRUE(differs);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 1000; ++i) {
    auto v = envelope::uniform_int(rng, -3, 3);
    EXPECT_GE(v, -3);
    EXPECT_LE(v, 3);
  }
}
