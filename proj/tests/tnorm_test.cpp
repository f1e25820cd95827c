#include <gtest/gtest.h>

#include "ifns/tnorm.hpp"
#include "oracles.hpp"

using namespace ifns;

TEST(TriangularOp, IdentityExample) {
  EXPECT_DOUBLE_EQ(eval_op(TriangularOp(OpFamily::product), 1.0, 0.7), 0.7);
}

TEST(TriangularOp, LukasiewiczSumCaps) {
  EXPECT_DOUBLE_EQ(eval_op(TriangularOp(OpFamily::lukasiewicz_sum), 0.6, 0.7), oracle::luk_sum(0.6, 0.7));
  EXPECT_DOUBLE_EQ(eval_op(TriangularOp(OpFamily::lukasiewicz_sum), 0.6, 0.7), 1.0);
}

TEST(TriangularOp, MinimumIdempotentPoint) {
  EXPECT_DOUBLE_EQ(eval_op(TriangularOp(OpFamily::minimum), 0.3, 0.3), 0.3);
}

TEST(TriangularOp, MatchesOracleOnGrid) {
  const TriangularOp prod(OpFamily::product), mn(OpFamily::minimum), mx(OpFamily::maximum),
      ls(OpFamily::lukasiewicz_sum), lp(OpFamily::lukasiewicz_product);
  for (int i = 0; i <= 20; ++i) {
    for (int j = 0; j <= 20; ++j) {
      const double a = i / 20.0, b = j / 20.0;
      EXPECT_DOUBLE_EQ(eval_op(prod, a, b), oracle::product(a, b));
      EXPECT_DOUBLE_EQ(eval_op(mn, a, b), oracle::minimum(a, b));
      EXPECT_DOUBLE_EQ(eval_op(mx, a, b), oracle::maximum(a, b));
      EXPECT_DOUBLE_EQ(eval_op(ls, a, b), oracle::luk_sum(a, b));
      EXPECT_DOUBLE_EQ(eval_op(lp, a, b), oracle::luk_product(a, b));
    }
  }
}

TEST(TriangularOp, RejectsOutOfRange) {
  const TriangularOp op(OpFamily::product);
  EXPECT_THROW(eval_op(op, 1.5, 0.2), DomainError);
  EXPECT_THROW(eval_op(op, 0.2, -0.1), DomainError);
  EXPECT_THROW(eval_op(op, std::nan(""), 0.2), DomainError);
}

TEST(TriangularOp, NamesAndKinds) {
  EXPECT_EQ(TriangularOp::from_name("product").kind(), OpKind::tnorm);
  EXPECT_EQ(TriangularOp::from_name("min").family(), OpFamily::minimum);
  EXPECT_EQ(TriangularOp::from_name("max").kind(), OpKind::tconorm);
  EXPECT_EQ(TriangularOp::from_name("lukasiewicz_sum").kind(), OpKind::tconorm);
  EXPECT_EQ(TriangularOp::from_name("lukasiewicz_product").kind(), OpKind::tnorm);
  EXPECT_THROW(TriangularOp::from_name("hamacher"), InputError);
  EXPECT_EQ(TriangularOp(OpFamily::maximum).identity(), 0.0);
  EXPECT_EQ(TriangularOp(OpFamily::product).identity(), 1.0);
}

TEST(OpAxioms, ProductPasses) {
  const auto r = check_op_axioms(TriangularOp(OpFamily::product), 1000, 42);
  EXPECT_TRUE(r.passed());
  for (const auto& c : r.checks) EXPECT_EQ(c.status, CheckStatus::pass) << c.name;
}

TEST(OpAxioms, MinimumPasses) {
  EXPECT_TRUE(check_op_axioms(TriangularOp(OpFamily::minimum), 1000, 42).passed());
}

TEST(OpAxioms, EveryFamilyPasses) {
  for (auto f : {OpFamily::maximum, OpFamily::lukasiewicz_sum, OpFamily::lukasiewicz_product}) {
    EXPECT_TRUE(check_op_axioms(TriangularOp(f), 500, 7).passed());
  }
}

TEST(OpAxioms, BrokenOpFailsRangeOnly) {
  const RawOp broken = [](double a, double b) { return a + b; };
  const auto r = check_op_axioms(OpKind::tconorm, broken, 1000, 42);
  EXPECT_FALSE(r.passed());
  ASSERT_NE(r.find("monotonicity"), nullptr);
  EXPECT_EQ(r.find("monotonicity")->status, CheckStatus::pass);
  const auto* range = r.find("range");
  ASSERT_NE(range, nullptr);
  EXPECT_EQ(range->status, CheckStatus::fail);
  ASSERT_EQ(range->witness.size(), 2u);
  EXPECT_GT(range->witness[0] + range->witness[1], 1.0);
  EXPECT_GE(range->worst_deviation, 0.6 - 1e-12);
}

TEST(OpAxioms, NonCommutativeOpIsCaught) {
  const RawOp skew = [](double a, double b) { return a * b * b; };
  const auto r = check_op_axioms(OpKind::tnorm, skew, 500, 3);
  EXPECT_EQ(r.find("commutativity")->status, CheckStatus::fail);
}

TEST(Idempotency, MinimumAndMaximumPass) {
  const auto mn = check_idempotency(TriangularOp(OpFamily::minimum), 101);
  EXPECT_TRUE(mn.passed());
  EXPECT_EQ(mn.checks.front().worst_deviation, 0.0);
  EXPECT_TRUE(check_idempotency(TriangularOp(OpFamily::maximum), 101).passed());
}

TEST(Idempotency, ProductFailsAtHalf) {
  const auto r = check_idempotency(TriangularOp(OpFamily::product), 101);
  EXPECT_FALSE(r.passed());
  const auto& c = r.checks.front();
  // max of a - a^2 on [0,1]
  EXPECT_NEAR(c.worst_deviation, 0.25, 1e-15);
  ASSERT_FALSE(c.witness.empty());
  EXPECT_NEAR(c.witness[0], 0.5, 1e-15);
}

TEST(TriangularOp, StandardBounds) {
  for (auto f : {OpFamily::product, OpFamily::minimum, OpFamily::lukasiewicz_product}) {
    const TriangularOp op(f);
    for (int i = 0; i <= 50; ++i) {
      for (int j = 0; j <= 50; ++j) EXPECT_LE(op.apply(i / 50.0, j / 50.0), std::min(i / 50.0, j / 50.0) + 1e-15);
    }
  }
  for (auto f : {OpFamily::maximum, OpFamily::lukasiewicz_sum}) {
    const TriangularOp op(f);
    for (int i = 0; i <= 50; ++i) {
      for (int j = 0; j <= 50; ++j) EXPECT_GE(op.apply(i / 50.0, j / 50.0), std::max(i / 50.0, j / 50.0) - 1e-15);
    }
  }
}
