#include "structensor/services.h"

#include <random>

#include <gtest/gtest.h>

#include "oracles.h"
#include "structensor/completion.h"
#include "structensor/errors.h"
#include "structensor/flow.h"

namespace structensor {
namespace {

const PatternMatrix kSmall = PatternMatrix::FromRows({{1, 1, 1}, {1, 1, 1}, {1, 0, 0}});

Instance Small(IntVector h) { return Instance{std::move(h), {3, 1, 1}, kSmall, {}}; }

Instance Augmented(Instance in, const PurchaseProfile& p) {
  for (std::size_t j = 0; j < in.h.size(); ++j) in.h[j] += p.p[j];
  return in;
}

// Random adequacy instance whose rows can each be served by themselves.
Instance RandomServable(std::mt19937_64& rng, const oracle::RandomSpec& spec) {
  Instance in = oracle::RandomInstance(rng, spec);
  for (int n = 0; n < in.num_rows(); ++n) {
    in.r[n] = std::min(in.r[n], in.ceiling(n) * in.pattern.RowCount(n));
  }
  return in;
}

TEST(AdequacyTest, Examples) {
  EXPECT_TRUE(IsAdequate(Small({2, 2, 1})));
  EXPECT_FALSE(IsAdequate(Small({1, 2, 2})));
  EXPECT_EQ(AdequacyGap(Small({1, 2, 2})), 1);
  EXPECT_EQ(AdequacyGap(Small({2, 2, 1})), 0);
  const Instance rated{{3, 0}, {3}, PatternMatrix(1, 2, true), {2}};
  EXPECT_FALSE(IsAdequate(rated));
  EXPECT_EQ(AdequacyGap(rated), 1);
  const Instance empty_demand{{0, 5, 1}, {0, 0}, PatternMatrix(2, 3, true), {}};
  EXPECT_TRUE(IsAdequate(empty_demand));
  const Instance starving{{0, 0, 0, 0, 0}, {4}, PatternMatrix(1, 5, true), {}};
  EXPECT_EQ(AdequacyGap(starving), 4);
}

TEST(AdequacyTest, SlackSupplyStillAdequate) {
  EXPECT_TRUE(IsAdequate(Small({5, 5, 5})));
}

TEST(CheckLoadsTest, RejectsUnservableRow) {
  const Instance in{{9, 9}, {3}, PatternMatrix::FromRows({{1, 0}}), {2}};
  EXPECT_THROW(CheckLoadsSatisfiable(in), InstanceUnsatisfiable);
  EXPECT_THROW(MinPurchaseColumnSweep(in), InstanceUnsatisfiable);
  EXPECT_THROW(MinPurchaseValleyFill(in), InstanceUnsatisfiable);
  const Instance fine{{0, 0}, {2}, PatternMatrix::FromRows({{1, 0}}), {2}};
  EXPECT_NO_THROW(CheckLoadsSatisfiable(fine));
}

TEST(PurchaseTest, SmallTilde) {
  const PurchaseProfile p1 = MinPurchaseColumnSweep(Small({1, 2, 2}));
  EXPECT_EQ(p1.p, (IntVector{1, 0, 0}));
  EXPECT_TRUE(IsAdequate(Augmented(Small({1, 2, 2}), p1)));
  const PurchaseProfile p2 = MinPurchaseValleyFill(Small({1, 2, 2}));
  EXPECT_EQ(p2.total(), 1);
  EXPECT_TRUE(IsAdequate(Augmented(Small({1, 2, 2}), p2)));
}

TEST(PurchaseTest, AdequateGivesZero) {
  EXPECT_EQ(MinPurchaseColumnSweep(Small({2, 2, 1})).p, (IntVector{0, 0, 0}));
  EXPECT_EQ(MinPurchaseValleyFill(Small({2, 2, 1})).p, (IntVector{0, 0, 0}));
}

TEST(PurchaseTest, CapacityKeepsPurchaseInUsefulBlock) {
  // Loads only in the second block: columns 1-2 have no rows.
  const std::vector<ServiceSpec> specs = {{2, 1, 2, 1}, {1, 1, 2, 1}};
  const std::vector<int> times = {0, 2, 4};
  const Instance in{{0, 0, 0, 0}, {2, 1}, PatternFromServices(specs, times), {}};
  const PurchaseProfile p1 = MinPurchaseColumnSweep(in);
  EXPECT_EQ(p1.p[0], 0);
  EXPECT_EQ(p1.p[1], 0);
  EXPECT_EQ(p1.total(), 3);
  const PurchaseProfile p2 = MinPurchaseValleyFill(in);
  EXPECT_EQ(p2.p[0], 0);
  EXPECT_EQ(p2.p[1], 0);
  EXPECT_EQ(p2.total(), 3);
}

TEST(PurchaseTest, ValleyFillShavesHighestColumnsFirst) {
  // One block of three equal columns, gap 2: level 1 adds 3, shave 1
  // from the last column.
  const Instance in{{0, 0, 0}, {1, 1}, PatternMatrix(2, 3, true), {}};
  EXPECT_EQ(MinPurchaseValleyFill(in).p, (IntVector{1, 1, 0}));
}

TEST(PurchaseTest, SeededTieBreakIsReproducible) {
  const Instance in{IntVector(6, 0), {1, 1, 1}, PatternMatrix(3, 6, true), {}};
  const PurchaseProfile a = MinPurchaseValleyFill(in, TieBreak{7});
  const PurchaseProfile b = MinPurchaseValleyFill(in, TieBreak{7});
  EXPECT_EQ(a.p, b.p);
  EXPECT_EQ(a.total(), 3);
}

TEST(PurchaseTest, RateConstrainedCeilingShiftsPurchase) {
  const Instance in{{3, 0}, {3}, PatternMatrix(1, 2, true), {2}};
  EXPECT_EQ(MinPurchaseColumnSweep(in).p, (IntVector{0, 1}));
  EXPECT_EQ(MinPurchaseValleyFill(in).total(), 1);
}

TEST(PurchaseTest, ServiceWindowExample) {
  const std::vector<ServiceSpec> specs = {{2, 1, 2, 1}};
  const std::vector<int> times = {0, 2, 4};
  const Instance in{{0, 0, 0, 0}, {2}, PatternFromServices(specs, times), {}};
  EXPECT_EQ(MinPurchaseColumnSweep(in).p, (IntVector{0, 0, 1, 1}));
}

TEST(PurchaseTest, RandomInstancesAreOptimal) {
  std::mt19937_64 rng(61);
  for (std::int64_t ceiling : {1, 3}) {
    oracle::RandomSpec spec;
    spec.max_ceiling = ceiling;
    spec.planted = 0.0;
    spec.equal_sums = 0.3;
    int inadequate = 0;
    for (int trial = 0; trial < 400; ++trial) {
      const Instance in = RandomServable(rng, spec);
      const std::int64_t gap = AdequacyGap(in);
      EXPECT_EQ(gap, oracle::Total(in.r) - MaxFlow(BuildNetwork(in)).value);
      if (gap > 0) ++inadequate;
      const PurchaseProfile p1 = MinPurchaseColumnSweep(in);
      const PurchaseProfile p2 = MinPurchaseValleyFill(in);
      const PurchaseProfile p3 = MinPurchaseValleyFill(in, TieBreak{trial + 1u});
      for (const PurchaseProfile* p : {&p1, &p2, &p3}) {
        EXPECT_EQ(p->total(), gap) << "trial " << trial;
        for (auto x : p->p) EXPECT_GE(x, 0);
        EXPECT_GE(oracle::TensorMin(Augmented(in, *p)), 0);
      }
    }
    EXPECT_GT(inadequate, 100);
  }
}

TEST(DecomposeTest, RatedSplit) {
  const std::vector<ServiceSpec> left = {{11, 1, 2, 3}};
  const std::vector<SubLoad> a = DecomposeLoads(left);
  ASSERT_EQ(a.size(), 2u);
  EXPECT_EQ(a[0].duration, 4);
  EXPECT_EQ(a[0].multiplicity, 2);
  EXPECT_EQ(a[1].duration, 3);
  EXPECT_EQ(a[1].multiplicity, 1);
  const std::vector<ServiceSpec> right = {{10, 1, 2, 3}};
  const std::vector<SubLoad> b = DecomposeLoads(right);
  ASSERT_EQ(b.size(), 2u);
  EXPECT_EQ(b[0].duration, 4);
  EXPECT_EQ(b[0].multiplicity, 1);
  EXPECT_EQ(b[1].duration, 3);
  EXPECT_EQ(b[1].multiplicity, 2);
}

TEST(DecomposeTest, UnitCeilingIsIdentity) {
  const std::vector<ServiceSpec> specs = {{5, 0, 1, 1}};
  const std::vector<SubLoad> s = DecomposeLoads(specs);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].duration, 5);
  EXPECT_EQ(s[0].multiplicity, 1);
}

TEST(DecomposeTest, DropsZeroDurations) {
  const std::vector<ServiceSpec> specs = {{2, 0, 1, 5}, {0, 0, 1, 3}};
  const std::vector<SubLoad> s = DecomposeLoads(specs);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].duration, 1);
  EXPECT_EQ(s[0].multiplicity, 2);
}

TEST(DecomposeTest, PositivePartIdentity) {
  for (std::int64_t r = 0; r <= 20; ++r) {
    for (std::int64_t rbar = 1; rbar <= 20; ++rbar) {
      const std::vector<ServiceSpec> specs = {{r, 0, 1, rbar}};
      const std::vector<SubLoad> subs = DecomposeLoads(specs);
      std::int64_t total = 0;
      for (const SubLoad& s : subs) total += s.duration * s.multiplicity;
      EXPECT_EQ(total, r);
      for (std::int64_t k = 0; k <= 20; ++k) {
        std::int64_t split = 0;
        for (const SubLoad& s : subs) split += s.multiplicity * PositivePart(s.duration - k);
        EXPECT_EQ(PositivePart(r - k * rbar), split) << r << " " << rbar << " " << k;
      }
    }
  }
}

TEST(DecomposeTest, InstanceAdequacyIsPreserved) {
  std::mt19937_64 rng(62);
  oracle::RandomSpec spec;
  spec.max_ceiling = 3;
  for (int trial = 0; trial < 400; ++trial) {
    const Instance in = oracle::RandomInstance(rng, spec);
    const DecomposedInstance unit = DecomposeInstance(in);
    EXPECT_FALSE(unit.instance.rate_constrained());
    for (std::size_t m = 0; m < unit.origin.size(); ++m) {
      for (int j = 0; j < in.num_cols(); ++j) {
        EXPECT_EQ(unit.instance.pattern(static_cast<int>(m), j), in.pattern(unit.origin[m], j));
      }
    }
    EXPECT_EQ(IsAdequate(in), IsAdequate(unit.instance));
    EXPECT_EQ(AdequacyGap(in), AdequacyGap(unit.instance));
  }
}

}  // namespace
}  // namespace structensor
