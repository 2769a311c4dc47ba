#include <gtest/gtest.h>

#include "ccgolog/ccgolog.hpp"
#include "support.hpp"

using namespace ccgolog;
using ccgolog::testkit::Rng;

namespace {

Rational q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

Valuation one(const std::string& name, TFunction f) {
  Valuation v;
  v.continuous.emplace(name, std::move(f));
  return v;
}

TFunction robot_moving() { return TFunction::linear(q(0), q(50), TimePoint(0)); }

IntervalSet random_interval_set(Rng& rng) {
  std::vector<Interval> parts;
  int n = static_cast<int>(testkit::uniform(rng, 0, 4));
  for (int i = 0; i < n; ++i) {
    auto bound = [&]() {
      if (testkit::coin(rng, 15)) return Bound::infinite();
      return Bound::at(Rational(testkit::uniform(rng, -10, 10)), testkit::coin(rng));
    };
    parts.push_back(Interval{bound(), bound()});
  }
  return IntervalSet::from_intervals(std::move(parts));
}

Rational sample_point(Rng& rng) { return Rational(testkit::uniform(rng, -24, 24), 2); }

}  // namespace

TEST(IntervalSet, CanonicalFormMergesTouchingIntervals) {
  // [0,1) u [1,2] = [0,2]
  IntervalSet s = IntervalSet::from_intervals({Interval{Bound::at(q(0), true), Bound::at(q(1), false)},
                                               Interval{Bound::at(q(1), true), Bound::at(q(2), true)}});
  EXPECT_EQ(s, IntervalSet::of(Interval::closed(q(0), q(2))));
  // (0,1) u (1,2) stays split
  IntervalSet t = IntervalSet::from_intervals({Interval{Bound::at(q(0), false), Bound::at(q(1), false)},
                                               Interval{Bound::at(q(1), false), Bound::at(q(2), false)}});
  EXPECT_EQ(t.intervals().size(), 2u);
  EXPECT_FALSE(t.contains(q(1)));
  // empty pieces vanish
  EXPECT_TRUE(IntervalSet::from_intervals({Interval{Bound::at(q(1), false), Bound::at(q(1), true)}}).empty());
}

TEST(IntervalSet, MinimumAndInfimum) {
  EXPECT_EQ(*IntervalSet::from(q(3), true).minimum(), q(3));
  EXPECT_FALSE(IntervalSet::from(q(3), false).minimum());
  EXPECT_EQ(*IntervalSet::from(q(3), false).infimum(), q(3));
  EXPECT_FALSE(IntervalSet::empty_set().minimum());
  EXPECT_FALSE(IntervalSet::all().minimum());
}

TEST(IntervalSet, AlgebraLawsByMembership) {
  Rng rng(21);
  for (int i = 0; i < 1000; ++i) {
    IntervalSet a = random_interval_set(rng);
    IntervalSet b = random_interval_set(rng);
    IntervalSet c = random_interval_set(rng);
    ASSERT_EQ(a.unite(b), b.unite(a));
    ASSERT_EQ(a.intersect(b), b.intersect(a));
    ASSERT_EQ(a.unite(b).unite(c), a.unite(b.unite(c)));
    ASSERT_EQ(a.intersect(b).intersect(c), a.intersect(b.intersect(c)));
    ASSERT_EQ(a.complement().complement(), a);
    for (int k = 0; k < 40; ++k) {
      Rational t = sample_point(rng);
      ASSERT_EQ(a.unite(b).contains(t), a.contains(t) || b.contains(t));
      ASSERT_EQ(a.intersect(b).contains(t), a.contains(t) && b.contains(t));
      ASSERT_EQ(a.complement().contains(t), !a.contains(t));
    }
  }
}

TEST(IntervalSet, CanonicalFormIsUnique) {
  Rng rng(22);
  for (int i = 0; i < 1000; ++i) {
    IntervalSet a = random_interval_set(rng);
    const auto& parts = a.intervals();
    for (std::size_t k = 0; k < parts.size(); ++k) {
      ASSERT_FALSE(parts[k].empty());
      if (k > 0) ASSERT_FALSE(detail::joins(parts[k - 1].upper, parts[k].lower)) << to_string(a);
    }
    // Rebuilding from shuffled pieces gives the same set.
    std::vector<Interval> shuffled = parts;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    ASSERT_EQ(IntervalSet::from_intervals(shuffled), a);
  }
}

TEST(Holds, Examples) {
  EXPECT_TRUE(holds(TForm::atom("robotLoc", CompareOp::kEqual, q(1000)), one("robotLoc", robot_moving()), TimePoint(20)));
  EXPECT_TRUE(holds(TForm::atom("robotLoc", CompareOp::kGreaterEq, q(0)),
                    one("robotLoc", TFunction::constant(q(0))), TimePoint(0)));
  EXPECT_TRUE(holds(TForm::negate(TForm::atom("clock", CompareOp::kLess, q(8))),
                    one("clock", TFunction::linear(q(0), q(1), TimePoint(0))), TimePoint(8)));
}

TEST(Holds, UnknownFluentIsADomainError) {
  EXPECT_THROW(holds(TForm::atom("nope", CompareOp::kLess, q(1)), one("clock", TFunction::constant(q(0))), TimePoint(0)),
               DomainError);
}

TEST(SolveTForm, Examples) {
  Valuation moving = one("robotLoc", robot_moving());
  EXPECT_EQ(solve_tform(TForm::atom("robotLoc", CompareOp::kEqual, q(1000)), moving, TimePoint(0)),
            IntervalSet::point(q(20)));
  EXPECT_EQ(solve_tform(TForm::atom("robotLoc", CompareOp::kGreaterEq, q(0)), one("robotLoc", TFunction::constant(q(0))),
                        TimePoint(0)),
            IntervalSet::from(q(0), true));
  EXPECT_EQ(solve_tform(TForm::atom("robotLoc", CompareOp::kGreater, q(1000)), moving, TimePoint(0)),
            IntervalSet::from(q(20), false));
}

TEST(SolveTForm, ZeroRateEqualityIsARay) {
  Valuation still = one("f", TFunction::linear(q(3), q(0), TimePoint(7)));
  EXPECT_EQ(solve_tform(TForm::atom("f", CompareOp::kEqual, q(3)), still, TimePoint(1)), IntervalSet::from(q(1), true));
  EXPECT_TRUE(solve_tform(TForm::atom("f", CompareOp::kEqual, q(4)), still, TimePoint(1)).empty());
}

TEST(SolveTForm, PiecewiseSeamsAreMerged) {
  // Rises 0 -> 4 on [0,4], then flat: (>= f 2) holds on [2, inf) as one piece.
  Valuation v = one("f", TFunction::piecewise({{TimePoint(0), q(0)}, {TimePoint(4), q(4)}}, q(0)));
  EXPECT_EQ(solve_tform(TForm::atom("f", CompareOp::kGreaterEq, q(2)), v, TimePoint(0)), IntervalSet::from(q(2), true));
  EXPECT_EQ(solve_tform(TForm::atom("f", CompareOp::kEqual, q(4)), v, TimePoint(0)), IntervalSet::from(q(4), true));
}

TEST(SolveTForm, MembershipCoherence) {
  Rng rng(23);
  const std::vector<std::string> fluents = {"f", "g", "h"};
  for (int i = 0; i < 1000; ++i) {
    TForm phi = normalize_tform(testkit::random_tform(rng, fluents, 3));
    Valuation v = testkit::random_valuation(rng, fluents);
    TimePoint w = testkit::sample_time(rng);
    IntervalSet s = solve_tform(phi, v, w);
    for (int k = 0; k < 100; ++k) {
      TimePoint t = testkit::sample_time(rng);
      ASSERT_EQ(s.contains(t.value()), t >= w && holds(phi, v, t)) << to_string(phi) << " at " << t << " window " << w
                                                                   << " solved " << s;
    }
  }
}

TEST(Ltp, Examples) {
  Valuation moving = one("robotLoc", robot_moving());
  EXPECT_EQ(*ltp(TForm::atom("robotLoc", CompareOp::kEqual, q(1000)), moving, TimePoint(0)), TimePoint(20));
  EXPECT_EQ(*ltp(TForm::atom("clock", CompareOp::kEqual, q(8)), one("clock", TFunction::linear(q(0), q(1), TimePoint(0))),
                 TimePoint(0)),
            TimePoint(8));
  EXPECT_EQ(*ltp(TForm::atom("robotLoc", CompareOp::kGreaterEq, q(0)), one("robotLoc", TFunction::constant(q(0))),
                 TimePoint(0)),
            TimePoint(0));
  EXPECT_FALSE(ltp(TForm::atom("robotLoc", CompareOp::kGreater, q(1000)), moving, TimePoint(0)));
}

TEST(Ltp, AcceptsFormulasThatAreNotNormalized) {
  Valuation moving = one("robotLoc", robot_moving());
  // Leaving the open box (-inf, 500) happens exactly at 10.
  TForm left = TForm::negate(TForm::atom("robotLoc", CompareOp::kLess, q(500)));
  EXPECT_EQ(*ltp(left, moving, TimePoint(0)), TimePoint(10));
  EXPECT_EQ(*ltp(left, moving, TimePoint(15)), TimePoint(15));
}

TEST(Ltp, MinimalOnAGridAndDeterministic) {
  Rng rng(24);
  const std::vector<std::string> fluents = {"f", "g"};
  int found = 0;
  for (int i = 0; i < 300; ++i) {
    TForm phi = testkit::random_tform(rng, fluents, 3);
    Valuation v = testkit::random_valuation(rng, fluents);
    TimePoint start = testkit::sample_time(rng);
    auto t = ltp(phi, v, start);
    ASSERT_EQ(t, ltp(phi, v, start));
    if (!t) continue;
    ++found;
    ASSERT_TRUE(holds(phi, v, *t));
    Rational span = t->value() - start.value();
    for (int k = 0; k < 1000 && sgn(span) > 0; ++k) {
      TimePoint probe(start.value() + span * Rational(k, 1000));
      ASSERT_FALSE(holds(phi, v, probe)) << to_string(phi) << " holds at " << probe << " before ltp " << *t;
    }
  }
  EXPECT_GT(found, 50);
}
