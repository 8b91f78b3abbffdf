#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "realfill/factorizations.hpp"
#include "support.hpp"

using namespace realfill;

namespace {

const Mat2 kF(-39, 25, -25, 16);

TwistFactorization pair(long p1, long q1, long p2, long q2) {
  return TwistFactorization({PrimitiveClass(p1, q1), PrimitiveClass(p2, q2)});
}

TwistFactorization random_factorization(gen::Rng& rng, std::size_t length, long bound) {
  std::vector<PrimitiveClass> cycles;
  for (std::size_t i = 0; i < length; ++i) cycles.push_back(gen::primitive(rng, bound));
  return TwistFactorization(std::move(cycles));
}

bool contains(const std::vector<TwistFactorization>& list, const TwistFactorization& f) {
  return std::find(list.begin(), list.end(), f) != list.end();
}

// Brute-force solutions (alpha, beta), canonical sign, entries within bound.
std::set<std::pair<long, long>> brute_solutions(const BinaryQuadraticEquation& eq, long bound) {
  std::set<std::pair<long, long>> out;
  const long a = eq.coeff_aa.get_si(), b = eq.coeff_ab.get_si(), c = eq.coeff_bb.get_si();
  const long r = eq.rhs.get_si();
  for (long x = -bound; x <= bound; ++x)
    for (long y = -bound; y <= bound; ++y) {
      if (std::gcd(x, y) != 1) continue;
      if (a * x * x + b * x * y + c * y * y != r) continue;
      auto [p, q] = oracle::canonical(x, y);
      out.insert({static_cast<long>(p), static_cast<long>(q)});
    }
  return out;
}

}  // namespace

TEST(Factorization, TotalMonodromyExamples) {
  EXPECT_EQ(total_monodromy(pair(3, 5, 1, 0)), kF);
  EXPECT_EQ(total_monodromy(TwistFactorization()), Mat2::identity());
  EXPECT_EQ(total_monodromy(pair(5, 8, 0, 1)), kF);
  // Only this order: the reverse product differs.
  EXPECT_NE(total_monodromy(pair(0, 1, 5, 8)), kF);
  oracle::Small f = oracle::mul(oracle::twist(0, 1), oracle::twist(5, 8));
  EXPECT_EQ(oracle::to_mat(f), kF);
}

TEST(Factorization, ParseAndFormat) {
  EXPECT_EQ(TwistFactorization::parse("3,5/1,0"), pair(3, 5, 1, 0));
  EXPECT_EQ(TwistFactorization::parse("()").size(), 0u);
  EXPECT_EQ(pair(3, 5, 1, 0).str(), "3,5/1,0");
  EXPECT_EQ(TwistFactorization().str(), "()");
  EXPECT_THROW(TwistFactorization::parse("3,5/"), std::invalid_argument);
  EXPECT_THROW(TwistFactorization::parse("2,4/1,0"), std::invalid_argument);
}

TEST(HurwitzMove, Examples) {
  EXPECT_EQ(hurwitz_move(pair(3, 5, 1, 0), 1, MoveDirection::Left), pair(16, 25, 3, 5));
  EXPECT_EQ(oracle::to_mat(oracle::mul(oracle::inv(oracle::twist(3, 5)), oracle::Small{1, 0, 0, 1})),
            twist_matrix(PrimitiveClass(3, 5)).inverse());
  EXPECT_EQ(hurwitz_move(pair(1, 0, 1, 0), 1, MoveDirection::Left), pair(1, 0, 1, 0));
  TwistFactorization f = pair(3, 5, 1, 0);
  EXPECT_EQ(hurwitz_move(hurwitz_move(f, 1, MoveDirection::Left), 1, MoveDirection::Right), f);
  EXPECT_EQ(total_monodromy(pair(16, 25, 3, 5)), kF);
}

TEST(HurwitzMove, IndexOutOfRange) {
  EXPECT_THROW(hurwitz_move(pair(3, 5, 1, 0), 0, MoveDirection::Left), std::invalid_argument);
  EXPECT_THROW(hurwitz_move(pair(3, 5, 1, 0), 2, MoveDirection::Left), std::invalid_argument);
  EXPECT_THROW(hurwitz_move(TwistFactorization({PrimitiveClass(1, 0)}), 1, MoveDirection::Right),
               std::invalid_argument);
}

TEST(PairsEquivalent, Examples) {
  HurwitzVerdict within = pairs_equivalent(pair(3, 5, 1, 0), pair(16, 25, 3, 5));
  ASSERT_TRUE(within.equivalent);
  ASSERT_TRUE(within.witness);
  EXPECT_EQ(within.witness->moves, 1);
  EXPECT_EQ(within.witness->conjugator, Mat2::identity());

  HurwitzVerdict across = pairs_equivalent(pair(3, 5, 1, 0), pair(5, 8, 0, 1));
  EXPECT_FALSE(across.equivalent);
  EXPECT_FALSE(across.witness);

  HurwitzVerdict self = pairs_equivalent(pair(3, 5, 1, 0), pair(3, 5, 1, 0));
  ASSERT_TRUE(self.equivalent);
  EXPECT_EQ(self.witness->moves, 0);
  EXPECT_EQ(self.witness->conjugator, Mat2::identity());
}

TEST(PairsEquivalent, Preconditions) {
  EXPECT_THROW(pairs_equivalent(pair(3, 5, 1, 0), pair(1, 0, 0, 1)), std::invalid_argument);
  EXPECT_THROW(pairs_equivalent(TwistFactorization({PrimitiveClass(1, 0)}),
                                TwistFactorization({PrimitiveClass(1, 0)})),
               std::invalid_argument);
}

TEST(PairsEquivalent, WitnessTransformsExactly) {
  auto all = enumerate_two_twist_factorizations(kF, 200).factorizations;
  ASSERT_GE(all.size(), 8u);
  for (const auto& p : all) {
    for (const auto& q : all) {
      HurwitzVerdict v = pairs_equivalent(p, q);
      ASSERT_EQ(v.equivalent, v.witness.has_value());
      if (!v.equivalent) continue;
      const HurwitzWitness& w = *v.witness;
      ASSERT_EQ(w.conjugator.det(), Integer(1));
      TwistFactorization src = w.moves == 1 ? hurwitz_move(p, 1, MoveDirection::Left) : p;
      ASSERT_EQ(transform(w.conjugator, src), q) << p.str() << " -> " << q.str();
    }
  }
}

TEST(Diophantine, Examples) {
  BinaryQuadraticEquation f = two_twist_diophantine(kF);
  EXPECT_EQ(f, (BinaryQuadraticEquation{25, -55, 25, 25}));
  EXPECT_EQ(f.str(), "25*alpha^2 - 55*alpha*beta + 25*beta^2 = 25");
  EXPECT_EQ(two_twist_diophantine(Mat2::identity()), (BinaryQuadraticEquation{0, 0, 0, 0}));
  BinaryQuadraticEquation t = two_twist_diophantine(Mat2(1, 1, 0, 1));
  EXPECT_EQ(t, (BinaryQuadraticEquation{0, 0, 1, 0}));
  EXPECT_EQ(brute_solutions(t, 10), (std::set<std::pair<long, long>>{{1, 0}}));
}

TEST(Diophantine, EquationMatchesTraceCondition) {
  gen::Rng rng(41);
  for (int i = 0; i < 200; ++i) {
    Mat2 m = gen::sl2z(rng, 12);
    BinaryQuadraticEquation eq = two_twist_diophantine(m);
    for (int j = 0; j < 5; ++j) {
      PrimitiveClass w = gen::primitive(rng, 20);
      bool trace_two = (twist_matrix(w).inverse() * m).trace() == 2;
      ASSERT_EQ(eq.satisfied_by(w.p(), w.q()), trace_two);
    }
  }
}

TEST(Diophantine, SolverMatchesBruteForce) {
  BinaryQuadraticEquation f = two_twist_diophantine(kF);
  auto solutions = solve_two_twist_equation(f, 40);
  std::set<std::pair<long, long>> got;
  for (const auto& s : solutions) got.insert({s.p().get_si(), s.q().get_si()});
  EXPECT_EQ(got, brute_solutions(f, 40));
  for (auto [p, q] : {std::pair{1L, 0L}, {0L, 1L}, {3L, 5L}, {5L, 8L}, {16L, 25L}, {25L, 39L}}) {
    EXPECT_TRUE(got.count({p, q})) << p << "," << q;
  }

  gen::Rng rng(42);
  for (int i = 0; i < 100; ++i) {
    Mat2 m = gen::sl2z(rng, 10);
    if (m.height() > 200) continue;
    BinaryQuadraticEquation eq = two_twist_diophantine(m);
    if (eq.coeff_aa == 0 && eq.coeff_ab == 0 && eq.coeff_bb == 0) continue;
    std::set<std::pair<long, long>> mine;
    for (const auto& s : solve_two_twist_equation(eq, 15)) mine.insert({s.p().get_si(), s.q().get_si()});
    ASSERT_EQ(mine, brute_solutions(eq, 15)) << m.str();
  }
}

TEST(Commuting, FindsS) {
  auto candidates = commuting_hyperbolic_candidates(kF);
  const Mat2 s(-3, 5, -5, 8);
  EXPECT_TRUE(std::find(candidates.begin(), candidates.end(), s) != candidates.end());
  EXPECT_TRUE(std::find(candidates.begin(), candidates.end(), -s) != candidates.end());
  for (const auto& c : candidates) {
    EXPECT_EQ(c * kF, kF * c);
    EXPECT_EQ(c.det(), Integer(1));
    EXPECT_EQ(abs(c.trace()), Integer(5));
  }
  EXPECT_TRUE(commuting_hyperbolic_candidates(Mat2(1, 1, 0, 1)).empty());
}

TEST(Commuting, SmallestTraceByBruteForce) {
  // No commuting determinant-one matrix with 2 < |trace| < 5 and small entries.
  oracle::Small f = oracle::from_mat(kF);
  for (int a = -12; a <= 12; ++a)
    for (int b = -12; b <= 12; ++b)
      for (int c = -12; c <= 12; ++c)
        for (int d = -12; d <= 12; ++d) {
          oracle::Small k{a, b, c, d};
          if (oracle::det(k) != 1 || !(oracle::mul(k, f) == oracle::mul(f, k))) continue;
          int t = std::abs(a + d);
          EXPECT_TRUE(t == 2 || t >= 5);
        }
}

TEST(Enumeration, Examples) {
  auto f = enumerate_two_twist_factorizations(kF, 40);
  for (const auto& expected : {pair(3, 5, 1, 0), pair(5, 8, 0, 1), pair(16, 25, 3, 5), pair(25, 39, 5, 8)}) {
    EXPECT_TRUE(contains(f.factorizations, expected)) << expected.str();
  }
  EXPECT_TRUE(enumerate_two_twist_factorizations(Mat2::identity(), 10).factorizations.empty());
  auto t2 = enumerate_two_twist_factorizations(Mat2(1, 2, 0, 1), 10);
  EXPECT_EQ(t2.factorizations, std::vector<TwistFactorization>{pair(1, 0, 1, 0)});
}

TEST(Enumeration, MatchesBruteForce) {
  // Every ordered pair of classes within the bound whose product is the target.
  for (const Mat2& m : {kF, Mat2(1, 2, 0, 1), Mat2(2, 1, 1, 1) * Mat2(2, 1, 1, 1), Mat2(-1, 0, 0, -1) * Mat2(1, 4, 0, 1)}) {
    const long bound = 12;
    std::vector<TwistFactorization> brute;
    std::vector<oracle::Small> twists;
    std::vector<PrimitiveClass> classes;
    for (long p = -bound; p <= bound; ++p)
      for (long q = 0; q <= bound; ++q) {
        if (std::gcd(p, q) != 1 || (q == 0 && p < 0)) continue;
        classes.emplace_back(p, q);
        twists.push_back(oracle::twist(p, q));
      }
    oracle::Small target = oracle::from_mat(m);
    for (std::size_t i = 0; i < classes.size(); ++i)
      for (std::size_t j = 0; j < classes.size(); ++j)
        if (oracle::mul(twists[j], twists[i]) == target) brute.push_back(TwistFactorization({classes[i], classes[j]}));
    auto got = enumerate_two_twist_factorizations(m, bound).factorizations;
    ASSERT_EQ(got.size(), brute.size()) << m.str();
    for (const auto& f : brute) ASSERT_TRUE(contains(got, f)) << f.str();
  }
}

TEST(Enumeration, SortedByHeight) {
  auto f = enumerate_two_twist_factorizations(kF, 200).factorizations;
  for (std::size_t i = 1; i < f.size(); ++i) ASSERT_LE(f[i - 1].height(), f[i].height());
}

TEST(HurwitzClasses, ReferenceMonodromy) {
  HurwitzClasses c = hurwitz_classes_two(kF, 40);
  EXPECT_EQ(c.representatives, (std::vector<TwistFactorization>{pair(3, 5, 1, 0), pair(5, 8, 0, 1)}));
  EXPECT_TRUE(c.closure_ok);
  const Mat2 s(-3, 5, -5, 8);
  EXPECT_TRUE(std::find(c.commuting.begin(), c.commuting.end(), s) != c.commuting.end());
  EXPECT_TRUE(hurwitz_classes_two(Mat2::identity(), 10).representatives.empty());
}

TEST(HurwitzClasses, BoundStability) {
  for (std::int64_t bound : {40, 100, 200}) {
    HurwitzClasses c = hurwitz_classes_two(kF, bound);
    EXPECT_EQ(c.representatives.size(), 2u) << bound;
    EXPECT_TRUE(c.closure_ok);
  }
}

TEST(Obstruction, Examples) {
  RealObstructionReport a = factorization_real_obstruction(pair(3, 5, 1, 0));
  EXPECT_EQ(a.invariant.status, CaseStatus::Obstructed);
  EXPECT_EQ(a.invariant.value, Integer(5));
  EXPECT_EQ(a.swapped.status, CaseStatus::Obstructed);
  EXPECT_EQ(a.swapped.value, Integer(10));
  EXPECT_EQ(a.verdict, ObstructionVerdict::NotReal);
  // u + v = (4,5), u - v = (2,5): |4*5 - 5*2| = 10.
  EXPECT_EQ(intersection(PrimitiveClass(4, 5), PrimitiveClass(2, 5)), Integer(10));

  RealObstructionReport b = factorization_real_obstruction(pair(5, 8, 0, 1));
  EXPECT_EQ(b.verdict, ObstructionVerdict::NotReal);
  EXPECT_EQ(b.invariant.value, Integer(5));
  EXPECT_EQ(b.swapped.value, Integer(10));
  EXPECT_EQ(intersection(PrimitiveClass(5, 9), PrimitiveClass(5, 7)), Integer(10));

  RealObstructionReport c = factorization_real_obstruction(pair(1, 0, 0, 1));
  EXPECT_EQ(c.invariant.status, CaseStatus::Open);
  EXPECT_EQ(c.verdict, ObstructionVerdict::Inconclusive);
  ASSERT_TRUE(c.preserving_structures);
  EXPECT_EQ(*c.preserving_structures, 2u);
}

TEST(Obstruction, DegenerateAndPreconditions) {
  RealObstructionReport d = factorization_real_obstruction(pair(1, 0, 1, 0));
  EXPECT_EQ(d.swapped.status, CaseStatus::Degenerate);
  EXPECT_EQ(d.invariant.status, CaseStatus::Open);
  EXPECT_EQ(d.verdict, ObstructionVerdict::Inconclusive);
  EXPECT_THROW(factorization_real_obstruction(TwistFactorization({PrimitiveClass(1, 0)})),
               std::invalid_argument);
}

// --- properties -----------------------------------------------------------

TEST(FactorizationProperty, MovesPreserveProduct) {
  gen::Rng rng(4001);
  for (int i = 0; i < 300; ++i) {
    std::size_t n = static_cast<std::size_t>(gen::uniform(rng, 2, 6));
    TwistFactorization f = random_factorization(rng, n, 15);
    std::size_t at = static_cast<std::size_t>(gen::uniform(rng, 1, static_cast<long>(n) - 1));
    for (MoveDirection d : {MoveDirection::Left, MoveDirection::Right}) {
      TwistFactorization g = hurwitz_move(f, at, d);
      ASSERT_EQ(g.product(), f.product());
      // product recomputed independently
      oracle::Small prod = oracle::kIdentity;
      for (const auto& w : g.cycles()) prod = oracle::mul(oracle::twist(oracle::small(w.p()), oracle::small(w.q())), prod);
      ASSERT_EQ(oracle::to_mat(prod), f.product());
    }
    ASSERT_EQ(hurwitz_move(hurwitz_move(f, at, MoveDirection::Left), at, MoveDirection::Right), f);
  }
}

TEST(FactorizationProperty, TwoLeftMovesAreConjugation) {
  gen::Rng rng(4002);
  for (int i = 0; i < 300; ++i) {
    TwistFactorization f = random_factorization(rng, 2, 25);
    TwistFactorization twice = hurwitz_move(hurwitz_move(f, 1, MoveDirection::Left), 1, MoveDirection::Left);
    ASSERT_EQ(twice, transform(f.product().inverse(), f));
  }
}

TEST(FactorizationProperty, IntersectionInvariantUnderMovesAndConjugation) {
  gen::Rng rng(4003);
  for (int i = 0; i < 300; ++i) {
    TwistFactorization f = random_factorization(rng, 2, 25);
    Integer n = intersection(f.cycles()[0], f.cycles()[1]);
    TwistFactorization g = hurwitz_move(f, 1, gen::uniform(rng, 0, 1) ? MoveDirection::Left : MoveDirection::Right);
    ASSERT_EQ(intersection(g.cycles()[0], g.cycles()[1]), n);
    Mat2 k = gen::sl2z(rng, 10);
    TwistFactorization h = transform(k, g);
    ASSERT_EQ(intersection(h.cycles()[0], h.cycles()[1]), n);
    ASSERT_TRUE(pairs_equivalent(f, g).equivalent);
  }
}

TEST(FactorizationProperty, EnumeratedFactorizationsAreSound) {
  gen::Rng rng(4004);
  int checked = 0;
  for (int i = 0; i < 120; ++i) {
    TwistFactorization f = random_factorization(rng, 2, 8);
    auto list = enumerate_two_twist_factorizations(f.product(), 30).factorizations;
    if (f.height() <= 30) {
      ASSERT_TRUE(contains(list, f)) << f.str();
    }
    BinaryQuadraticEquation eq = two_twist_diophantine(f.product());
    for (const auto& g : list) {
      ++checked;
      ASSERT_EQ(g.product(), f.product());
      ASSERT_TRUE(eq.satisfied_by(g.cycles()[1].p(), g.cycles()[1].q()));
      auto cof = recognize_positive_twist(twist_matrix(g.cycles()[1]).inverse() * f.product());
      ASSERT_TRUE(cof);
      ASSERT_EQ(cof->power, Integer(1));
      ASSERT_EQ(cof->curve, g.cycles()[0]);
    }
  }
  EXPECT_GE(checked, 100);
}

TEST(FactorizationProperty, ObstructionIsEquivalenceInvariant) {
  auto list = enumerate_two_twist_factorizations(kF, 200).factorizations;
  int pairs = 0;
  for (const auto& p : list)
    for (const auto& q : list) {
      ++pairs;
      if (pairs_equivalent(p, q).equivalent) {
        ASSERT_EQ(factorization_real_obstruction(p).verdict, factorization_real_obstruction(q).verdict);
      }
    }
  EXPECT_GE(pairs, 100);
}
