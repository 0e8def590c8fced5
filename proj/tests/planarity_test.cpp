#include <random>
#include <set>

#include <gtest/gtest.h>

#include "planarq/linearized.hpp"
#include "planarq/planarity.hpp"

namespace planarq::planar {
namespace {

using Pair = std::pair<std::uint32_t, std::uint32_t>;

// Naive oracle: set-based difference check with generic field arithmetic.
bool naive_planar(const FieldTower& t, GfElement A, GfElement B) {
  const auto f = f_poly(t, A, B);
  for (std::uint64_t a = 1; a < t.order_top(); ++a) {
    std::set<std::uint64_t> seen;
    const auto av = t.fq3_element(a);
    for (std::uint64_t x = 0; x < t.order_top(); ++x) {
      const auto xv = t.fq3_element(x);
      if (!seen.insert((f(xv + av) - f(xv)).code()).second) return false;
    }
  }
  return true;
}

std::set<Pair> planar_pairs(const ScanReport& r) {
  std::set<Pair> out;
  for (const auto& p : r.pairs) {
    const auto v = p.det ? p.det : (p.brute ? p.brute : p.theorem);
    if (*v) out.emplace(p.A, p.B);
  }
  return out;
}

TEST(SparsePoly, ReducesExponentsAndDropsZeros) {
  auto k = gf::GaloisField::create(3, 2);
  SparsePoly<gf::GaloisField> f(*k);
  f.add_term(9, k->one());   // x^9 = x^1 on F_9
  f.add_term(1, k->one());
  f.add_term(17, k->from_int(1));  // (17 - 1) mod 8 + 1 = 1
  EXPECT_EQ(f.terms().size(), 0u);  // 3x = 0
  f.add_term(0, k->one()).add_term(8, k->one());
  EXPECT_EQ(f.terms().size(), 2u);
  EXPECT_EQ(f(k->zero()), k->one());
  EXPECT_EQ(SparsePoly<gf::GaloisField>::reduce_exponent(90, 243), 90u);
  EXPECT_EQ(SparsePoly<gf::GaloisField>::reduce_exponent(243, 243), 1u);
  EXPECT_EQ(SparsePoly<gf::GaloisField>::reduce_exponent(242, 243), 242u);
}

TEST(SparsePoly, ReductionPreservesValues) {
  auto k = gf::GaloisField::create(5, 1);
  SparsePoly<gf::GaloisField> f(*k);
  f.add_term(1000003, k->from_int(2));
  for (std::uint32_t x = 0; x < 5; ++x) EXPECT_EQ(f(k->element(x)), k->from_int(2) * k->element(x).pow(1000003));
}

TEST(FPoly, Shape) {
  auto t = FieldTower::build(5, 1);
  const auto f00 = f_poly(t, t.fq_element(0), t.fq_element(0));
  ASSERT_EQ(f00.terms().size(), 1u);
  EXPECT_EQ(f00.terms().begin()->first, 26u);
  const auto f01 = f_poly(t, t.fq_element(0), t.fq_element(1));
  ASSERT_EQ(f01.terms().size(), 2u);
  EXPECT_TRUE(f01.terms().count(2) && f01.terms().count(26));
}

TEST(FPoly, DifferenceCoefficients) {
  std::mt19937_64 rng(8);
  auto t = FieldTower::build(7, 1);
  for (int i = 0; i < 100; ++i) {
    const auto A = t.fq_element(rng() % 7), B = t.fq_element(rng() % 7);
    const auto C = t.fq3_element(rng() % t.order_top()), x = t.fq3_element(rng() % t.order_top());
    const auto f = f_poly(t, A, B);
    const auto L = lin::difference_triple(t, A, B, C);
    const auto two = t.fq3().from_int(2);
    EXPECT_EQ(L.c0, C.frobenius(2) + t.embed(A) * C.frobenius(1) + two * t.embed(B) * C);
    EXPECT_EQ(L.c1, t.embed(A) * C);
    EXPECT_EQ(L.c2, C);
    EXPECT_EQ(f(x + C) - f(x) - f(C), L(x));
  }
}

TEST(FTable, MatchesGenericEvaluation) {
  for (auto [p, m] : {std::pair{3u, 1u}, std::pair{5u, 1u}, std::pair{3u, 2u}}) {
    auto t = FieldTower::build(p, m);
    const auto A = t.fq_element(1), B = t.fq_element(t.q() - 1);
    EXPECT_EQ(f_table(t, A, B), value_table(f_poly(t, A, B)));
  }
}

TEST(DigitAdder, MatchesFieldAddition) {
  auto t = FieldTower::build(3, 2);
  const DigitAdder adder(3, 6);
  for (std::uint64_t a = 0; a < 729; a += 7) {
    for (std::uint64_t b = 0; b < 729; ++b) {
      const auto x = t.fq3_element(a), y = t.fq3_element(b);
      ASSERT_EQ(adder.add(a, b), (x + y).code());
      ASSERT_EQ(adder.sub(a, b), (x - y).code());
    }
  }
  // 3^15 exceeds the split-table bound and uses the per-digit path
  const DigitAdder wide(3, 15);
  EXPECT_EQ(wide.add(2, 1), 0u);
  EXPECT_EQ(wide.sub(0, 1), 2u);
}

TEST(BrutePlanar, Examples) {
  auto f27 = gf::GaloisField::create(3, 3);
  SparsePoly<gf::GaloisField> sq(*f27), cube(*f27);
  sq.add_term(2, f27->one());
  cube.add_term(3, f27->one());
  EXPECT_TRUE(brute_is_planar(sq, gf::SizeLimits{}));
  EXPECT_FALSE(brute_is_planar(cube, gf::SizeLimits{}));
  EXPECT_THROW(brute_is_planar(sq, gf::SizeLimits{20}), SizeLimit);

  auto t = FieldTower::build(5, 1);
  EXPECT_TRUE(brute_is_planar(f_poly(t, t.fq_element(2), t.fq_element(1)), gf::SizeLimits{}));
  EXPECT_TRUE(brute_is_planar_ab(t, t.fq_element(2), t.fq_element(1)));
}

TEST(BrutePlanar, AgreesWithNaiveOracle) {
  for (std::uint32_t p : {3u, 5u}) {
    auto t = FieldTower::build(p, 1);
    for (std::uint32_t a = 0; a < p; ++a) {
      for (std::uint32_t b = 0; b < p; ++b) {
        const auto A = t.fq_element(a), B = t.fq_element(b);
        ASSERT_EQ(brute_is_planar_ab(t, A, B), naive_planar(t, A, B)) << p << " " << a << " " << b;
      }
    }
  }
}

TEST(DetDecider, Examples) {
  auto t5 = FieldTower::build(5, 1);
  const auto e5 = [&](std::uint32_t v) { return t5.fq_element(v); };
  EXPECT_TRUE(is_planar_det(t5, e5(2), e5(1)).planar);
  const auto v = is_planar_det(t5, e5(1), e5(1), true);
  ASSERT_FALSE(v.planar);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_FALSE(v.witness->is_zero());
  const auto w = *v.witness;
  EXPECT_TRUE((w + w.frobenius(1) + w.frobenius(2)).is_zero());
  EXPECT_FALSE(is_planar_det(t5, e5(1), e5(1), false).witness.has_value());

  auto t3 = FieldTower::build(3, 1);
  const auto v3 = is_planar_det(t3, t3.fq_element(2), t3.fq_element(0), true);
  EXPECT_FALSE(v3.planar);
  ASSERT_TRUE(v3.witness.has_value());
  const auto L = lin::difference_triple(t3, t3.fq_element(2), t3.fq_element(0), *v3.witness);
  EXPECT_FALSE(lin::is_permutation(L));
}

TEST(DetDecider, WitnessIsFirstRoot) {
  auto t = FieldTower::build(7, 1);
  const auto A = t.fq_element(3), B = t.fq_element(3);
  const auto v = is_planar_det(t, A, B, true);
  ASSERT_TRUE(v.witness.has_value());
  for (std::uint64_t c = 1; c < v.witness->code(); ++c) {
    EXPECT_TRUE(lin::is_permutation(lin::difference_triple(t, A, B, t.fq3_element(c))));
  }
}

TEST(Classify, Examples) {
  auto t5 = FieldTower::build(5, 1);
  const auto e = [&](std::uint32_t v) { return t5.fq_element(v); };
  auto c = classify_pair(t5, e(0), e(0));
  EXPECT_TRUE(c.planar);
  EXPECT_EQ(c.branch, Branch::BZero);
  c = classify_pair(t5, e(2), e(1));
  EXPECT_TRUE(c.planar);
  EXPECT_EQ(c.branch, Branch::Cubic);
  c = classify_pair(t5, e(1), e(1), true);
  EXPECT_FALSE(c.planar);
  EXPECT_EQ(c.branch, Branch::None);
  EXPECT_TRUE(c.witness.has_value());
  EXPECT_FALSE(classify_pair(t5, e(4), e(0)).planar);
  // (1,4): A = B^2 = 16 = 1, B^3 = 64 = 4 != 1
  EXPECT_EQ(classify_pair(t5, e(1), e(4)).branch, Branch::Square);
}

TEST(Classify, NecessaryConditionAndFormula) {
  auto t = FieldTower::build(5, 1);
  EXPECT_TRUE(prop1_necessary(t.fq_element(0), t.fq_element(0)));
  EXPECT_FALSE(prop1_necessary(t.fq_element(1), t.fq_element(1)));
  EXPECT_EQ(count_formula(5), 9u);
  EXPECT_EQ(count_formula(7), 7u);
  EXPECT_EQ(count_formula(3), 3u);
  EXPECT_EQ(count_formula(9), 21u);
  EXPECT_EQ(count_formula(11), 27u);
  EXPECT_EQ(count_formula(13), 25u);
  EXPECT_EQ(count_formula(t), 9u);
}

TEST(Methods, Parse) {
  const auto m = Methods::parse("theorem, det");
  EXPECT_TRUE(m.theorem && m.det && !m.brute);
  EXPECT_EQ(m.to_string(), "theorem,det");
  EXPECT_THROW(Methods::parse("theorem,magic"), Error);
  EXPECT_THROW(Methods::parse(""), Error);
}

TEST(Scan, Q5AllMethods) {
  auto t = FieldTower::build(5, 1);
  const auto r = scan(t, {Methods::parse("theorem,det,brute"), 1, true});
  const std::set<Pair> expected{{0, 0}, {1, 0}, {2, 0}, {3, 0}, {1, 4}, {2, 1}, {3, 3}, {4, 2}, {4, 3}};
  EXPECT_EQ(planar_pairs(r), expected);
  EXPECT_EQ(r.planar_count, 9u);
  EXPECT_EQ(r.expected_count, 9u);
  EXPECT_EQ(*r.theorem_count, 9u);
  EXPECT_EQ(*r.brute_count, 9u);
  EXPECT_TRUE(r.disagreements.empty());
  EXPECT_TRUE(r.ok());
  for (const auto& p : r.pairs) {
    EXPECT_EQ(p.witness.has_value(), !*p.det);
    if (*p.det) EXPECT_TRUE(p.prop1);
  }
}

TEST(Scan, Q7TheoremDet) {
  auto t = FieldTower::build(7, 1);
  const auto r = scan(t, {Methods::parse("theorem,det"), 2, false});
  EXPECT_EQ(r.planar_count, 7u);
  EXPECT_TRUE(r.ok());
}

TEST(Scan, Q9TheoremDet) {
  auto t = FieldTower::build(3, 2);
  const auto r = scan(t, {Methods::parse("theorem,det"), 1, false});
  EXPECT_EQ(r.planar_count, 21u);
  EXPECT_EQ(r.expected_count, 21u);
  EXPECT_TRUE(r.ok());
}

TEST(Scan, Q3SubsetPolicy) {
  auto t = FieldTower::build(3, 1);
  const auto r = scan(t, {Methods::parse("theorem,brute"), 1, false});
  EXPECT_FALSE(r.count_asserted);
  std::set<Pair> theorem;
  for (const auto& p : r.pairs) {
    if (*p.theorem) theorem.emplace(p.A, p.B);
  }
  EXPECT_EQ(theorem, (std::set<Pair>{{0, 0}, {1, 0}, {1, 2}}));
  const auto brute = planar_pairs(r);
  for (const auto& pr : theorem) EXPECT_TRUE(brute.count(pr));
  // independent brute oracle at q = 3 finds exactly these pairs
  EXPECT_EQ(brute, (std::set<Pair>{{0, 0}, {1, 0}, {1, 2}}));
  EXPECT_TRUE(r.converse_gaps.empty());
  EXPECT_TRUE(r.ok());
}

TEST(Scan, DeterministicAcrossWorkers) {
  auto t = FieldTower::build(5, 1);
  const auto a = scan(t, {Methods::parse("det,brute"), 1, true});
  const auto b = scan(t, {Methods::parse("det,brute"), 3, true});
  ASSERT_EQ(a.pairs.size(), b.pairs.size());
  for (std::size_t i = 0; i < a.pairs.size(); ++i) {
    EXPECT_EQ(a.pairs[i].A, b.pairs[i].A);
    EXPECT_EQ(a.pairs[i].B, b.pairs[i].B);
    EXPECT_EQ(a.pairs[i].det, b.pairs[i].det);
    EXPECT_EQ(a.pairs[i].brute, b.pairs[i].brute);
    EXPECT_EQ(a.pairs[i].witness, b.pairs[i].witness);
  }
}

TEST(Scan, SizeLimitPerMethod) {
  auto t = FieldTower::build(5, 1, gf::SizeLimits{125});
  EXPECT_NO_THROW(scan(t, {Methods::parse("theorem"), 1, false}));
}

// Planar maps are 2-to-1 away from 0 and each difference map has one root.
TEST(PlanarProperties, NeverBijectiveAndUniqueDifferenceRoot) {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    auto t = FieldTower::build(p, 1);
    const DigitAdder adder(p, 3);
    for (std::uint32_t a = 0; a < p; ++a) {
      for (std::uint32_t b = 0; b < p; ++b) {
        const auto A = t.fq_element(a), B = t.fq_element(b);
        if (!classify_pair(t, A, B).planar) continue;
        const auto v = f_table(t, A, B);
        EXPECT_LT(std::set<std::uint32_t>(v.begin(), v.end()).size(), t.order_top());
        for (std::uint32_t s = 1; s < v.size(); s += 13) {
          int roots = 0;
          for (std::uint32_t x = 0; x < v.size(); ++x) roots += v[adder.add(x, s)] == v[x];
          EXPECT_EQ(roots, 1);
        }
      }
    }
  }
}

TEST(PlanarProperties, TheoremPlanarImpliesNecessaryCondition) {
  for (auto [p, m] : {std::pair{3u, 1u}, std::pair{5u, 1u}, std::pair{7u, 1u}, std::pair{3u, 2u},
                      std::pair{11u, 1u}, std::pair{13u, 1u}, std::pair{5u, 2u}}) {
    auto t = FieldTower::build(p, m);
    std::uint64_t planar = 0;
    for (std::uint32_t a = 0; a < t.q(); ++a) {
      for (std::uint32_t b = 0; b < t.q(); ++b) {
        const auto A = t.fq_element(a), B = t.fq_element(b);
        if (theorem_branch(A, B) == Branch::None) continue;
        ++planar;
        EXPECT_TRUE(prop1_necessary(A, B));
      }
    }
    if (t.q() > 3) {
      EXPECT_EQ(planar, count_formula(t)) << t.q();
    }
  }
}

}  // namespace
}  // namespace planarq::planar
