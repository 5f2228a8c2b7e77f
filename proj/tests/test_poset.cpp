#include "oracle.hpp"

#include "tetra/errors.hpp"
#include "tetra/tetra_poset.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <set>

using namespace tetra;

namespace {

std::vector<ColorSet> admissible() { return admissible_color_sets(); }

}  // namespace

TEST(ColorSet, ParseAndCanonicalOrder) {
  EXPECT_EQ(ColorSet::parse("gybo").letters(), "bgoy");
  EXPECT_EQ(ColorSet::parse("").letters(), "");
  EXPECT_EQ(ColorSet::parse("syogbr").letters(), "rbgoys");
  EXPECT_THROW(ColorSet::parse("gx"), InvalidInput);
  EXPECT_THROW(ColorSet::parse("gg"), InvalidInput);
}

TEST(ColorSet, Admissibility) {
  EXPECT_TRUE(is_admissible(ColorSet{}));
  EXPECT_FALSE(is_admissible(ColorSet::parse("rb")));
  EXPECT_EQ(*admissibility_violation(ColorSet::parse("rb")), "{r,b} requires g");
  EXPECT_TRUE(is_admissible(ColorSet::parse("gybo")));
  EXPECT_FALSE(is_admissible(ColorSet::parse("sbr")));
}

TEST(ColorSet, AdmissibleSetsMatchIndependentRule) {
  std::set<std::string> expected;
  for (const auto& s : oracle::all_color_subsets())
    if (oracle::admissible(s)) expected.insert(ColorSet::parse(s).letters());
  std::set<std::string> got;
  for (const auto& s : admissible()) got.insert(s.letters());
  EXPECT_EQ(got, expected);
  EXPECT_EQ(got.size(), 40u);
}

TEST(TetraPoset, SmallCases) {
  auto t2 = TetraPoset::build(2);
  EXPECT_EQ(t2.size(), 1u);
  EXPECT_EQ(t2.edge_count(), 0u);

  auto t3 = TetraPoset::build(3);
  EXPECT_EQ(t3.size(), 4u);
  const VertexId origin = *t3.find({0, 0, 0});
  for (Color c : {Color::Red, Color::Green, Color::Yellow}) {
    ASSERT_EQ(t3.edges(c).size(), 1u);
    EXPECT_EQ(t3.edges(c)[0].low, origin);
  }
  for (Color c : {Color::Blue, Color::Orange, Color::Silver}) {
    ASSERT_EQ(t3.edges(c).size(), 1u);
    EXPECT_NE(t3.edges(c)[0].low, origin);
    EXPECT_NE(t3.edges(c)[0].high, origin);
  }

  EXPECT_EQ(TetraPoset::build(4).size(), 10u);
  EXPECT_EQ(TetraPoset::build(1).size(), 0u);
  EXPECT_THROW(TetraPoset::build(0), InvalidInput);
}

TEST(TetraPoset, VertexCountIsBinomial) {
  for (int n = 1; n <= 9; ++n)
    EXPECT_EQ(TetraPoset::build(n).size(), oracle::binom(n + 1, 3)) << n;
}

TEST(TetraPoset, EdgesFollowStepVectors) {
  const auto t = TetraPoset::build(6);
  for (Color c : kAllColors) {
    const Vertex d = color_step(c);
    for (const auto& e : t.edges(c)) EXPECT_EQ(t.vertex(e.low) + d, t.vertex(e.high));
  }
}

TEST(Subposet, RejectsNonAdmissible) {
  try {
    Subposet::of(4, ColorSet::parse("rb"));
    FAIL();
  } catch (const InvalidInput& e) {
    EXPECT_NE(std::string(e.what()).find("{r,b} requires g"), std::string::npos);
  }
}

TEST(Subposet, GreenComponentsAtThree) {
  const auto p = Subposet::of(3, ColorSet::parse("g"));
  auto comps = p.components();
  std::vector<std::size_t> sizes;
  for (const auto& c : comps) sizes.push_back(c.size());
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 1, 2}));
}

TEST(Subposet, TournamentPosetSplitsIntoChains) {
  for (int n = 2; n <= 6; ++n) {
    const auto p = Subposet::of(n, ColorSet::parse("brg"));
    std::vector<std::size_t> sizes;
    for (const auto& c : p.components()) sizes.push_back(c.size());
    std::sort(sizes.begin(), sizes.end());
    // P_k is the triangle c1 + c2 = k - 2 with binomial(k, 2) elements
    std::vector<std::size_t> expected;
    for (int k = 2; k <= n; ++k) expected.push_back(oracle::binom(k, 2));
    EXPECT_EQ(sizes, expected) << n;
  }
}

TEST(Subposet, SinglePointAtTwo) {
  for (const auto& s : admissible()) {
    const auto p = Subposet::of(2, s);
    EXPECT_EQ(p.size(), 1u);
    EXPECT_EQ(count_ideals(p), 2);
    EXPECT_EQ(rank_gf(p), (QPoly{1, 1}));
  }
}

TEST(Subposet, DualIsInvolution) {
  const auto p = Subposet::of(4, ColorSet::parse("bg"));
  EXPECT_TRUE(p.dual().is_dual());
  EXPECT_EQ(p.dual().dual(), p);
  EXPECT_EQ(p.dual().dual().relations(), p.relations());
}

TEST(Subposet, ClosureIsTransitiveAndMatchesCovers) {
  const auto p = Subposet::of(5, ColorSet::parse("gyob"));
  for (const auto& e : p.relations()) EXPECT_TRUE(p.less(e.low, e.high));
  for (VertexId u = 0; u < p.size(); ++u) {
    EXPECT_FALSE(p.less(u, u));
    for (VertexId v = 0; v < p.size(); ++v)
      for (VertexId w = 0; w < p.size(); ++w)
        if (p.less(u, v) && p.less(v, w)) EXPECT_TRUE(p.less(u, w));
  }
  std::vector<std::size_t> pos(p.size());
  for (std::size_t k = 0; k < p.linear_extension().size(); ++k) pos[p.linear_extension()[k]] = k;
  for (const auto& e : p.relations()) EXPECT_LT(pos[e.low], pos[e.high]);
}

// Explicit order isomorphism T_n^*({b,g}) -> T_n({r,g}):
// (c1, c2, c3) -> (c1, n-2-c1-c2-c3, c3).
TEST(Subposet, DualBlueGreenIsomorphicToRedGreen) {
  for (int n = 2; n <= 6; ++n) {
    const auto a = Subposet::of(n, ColorSet::parse("bg")).dual();
    const auto b = Subposet::of(n, ColorSet::parse("rg"));
    const auto& t = a.parent();
    auto phi = [&](VertexId v) {
      const Vertex x = t.vertex(v);
      return *t.find({x.c1, n - 2 - x.c1 - x.c2 - x.c3, x.c3});
    };
    std::set<VertexId> image;
    for (VertexId v = 0; v < t.size(); ++v) image.insert(phi(v));
    EXPECT_EQ(image.size(), t.size());
    for (VertexId u = 0; u < t.size(); ++u)
      for (VertexId v = 0; v < t.size(); ++v) EXPECT_EQ(a.less(u, v), b.less(phi(u), phi(v)));
    EXPECT_EQ(rank_gf(a), rank_gf(b));
  }
}

TEST(Counting, MatchesBruteForceUpToFour) {
  for (const auto& s : admissible()) {
    for (int n = 2; n <= 4; ++n) {
      const auto p = Subposet::of(n, s);
      const auto hist = oracle::ideal_size_histogram(n, s.letters());
      std::vector<BigInt> coeffs(hist.begin(), hist.end());
      EXPECT_EQ(rank_gf(p), QPoly(coeffs)) << s.letters() << " n=" << n;
      const auto dual_hist = oracle::ideal_size_histogram(n, s.letters(), true);
      EXPECT_EQ(rank_gf(p.dual()), QPoly(std::vector<BigInt>(dual_hist.begin(), dual_hist.end())))
          << s.letters() << " dual n=" << n;
    }
  }
}

TEST(Counting, MatchesBruteForceAtFive) {
  for (const char* s : {"", "r", "g", "s", "bg", "go", "boy", "rgy", "bgs", "bgoy", "rbgoys", "rbgys", "rbgoy", "bgoys"}) {
    EXPECT_EQ(count_ideals(Subposet::of(5, ColorSet::parse(s))), oracle::ideal_count(5, s)) << s;
  }
}

TEST(Counting, MethodsAgree) {
  for (const auto& s : admissible()) {
    for (int n = 1; n <= 5; ++n) {
      const auto p = Subposet::of(n, s);
      const QPoly frontier = rank_gf(p, CountMethod::FrontierDp);
      EXPECT_EQ(rank_gf(p, CountMethod::Enumerate), frontier) << s.letters() << n;
      if (s.contains(Color::Green)) EXPECT_EQ(rank_gf(p, CountMethod::ArrayDp), frontier) << s.letters() << n;
      EXPECT_EQ(count_ideals(p.dual()), count_ideals(p));
      EXPECT_EQ(rank_gf(p.dual()), rank_gf(p.dual(), CountMethod::FrontierDp)) << s.letters() << n;
    }
  }
}

TEST(Counting, KnownValues) {
  EXPECT_EQ(count_ideals(Subposet::of(4, ColorSet::parse("gybo"))), 42);
  EXPECT_EQ(count_ideals(Subposet::of(3, ColorSet::parse("brg"))), 8);
  EXPECT_EQ(count_ideals(Subposet::of(4, ColorSet::all())), 16);
  EXPECT_EQ(rank_gf(Subposet::of(3, ColorSet::parse("brg"))), QPoly({1, 1}) * QPoly({1, 1}) * QPoly({1, 0, 1}));
  EXPECT_EQ(count_ideals(Subposet::of(6, ColorSet::parse("rgy"))), 161422);
}

TEST(Counting, ComponentsMultiply) {
  for (const char* s : {"g", "brg", "y", "go"}) {
    const auto p = Subposet::of(4, ColorSet::parse(s));
    BigInt product = 1;
    for (const auto& comp : p.components()) {
      // ideals of one component: subsets closed downward inside it
      std::uint64_t c = 0;
      const std::size_t k = comp.size();
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << k); ++m) {
        bool ok = true;
        for (std::size_t i = 0; i < k && ok; ++i)
          for (std::size_t j = 0; j < k && ok; ++j)
            if ((m >> i & 1) && !(m >> j & 1) && p.less(comp[j], comp[i])) ok = false;
        c += ok;
      }
      product *= c;
    }
    EXPECT_EQ(count_ideals(p), product) << s;
  }
}

TEST(Counting, LargeCountsStayExact) {
  // 2^(n choose 2) for three-color sets, far past 64 bits
  EXPECT_EQ(count_ideals(Subposet::of(14, ColorSet::parse("brg"))), BigInt(1) << 91);
  EXPECT_EQ(count_ideals(Subposet::of(14, ColorSet::parse("bgos"))).str(),
            "9995541355448167482000");
}

TEST(Enumerate, IdealsAreDistinctAndDownClosed) {
  const auto p = Subposet::of(4, ColorSet::parse("gybo"));
  std::set<std::vector<bool>> seen;
  enumerate_ideals(p, [&](const OrderIdeal& i) {
    EXPECT_TRUE(is_ideal(p, i));
    seen.insert(i.members);
  });
  EXPECT_EQ(seen.size(), 42u);

  const auto single = Subposet::of(2, ColorSet{});
  std::vector<std::size_t> sizes;
  enumerate_ideals(single, [&](const OrderIdeal& i) { sizes.push_back(i.size()); });
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{0, 1}));

  std::size_t green = 0;
  enumerate_ideals(Subposet::of(3, ColorSet::parse("g")), [&](const OrderIdeal&) { ++green; });
  EXPECT_EQ(green, 12u);
}

TEST(Enumerate, BudgetRefusesUpFront) {
  Budget b;
  b.max_ideals = 100;
  std::size_t visits = 0;
  EXPECT_THROW(enumerate_ideals(Subposet::of(4, ColorSet::parse("g")), [&](const OrderIdeal&) { ++visits; }, b),
               BudgetExceeded);
  EXPECT_EQ(visits, 0u);
}

TEST(Enumerate, BudgetFromEnvironment) {
  ::setenv("TETRAPOSET_BUDGET", "17", 1);
  EXPECT_EQ(Budget::from_env().max_ideals, 17);
  ::unsetenv("TETRAPOSET_BUDGET");
  EXPECT_EQ(Budget::from_env().max_ideals, Budget{}.max_ideals);
}

TEST(IdealArray, ExtremesAndRoundTrip) {
  for (const auto& s : admissible()) {
    if (!s.contains(Color::Green)) continue;
    for (int n = 1; n <= 4; ++n) {
      const auto p = Subposet::of(n, s);
      OrderIdeal empty{std::vector<bool>(p.size(), false)};
      OrderIdeal full{std::vector<bool>(p.size(), true)};
      EXPECT_EQ(ideal_to_array(p, empty), StaircaseArray::minimal(n));
      EXPECT_EQ(ideal_to_array(p, full), StaircaseArray::maximal(n));
      std::set<StaircaseArray> images;
      enumerate_ideals(p, [&](const OrderIdeal& i) {
        const auto x = ideal_to_array(p, i);
        EXPECT_TRUE(validate(x, s)) << violation(x, s);
        EXPECT_EQ(weight(x), static_cast<long>(i.size()));
        EXPECT_EQ(array_to_ideal(p, x), i);
        images.insert(x);
      });
      EXPECT_EQ(BigInt(images.size()), count_ideals(p));
    }
  }
}

TEST(IdealArray, RejectsMismatchedArray) {
  const auto p = Subposet::of(4, ColorSet::parse("gybo"));
  const auto x = StaircaseArray::from_rows({{1, 1, 2, 4}, {2, 2, 4}, {3, 3}, {4}});
  EXPECT_THROW(array_to_ideal(p, x), ConstraintMismatch);
  EXPECT_THROW(ideal_to_array(Subposet::of(4, ColorSet::parse("y")), OrderIdeal{std::vector<bool>(10)}),
               InvalidInput);
}

TEST(Dot, Format) {
  const std::string d2 = to_dot(Subposet::of(2, ColorSet::all()));
  EXPECT_NE(d2.find("digraph"), std::string::npos);
  EXPECT_EQ(d2.find("->"), std::string::npos);

  const auto p = Subposet::of(4, ColorSet::all());
  const std::string d = to_dot(p);
  std::size_t nodes = 0, edges = 0, pos = 0;
  while ((pos = d.find("[label=", pos)) != std::string::npos) ++nodes, ++pos;
  pos = 0;
  while ((pos = d.find("->", pos)) != std::string::npos) ++edges, ++pos;
  EXPECT_EQ(nodes, 10u);
  EXPECT_EQ(edges, p.parent().edge_count());
  for (Color c : kAllColors)
    EXPECT_NE(d.find("[color=" + std::string(color_name(c)) + "]"), std::string::npos);
}
