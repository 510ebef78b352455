#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "semitrace/error.hpp"
#include "semitrace/semigroup.hpp"

using namespace semitrace;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no semitrace::Error thrown";
  return ErrorKind::AssertionFailure;
}

}  // namespace

TEST(Semigroup, SevenEightNineEleven) {
  const NumericalSemigroup s{7, 8, 9, 11};
  EXPECT_EQ(s.frobenius(), 13);
  EXPECT_EQ(s.conductor(), 14);
  EXPECT_EQ(s.elements_below(14), (std::vector<int>{0, 7, 8, 9, 11}));
  EXPECT_EQ(s.colength_of_conductor(), 5);
  EXPECT_EQ(s.multiplicity(), 7);
  EXPECT_EQ(s.embedding_dimension(), 4);
  EXPECT_EQ(s.to_string(), "<7,8,9,11>");
}

TEST(Semigroup, FiveSixSevenAgainstOracle) {
  const NumericalSemigroup s{5, 6, 7};
  EXPECT_EQ(s.frobenius(), oracle::frobenius({5, 6, 7}, 40));
  EXPECT_EQ(s.frobenius(), 9);
  EXPECT_EQ(s.colength_of_conductor(), 4);
  EXPECT_EQ(s.gaps(), (std::vector<int>{1, 2, 3, 4, 8, 9}));
  EXPECT_EQ(s.genus(), 6);
}

TEST(Semigroup, Regular) {
  const NumericalSemigroup n{1};
  EXPECT_TRUE(n.is_regular());
  EXPECT_EQ(n.frobenius(), -1);
  EXPECT_EQ(n.genus(), 0);
  EXPECT_EQ(n.minimal_generators(), std::vector<int>{1});
  const NumericalSemigroup redundant{1, 5, 9};
  EXPECT_EQ(redundant, n);
}

TEST(Semigroup, RedundantGeneratorsDropped) {
  const NumericalSemigroup s{6, 4, 9, 13, 4};
  EXPECT_EQ(s.generators(), (std::vector<int>{4, 6, 9, 13}));
  EXPECT_EQ(s.minimal_generators(), (std::vector<int>{4, 6, 9}));
}

TEST(Semigroup, Errors) {
  EXPECT_EQ(kind_of([] { NumericalSemigroup({4, 6}); }), ErrorKind::GcdNotOne);
  EXPECT_EQ(kind_of([] { NumericalSemigroup(std::span<const int>{}); }),
            ErrorKind::EmptyGenerators);
  EXPECT_EQ(kind_of([] { NumericalSemigroup({0, 3}); }), ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of([] { NumericalSemigroup({3, 7}).without_generator(6); }),
            ErrorKind::InvalidInput);
}

TEST(Semigroup, ParseExponentList) {
  EXPECT_EQ(parse_exponent_list("7, 8,9 ,11"), (std::vector<int>{7, 8, 9, 11}));
  EXPECT_EQ(parse_exponent_list("-1,0"), (std::vector<int>{-1, 0}));
  EXPECT_EQ(kind_of([] { parse_exponent_list("7,,8"); }), ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of([] { parse_exponent_list("7,x"); }), ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of([] { parse_exponent_list(""); }), ErrorKind::EmptyGenerators);
}

TEST(Semigroup, WithoutGenerator) {
  const NumericalSemigroup s{2, 3};
  const auto t = s.without_generator(3);
  EXPECT_EQ(t.minimal_generators(), (std::vector<int>{2, 5}));
  EXPECT_EQ(t.genus(), 2);
}

TEST(Semigroup, RandomAgreesWithClosureOracle) {
  oracle::SemigroupSampler sampler(0x5eed01, 60);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto gens = sampler.next();
    const NumericalSemigroup s(gens);
    const int limit = 4 * s.conductor() + 30;
    const auto members = oracle::semigroup_members(gens, limit);
    for (int n = -3; n <= limit; ++n) {
      ASSERT_EQ(s.contains(n), members.count(n) > 0) << s.to_string() << " n=" << n;
    }
    EXPECT_EQ(static_cast<std::size_t>(s.genus()), s.gaps().size());
    // Minimal generators regenerate S and each one is needed.
    EXPECT_EQ(NumericalSemigroup(s.minimal_generators()), s);
    for (int g : s.minimal_generators()) {
      auto rest = s.minimal_generators();
      rest.erase(std::find(rest.begin(), rest.end(), g));
      if (rest.empty()) continue;
      const auto sub = oracle::semigroup_members(rest, limit);
      EXPECT_EQ(sub.count(g), 0u) << s.to_string() << " g=" << g;
    }
    EXPECT_LE(s.embedding_dimension(), s.multiplicity());
  }
}

TEST(Enumeration, CountsMatchBruteForce) {
  const auto expected = oracle::semigroup_counts_by_genus(7);
  std::vector<std::uint64_t> got(expected.size(), 0);
  std::set<std::vector<int>> seen;
  enumerate_semigroups(7, [&](const NumericalSemigroup& s) {
    ++got[static_cast<std::size_t>(s.genus())];
    EXPECT_TRUE(seen.insert(s.minimal_generators()).second) << s.to_string();
  });
  EXPECT_EQ(got, expected);
  EXPECT_EQ(semigroups_up_to_genus(3).size(), 8u);
}

TEST(Enumeration, OrderAndMembership) {
  const auto all = semigroups_up_to_genus(9);
  EXPECT_EQ(all.size(), 274u);
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end(), [](const auto& a, const auto& b) {
    return report_order_less(a, b);
  }));
  const NumericalSemigroup target{7, 8, 9, 11};
  EXPECT_NE(std::find(all.begin(), all.end(), target), all.end());
  EXPECT_EQ(all.front(), NumericalSemigroup{1});
}

TEST(Enumeration, Limits) {
  EXPECT_EQ(kind_of([] { semigroups_up_to_genus(21); }), ErrorKind::ResourceLimit);
  EXPECT_EQ(kind_of([] { semigroups_up_to_genus(6, 5); }), ErrorKind::ResourceLimit);
  EXPECT_EQ(kind_of([] { semigroups_up_to_genus(-1); }), ErrorKind::InvalidInput);
}
