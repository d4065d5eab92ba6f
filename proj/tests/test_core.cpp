#include <doctest.h>

#include "scrutineer/core.hpp"

using namespace scrutineer;

TEST_CASE("rationals render as p/q or integers") {
  CHECK(to_string(Rational(13, 2)) == "13/2");
  CHECK(to_string(Rational(4, 2)) == "2");
  CHECK(to_string(Rational(-3, 9)) == "-1/3");
  CHECK(parse_rational("20/27") == Rational(20, 27));
  CHECK(parse_rational("7") == Rational(7));
  CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
  CHECK_THROWS_AS(parse_rational("x"), DomainError);
}

TEST_CASE("index sets") {
  const AltSet s = AltSet::single(1).with(3);
  CHECK(s.size() == 2);
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(0));
  CHECK(s.min() == 1);
  CHECK(s.without(1) == AltSet::single(3));
  CHECK(AltSet::single(1).is_subset_of(s));
  CHECK((AltSet::all(4) - s).members() == std::vector<int>{0, 2});
}

TEST_CASE("ballots") {
  const Ballot b({2, 0, 1});
  CHECK(b.top() == 2);
  CHECK(b.position(1) == 2);
  CHECK(b.prefers(0, 1));
  CHECK(b.with_top(1).order()[0] == 1);
  CHECK(b.with_top(1).position(2) == 1);
  CHECK(b.reversed().top() == 1);
  CHECK(b.top_among(AltSet::single(0).with(1)) == 0);
  CHECK_THROWS_AS(Ballot({0, 0, 1}), DomainError);
}

TEST_CASE("all_ballots is lexicographic and indexable") {
  const auto& bs = all_ballots(3);
  REQUIRE(bs.size() == 6);
  CHECK(bs.front() == Ballot::identity(3));
  CHECK(bs[1] == Ballot({0, 2, 1}));
  for (std::size_t k = 0; k < bs.size(); ++k) CHECK(ballot_index(bs[k]) == k);
}

TEST_CASE("profile parsing round trip") {
  const std::string text = "alternatives: a,b,c\n2: a>b>c\n1: c>b>a\n";
  const Profile p = parse_profile(text);
  CHECK(p.n() == 3);
  CHECK(p.m() == 3);
  CHECK(p.ballot(1) == Ballot({0, 1, 2}));
  CHECK(p.ballot(2).top() == 2);
  CHECK(render_profile(p) == text);
  CHECK(parse_profile(render_profile(p)).ballot(2) == p.ballot(2));
}

TEST_CASE("profile parse errors carry line numbers") {
  try {
    parse_profile("alternatives: a,b\n1: a>b\n2: a>c\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_profile("alternatives: a,b\n1: a\n"), ParseError);
  CHECK_THROWS_AS(parse_profile("alternatives: a,a\n"), ParseError);
}

TEST_CASE("profile algebra") {
  const Profile p = fixture("PLINY");
  CHECK(p.n() == 303);
  CHECK(support(p, 0, 1) == 102);
  CHECK(support(p, 1, 0) == 201);
  // coalitions are bitmasks, so larger electorates are refused
  CHECK_THROWS_AS(supporters(p, 0, 1), DomainError);
  const Profile few(3, {Ballot({0, 1, 2}), Ballot({1, 0, 2}), Ballot({0, 2, 1})});
  CHECK(supporters(few, 0, 1) == Coalition::single(0).with(2));
  const auto s = plurality_scores(p, p.alternatives());
  CHECK(s == std::vector<int>{102, 101, 100});
  const Profile r = restrict(p, AltSet::single(1).with(2));
  CHECK(r.m() == 2);
  CHECK(plurality_scores(r, r.alternatives()) == std::vector<int>{203, 100});

  const std::vector<int> rho{1, 0, 2};
  const Profile q = permute_alternatives(p, rho);
  CHECK(support(q, 1, 0) == support(p, 0, 1));
  const Profile small(3, {Ballot({0, 1, 2}), Ballot({2, 1, 0})});
  const std::vector<int> pi{1, 0};
  CHECK(permute_voters(small, pi).ballot(0) == small.ballot(1));
}

TEST_CASE("profile space enumeration") {
  const ProfileSpace s(2, 3);
  CHECK(s.size() == 36);
  CHECK(s.at(0).ballot(0) == Ballot::identity(3));
  // voter 0 is the most significant digit
  CHECK(s.at(6).ballot(0) == all_ballots(3)[1]);
  CHECK(s.at(6).ballot(1) == all_ballots(3)[0]);
  for (std::uint64_t k = 0; k < s.size(); ++k) CHECK(s.index_of(s.at(k)) == k);
  CHECK_THROWS_AS(ProfileSpace(10, 5, 1000), BudgetExceeded);
}

TEST_CASE("weak orders") {
  const std::vector<Rational> scores{2, 5, 2};
  const WeakOrder w = WeakOrder::from_scores(scores);
  CHECK(w.tiers().size() == 2);
  CHECK(w.top() == AltSet::single(1));
  CHECK(w.strictly_prefers(1, 0));
  CHECK(w.weakly_prefers(0, 2));
  CHECK_FALSE(w.is_linear());
  CHECK(WeakOrder::from_ballot(Ballot({1, 0})).is_linear());
  // ordered Bell numbers
  CHECK(all_weak_orders(2).size() == 3);
  CHECK(all_weak_orders(3).size() == 13);
  CHECK(all_weak_orders(4).size() == 75);
}

TEST_CASE("fixtures") {
  for (const auto& name : fixture_names()) CHECK_NOTHROW(fixture(name));
  CHECK_THROWS_AS(fixture("NOPE"), DomainError);
  CHECK(fixture("GORE").n() == 100);
  CHECK(factorial(5) == 120);
  CHECK(all_permutations(3).size() == 6);
}
