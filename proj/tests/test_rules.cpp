#include <doctest.h>

#include "oracles.hpp"
#include "scrutineer/rules.hpp"

using namespace scrutineer;

namespace {
AltSet named(const Profile& p, std::initializer_list<const char*> xs) {
  AltSet s;
  for (auto x : xs) s = s.with(p.index_of(x));
  return s;
}
}  // namespace

TEST_CASE("plurality and borda match oracles on (3,3)") {
  for (const auto& p : enumerate_profiles(3, 3)) {
    CHECK(plurality(p).winners == oracle::argmax(oracle::plurality_scores(p)));
    const auto r = positional(p, borda_vector(3));
    CHECK(*r.scores == oracle::borda_scores(p));
    CHECK(r.winners == oracle::argmax(oracle::borda_scores(p)));
  }
}

TEST_CASE("kemeny matches brute force on (3,3) and (2,4)") {
  for (const auto& p : enumerate_profiles(3, 3)) {
    const auto [tops, d] = oracle::kemeny(p);
    const auto r = kemeny(p);
    CHECK(r.winners == tops);
    CHECK(*r.distance == d);
  }
  for (const auto& p : enumerate_profiles(2, 4)) CHECK(kemeny(p).winners == oracle::kemeny(p).first);
}

TEST_CASE("regression profiles") {
  const Profile pliny = fixture("PLINY");
  CHECK(plurality(pliny).winners == named(pliny, {"a"}));

  const Profile gore = fixture("GORE");
  const auto g = positional(gore, borda_vector(4));
  CHECK(g.winners == named(gore, {"Bush"}));
  CHECK((*g.scores)[gore.index_of("Bush")] == 246);
  CHECK((*g.scores)[gore.index_of("Gore")] == 200);
  CHECK((*g.scores)[gore.index_of("Nader")] == 55);

  const Profile young = fixture("YOUNG");
  CHECK(kemeny(young).winners == named(young, {"b"}));
  CHECK(*kemeny(young).distance == 76);

  CHECK(plurality_runoff(fixture("RUNOFF_A")).winners == named(fixture("RUNOFF_A"), {"c"}));
  CHECK(plurality_runoff(fixture("RUNOFF_B")).winners == named(fixture("RUNOFF_B"), {"b"}));

  const Profile c3 = fixture("CONDORCET3");
  CHECK(copeland(c3).winners == named(c3, {"a", "b", "c"}));
  CHECK(condorcet_rule(c3).winners == c3.alternatives());

  const Profile hikers = fixture("HIKERS");
  const Ballot axis = parse_ballot(hikers, "l>m>s");
  CHECK(is_single_peaked(hikers, axis));
  CHECK(median_rule(hikers, axis).winners == named(hikers, {"m"}));
}

TEST_CASE("symmetric borda equals borda") {
  for (const auto& p : enumerate_profiles(3, 3)) CHECK(symmetric_borda(p).winners == positional(p, borda_vector(3)).winners);
}

TEST_CASE("score vectors") {
  CHECK(borda_vector(3) == ScoreVector{2, 1, 0});
  CHECK(plurality_vector(3) == ScoreVector{1, 0, 0});
  CHECK(veto_vector(3) == ScoreVector{1, 1, 0});
  CHECK(k_approval_vector(4, 2) == ScoreVector{1, 1, 0, 0});
  CHECK_THROWS_AS(k_approval_vector(3, 4), DomainError);
}

TEST_CASE("quota and dictatorship") {
  const Profile p(3, {Ballot({0, 1, 2}), Ballot({1, 0, 2}), Ballot({0, 2, 1})});
  CHECK(dictatorship(p, 1).winners == AltSet::single(1));
  const Profile two(2, {Ballot({0, 1}), Ballot({1, 0}), Ballot({0, 1})});
  CHECK(quota_rule(two, 2).winners == AltSet::single(0));
  CHECK(quota_rule(two, 3).winners == two.alternatives());
  CHECK_THROWS_AS(quota_rule(p, 2), DomainError);
}

TEST_CASE("stv eliminates from the bottom") {
  const Profile p = parse_profile("alternatives: a,b,c\n4: a>b>c\n3: b>c>a\n2: c>b>a\n");
  CHECK(stv(p).winners == AltSet::single(1));
  CHECK(plurality(p).winners == AltSet::single(0));
}

TEST_CASE("dodgson picks the condorcet winner when one exists") {
  for (const auto& p : enumerate_profiles(3, 3)) {
    const AltSet cw = oracle::condorcet_winner(p);
    if (!cw.empty()) CHECK(dodgson(p).winners == cw);
  }
}

TEST_CASE("rule factory and tie-breaks") {
  const Profile p = fixture("SP_RESOLUTE");
  const Rule r = make_rule("plurality");
  CHECK(r.choose(p) == p.alternatives());
  CHECK(r.with_tiebreak(TieBreak::lexicographic).choose(p) == AltSet::single(0));
  CHECK(make_rule("positional:2,1,0").choose(fixture("PLINY")) == make_rule("borda").choose(fixture("PLINY")));
  CHECK_THROWS_AS(make_rule("positional:2,1,0").choose(fixture("ZWICKER")), DomainError);
  CHECK_THROWS_AS(make_rule("nonsense"), DomainError);
  CHECK_THROWS_AS(make_rule("plurality:3"), DomainError);
  for (const auto& name : rule_names()) CHECK_FALSE(name.empty());
}
