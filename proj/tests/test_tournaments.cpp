#include <doctest.h>

#include "oracles.hpp"
#include "scrutineer/tournaments.hpp"

using namespace scrutineer;

TEST_CASE("net margins and majority graph") {
  const Profile p = fixture("PLINY");
  CHECK(net(p, 1, 0) == 99);
  CHECK(net(p, 0, 1) == -99);
  const Tournament t = majority_graph(p, false);
  CHECK(t.beats(1, 0));
  CHECK(t.beats(1, 2));
  CHECK(t.beats(0, 2));
  CHECK(t.is_strict_complete());
  CHECK(is_transitive(t));
  CHECK(condorcet_winner(p, false) == AltSet::single(1));
}

TEST_CASE("condorcet cycle has no winner") {
  const Profile p = fixture("CONDORCET1");
  CHECK(condorcet_winner(p, false).empty());
  CHECK_FALSE(is_transitive(majority_graph(p, false)));
}

TEST_CASE("condorcet winner agrees with oracle on (3,3)") {
  for (const auto& p : enumerate_profiles(3, 3)) CHECK(condorcet_winner(p, false) == oracle::condorcet_winner(p));
}

TEST_CASE("weak majority graph has both directions on ties") {
  const Profile p(3, {Ballot({0, 1, 2}), Ballot({1, 0, 2})});
  const Tournament t = majority_graph(p, true);
  CHECK(t.beats(0, 1));
  CHECK(t.beats(1, 0));
  CHECK(condorcet_winner(p, true) == AltSet::single(0).with(1));
  CHECK(condorcet_winner(p, false).empty());
  CHECK(is_transitive(t));
}

TEST_CASE("mcgarvey realizes every tournament on four alternatives") {
  const auto all = all_tournaments(4);
  CHECK(all.size() == 64);
  for (const auto& t : all) {
    const Profile p = mcgarvey_realize(t);
    const Tournament back = majority_graph(p, false);
    for (int x = 0; x < 4; ++x)
      for (int y = 0; y < 4; ++y)
        if (x != y) CHECK(back.beats(x, y) == t.beats(x, y));
  }
}

TEST_CASE("tournament text round trip") {
  const Tournament t = majority_graph(fixture("CONDORCET1"), false);
  const Tournament u = parse_tournament(render_tournament(t));
  CHECK(u.edges() == t.edges());
  // ties of a weak tournament are written as both directions
  CHECK(parse_tournament("tournament: 2\na>b\nb>a\n").edge_count() == 2);
  CHECK_THROWS_AS(parse_tournament("tournament: 2\na>z\n"), ParseError);
  CHECK_THROWS_AS(parse_tournament("a>b\n"), ParseError);
}
