#include <doctest.h>

#include "oracles.hpp"
#include "scrutineer/epistemic.hpp"

using namespace scrutineer;

TEST_CASE("jury accuracy matches enumeration of vote vectors") {
  for (const Rational p : {Rational(3, 5), Rational(2, 3), Rational(9, 10), Rational(1, 2)})
    for (int n = 1; n <= 11; n += 2) CHECK(jury_accuracy(n, p) == oracle::jury_by_enumeration(n, p));
}

TEST_CASE("jury accuracy known values") {
  CHECK(jury_accuracy(3, Rational(2, 3)) == Rational(20, 27));
  CHECK(jury_accuracy(5, Rational(2, 3)) == Rational(64, 81));
  CHECK(jury_accuracy(1, Rational(3, 5)) == Rational(3, 5));
  CHECK(jury_accuracy(9, Rational(1)) == 1);
  CHECK(jury_accuracy(9, Rational(0)) == 0);
  CHECK_THROWS_AS(jury_accuracy(4, Rational(2, 3)), DomainError);
  CHECK_THROWS_AS(jury_accuracy(3, Rational(3, 2)), DomainError);
}

TEST_CASE("recursion agrees with the closed form") {
  const auto r = jury_accuracy_recursive(21, Rational(2, 3));
  REQUIRE(r.size() == 11);
  for (std::size_t k = 0; k < r.size(); ++k) CHECK(r[k] == jury_accuracy(static_cast<int>(2 * k + 1), Rational(2, 3)));
}

TEST_CASE("simulation is reproducible and close") {
  const auto a = jury_simulate(5, Rational(2, 3), 20000, 42, 1);
  const auto b = jury_simulate(5, Rational(2, 3), 20000, 42, 3);
  CHECK(a.correct == b.correct);
  CHECK(a.trials == 20000);
  CHECK(a.ci_low <= 64.0 / 81.0);
  CHECK(a.ci_high >= 64.0 / 81.0);
  CHECK(jury_simulate(5, Rational(2, 3), 20000, 43).correct != a.correct);
}

TEST_CASE("bernoulli threshold") {
  CHECK(BernoulliThreshold(Rational(1))(~0ULL));
  CHECK_FALSE(BernoulliThreshold(Rational(0))(0));
  const BernoulliThreshold half(Rational(1, 2));
  CHECK(half(0));
  CHECK(half((1ULL << 63) - 1));
  CHECK_FALSE(half(1ULL << 63));
}

TEST_CASE("hoeffding bound") {
  for (int n = 1; n <= 21; n += 2) CHECK(hoeffding_check(n, Rational(9, 10)).holds);
}

TEST_CASE("maximum likelihood ranking equals minimum disagreement") {
  const Ballot truth = Ballot::identity(4);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto ts = sample_tournament_profile(truth, Rational(2, 3), 5, seed);
    CHECK(mle_rankings(ts, Rational(2, 3)) == min_disagreement_rankings(ts));
  }
}

TEST_CASE("tournament samples at p=1 reproduce the truth") {
  const Ballot truth({2, 0, 1});
  for (const auto& t : sample_tournament_profile(truth, Rational(1), 3, 7)) CHECK(disagreement(truth, t) == 0);
  CHECK_THROWS_AS(sample_tournament_profile(truth, Rational(1, 2), 3, 7), DomainError);
}

TEST_CASE("likelihood") {
  const Ballot truth = Ballot::identity(3);
  const std::vector<Tournament> ts{tournament_of(truth)};
  CHECK(likelihood(truth, ts, Rational(2, 3)) == Rational(8, 27));
  CHECK(likelihood(truth.reversed(), ts, Rational(2, 3)) == Rational(1, 27));
}

TEST_CASE("borda is the maximum likelihood winner rule") {
  CHECK(borda_mle_winners(fixture("ZWICKER")) == AltSet::single(4));
}
