#ifndef SCRUTINEER_EPISTEMIC_HPP
#define SCRUTINEER_EPISTEMIC_HPP

#include <cstdint>
#include <vector>

#include "scrutineer/core.hpp"
#include "scrutineer/tournaments.hpp"

namespace scrutineer {

/// Probability that a majority of n independent voters of competence p is correct.
/// n must be odd; p may be any value in [0, 1].
Rational jury_accuracy(int n, const Rational& p);

/// Values at n = 1, 3, ..., n_max built by the two-step recurrence.
std::vector<Rational> jury_accuracy_recursive(int n_max, const Rational& p);

struct JuryEstimate {
  std::uint64_t trials = 0;
  std::uint64_t correct = 0;
  double estimate = 0;
  double ci_low = 0;
  double ci_high = 0;
};

/// Monte-Carlo estimate with a normal-approximation 95% interval.
/// Voter i in trial t draws counter t*n + i; a strict majority counts as correct.
JuryEstimate jury_simulate(int n, const Rational& p, std::uint64_t trials, std::uint64_t seed, int jobs = 1);

/// 1 - p(n) <= exp(-2 n (p - 1/2)^2), evaluated in double precision.
struct HoeffdingCheck {
  double error = 0;
  double bound = 0;
  bool holds = false;
};
HoeffdingCheck hoeffding_check(int n, const Rational& p);

/// True iff a uniform 64-bit draw u satisfies u < p * 2^64.
class BernoulliThreshold {
 public:
  explicit BernoulliThreshold(const Rational& p);
  bool operator()(std::uint64_t u) const { return always_ || u < threshold_; }

 private:
  bool always_ = false;
  std::uint64_t threshold_ = 0;
};

Tournament tournament_of(const Ballot& b);

/// Pairs are visited as (x, y), x < y in index order; voter i's pair k uses
/// counter i * C(m,2) + k.
std::vector<Tournament> sample_tournament_profile(const Ballot& truth, const Rational& p, int n, std::uint64_t seed);

/// Pairs on which the order and the tournament disagree.
int disagreement(const Ballot& order, const Tournament& t);
int disagreement(const Ballot& order, const std::vector<Tournament>& ts);

/// p^agreements * (1 - p)^disagreements.
Rational likelihood(const Ballot& order, const std::vector<Tournament>& ts, const Rational& p);

/// Orders of maximum exact likelihood, in lexicographic order.
std::vector<Ballot> mle_rankings(const std::vector<Tournament>& ts, const Rational& p, int max_m = 8);
/// Orders of minimum total disagreement, in lexicographic order.
std::vector<Ballot> min_disagreement_rankings(const std::vector<Tournament>& ts, int max_m = 8);

/// Winners maximizing the log2-likelihood sum of (m - rank).
AltSet borda_mle_winners(const Profile& p);

}  // namespace scrutineer

#endif
