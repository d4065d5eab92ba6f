#ifndef SCRUTINEER_STRATEGY_HPP
#define SCRUTINEER_STRATEGY_HPP

#include <optional>
#include <vector>

#include "scrutineer/core.hpp"
#include "scrutineer/rules.hpp"

namespace scrutineer {

struct ManipulationWitness {
  Voter voter = 0;
  Ballot truthful;
  Ballot strategic;
  Alternative outcome_truthful = 0;
  Alternative outcome_strategic = 0;
};

/// Scans every ballot in lexicographic order; the first one the voter gains
/// from is returned. With `target`, only ballots electing the target count.
std::optional<ManipulationWitness> find_manipulation(const Rule& rule, const Profile& p, Voter i,
                                                     std::optional<Alternative> target = std::nullopt);

/// Greedy ballot construction against the other voters' ballots: x first,
/// then each position is filled with the first unplaced alternative that
/// keeps x the winner. Positional rules with lexicographic tie-break only.
std::optional<Ballot> greedy_manipulation(const Rule& rule, const Profile& others, Alternative x);

/// A ballot that never hurts and sometimes helps, judged by `truthful` over
/// every profile of the information set (each profile holds the voter's true ballot at `voter`).
std::optional<Ballot> dominating_manipulation(const Rule& rule, Voter voter, const std::vector<Profile>& info_set,
                                              std::uint64_t budget = 10'000'000);

/// Every axis along which the profile is single-peaked, in lexicographic order.
std::vector<Ballot> single_peaked_axes(const Profile& p, int max_m = 8);

/// Single-peaked ballots along `axis`, in lexicographic order.
std::vector<Ballot> single_peaked_ballots(const Ballot& axis);

struct BlackReport {
  int n = 0;
  int m = 0;
  std::uint64_t profiles = 0;
  bool transitive = true;
  bool median_condorcet = true;  // n odd: median = CW; n even: median within weak CWs
  bool strategyproof = true;     // n odd only
  std::optional<Profile> transitivity_failure;
  std::optional<Profile> median_failure;
  std::optional<Profile> manipulation_failure;
};

/// Exhaustive over profiles single-peaked along the canonical axis.
BlackReport black_suite(int n, int m, std::uint64_t guard = 10'000'000);

enum class StrategySpace { top_only, full };

struct VotingGame {
  Profile truth;
  Rule rule;
  StrategySpace space = StrategySpace::top_only;
};

/// Nodes are strategy profiles indexed in mixed radix (voter 0 most significant).
struct ResponseGraph {
  int n = 0;
  int strategies = 0;
  std::vector<Alternative> outcome;
  std::vector<std::vector<std::uint32_t>> edges;
  std::vector<std::uint32_t> sinks;
  std::uint32_t truthful = 0;
};

/// Ballot voter i submits when playing strategy s.
Ballot strategy_ballot(const VotingGame& g, Voter i, int s);
Profile strategy_profile(const VotingGame& g, const ResponseGraph& graph, std::uint32_t node);

/// Edges are profitable unilateral deviations; with best_only, only those
/// reaching the deviator's best achievable outcome.
ResponseGraph best_response_graph(const VotingGame& g, bool best_only = false, std::uint64_t guard = 2'000'000);

/// Equilibria reachable from the truthful node, ascending.
std::vector<std::uint32_t> reachable_equilibria(const ResponseGraph& graph);

struct PoaResult {
  std::optional<Rational> value;  // empty when no equilibrium is reachable anywhere
  std::optional<Profile> truth;
  std::optional<Profile> equilibrium;
  std::uint64_t profiles = 0;
};

/// min over true profiles and reachable equilibria of
/// score(f(P), P) / score(f(P'), P').
PoaResult dynamic_poa(const Rule& rule, int n, int m, StrategySpace space, bool best_only = false, int jobs = 1);

}  // namespace scrutineer

#endif
