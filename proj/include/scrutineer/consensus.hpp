#ifndef SCRUTINEER_CONSENSUS_HPP
#define SCRUTINEER_CONSENSUS_HPP

#include <string_view>
#include <vector>

#include "scrutineer/core.hpp"

namespace scrutineer {

enum class ConsensusClass { unanimous, strong_unanimous, condorcet };
enum class Distance { swap, discrete };

ConsensusClass parse_consensus_class(std::string_view s);
Distance parse_distance(std::string_view s);

/// Pairs ordered oppositely; equals the minimum number of adjacent swaps.
int swap_distance(const Ballot& a, const Ballot& b);
int discrete_distance(const Ballot& a, const Ballot& b);
int distance(Distance d, const Ballot& a, const Ballot& b);

/// Sum of swap distances from `order` to every ballot.
int kemeny_distance(const Ballot& order, const Profile& p);

bool in_class(const Profile& p, ConsensusClass c);

struct DeepeningResult {
  int budget = 0;
  AltSet winners;
  /// Ballot indices (into all_ballots(m)) of every minimizing profile, when collected.
  std::vector<std::vector<int>> profiles;
};

/// Iterative deepening over total distance B = 0, 1, ...: the first B at which
/// some profile within total distance exactly B of `p` has a strict Condorcet
/// winner. Winners are united over all such profiles.
DeepeningResult condorcet_deepening(const Profile& p, Distance d, int max_budget, std::uint64_t max_profiles,
                                    bool collect = false);

struct ConsensusResult {
  int distance = 0;
  /// All minimizing consensus profiles, canonicalized as documented.
  std::vector<Profile> minimizers;
  AltSet winners;
};

struct ConsensusOptions {
  std::uint64_t max_minimizers = 100'000;
  int max_budget = 64;
};

/// Closest profiles of the given class and the winners they induce.
ConsensusResult closest_consensus(const Profile& p, ConsensusClass c, Distance d, ConsensusOptions opt = {});

}  // namespace scrutineer

#endif
