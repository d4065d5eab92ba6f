#ifndef SCRUTINEER_MULTIWINNER_HPP
#define SCRUTINEER_MULTIWINNER_HPP

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scrutineer/axioms.hpp"
#include "scrutineer/core.hpp"
#include "scrutineer/rules.hpp"

namespace scrutineer {

using Committee = AltSet;

/// Orders committees by their sorted member lists.
bool committee_less(Committee a, Committee b);

struct CommitteeResult {
  std::vector<Committee> committees;  // sorted by committee_less, no duplicates
  std::optional<Rational> score;      // optimum of the objective, when there is one
  std::vector<std::string> trace;
  bool exhausted = false;  // branch budget ran out; committees are partial
};

enum class BestKScore { plurality, k_approval, borda };

/// Committees are the k-prefixes of every linearization of the score order.
/// k_approval approves each voter's top `approvals` (default k).
CommitteeResult best_k(BestKScore s, const Profile& p, int k, std::optional<int> approvals = std::nullopt);

/// Every committee of size k, ascending.
std::vector<Committee> all_committees(int m, int k, std::uint64_t budget = 5'000'000);

CommitteeResult chamberlin_courant(const Profile& p, int k, const ScoreVector& w);

/// 1 + 1/2 + ... + 1/t; zero at t = 0.
Rational harmonic(int t);
CommitteeResult pav_k(const Profile& p, int k);
Rational pav_score(const Profile& p, int k, Committee c);

CommitteeResult sequential_plurality(const Profile& p, int k, TieBreak t);

enum class CstvMode { canonical, parallel };
int droop_quota(int n, int k);
CommitteeResult cstv(const Profile& p, int k, CstvMode mode, std::uint64_t branch_budget = 100'000);

/// Weak Condorcet committees of size k.
std::vector<Committee> condorcet_committees(const Profile& p, int k);

/// A family of committee rules indexed by k.
struct CommitteeRule {
  std::string name;
  std::function<CommitteeResult(const Profile&, int)> fn;
};

/// best-plurality, best-approval, best-borda, chco, pav, seq-plurality,
/// seq-plurality-lex, cstv, cstv-parallel, condorcet-committee.
CommitteeRule make_committee_rule(std::string_view name);

enum class CommitteeAxiom { stable, committee_monotonic };
CommitteeAxiom parse_committee_axiom(std::string_view s);

struct CommitteeCheck {
  bool holds = true;
  std::optional<Profile> profile;
  int k = 0;
  std::string note;
};

CommitteeCheck check_committee_axiom_on(const CommitteeRule& rule, CommitteeAxiom a, const std::vector<Profile>& domain,
                                        int k_max);
CommitteeCheck check_committee_axiom(const CommitteeRule& rule, CommitteeAxiom a, int n, int m, int k_max);

}  // namespace scrutineer

#endif
