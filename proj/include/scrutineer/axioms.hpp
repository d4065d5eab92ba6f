#ifndef SCRUTINEER_AXIOMS_HPP
#define SCRUTINEER_AXIOMS_HPP

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scrutineer/core.hpp"
#include "scrutineer/rules.hpp"

namespace scrutineer {

enum class Axiom {
  anonymous,
  neutral,
  non_dictatorial,
  pareto,
  unanimous,
  monotonic,
  positively_responsive,
  non_imposed,
  resolute,
  independent,
  condorcet_consistent,
  liberal,
  strategy_proof,
  iia_spf,
  pareto_spf,
  non_dictatorial_spf,
};

Axiom parse_axiom(std::string_view s);
std::string axiom_name(Axiom a);
bool is_spf_axiom(Axiom a);
const std::vector<Axiom>& all_axioms();

enum class FunctionKind { scf, spf };

/// Precomputed view of the (m!)^n profile space.
class DomainIndex {
 public:
  DomainIndex(int n, int m, std::uint64_t guard = ProfileSpace::kDefaultGuard);

  int n() const { return n_; }
  int m() const { return m_; }
  std::uint64_t size() const { return size_; }
  int ballots() const { return static_cast<int>(all_->size()); }

  int digit(std::uint64_t p, int voter) const;
  std::uint64_t with_digit(std::uint64_t p, int voter, int ballot) const;
  const Ballot& ballot(std::uint64_t p, int voter) const { return (*all_)[digit(p, voter)]; }
  const Ballot& ballot_at(int k) const { return (*all_)[k]; }
  Coalition coalition(std::uint64_t p, Alternative x, Alternative y) const;
  std::uint64_t swap_voters(std::uint64_t p, int i, int j) const;
  /// Image of a profile when every ballot is mapped through `ballot_map`.
  std::uint64_t map_ballots(std::uint64_t p, const std::vector<int>& ballot_map) const;
  /// Ballot-index map induced by relabelling alternatives with rho.
  std::vector<int> ballot_map(std::span<const int> rho) const;
  Profile profile(std::uint64_t p) const;
  std::uint64_t index_of(const Profile& p) const { return space_.index_of(p); }

 private:
  int n_;
  int m_;
  std::uint64_t size_;
  ProfileSpace space_;
  const std::vector<Ballot>* all_;
  std::vector<std::uint64_t> pow_;
};

/// A function tabulated over the whole profile space of (n, m).
struct FunctionTable {
  int n = 0;
  int m = 0;
  FunctionKind kind = FunctionKind::scf;
  std::vector<AltSet> choice;         // scf
  std::vector<WeakOrder> preference;  // spf
};

FunctionTable tabulate(const Rule& rule, int n, int m, int jobs = 1);
/// Social preference induced by iterated choice and removal.
WeakOrder spf_of(const Rule& rule, const Profile& p);
FunctionTable tabulate_spf(const Rule& rule, int n, int m, int jobs = 1);
/// The SPF that copies voter i's ballot.
FunctionTable dictatorship_spf(int n, int m, Voter i);

struct Witness {
  std::vector<Profile> profiles;
  std::optional<std::vector<int>> permutation;
  std::optional<Voter> voter;
  std::vector<Alternative> alternatives;
  /// Set when the violation quantifies over the whole (n, m) profile space;
  /// otherwise global axioms are replayed over `profiles`.
  std::optional<std::pair<int, int>> space;
  std::string note;
};

struct CheckReport {
  bool holds = true;
  std::optional<Witness> witness;
  std::string detail;
};

/// Exhaustive check over the full domain of the table.
CheckReport check_axiom(const FunctionTable& t, Axiom a, int jobs = 1);
/// Tabulates then checks. SPF axioms use spf_of(rule).
CheckReport check_axiom(const Rule& rule, Axiom a, int n, int m, int jobs = 1);
/// Literal check restricted to pairs drawn from an explicit list of profiles.
CheckReport check_axiom_on(const Rule& rule, Axiom a, const std::vector<Profile>& domain);

/// Re-evaluates the rule on the witness and confirms the violation.
bool replay_witness(const Rule& rule, Axiom a, const Witness& w);

struct ImplicationRow {
  std::string rule;
  bool non_imposed = false;
  bool monotonic = false;
  bool unanimous = false;
  bool pareto = false;
  bool ok = true;
};
/// non-imposed and monotonic => unanimous; Pareto => unanimous; unanimous => non-imposed.
std::vector<ImplicationRow> implication_suite(int n, int m, const std::vector<Rule>& catalog, int jobs = 1);

/// A family of coalitions over n voters.
struct CoalitionFamily {
  int n = 0;
  std::vector<Coalition> members;  // ascending by bit pattern
  bool contains(Coalition c) const;
};

struct CoalitionAnalysis {
  CoalitionFamily all;  // W or B
  /// Per ordered pair (x, y), index x*m + y.
  std::vector<CoalitionFamily> per_pair;
  int m = 0;
};

/// C in W^{xy} iff every profile with C inside N^{xy} ranks x strictly above y.
CoalitionAnalysis decisive_coalitions(const FunctionTable& spf);
/// C in B^{yx} iff every profile with C inside N^{xy} excludes y. Needs a resolute table.
CoalitionAnalysis blocking_coalitions(const FunctionTable& scf);

struct UltrafilterReport {
  bool grand_set = false;
  bool complement_dichotomy = false;
  bool intersection_closed = false;
  bool superset_closed = false;
  std::optional<Voter> principal;
  std::vector<std::pair<Coalition, Coalition>> intersection_failures;
  std::optional<Coalition> complement_failure;
  std::optional<std::pair<Coalition, Coalition>> superset_failure;
};
UltrafilterReport ultrafilter_check(const CoalitionFamily& fam);

/// W^{xy} subset of W for every pair.
bool contagion_holds(const CoalitionAnalysis& w);

struct SenWitness {
  Profile profile;
  /// Alternatives each voter's veto removes, and those removed by Pareto.
  AltSet vetoed;
  AltSet pareto_dominated;
  bool covers_all = false;
};
/// pairs[i] is voter i's two-way decisive pair; voters 0 and 1 must differ.
SenWitness sen_witness(int n, int m, const std::vector<std::pair<Alternative, Alternative>>& pairs);

struct LinearityReport {
  bool premise = false;      // IIA_SPF and PARETO_SPF both hold
  bool ties_found = false;
  std::optional<Profile> tie_profile;
  CheckReport iia;
  CheckReport pareto;
};
LinearityReport spf_linearity_check(const FunctionTable& spf);

struct SearchOptions {
  int jobs = 1;
  std::uint64_t node_budget = 2'000'000'000ULL;
  std::uint64_t enumeration_limit = 10'000'000ULL;
  std::size_t max_witnesses = 16;
};

struct SearchResult {
  bool exhaustive_enumeration = false;
  std::uint64_t census = 0;
  std::vector<FunctionTable> witnesses;
  std::uint64_t tables_examined = 0;  // full enumeration only
  std::uint64_t nodes = 0;            // backtracking only
};

/// All functions of the given kind on (n, m) satisfying every axiom.
SearchResult impossibility_search(int n, int m, FunctionKind kind, const std::vector<Axiom>& axioms,
                                  SearchOptions opt = {});

/// Same outputs as the rule (after its tie-break) on every profile.
bool table_matches(const FunctionTable& t, const Rule& rule);

}  // namespace scrutineer

#endif
