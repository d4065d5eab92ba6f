#ifndef SCRUTINEER_RULES_HPP
#define SCRUTINEER_RULES_HPP

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scrutineer/core.hpp"

namespace scrutineer {

using ScoreVector = std::vector<Rational>;

ScoreVector borda_vector(int m);
ScoreVector plurality_vector(int m);
ScoreVector veto_vector(int m);
ScoreVector k_approval_vector(int m, int k);

struct ChoiceResult {
  AltSet winners;
  std::optional<std::vector<Rational>> scores;
  std::vector<std::string> trace;
  /// Kemeny: minimizing orders. Empty for other rules.
  std::vector<Ballot> orders;
  /// Kemeny: minimum distance. Dodgson: swap budget at which winners appeared.
  std::optional<int> distance;
};

ChoiceResult plurality(const Profile& p);
ChoiceResult quota_rule(const Profile& p, int q);
ChoiceResult dictatorship(const Profile& p, Voter i);
ChoiceResult condorcet_rule(const Profile& p);
ChoiceResult copeland(const Profile& p);
ChoiceResult positional(const Profile& p, const ScoreVector& w);
ChoiceResult symmetric_borda(const Profile& p);
ChoiceResult plurality_runoff(const Profile& p);
ChoiceResult stv(const Profile& p);

struct KemenyOptions {
  int max_m = 8;
};
ChoiceResult kemeny(const Profile& p, KemenyOptions opt = {});

struct DodgsonOptions {
  int max_budget = 64;
  std::uint64_t max_profiles = 50'000'000;
};
ChoiceResult dodgson(const Profile& p, DodgsonOptions opt = {});

ChoiceResult odd_rule(const Profile& p);

/// True iff b declines away from its peak along `axis`.
bool is_single_peaked(const Ballot& b, const Ballot& axis);
bool is_single_peaked(const Profile& p, const Ballot& axis);

ChoiceResult median_rule(const Profile& p, const Ballot& axis);

/// Constant rule returning {x}; a reference point for axiom checks.
ChoiceResult constant_rule(const Profile& p, Alternative x);

AltSet resolve(AltSet winners, TieBreak t);
inline AltSet resolve(const ChoiceResult& r, TieBreak t) { return resolve(r.winners, t); }

/// A named, parameterized rule usable as a black box.
class Rule {
 public:
  using Fn = std::function<ChoiceResult(const Profile&)>;

  Rule(std::string name, Fn fn, TieBreak tiebreak = TieBreak::none, bool positional_family = false,
       std::function<ScoreVector(int)> weights = {})
      : name_(std::move(name)),
        fn_(std::move(fn)),
        tiebreak_(tiebreak),
        positional_(positional_family),
        weights_(std::move(weights)) {}

  const std::string& name() const { return name_; }
  TieBreak tiebreak() const { return tiebreak_; }
  Rule with_tiebreak(TieBreak t) const;

  ChoiceResult evaluate(const Profile& p) const { return fn_(p); }
  /// Winners after the tie-break.
  AltSet choose(const Profile& p) const { return resolve(fn_(p).winners, tiebreak_); }

  bool is_positional() const { return positional_; }
  /// Score vector for m alternatives; positional rules only.
  ScoreVector weights(int m) const;

 private:
  std::string name_;
  Fn fn_;
  TieBreak tiebreak_;
  bool positional_;
  std::function<ScoreVector(int)> weights_;
};

/// Parses NAME[:PARAMS]. Axis and constant parameters use default labels
/// unless `labels` is given.
Rule make_rule(std::string_view spec, const std::vector<std::string>* labels = nullptr);

/// Rule names accepted by make_rule, for usage text.
const std::vector<std::string>& rule_names();

}  // namespace scrutineer

#endif
