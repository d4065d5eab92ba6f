#include "scrutineer/rules.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

#include "scrutineer/consensus.hpp"
#include "scrutineer/tournaments.hpp"

namespace scrutineer {

ScoreVector borda_vector(int m) {
  ScoreVector w;
  for (int k = m - 1; k >= 0; --k) w.emplace_back(k);
  return w;
}

ScoreVector plurality_vector(int m) {
  ScoreVector w(m, Rational(0));
  w[0] = 1;
  return w;
}

ScoreVector veto_vector(int m) {
  ScoreVector w(m, Rational(1));
  w[m - 1] = 0;
  return w;
}

ScoreVector k_approval_vector(int m, int k) {
  if (k < 1 || k > m) throw DomainError("k-approval needs 1 <= k <= m");
  ScoreVector w(m, Rational(0));
  for (int i = 0; i < k; ++i) w[i] = 1;
  return w;
}

namespace {

AltSet argmax(const std::vector<Rational>& s, AltSet among) {
  AltSet best;
  std::optional<Rational> top;
  for (int x : among.members()) {
    if (!top || s[x] > *top) {
      top = s[x];
      best = AltSet::single(x);
    } else if (s[x] == *top) {
      best = best.with(x);
    }
  }
  return best;
}

AltSet argmin(const std::vector<Rational>& s, AltSet among) {
  AltSet best;
  std::optional<Rational> low;
  for (int x : among.members()) {
    if (!low || s[x] < *low) {
      low = s[x];
      best = AltSet::single(x);
    } else if (s[x] == *low) {
      best = best.with(x);
    }
  }
  return best;
}

std::vector<Rational> to_rationals(const std::vector<int>& v) {
  return std::vector<Rational>(v.begin(), v.end());
}

std::string set_text(const Profile& p, AltSet s) { return render_set(p, s); }

}  // namespace

ChoiceResult plurality(const Profile& p) {
  ChoiceResult r;
  r.scores = to_rationals(plurality_scores(p, p.alternatives()));
  r.winners = argmax(*r.scores, p.alternatives());
  return r;
}

ChoiceResult quota_rule(const Profile& p, int q) {
  if (p.m() != 2) throw DomainError("quota rule needs exactly two alternatives");
  if (q < 1 || q > p.n() + 1) throw DomainError("quota must lie in [1, n+1]");
  ChoiceResult r;
  r.scores = to_rationals(plurality_scores(p, p.alternatives()));
  for (int x = 0; x < 2; ++x)
    if ((*r.scores)[x] >= q) r.winners = r.winners.with(x);
  if (r.winners.empty()) r.winners = p.alternatives();
  return r;
}

ChoiceResult dictatorship(const Profile& p, Voter i) {
  if (i < 0 || i >= p.n()) throw DomainError("dictator index out of range");
  ChoiceResult r;
  r.winners = AltSet::single(p.ballot(i).top());
  return r;
}

ChoiceResult condorcet_rule(const Profile& p) {
  ChoiceResult r;
  r.winners = condorcet_winner(p, false);
  if (r.winners.empty()) r.winners = p.alternatives();
  return r;
}

ChoiceResult copeland(const Profile& p) {
  const MajorityGraph g(p);
  std::vector<Rational> s(p.m());
  for (int x = 0; x < p.m(); ++x) {
    int score = 0;
    for (int y = 0; y < p.m(); ++y) {
      if (g.net(x, y) > 0) ++score;
      if (g.net(x, y) < 0) --score;
    }
    s[x] = score;
  }
  ChoiceResult r;
  r.winners = argmax(s, p.alternatives());
  r.scores = std::move(s);
  return r;
}

ChoiceResult positional(const Profile& p, const ScoreVector& w) {
  if (static_cast<int>(w.size()) != p.m()) throw DomainError("score vector length must equal m");
  std::vector<long long> counts(static_cast<std::size_t>(p.m()) * p.m(), 0);
  for (const auto& b : p.ballots())
    for (int k = 0; k < p.m(); ++k) ++counts[b.at(k) * p.m() + k];
  std::vector<Rational> s(p.m());
  for (int x = 0; x < p.m(); ++x)
    for (int k = 0; k < p.m(); ++k)
      if (counts[x * p.m() + k]) s[x] += w[k] * counts[x * p.m() + k];
  ChoiceResult r;
  r.winners = argmax(s, p.alternatives());
  r.scores = std::move(s);
  return r;
}

ChoiceResult symmetric_borda(const Profile& p) {
  const MajorityGraph g(p);
  std::vector<Rational> s(p.m());
  for (int x = 0; x < p.m(); ++x) {
    int total = 0;
    for (int y = 0; y < p.m(); ++y) total += g.net(x, y);
    s[x] = total;
  }
  ChoiceResult r;
  r.winners = argmax(s, p.alternatives());
  r.scores = std::move(s);
  return r;
}

ChoiceResult plurality_runoff(const Profile& p) {
  ChoiceResult r;
  const auto first = plurality_scores(p, p.alternatives());
  r.scores = to_rationals(first);
  for (int x = 0; x < p.m(); ++x)
    if (2 * first[x] > p.n()) {
      r.winners = AltSet::single(x);
      r.trace.push_back("round 1: " + p.label(x) + " has an absolute majority");
      return r;
    }
  // Add whole score levels until at least two alternatives are in the runoff.
  AltSet runoff;
  AltSet rest = p.alternatives();
  while (runoff.size() < 2 && !rest.empty()) {
    const AltSet level = argmax(*r.scores, rest);
    runoff = runoff | level;
    rest = rest - level;
  }
  r.trace.push_back("round 1: runoff between " + set_text(p, runoff) + ", eliminated " +
                    set_text(p, p.alternatives() - runoff));
  const auto second = plurality_scores(p, runoff);
  r.winners = argmax(to_rationals(second), runoff);
  std::ostringstream line;
  line << "round 2:";
  for (int x : runoff.members()) line << ' ' << p.label(x) << '=' << second[x];
  r.trace.push_back(line.str());
  return r;
}

ChoiceResult stv(const Profile& p) {
  ChoiceResult r;
  AltSet active = p.alternatives();
  for (int round = 1;; ++round) {
    const auto s = to_rationals(plurality_scores(p, active));
    if (round == 1) r.scores = s;
    const AltSet lowest = argmin(s, active);
    std::ostringstream line;
    line << "round " << round << ":";
    for (int x : active.members()) line << ' ' << p.label(x) << '=' << s[x];
    line << "; eliminate " << set_text(p, lowest);
    r.trace.push_back(line.str());
    if ((active - lowest).empty()) {
      r.winners = active;
      return r;
    }
    active = active - lowest;
  }
}

ChoiceResult kemeny(const Profile& p, KemenyOptions opt) {
  if (p.m() > opt.max_m) throw BudgetExceeded("kemeny limited to m <= " + std::to_string(opt.max_m));
  std::vector<int> sup(p.m() * p.m(), 0);
  for (int x = 0; x < p.m(); ++x)
    for (int y = 0; y < p.m(); ++y)
      if (x != y) sup[x * p.m() + y] = support(p, x, y);
  ChoiceResult r;
  int best = -1;
  for (const auto& order : all_ballots(p.m())) {
    int d = 0;
    for (int i = 0; i < p.m(); ++i)
      for (int j = i + 1; j < p.m(); ++j) d += sup[order.at(j) * p.m() + order.at(i)];
    if (best < 0 || d < best) {
      best = d;
      r.orders.clear();
    }
    if (d == best) r.orders.push_back(order);
  }
  for (const auto& o : r.orders) r.winners = r.winners.with(o.top());
  r.distance = best;
  return r;
}

ChoiceResult dodgson(const Profile& p, DodgsonOptions opt) {
  const auto found = condorcet_deepening(p, Distance::swap, opt.max_budget, opt.max_profiles);
  ChoiceResult r;
  r.winners = found.winners;
  r.distance = found.budget;
  r.trace.push_back("swap budget " + std::to_string(found.budget) + ": " + render_set(p, r.winners));
  return r;
}

ChoiceResult odd_rule(const Profile& p) {
  if (p.m() != 2) throw DomainError("odd rule needs exactly two alternatives");
  ChoiceResult r;
  r.winners = AltSet::single(support(p, 0, 1) % 2 == 1 ? 0 : 1);
  return r;
}

bool is_single_peaked(const Ballot& b, const Ballot& axis) {
  // Walking down the ballot, the ranked set must stay a contiguous interval of the axis.
  const int peak = axis.position(b.top());
  int lo = peak, hi = peak;
  for (int k = 1; k < b.size(); ++k) {
    const int pos = axis.position(b.at(k));
    if (pos == lo - 1) lo = pos;
    else if (pos == hi + 1) hi = pos;
    else return false;
  }
  return true;
}

bool is_single_peaked(const Profile& p, const Ballot& axis) {
  if (axis.size() != p.m()) throw DomainError("axis length must equal m");
  for (const auto& b : p.ballots())
    if (!is_single_peaked(b, axis)) return false;
  return true;
}

ChoiceResult median_rule(const Profile& p, const Ballot& axis) {
  if (!is_single_peaked(p, axis)) throw DomainError("profile is not single-peaked with respect to the axis");
  std::vector<int> peaks;
  for (const auto& b : p.ballots()) peaks.push_back(axis.position(b.top()));
  std::sort(peaks.begin(), peaks.end());
  ChoiceResult r;
  const int n = p.n();
  if (n % 2 == 1) {
    r.winners = AltSet::single(axis.at(peaks[n / 2]));
  } else {
    r.winners = AltSet::single(axis.at(peaks[n / 2 - 1])).with(axis.at(peaks[n / 2]));
  }
  return r;
}

ChoiceResult constant_rule(const Profile& p, Alternative x) {
  if (x < 0 || x >= p.m()) throw DomainError("constant alternative out of range");
  ChoiceResult r;
  r.winners = AltSet::single(x);
  return r;
}

AltSet resolve(AltSet winners, TieBreak t) {
  if (t == TieBreak::lexicographic && !winners.empty()) return AltSet::single(winners.min());
  return winners;
}

Rule Rule::with_tiebreak(TieBreak t) const {
  Rule copy = *this;
  copy.tiebreak_ = t;
  return copy;
}

ScoreVector Rule::weights(int m) const {
  if (!positional_) throw DomainError("rule '" + name_ + "' is not a positional scoring rule");
  return weights_(m);
}

namespace {

int parse_int(std::string_view s, const char* what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw DomainError(std::string("invalid ") + what);
  return v;
}

Alternative find_label(std::string_view l, const std::vector<std::string>& labels) {
  auto it = std::find(labels.begin(), labels.end(), l);
  if (it == labels.end()) throw DomainError("unknown alternative '" + std::string(l) + "'");
  return static_cast<int>(it - labels.begin());
}

Rule positional_rule(std::string name, std::function<ScoreVector(int)> w) {
  return Rule(
      name, [w](const Profile& p) { return positional(p, w(p.m())); }, TieBreak::none, true, w);
}

}  // namespace

Rule make_rule(std::string_view spec, const std::vector<std::string>* labels) {
  const auto colon = spec.find(':');
  const std::string name(spec.substr(0, colon));
  const std::string_view params = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
  const std::string full(spec);
  auto no_params = [&] {
    if (!params.empty()) throw DomainError("rule '" + name + "' takes no parameters");
  };

  if (name == "plurality") {
    no_params();
    return Rule(full, plurality, TieBreak::none, true, plurality_vector);
  }
  if (name == "borda") {
    no_params();
    return positional_rule(full, borda_vector);
  }
  if (name == "veto") {
    no_params();
    return positional_rule(full, veto_vector);
  }
  if (name == "k-approval") {
    const int k = parse_int(params, "k-approval parameter");
    return positional_rule(full, [k](int m) { return k_approval_vector(m, k); });
  }
  if (name == "positional") {
    ScoreVector w;
    std::size_t s = 0;
    while (s <= params.size()) {
      auto comma = params.find(',', s);
      if (comma == std::string_view::npos) comma = params.size();
      w.push_back(parse_rational(params.substr(s, comma - s)));
      s = comma + 1;
    }
    return positional_rule(full, [w](int m) {
      if (static_cast<int>(w.size()) != m) throw DomainError("score vector length must equal m");
      return w;
    });
  }
  if (name == "quota") {
    const int q = parse_int(params, "quota");
    return Rule(full, [q](const Profile& p) { return quota_rule(p, q); });
  }
  if (name == "dictatorship") {
    const int i = params.empty() ? 0 : parse_int(params, "dictator index");
    return Rule(full, [i](const Profile& p) { return dictatorship(p, i); });
  }
  if (name == "constant") {
    const std::string l = params.empty() ? std::string("a") : std::string(params);
    const std::vector<std::string> lab = labels ? *labels : std::vector<std::string>{};
    return Rule(full, [l, lab](const Profile& p) {
      return constant_rule(p, lab.empty() ? p.index_of(l) : find_label(l, lab));
    });
  }
  if (name == "condorcet") {
    no_params();
    return Rule(full, condorcet_rule);
  }
  if (name == "copeland") {
    no_params();
    return Rule(full, copeland);
  }
  if (name == "symmetric-borda") {
    no_params();
    return Rule(full, symmetric_borda);
  }
  if (name == "runoff") {
    no_params();
    return Rule(full, plurality_runoff);
  }
  if (name == "stv") {
    no_params();
    return Rule(full, stv);
  }
  if (name == "kemeny") {
    no_params();
    return Rule(full, [](const Profile& p) { return kemeny(p); });
  }
  if (name == "dodgson") {
    no_params();
    return Rule(full, [](const Profile& p) { return dodgson(p); });
  }
  if (name == "odd") {
    no_params();
    return Rule(full, odd_rule);
  }
  if (name == "median") {
    if (params.empty()) {
      return Rule(full, [](const Profile& p) { return median_rule(p, Ballot::identity(p.m())); });
    }
    const std::string axis_text(params);
    return Rule(full, [axis_text](const Profile& p) { return median_rule(p, parse_ballot(p, axis_text)); });
  }
  throw DomainError("unknown rule '" + name + "'");
}

const std::vector<std::string>& rule_names() {
  static const std::vector<std::string> names = {
      "plurality", "borda",  "veto",  "k-approval:K", "positional:W1,W2,...", "quota:Q",       "dictatorship:I",
      "constant:X", "condorcet", "copeland", "symmetric-borda", "runoff", "stv", "kemeny", "dodgson", "odd",
      "median[:AXIS]"};
  return names;
}

}  // namespace scrutineer
