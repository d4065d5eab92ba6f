#include "scrutineer/multiwinner.hpp"

#include <algorithm>
#include <set>

#include "scrutineer/tournaments.hpp"

namespace scrutineer {

bool committee_less(Committee a, Committee b) { return a.members() < b.members(); }

namespace {

void check_k(const Profile& p, int k) {
  if (k < 1 || k > p.m()) throw DomainError("committee size must lie in [1, m]");
}

void normalize(std::vector<Committee>& cs) {
  std::sort(cs.begin(), cs.end(), committee_less);
  cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
}

void combinations(const std::vector<int>& pool, int k, std::size_t start, std::uint64_t acc, int taken,
                  std::vector<std::uint64_t>& out) {
  if (taken == k) {
    out.push_back(acc);
    return;
  }
  for (std::size_t i = start; i + (k - taken) <= pool.size(); ++i)
    combinations(pool, k, i + 1, acc | (std::uint64_t{1} << pool[i]), taken + 1, out);
}

// k-subsets of `pool` as bitmasks, in lexicographic order of members.
std::vector<std::uint64_t> subsets(const std::vector<int>& pool, int k) {
  std::vector<std::uint64_t> out;
  combinations(pool, k, 0, 0, 0, out);
  return out;
}

std::vector<Rational> scores_under(const Profile& p, const ScoreVector& w) {
  std::vector<Rational> s(p.m(), 0);
  for (const auto& b : p.ballots())
    for (int pos = 0; pos < p.m(); ++pos) s[b.at(pos)] += w[pos];
  return s;
}

}  // namespace

std::vector<Committee> all_committees(int m, int k, std::uint64_t budget) {
  if (k < 0 || k > m) throw DomainError("committee size must lie in [0, m]");
  BigInt count = 1;
  for (int i = 1; i <= k; ++i) count = count * (m - k + i) / i;
  if (count > budget) throw BudgetExceeded("number of committees exceeds budget");
  std::vector<int> pool(m);
  for (int x = 0; x < m; ++x) pool[x] = x;
  std::vector<Committee> out;
  for (auto bits : subsets(pool, k)) out.push_back(Committee(bits));
  return out;
}

CommitteeResult best_k(BestKScore s, const Profile& p, int k, std::optional<int> approvals) {
  check_k(p, k);
  ScoreVector w;
  switch (s) {
    case BestKScore::plurality:
      w = plurality_vector(p.m());
      break;
    case BestKScore::k_approval:
      w = k_approval_vector(p.m(), approvals.value_or(k));
      break;
    case BestKScore::borda:
      w = borda_vector(p.m());
      break;
  }
  const auto scores = scores_under(p, w);
  const WeakOrder order = WeakOrder::from_scores(scores);
  AltSet fixed;
  CommitteeResult r;
  for (AltSet tier : order.tiers()) {
    const int need = k - fixed.size();
    if (need == 0) break;
    if (tier.size() <= need) {
      fixed = fixed | tier;
      continue;
    }
    for (auto bits : subsets(tier.members(), need)) r.committees.push_back(fixed | Committee(bits));
    fixed = AltSet();
    break;
  }
  if (r.committees.empty()) r.committees.push_back(fixed);
  normalize(r.committees);
  return r;
}

CommitteeResult chamberlin_courant(const Profile& p, int k, const ScoreVector& w) {
  check_k(p, k);
  if (static_cast<int>(w.size()) != p.m()) throw DomainError("score vector length must equal m");
  CommitteeResult r;
  for (Committee c : all_committees(p.m(), k)) {
    Rational total = 0;
    for (const auto& b : p.ballots()) total += w[b.position(b.top_among(c))];
    if (!r.score || total > *r.score) {
      r.score = total;
      r.committees.clear();
    }
    if (total == *r.score) r.committees.push_back(c);
  }
  return r;
}

Rational harmonic(int t) {
  Rational h = 0;
  for (int i = 1; i <= t; ++i) h += Rational(1, i);
  return h;
}

Rational pav_score(const Profile& p, int k, Committee c) {
  Rational total = 0;
  for (const auto& b : p.ballots()) {
    int t = 0;
    for (int pos = 0; pos < k; ++pos) t += c.contains(b.at(pos)) ? 1 : 0;
    total += harmonic(t);
  }
  return total;
}

CommitteeResult pav_k(const Profile& p, int k) {
  check_k(p, k);
  CommitteeResult r;
  for (Committee c : all_committees(p.m(), k)) {
    const Rational total = pav_score(p, k, c);
    if (!r.score || total > *r.score) {
      r.score = total;
      r.committees.clear();
    }
    if (total == *r.score) r.committees.push_back(c);
  }
  return r;
}

namespace {

void sequential(const Profile& p, int k, TieBreak t, AltSet chosen, std::vector<Committee>& out) {
  if (chosen.size() == k) {
    out.push_back(chosen);
    return;
  }
  const AltSet active = p.alternatives() - chosen;
  const auto s = plurality_scores(p, active);
  int best = -1;
  for (int x : active.members()) best = std::max(best, s[x]);
  AltSet winners;
  for (int x : active.members())
    if (s[x] == best) winners = winners.with(x);
  for (int x : resolve(winners, t).members()) sequential(p, k, t, chosen.with(x), out);
}

}  // namespace

CommitteeResult sequential_plurality(const Profile& p, int k, TieBreak t) {
  check_k(p, k);
  CommitteeResult r;
  sequential(p, k, t, AltSet(), r.committees);
  normalize(r.committees);
  return r;
}

int droop_quota(int n, int k) { return n / (k + 1) + 1; }

namespace {

struct CstvState {
  AltSet elected;
  AltSet active;
  Coalition voters;
  auto operator<=>(const CstvState&) const = default;
};

struct Cstv {
  const Profile& p;
  int k;
  int q;
  CstvMode mode;
  std::uint64_t budget;
  std::uint64_t expanded = 0;
  std::set<CstvState> seen;
  CommitteeResult result;

  std::string names(AltSet s) const { return render_set(p, s); }

  std::vector<int> scores(const CstvState& st) const {
    std::vector<int> s(p.m(), 0);
    for (int i : st.voters.members()) ++s[p.ballot(i).top_among(st.active)];
    return s;
  }

  std::string score_line(const CstvState& st, const std::vector<int>& s) const {
    std::string line;
    for (int x : st.active.members()) line += (line.empty() ? "" : " ") + p.label(x) + "=" + std::to_string(s[x]);
    return line;
  }

  void explore(const CstvState& st, int stage) {
    if (mode == CstvMode::parallel) {
      if (!seen.insert(st).second) return;
      if (++expanded > budget) {
        result.exhausted = true;
        return;
      }
    }
    if (st.elected.size() == k) {
      result.committees.push_back(st.elected);
      return;
    }
    if (st.active.size() == k - st.elected.size()) {
      if (mode == CstvMode::canonical)
        result.trace.push_back("stage " + std::to_string(stage) + ": remaining " + names(st.active) + " fill the committee");
      result.committees.push_back(st.elected | st.active);
      return;
    }
    const auto s = scores(st);
    AltSet reach;
    int low = -1;
    for (int x : st.active.members()) {
      if (s[x] >= q) reach = reach.with(x);
      if (low < 0 || s[x] < low) low = s[x];
    }
    if (!reach.empty()) {
      for (int x : reach.members()) {
        std::vector<int> backers;
        for (int i : st.voters.members())
          if (p.ballot(i).top_among(st.active) == x) backers.push_back(i);
        const auto groups = subsets(backers, q);
        for (auto g : groups) {
          CstvState next{st.elected.with(x), st.active.without(x), st.voters - Coalition(g)};
          if (mode == CstvMode::canonical) {
            std::string who;
            for (int i : Coalition(g).members()) who += (who.empty() ? "" : ",") + std::to_string(i);
            result.trace.push_back("stage " + std::to_string(stage) + ": " + score_line(st, s) + "; elect " +
                                   p.label(x) + " removing voters " + who);
          }
          explore(next, stage + 1);
          if (mode == CstvMode::canonical || result.exhausted) return;
        }
      }
      return;
    }
    for (int y : st.active.members()) {
      if (s[y] != low) continue;
      if (mode == CstvMode::canonical)
        result.trace.push_back("stage " + std::to_string(stage) + ": " + score_line(st, s) + "; eliminate " + p.label(y));
      explore(CstvState{st.elected, st.active.without(y), st.voters}, stage + 1);
      if (mode == CstvMode::canonical || result.exhausted) return;
    }
  }
};

}  // namespace

CommitteeResult cstv(const Profile& p, int k, CstvMode mode, std::uint64_t branch_budget) {
  check_k(p, k);
  if (p.n() > 64) throw DomainError("committee STV supports at most 64 voters");
  Cstv run{p, k, droop_quota(p.n(), k), mode, branch_budget, 0, {}, {}};
  if (mode == CstvMode::canonical) run.result.trace.push_back("quota " + std::to_string(run.q));
  run.explore(CstvState{AltSet(), p.alternatives(), Coalition::all(p.n())}, 1);
  normalize(run.result.committees);
  return run.result;
}

std::vector<Committee> condorcet_committees(const Profile& p, int k) {
  check_k(p, k);
  std::vector<Committee> out;
  for (Committee c : all_committees(p.m(), k)) {
    bool ok = true;
    for (int x : c.members())
      for (int y : (p.alternatives() - c).members())
        if (support(p, x, y) < support(p, y, x)) ok = false;
    if (ok) out.push_back(c);
  }
  return out;
}

CommitteeRule make_committee_rule(std::string_view name) {
  const std::string n(name);
  auto wrap = [&](auto fn) { return CommitteeRule{n, fn}; };
  if (n == "best-plurality") return wrap([](const Profile& p, int k) { return best_k(BestKScore::plurality, p, k); });
  if (n == "best-approval") return wrap([](const Profile& p, int k) { return best_k(BestKScore::k_approval, p, k); });
  if (n == "best-borda") return wrap([](const Profile& p, int k) { return best_k(BestKScore::borda, p, k); });
  if (n == "chco") return wrap([](const Profile& p, int k) { return chamberlin_courant(p, k, borda_vector(p.m())); });
  if (n == "pav") return wrap([](const Profile& p, int k) { return pav_k(p, k); });
  if (n == "seq-plurality")
    return wrap([](const Profile& p, int k) { return sequential_plurality(p, k, TieBreak::none); });
  if (n == "seq-plurality-lex")
    return wrap([](const Profile& p, int k) { return sequential_plurality(p, k, TieBreak::lexicographic); });
  if (n == "cstv") return wrap([](const Profile& p, int k) { return cstv(p, k, CstvMode::canonical); });
  if (n == "cstv-parallel") return wrap([](const Profile& p, int k) { return cstv(p, k, CstvMode::parallel); });
  if (n == "condorcet-committee")
    return wrap([](const Profile& p, int k) {
      CommitteeResult r;
      r.committees = condorcet_committees(p, k);
      if (r.committees.empty()) r.committees = all_committees(p.m(), k);
      return r;
    });
  throw DomainError("unknown committee rule '" + n + "'");
}

CommitteeAxiom parse_committee_axiom(std::string_view s) {
  if (s == "STABLE" || s == "stable") return CommitteeAxiom::stable;
  if (s == "COMMITTEE_MONOTONIC" || s == "committee-monotonic") return CommitteeAxiom::committee_monotonic;
  throw DomainError("unknown committee axiom '" + std::string(s) + "'");
}

namespace {

bool extends(const std::vector<Committee>& small, const std::vector<Committee>& large, bool every_small) {
  // every_small: each small committee has a strict superset among `large`;
  // otherwise each large committee has a strict subset among `small`.
  auto strict_subset = [](Committee a, Committee b) { return a.is_subset_of(b) && a != b; };
  if (every_small) {
    for (auto c : small)
      if (std::none_of(large.begin(), large.end(), [&](Committee d) { return strict_subset(c, d); })) return false;
  } else {
    for (auto d : large)
      if (std::none_of(small.begin(), small.end(), [&](Committee c) { return strict_subset(c, d); })) return false;
  }
  return true;
}

}  // namespace

CommitteeCheck check_committee_axiom_on(const CommitteeRule& rule, CommitteeAxiom a, const std::vector<Profile>& domain,
                                        int k_max) {
  CommitteeCheck r;
  for (const auto& p : domain) {
    const int top = std::min(k_max, p.m());
    if (a == CommitteeAxiom::stable) {
      for (int k = 1; k <= top; ++k) {
        const auto cc = condorcet_committees(p, k);
        if (cc.empty()) continue;
        for (auto c : rule.fn(p, k).committees)
          if (std::find(cc.begin(), cc.end(), c) == cc.end()) {
            r = CommitteeCheck{false, p, k, "selected committee " + render_set(p, c) + " is not a weak Condorcet committee"};
            return r;
          }
      }
    } else {
      for (int k = 1; k < top; ++k) {
        const auto small = rule.fn(p, k).committees;
        const auto large = rule.fn(p, k + 1).committees;
        if (!extends(small, large, true)) {
          r = CommitteeCheck{false, p, k, "a size-" + std::to_string(k) + " committee has no extension at size " +
                                              std::to_string(k + 1)};
          return r;
        }
        if (!extends(small, large, false)) {
          r = CommitteeCheck{false, p, k, "a size-" + std::to_string(k + 1) + " committee contains no size-" +
                                              std::to_string(k) + " committee"};
          return r;
        }
      }
    }
  }
  return r;
}

CommitteeCheck check_committee_axiom(const CommitteeRule& rule, CommitteeAxiom a, int n, int m, int k_max) {
  return check_committee_axiom_on(rule, a, enumerate_profiles(n, m), k_max);
}

}  // namespace scrutineer
