#include "scrutineer/consensus.hpp"

#include <algorithm>
#include <map>

#include "scrutineer/tournaments.hpp"

namespace scrutineer {

ConsensusClass parse_consensus_class(std::string_view s) {
  if (s == "u" || s == "unanimous") return ConsensusClass::unanimous;
  if (s == "s" || s == "strong-unanimous") return ConsensusClass::strong_unanimous;
  if (s == "c" || s == "condorcet") return ConsensusClass::condorcet;
  throw DomainError("unknown consensus class '" + std::string(s) + "'");
}

Distance parse_distance(std::string_view s) {
  if (s == "swap") return Distance::swap;
  if (s == "discrete") return Distance::discrete;
  throw DomainError("unknown distance '" + std::string(s) + "'");
}

int swap_distance(const Ballot& a, const Ballot& b) {
  if (a.size() != b.size()) throw DomainError("ballots of different length");
  int d = 0;
  for (int i = 0; i < a.size(); ++i)
    for (int j = i + 1; j < a.size(); ++j)
      if (b.prefers(a.at(j), a.at(i))) ++d;
  return d;
}

int discrete_distance(const Ballot& a, const Ballot& b) {
  if (a.size() != b.size()) throw DomainError("ballots of different length");
  return a == b ? 0 : 1;
}

int distance(Distance d, const Ballot& a, const Ballot& b) {
  return d == Distance::swap ? swap_distance(a, b) : discrete_distance(a, b);
}

int kemeny_distance(const Ballot& order, const Profile& p) {
  int total = 0;
  for (const auto& b : p.ballots()) total += swap_distance(b, order);
  return total;
}

bool in_class(const Profile& p, ConsensusClass c) {
  switch (c) {
    case ConsensusClass::unanimous:
      for (const auto& b : p.ballots())
        if (b.top() != p.ballot(0).top()) return false;
      return true;
    case ConsensusClass::strong_unanimous:
      for (const auto& b : p.ballots())
        if (b != p.ballot(0)) return false;
      return true;
    case ConsensusClass::condorcet:
      return !condorcet_winner(p, false).empty();
  }
  return false;
}

namespace {

struct Deepening {
  const Profile& p;
  int m;
  int maxd;
  bool collect;
  std::vector<std::vector<std::vector<int>>> by_distance;  // voter -> distance -> ballot indices
  std::vector<int> current;
  std::vector<int> sup;
  DeepeningResult result;
  std::uint64_t visited = 0;
  std::uint64_t limit;

  Deepening(const Profile& prof, Distance d, std::uint64_t max_profiles, bool keep)
      : p(prof),
        m(prof.m()),
        maxd(d == Distance::swap ? prof.m() * (prof.m() - 1) / 2 : 1),
        collect(keep),
        sup(prof.m() * prof.m(), 0),
        limit(max_profiles) {
    const auto& all = all_ballots(m);
    std::map<std::size_t, std::vector<std::vector<int>>> cache;
    for (const auto& b : p.ballots()) {
      const auto key = ballot_index(b);
      auto it = cache.find(key);
      if (it == cache.end()) {
        std::vector<std::vector<int>> groups(maxd + 1);
        for (std::size_t k = 0; k < all.size(); ++k) groups[distance(d, b, all[k])].push_back(static_cast<int>(k));
        it = cache.emplace(key, std::move(groups)).first;
      }
      by_distance.push_back(it->second);
      current.push_back(static_cast<int>(key));
      add(b, 1);
    }
  }

  void add(const Ballot& b, int sign) {
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) sup[b.at(i) * m + b.at(j)] += sign;
  }

  void leaf() {
    if (++visited > limit) throw BudgetExceeded("condorcet consensus search exceeded its profile budget");
    for (int x = 0; x < m; ++x) {
      bool cw = true;
      for (int y = 0; y < m && cw; ++y)
        if (y != x && 2 * sup[x * m + y] <= p.n()) cw = false;
      if (cw) {
        result.winners = result.winners.with(x);
        if (collect) result.profiles.push_back(current);
        return;
      }
    }
  }

  template <class F>
  void visit(int voter, int k, F&& next) {
    const int old = current[voter];
    if (k == old) {
      next();
      return;
    }
    const auto& all = all_ballots(m);
    add(all[old], -1);
    add(all[k], 1);
    current[voter] = k;
    next();
    current[voter] = old;
    add(all[k], -1);
    add(all[old], 1);
  }

  void dfs(int voter, int remaining) {
    if (voter == p.n() - 1) {
      if (remaining > maxd) return;
      for (int k : by_distance[voter][remaining]) visit(voter, k, [&] { leaf(); });
      return;
    }
    const int later = (p.n() - 1 - voter) * maxd;
    for (int d = std::max(0, remaining - later); d <= std::min(remaining, maxd); ++d)
      for (int k : by_distance[voter][d]) visit(voter, k, [&] { dfs(voter + 1, remaining - d); });
  }
};

}  // namespace

DeepeningResult condorcet_deepening(const Profile& p, Distance d, int max_budget, std::uint64_t max_profiles,
                                    bool collect) {
  Deepening search(p, d, max_profiles, collect);
  const int cap = std::min(max_budget, p.n() * search.maxd);
  for (int budget = 0; budget <= cap; ++budget) {
    search.dfs(0, budget);
    if (!search.result.winners.empty()) {
      search.result.budget = budget;
      return std::move(search.result);
    }
  }
  throw BudgetExceeded("condorcet consensus search exceeded distance budget " + std::to_string(max_budget));
}

ConsensusResult closest_consensus(const Profile& p, ConsensusClass c, Distance d, ConsensusOptions opt) {
  ConsensusResult out;
  const auto& all = all_ballots(p.m());
  auto keep = [&](Profile q) {
    if (out.minimizers.size() >= opt.max_minimizers) throw BudgetExceeded("too many minimizing consensus profiles");
    out.minimizers.push_back(std::move(q));
  };

  if (c == ConsensusClass::unanimous) {
    // Per-voter decomposition: each voter moves the target to the top.
    std::vector<int> cost(p.m(), 0);
    for (int x = 0; x < p.m(); ++x)
      for (const auto& b : p.ballots()) cost[x] += d == Distance::swap ? rank_of(b, x) - 1 : (b.top() == x ? 0 : 1);
    out.distance = *std::min_element(cost.begin(), cost.end());
    for (int x = 0; x < p.m(); ++x) {
      if (cost[x] != out.distance) continue;
      out.winners = out.winners.with(x);
      std::vector<Ballot> ballots;
      for (const auto& b : p.ballots()) ballots.push_back(b.with_top(x));
      keep(Profile(p.labels(), std::move(ballots)));
    }
    return out;
  }

  if (c == ConsensusClass::strong_unanimous) {
    if (p.m() > 8) throw BudgetExceeded("strong unanimity search limited to m <= 8");
    int best = -1;
    std::vector<const Ballot*> best_orders;
    for (const auto& order : all) {
      int cost = 0;
      for (const auto& b : p.ballots()) cost += distance(d, b, order);
      if (best < 0 || cost < best) {
        best = cost;
        best_orders.clear();
      }
      if (cost == best) best_orders.push_back(&order);
    }
    out.distance = best;
    for (const Ballot* o : best_orders) {
      out.winners = out.winners.with(o->top());
      keep(Profile(p.labels(), std::vector<Ballot>(p.n(), *o)));
    }
    return out;
  }

  auto found = condorcet_deepening(p, d, opt.max_budget, 50'000'000, true);
  out.distance = found.budget;
  out.winners = found.winners;
  for (const auto& idx : found.profiles) {
    std::vector<Ballot> ballots;
    for (int k : idx) ballots.push_back(all[k]);
    keep(Profile(p.labels(), std::move(ballots)));
  }
  return out;
}

}  // namespace scrutineer
