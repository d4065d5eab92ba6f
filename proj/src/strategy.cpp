#include "scrutineer/strategy.hpp"

#include <algorithm>
#include <deque>

#include "scrutineer/parallel.hpp"
#include "scrutineer/tournaments.hpp"

namespace scrutineer {

namespace {

Alternative resolute_choice(const Rule& rule, const Profile& p) {
  const AltSet out = rule.choose(p);
  if (out.size() != 1) throw DomainError("rule '" + rule.name() + "' is not resolute here; apply a tie-break");
  return out.min();
}

Rational positional_score(const Profile& p, const ScoreVector& w, Alternative x) {
  Rational s = 0;
  for (const auto& b : p.ballots()) s += w[b.position(x)];
  return s;
}

}  // namespace

std::optional<ManipulationWitness> find_manipulation(const Rule& rule, const Profile& p, Voter i,
                                                     std::optional<Alternative> target) {
  if (i < 0 || i >= p.n()) throw DomainError("voter index out of range");
  const Ballot& truthful = p.ballot(i);
  const Alternative honest = resolute_choice(rule, p);
  for (const auto& b : all_ballots(p.m())) {
    if (b == truthful) continue;
    const Alternative out = resolute_choice(rule, p.with_ballot(i, b));
    if (truthful.prefers(out, honest) && (!target || out == *target))
      return ManipulationWitness{i, truthful, b, honest, out};
  }
  return std::nullopt;
}

std::optional<Ballot> greedy_manipulation(const Rule& rule, const Profile& others, Alternative x) {
  if (!rule.is_positional() || rule.tiebreak() != TieBreak::lexicographic)
    throw DomainError("greedy manipulation needs a positional scoring rule with lexicographic tie-break");
  const int m = others.m();
  if (x < 0 || x >= m) throw DomainError("target out of range");
  const ScoreVector w = rule.weights(m);
  std::vector<Rational> base(m, 0);
  for (int y = 0; y < m; ++y) base[y] = positional_score(others, w, y);
  const Rational x_total = base[x] + w[0];

  std::vector<Alternative> order{x};
  AltSet placed = AltSet::single(x);
  for (int k = 1; k < m; ++k) {
    std::optional<Alternative> pick;
    for (int y = 0; y < m && !pick; ++y) {
      if (placed.contains(y)) continue;
      const Rational y_total = base[y] + w[k];
      const bool displaces = y_total > x_total || (y_total == x_total && y < x);
      if (!displaces) pick = y;
    }
    if (!pick) return std::nullopt;
    order.push_back(*pick);
    placed = placed.with(*pick);
  }
  return Ballot(order);
}

std::optional<Ballot> dominating_manipulation(const Rule& rule, Voter voter, const std::vector<Profile>& info_set,
                                              std::uint64_t budget) {
  if (info_set.empty()) throw DomainError("information set is empty");
  const int m = info_set.front().m();
  if (voter < 0 || voter >= info_set.front().n()) throw DomainError("voter index out of range");
  const Ballot truthful = info_set.front().ballot(voter);
  for (const auto& p : info_set)
    if (p.m() != m || p.n() <= voter || p.ballot(voter) != truthful)
      throw DomainError("information set profiles must agree on the voter's ballot");
  if (info_set.size() * factorial(m) > budget) throw BudgetExceeded("dominating manipulation search exceeds budget");

  std::vector<Alternative> honest;
  for (const auto& p : info_set) honest.push_back(resolute_choice(rule, p));
  for (const auto& b : all_ballots(m)) {
    if (b == truthful) continue;
    bool never_worse = true, sometimes_better = false;
    for (std::size_t k = 0; k < info_set.size() && never_worse; ++k) {
      const Alternative out = resolute_choice(rule, info_set[k].with_ballot(voter, b));
      if (truthful.prefers(honest[k], out)) never_worse = false;
      if (truthful.prefers(out, honest[k])) sometimes_better = true;
    }
    if (never_worse && sometimes_better) return b;
  }
  return std::nullopt;
}

std::vector<Ballot> single_peaked_axes(const Profile& p, int max_m) {
  if (p.m() > max_m) throw BudgetExceeded("axis scan limited to m <= " + std::to_string(max_m));
  std::vector<Ballot> out;
  for (const auto& axis : all_ballots(p.m()))
    if (is_single_peaked(p, axis)) out.push_back(axis);
  return out;
}

std::vector<Ballot> single_peaked_ballots(const Ballot& axis) {
  std::vector<Ballot> out;
  for (const auto& b : all_ballots(axis.size()))
    if (is_single_peaked(b, axis)) out.push_back(b);
  return out;
}

BlackReport black_suite(int n, int m, std::uint64_t guard) {
  if (n < 1 || m < 1) throw DomainError("black suite needs n >= 1 and m >= 1");
  const Ballot axis = Ballot::identity(m);
  const auto sp = single_peaked_ballots(axis);
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    if (total > guard / sp.size()) throw BudgetExceeded("single-peaked domain exceeds guard");
    total *= sp.size();
  }
  BlackReport r;
  r.n = n;
  r.m = m;
  r.profiles = total;
  const bool weak = n % 2 == 0;
  for (std::uint64_t k = 0; k < total; ++k) {
    std::vector<Ballot> ballots(n);
    std::uint64_t rest = k;
    for (int i = n - 1; i >= 0; --i) {
      ballots[i] = sp[rest % sp.size()];
      rest /= sp.size();
    }
    const Profile p(m, ballots);
    if (!is_transitive(majority_graph(p, weak)) && r.transitive) {
      r.transitive = false;
      r.transitivity_failure = p;
    }
    const AltSet med = median_rule(p, axis).winners;
    const AltSet cw = condorcet_winner(p, weak);
    const bool agrees = weak ? med.is_subset_of(cw) : med == cw;
    if (!agrees && r.median_condorcet) {
      r.median_condorcet = false;
      r.median_failure = p;
    }
    if (!weak && r.strategyproof) {
      const Alternative honest = med.min();
      for (int i = 0; i < n && r.strategyproof; ++i)
        for (const auto& b : sp) {
          if (b == p.ballot(i)) continue;
          const Alternative out = median_rule(p.with_ballot(i, b), axis).winners.min();
          if (p.ballot(i).prefers(out, honest)) {
            r.strategyproof = false;
            r.manipulation_failure = p;
            break;
          }
        }
    }
  }
  return r;
}

Ballot strategy_ballot(const VotingGame& g, Voter i, int s) {
  if (g.space == StrategySpace::top_only) return g.truth.ballot(i).with_top(s);
  return all_ballots(g.truth.m())[s];
}

namespace {

std::vector<int> digits_of(std::uint64_t node, int n, int base) {
  std::vector<int> d(n);
  for (int i = n - 1; i >= 0; --i) {
    d[i] = static_cast<int>(node % base);
    node /= base;
  }
  return d;
}

}  // namespace

Profile strategy_profile(const VotingGame& g, const ResponseGraph& graph, std::uint32_t node) {
  const auto d = digits_of(node, graph.n, graph.strategies);
  std::vector<Ballot> ballots;
  for (int i = 0; i < graph.n; ++i) ballots.push_back(strategy_ballot(g, i, d[i]));
  return Profile(g.truth.labels(), std::move(ballots));
}

ResponseGraph best_response_graph(const VotingGame& g, bool best_only, std::uint64_t guard) {
  const int n = g.truth.n(), m = g.truth.m();
  ResponseGraph graph;
  graph.n = n;
  graph.strategies = g.space == StrategySpace::top_only ? m : static_cast<int>(factorial(m));
  std::uint64_t nodes = 1;
  for (int i = 0; i < n; ++i) {
    if (nodes > guard / graph.strategies) throw BudgetExceeded("strategy-profile space exceeds guard");
    nodes *= graph.strategies;
  }
  graph.outcome.resize(nodes);
  for (std::uint64_t u = 0; u < nodes; ++u)
    graph.outcome[u] = resolute_choice(g.rule, strategy_profile(g, graph, static_cast<std::uint32_t>(u)));

  std::uint64_t truthful = 0;
  for (int i = 0; i < n; ++i) {
    const int s = g.space == StrategySpace::top_only ? g.truth.ballot(i).top()
                                                     : static_cast<int>(ballot_index(g.truth.ballot(i)));
    truthful = truthful * graph.strategies + s;
  }
  graph.truthful = static_cast<std::uint32_t>(truthful);

  graph.edges.resize(nodes);
  std::vector<std::uint64_t> weight(n, 1);
  for (int i = n - 2; i >= 0; --i) weight[i] = weight[i + 1] * graph.strategies;
  for (std::uint64_t u = 0; u < nodes; ++u) {
    const auto d = digits_of(u, n, graph.strategies);
    for (int i = 0; i < n; ++i) {
      const Ballot& pref = g.truth.ballot(i);
      std::vector<std::uint32_t> better;
      std::optional<Alternative> best;
      for (int s = 0; s < graph.strategies; ++s) {
        if (s == d[i]) continue;
        const std::uint64_t v = u - d[i] * weight[i] + s * weight[i];
        const Alternative o = graph.outcome[v];
        if (!pref.prefers(o, graph.outcome[u])) continue;
        better.push_back(static_cast<std::uint32_t>(v));
        if (!best || pref.prefers(o, *best)) best = o;
      }
      for (auto v : better)
        if (!best_only || graph.outcome[v] == *best) graph.edges[u].push_back(v);
    }
    if (graph.edges[u].empty()) graph.sinks.push_back(static_cast<std::uint32_t>(u));
  }
  return graph;
}

std::vector<std::uint32_t> reachable_equilibria(const ResponseGraph& graph) {
  std::vector<char> seen(graph.outcome.size(), 0);
  std::deque<std::uint32_t> queue{graph.truthful};
  seen[graph.truthful] = 1;
  std::vector<std::uint32_t> out;
  while (!queue.empty()) {
    const auto u = queue.front();
    queue.pop_front();
    if (graph.edges[u].empty()) out.push_back(u);
    for (auto v : graph.edges[u])
      if (!seen[v]) {
        seen[v] = 1;
        queue.push_back(v);
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

PoaResult dynamic_poa(const Rule& rule, int n, int m, StrategySpace space, bool best_only, int jobs) {
  if (!rule.is_positional() || rule.tiebreak() != TieBreak::lexicographic)
    throw DomainError("price of anarchy needs a positional scoring rule with lexicographic tie-break");
  const ProfileSpace domain(n, m);
  const ScoreVector w = rule.weights(m);

  struct Best {
    std::optional<Rational> value;
    std::optional<Profile> truth;
    std::optional<Profile> equilibrium;
  };
  std::vector<Best> parts(chunk_count(domain.size(), jobs));
  parallel_chunks(domain.size(), jobs, [&](std::uint64_t b, std::uint64_t e, int c) {
    for (std::uint64_t k = b; k < e; ++k) {
      const VotingGame g{domain.at(k), rule, space};
      const ResponseGraph graph = best_response_graph(g, best_only);
      const Rational truthful_score = positional_score(g.truth, w, graph.outcome[graph.truthful]);
      for (auto ne : reachable_equilibria(graph)) {
        const Profile eq = strategy_profile(g, graph, ne);
        const Rational eq_score = positional_score(eq, w, graph.outcome[ne]);
        if (eq_score == 0) continue;
        const Rational ratio = truthful_score / eq_score;
        if (!parts[c].value || ratio < *parts[c].value) {
          parts[c].value = ratio;
          parts[c].truth = g.truth;
          parts[c].equilibrium = eq;
        }
      }
    }
  });
  PoaResult r;
  r.profiles = domain.size();
  for (auto& part : parts)
    if (part.value && (!r.value || *part.value < *r.value)) {
      r.value = part.value;
      r.truth = part.truth;
      r.equilibrium = part.equilibrium;
    }
  return r;
}

}  // namespace scrutineer
