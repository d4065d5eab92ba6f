#include <algorithm>
#include <map>
#include <numeric>

#include "scrutineer/axioms.hpp"
#include "scrutineer/parallel.hpp"
#include "scrutineer/tournaments.hpp"

namespace scrutineer {

namespace {

// Domain of a table cell: a subset of at most 128 value indices.
struct Dom {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;

  bool has(int v) const { return v < 64 ? (lo >> v) & 1U : (hi >> (v - 64)) & 1U; }
  void drop(int v) {
    if (v < 64)
      lo &= ~(std::uint64_t{1} << v);
    else
      hi &= ~(std::uint64_t{1} << (v - 64));
  }
  void add(int v) {
    if (v < 64)
      lo |= std::uint64_t{1} << v;
    else
      hi |= std::uint64_t{1} << (v - 64);
  }
  bool empty() const { return lo == 0 && hi == 0; }
  int count() const { return std::popcount(lo) + std::popcount(hi); }
  static Dom only(int v) {
    Dom d;
    d.add(v);
    return d;
  }
  template <class F>
  void each(F f) const {
    for (std::uint64_t b = lo; b; b &= b - 1) f(std::countr_zero(b));
    for (std::uint64_t b = hi; b; b &= b - 1) f(64 + std::countr_zero(b));
  }
  friend bool operator==(const Dom&, const Dom&) = default;
};

enum class EdgeKind { mapped, lift_base, lift_top, responsive_base, responsive_top, manipulation, independence, iia };

struct Edge {
  std::uint32_t to;
  EdgeKind kind;
  int a;  // map id, voter, alternative mask or x
  int b;  // y for pairwise edges
};

struct Problem {
  int n = 0;
  int m = 0;
  FunctionKind kind = FunctionKind::scf;
  std::vector<Axiom> axioms;
  bool has(Axiom a) const { return std::find(axioms.begin(), axioms.end(), a) != axioms.end(); }

  std::vector<AltSet> scf_values;
  std::vector<WeakOrder> spf_values;
  int values = 0;

  std::uint64_t profiles = 0;
  std::vector<Dom> initial;
  std::vector<std::vector<Edge>> edges;
  std::vector<std::vector<int>> value_maps;  // per relabelling, value -> value
  std::vector<std::uint32_t> order;
  std::vector<std::vector<int>> singleton_value;  // alternative -> value index (resolute/any)
  const DomainIndex* d = nullptr;

  bool compatible(const Edge& e, std::uint32_t from, int vf, int vt) const {
    switch (e.kind) {
      case EdgeKind::mapped:
        return value_maps[e.a][vf] == vt;
      case EdgeKind::lift_base:  // from = base, to = lift
        return monotone_ok(vf, vt, e.a, false);
      case EdgeKind::lift_top:  // from = lift, to = base
        return monotone_ok(vt, vf, e.a, false);
      case EdgeKind::responsive_base:
        return monotone_ok(vf, vt, e.a, true);
      case EdgeKind::responsive_top:
        return monotone_ok(vt, vf, e.a, true);
      case EdgeKind::manipulation: {
        const int of = scf_values[vf].min(), ot = scf_values[vt].min();
        return !d->ballot(from, e.a).prefers(ot, of) && !d->ballot(e.to, e.a).prefers(of, ot);
      }
      case EdgeKind::independence: {
        const AltSet sf = scf_values[vf], st = scf_values[vt];
        const int x = e.a, y = e.b;
        return !(sf.contains(x) && !sf.contains(y) && st.contains(y)) &&
               !(st.contains(x) && !st.contains(y) && sf.contains(y));
      }
      case EdgeKind::iia:
        return spf_values[vf].weakly_prefers(e.a, e.b) == spf_values[vt].weakly_prefers(e.a, e.b);
    }
    return true;
  }

  bool monotone_ok(int vbase, int vlift, int xmask, bool strict) const {
    const AltSet base = scf_values[vbase], lift = scf_values[vlift];
    for (int x : (base & AltSet(static_cast<std::uint64_t>(xmask))).members()) {
      if (strict ? lift != AltSet::single(x) : !lift.contains(x)) return false;
    }
    return true;
  }

};

bool scf_axiom(Axiom a) { return !is_spf_axiom(a); }

void build_values(Problem& pr) {
  if (pr.kind == FunctionKind::scf) {
    const bool resolute = pr.has(Axiom::resolute) || pr.has(Axiom::strategy_proof);
    if (resolute) {
      for (int x = 0; x < pr.m; ++x) pr.scf_values.push_back(AltSet::single(x));
    } else {
      for (std::uint64_t s = 1; s < (std::uint64_t{1} << pr.m); ++s) pr.scf_values.push_back(AltSet(s));
    }
    pr.values = static_cast<int>(pr.scf_values.size());
    pr.singleton_value.assign(pr.m, {});
    for (int v = 0; v < pr.values; ++v)
      if (pr.scf_values[v].size() == 1) pr.singleton_value[pr.scf_values[v].min()].push_back(v);
  } else {
    pr.spf_values = all_weak_orders(pr.m);
    pr.values = static_cast<int>(pr.spf_values.size());
  }
  if (pr.values > 128) throw BudgetExceeded("impossibility search supports at most 128 output values per profile");
}

bool unary_ok(const Problem& pr, std::uint64_t p, int v) {
  const DomainIndex& d = *pr.d;
  const int n = pr.n, m = pr.m;
  for (Axiom a : pr.axioms) {
    switch (a) {
      case Axiom::pareto:
        for (int x : pr.scf_values[v].members())
          for (int y = 0; y < m; ++y)
            if (y != x && d.coalition(p, y, x) == Coalition::all(n)) return false;
        break;
      case Axiom::unanimous: {
        const int x = d.ballot(p, 0).top();
        bool common = true;
        for (int i = 1; i < n && common; ++i) common = d.ballot(p, i).top() == x;
        if (common && pr.scf_values[v] != AltSet::single(x)) return false;
        break;
      }
      case Axiom::condorcet_consistent:
        for (int x = 0; x < m; ++x) {
          bool cw = true;
          for (int y = 0; y < m && cw; ++y)
            if (y != x && 2 * d.coalition(p, x, y).size() <= n) cw = false;
          if (cw && pr.scf_values[v] != AltSet::single(x)) return false;
        }
        break;
      case Axiom::pareto_spf:
        for (int x = 0; x < m; ++x)
          for (int y = 0; y < m; ++y)
            if (x != y && d.coalition(p, x, y) == Coalition::all(n) && !pr.spf_values[v].strictly_prefers(x, y))
              return false;
        break;
      default:
        break;
    }
  }
  return true;
}

bool is_lift(const Ballot& b, const Ballot& bp, Alternative x) {
  const int m = b.size();
  for (int y = 0; y < m; ++y) {
    if (y == x) continue;
    if (b.prefers(x, y) && !bp.prefers(x, y)) return false;
    for (int z = 0; z < m; ++z)
      if (z != x && z != y && b.prefers(y, z) != bp.prefers(y, z)) return false;
  }
  return true;
}

void add_edge(Problem& pr, std::uint64_t from, std::uint64_t to, EdgeKind k, int a, int b = 0) {
  pr.edges[from].push_back(Edge{static_cast<std::uint32_t>(to), k, a, b});
}

void build_edges(Problem& pr) {
  const DomainIndex& d = *pr.d;
  const int n = pr.n, m = pr.m;
  pr.edges.assign(pr.profiles, {});

  if (pr.has(Axiom::anonymous) || pr.has(Axiom::neutral)) {
    // Map 0 is the identity on values; then one per adjacent transposition of alternatives.
    std::vector<int> id(pr.values);
    std::iota(id.begin(), id.end(), 0);
    pr.value_maps.push_back(id);
  }
  if (pr.has(Axiom::anonymous))
    for (std::uint64_t p = 0; p < pr.profiles; ++p)
      for (int i = 0; i + 1 < n; ++i) {
        const auto q = d.swap_voters(p, i, i + 1);
        if (q != p) {
          add_edge(pr, p, q, EdgeKind::mapped, 0);
          add_edge(pr, q, p, EdgeKind::mapped, 0);
        }
      }
  if (pr.has(Axiom::neutral)) {
    for (int x = 0; x + 1 < m; ++x) {
      std::vector<int> rho(m);
      std::iota(rho.begin(), rho.end(), 0);
      std::swap(rho[x], rho[x + 1]);
      std::vector<int> vm(pr.values);
      for (int v = 0; v < pr.values; ++v) {
        AltSet img;
        for (int a : pr.scf_values[v].members()) img = img.with(rho[a]);
        vm[v] = static_cast<int>(std::find(pr.scf_values.begin(), pr.scf_values.end(), img) - pr.scf_values.begin());
      }
      pr.value_maps.push_back(vm);
      const int id = static_cast<int>(pr.value_maps.size()) - 1;
      const auto bm = d.ballot_map(rho);
      for (std::uint64_t p = 0; p < pr.profiles; ++p) {
        const auto q = d.map_ballots(p, bm);
        add_edge(pr, p, q, EdgeKind::mapped, id);  // transpositions are involutions
      }
    }
  }

  const bool mono = pr.has(Axiom::monotonic), resp = pr.has(Axiom::positively_responsive);
  if (mono || resp) {
    // lift[k*m + x]: ballots that are x-lifts of ballot k.
    std::vector<std::vector<int>> lift(d.ballots() * m);
    for (int k = 0; k < d.ballots(); ++k)
      for (int x = 0; x < m; ++x)
        for (int j = 0; j < d.ballots(); ++j)
          if (is_lift(d.ballot_at(k), d.ballot_at(j), x)) lift[k * m + x].push_back(j);
    for (std::uint64_t p = 0; p < pr.profiles; ++p) {
      std::map<std::uint64_t, int> masks;
      for (int x = 0; x < m; ++x) {
        std::vector<std::size_t> pos(n, 0);
        while (true) {
          std::uint64_t q = 0;
          for (int i = 0; i < n; ++i) q = q * d.ballots() + lift[d.digit(p, i) * m + x][pos[i]];
          if (q != p) masks[q] |= 1 << x;
          int i = n - 1;
          while (i >= 0 && ++pos[i] == lift[d.digit(p, i) * m + x].size()) pos[i--] = 0;
          if (i < 0) break;
        }
      }
      for (auto [q, mask] : masks) {
        if (mono) {
          add_edge(pr, p, q, EdgeKind::lift_base, mask);
          add_edge(pr, q, p, EdgeKind::lift_top, mask);
        }
        if (resp) {
          add_edge(pr, p, q, EdgeKind::responsive_base, mask);
          add_edge(pr, q, p, EdgeKind::responsive_top, mask);
        }
      }
    }
  }

  if (pr.has(Axiom::strategy_proof))
    for (std::uint64_t p = 0; p < pr.profiles; ++p)
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < d.ballots(); ++k) {
          const auto q = d.with_digit(p, i, k);
          if (q != p) add_edge(pr, p, q, EdgeKind::manipulation, i);
        }

  const bool ind = pr.has(Axiom::independent), iia = pr.has(Axiom::iia_spf);
  if (ind || iia) {
    for (int x = 0; x < m; ++x)
      for (int y = x + 1; y < m; ++y) {
        std::map<std::uint64_t, std::vector<std::uint64_t>> classes;
        for (std::uint64_t p = 0; p < pr.profiles; ++p) classes[d.coalition(p, x, y).bits()].push_back(p);
        for (const auto& [c, members] : classes)
          for (auto p : members)
            for (auto q : members)
              if (p != q) {
                if (ind) {
                  add_edge(pr, p, q, EdgeKind::independence, x, y);
                  add_edge(pr, p, q, EdgeKind::independence, y, x);
                }
                if (iia) {
                  add_edge(pr, p, q, EdgeKind::iia, x, y);
                  add_edge(pr, p, q, EdgeKind::iia, y, x);
                }
              }
      }
  }
}

std::vector<std::uint32_t> hamming_order(const DomainIndex& d) {
  std::vector<std::pair<int, std::uint32_t>> keyed;
  for (std::uint64_t p = 0; p < d.size(); ++p) {
    std::map<int, int> counts;
    int best = 0;
    for (int i = 0; i < d.n(); ++i) best = std::max(best, ++counts[d.digit(p, i)]);
    keyed.emplace_back(d.n() - best, static_cast<std::uint32_t>(p));
  }
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::uint32_t> out;
  for (auto [k, p] : keyed) out.push_back(p);
  return out;
}

FunctionTable table_of(const Problem& pr, const std::vector<int>& assignment) {
  FunctionTable t;
  t.n = pr.n;
  t.m = pr.m;
  t.kind = pr.kind;
  for (int v : assignment) {
    if (pr.kind == FunctionKind::scf)
      t.choice.push_back(pr.scf_values[v]);
    else
      t.preference.push_back(pr.spf_values[v]);
  }
  return t;
}

bool satisfies_all(const Problem& pr, const FunctionTable& t) {
  for (Axiom a : pr.axioms)
    if (!check_axiom(t, a).holds) return false;
  return true;
}

struct TaskResult {
  std::uint64_t census = 0;
  std::uint64_t nodes = 0;
  std::vector<FunctionTable> witnesses;
};

class Solver {
 public:
  Solver(const Problem& pr, std::uint64_t budget, std::size_t keep)
      : pr_(pr), dom_(pr.initial), value_(pr.profiles, -1), budget_(budget), keep_(keep) {}

  // Assigns the first variable to `v` and explores the rest.
  TaskResult run(int v) {
    const auto p = pr_.order[0];
    if (dom_[p].has(v) && assign(p, v)) dfs(1);
    return std::move(out_);
  }

 private:
  const Problem& pr_;
  std::vector<Dom> dom_;
  std::vector<int> value_;
  std::vector<std::pair<std::uint32_t, Dom>> trail_;
  std::uint64_t budget_;
  std::size_t keep_;
  TaskResult out_;

  bool assign(std::uint32_t p, int v) {
    trail_.emplace_back(p, dom_[p]);
    dom_[p] = Dom::only(v);
    value_[p] = v;
    for (const Edge& e : pr_.edges[p]) {
      if (value_[e.to] >= 0) {
        if (!pr_.compatible(e, p, v, value_[e.to])) return false;
        continue;
      }
      Dom next = dom_[e.to];
      dom_[e.to].each([&](int w) {
        if (!pr_.compatible(e, p, v, w)) next.drop(w);
      });
      if (next != dom_[e.to]) {
        trail_.emplace_back(e.to, dom_[e.to]);
        dom_[e.to] = next;
        if (next.empty()) return false;
      }
    }
    return non_imposed_possible();
  }

  void undo(std::size_t mark, std::uint32_t p) {
    while (trail_.size() > mark) {
      dom_[trail_.back().first] = trail_.back().second;
      trail_.pop_back();
    }
    value_[p] = -1;
  }

  bool non_imposed_possible() const {
    if (pr_.kind != FunctionKind::scf || !pr_.has(Axiom::non_imposed)) return true;
    for (int x = 0; x < pr_.m; ++x) {
      bool reachable = false;
      for (int v : pr_.singleton_value[x]) {
        for (std::uint64_t p = 0; p < pr_.profiles && !reachable; ++p) reachable = dom_[p].has(v);
        if (reachable) break;
      }
      if (!reachable) return false;
    }
    return true;
  }

  void dfs(std::size_t depth) {
    if (++out_.nodes > budget_)
      throw BudgetExceeded("impossibility search exceeded node budget after " + std::to_string(out_.nodes - 1) +
                           " nodes, " + std::to_string(out_.census) + " solutions so far");
    if (depth == pr_.order.size()) {
      const FunctionTable t = table_of(pr_, value_);
      if (!satisfies_all(pr_, t)) return;
      ++out_.census;
      if (out_.witnesses.size() < keep_) out_.witnesses.push_back(t);
      return;
    }
    const auto p = pr_.order[depth];
    const Dom choices = dom_[p];
    choices.each([&](int v) {
      const std::size_t mark = trail_.size();
      if (assign(p, v)) dfs(depth + 1);
      undo(mark, p);
    });
  }
};

SearchResult enumerate_all(const Problem& pr, const SearchOptions& opt, std::uint64_t tables) {
  SearchResult res;
  res.exhaustive_enumeration = true;
  res.tables_examined = tables;
  const int chunks = chunk_count(tables, opt.jobs);
  std::vector<TaskResult> parts(chunks);
  parallel_chunks(tables, opt.jobs, [&](std::uint64_t b, std::uint64_t e, int c) {
    std::vector<int> digits(pr.profiles);
    for (std::uint64_t t = b; t < e; ++t) {
      std::uint64_t r = t;
      for (std::uint64_t p = pr.profiles; p-- > 0;) {
        digits[p] = static_cast<int>(r % pr.values);
        r /= pr.values;
      }
      const FunctionTable table = table_of(pr, digits);
      if (!satisfies_all(pr, table)) continue;
      ++parts[c].census;
      if (parts[c].witnesses.size() < opt.max_witnesses) parts[c].witnesses.push_back(table);
    }
  });
  for (auto& part : parts) {
    res.census += part.census;
    for (auto& w : part.witnesses)
      if (res.witnesses.size() < opt.max_witnesses) res.witnesses.push_back(std::move(w));
  }
  return res;
}

}  // namespace

SearchResult impossibility_search(int n, int m, FunctionKind kind, const std::vector<Axiom>& axioms,
                                  SearchOptions opt) {
  if (n < 1 || m < 2) throw DomainError("impossibility search needs n >= 1 and m >= 2");
  for (Axiom a : axioms) {
    if (kind == FunctionKind::scf && !scf_axiom(a))
      throw DomainError(axiom_name(a) + " applies to social preference functions");
    if (kind == FunctionKind::spf && scf_axiom(a))
      throw DomainError(axiom_name(a) + " applies to social choice functions");
  }
  const DomainIndex d(n, m);
  Problem pr;
  pr.n = n;
  pr.m = m;
  pr.kind = kind;
  pr.axioms = axioms;
  pr.d = &d;
  pr.profiles = d.size();
  build_values(pr);

  // values^profiles, saturating above the enumeration limit.
  std::uint64_t tables = 1;
  bool small = true;
  for (std::uint64_t p = 0; p < pr.profiles && small; ++p) {
    if (tables > opt.enumeration_limit / static_cast<std::uint64_t>(pr.values)) small = false;
    tables *= static_cast<std::uint64_t>(pr.values);
  }
  if (small && tables <= opt.enumeration_limit) return enumerate_all(pr, opt, tables);

  pr.initial.assign(pr.profiles, Dom{});
  for (std::uint64_t p = 0; p < pr.profiles; ++p)
    for (int v = 0; v < pr.values; ++v)
      if (unary_ok(pr, p, v)) pr.initial[p].add(v);
  build_edges(pr);
  pr.order = hamming_order(d);

  SearchResult res;
  std::vector<int> first;
  pr.initial[pr.order[0]].each([&](int v) { first.push_back(v); });
  std::vector<TaskResult> parts(first.size());
  // One task per value of the first variable; tasks are distributed over workers.
  parallel_chunks(first.size(), opt.jobs, [&](std::uint64_t b, std::uint64_t e, int) {
    for (std::uint64_t t = b; t < e; ++t) {
      Solver s(pr, opt.node_budget, opt.max_witnesses);
      parts[t] = s.run(first[t]);
    }
  });
  for (auto& part : parts) {
    res.census += part.census;
    res.nodes += part.nodes;
    for (auto& w : part.witnesses)
      if (res.witnesses.size() < opt.max_witnesses) res.witnesses.push_back(std::move(w));
  }
  if (res.nodes > opt.node_budget) throw BudgetExceeded("impossibility search exceeded node budget");
  return res;
}

}  // namespace scrutineer
