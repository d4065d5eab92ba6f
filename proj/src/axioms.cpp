#include "scrutineer/axioms.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "scrutineer/parallel.hpp"
#include "scrutineer/tournaments.hpp"

namespace scrutineer {

namespace {

const std::vector<std::pair<Axiom, std::string>>& axiom_table() {
  static const std::vector<std::pair<Axiom, std::string>> t = {
      {Axiom::anonymous, "ANONYMOUS"},
      {Axiom::neutral, "NEUTRAL"},
      {Axiom::non_dictatorial, "NON_DICTATORIAL"},
      {Axiom::pareto, "PARETO"},
      {Axiom::unanimous, "UNANIMOUS"},
      {Axiom::monotonic, "MONOTONIC"},
      {Axiom::positively_responsive, "POSITIVELY_RESPONSIVE"},
      {Axiom::non_imposed, "NON_IMPOSED"},
      {Axiom::resolute, "RESOLUTE"},
      {Axiom::independent, "INDEPENDENT"},
      {Axiom::condorcet_consistent, "CONDORCET_CONSISTENT"},
      {Axiom::liberal, "LIBERAL"},
      {Axiom::strategy_proof, "STRATEGY_PROOF"},
      {Axiom::iia_spf, "IIA_SPF"},
      {Axiom::pareto_spf, "PARETO_SPF"},
      {Axiom::non_dictatorial_spf, "NON_DICTATORIAL_SPF"},
  };
  return t;
}

}  // namespace

Axiom parse_axiom(std::string_view s) {
  std::string upper;
  for (char c : s) upper += (c == '-') ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  for (const auto& [a, name] : axiom_table())
    if (name == upper) return a;
  throw DomainError("unknown axiom '" + std::string(s) + "'");
}

std::string axiom_name(Axiom a) {
  for (const auto& [x, name] : axiom_table())
    if (x == a) return name;
  return "?";
}

bool is_spf_axiom(Axiom a) {
  return a == Axiom::iia_spf || a == Axiom::pareto_spf || a == Axiom::non_dictatorial_spf;
}

const std::vector<Axiom>& all_axioms() {
  static const std::vector<Axiom> v = [] {
    std::vector<Axiom> out;
    for (const auto& e : axiom_table()) out.push_back(e.first);
    return out;
  }();
  return v;
}

// ---------------------------------------------------------------------------
// DomainIndex

DomainIndex::DomainIndex(int n, int m, std::uint64_t guard)
    : n_(n), m_(m), space_(n, m, guard), all_(&all_ballots(m)), pow_(n) {
  size_ = space_.size();
  std::uint64_t w = 1;
  for (int i = n - 1; i >= 0; --i) {
    pow_[i] = w;
    w *= all_->size();
  }
}

int DomainIndex::digit(std::uint64_t p, int voter) const {
  return static_cast<int>((p / pow_[voter]) % all_->size());
}

std::uint64_t DomainIndex::with_digit(std::uint64_t p, int voter, int ballot) const {
  return p - static_cast<std::uint64_t>(digit(p, voter)) * pow_[voter] + static_cast<std::uint64_t>(ballot) * pow_[voter];
}

Coalition DomainIndex::coalition(std::uint64_t p, Alternative x, Alternative y) const {
  Coalition c;
  for (int i = 0; i < n_; ++i)
    if (ballot(p, i).prefers(x, y)) c = c.with(i);
  return c;
}

std::uint64_t DomainIndex::swap_voters(std::uint64_t p, int i, int j) const {
  const int di = digit(p, i), dj = digit(p, j);
  return with_digit(with_digit(p, i, dj), j, di);
}

std::uint64_t DomainIndex::map_ballots(std::uint64_t p, const std::vector<int>& map) const {
  std::uint64_t q = 0;
  for (int i = 0; i < n_; ++i) q = q * all_->size() + map[digit(p, i)];
  return q;
}

std::vector<int> DomainIndex::ballot_map(std::span<const int> rho) const {
  std::vector<int> out;
  for (const auto& b : *all_) out.push_back(static_cast<int>(ballot_index(permute_ballot(b, rho))));
  return out;
}

Profile DomainIndex::profile(std::uint64_t p) const { return space_.at(p); }

// ---------------------------------------------------------------------------
// Tabulation

FunctionTable tabulate(const Rule& rule, int n, int m, int jobs) {
  const ProfileSpace space(n, m);
  FunctionTable t;
  t.n = n;
  t.m = m;
  t.kind = FunctionKind::scf;
  t.choice.resize(space.size());
  parallel_chunks(space.size(), jobs, [&](std::uint64_t b, std::uint64_t e, int) {
    for (std::uint64_t k = b; k < e; ++k) t.choice[k] = rule.choose(space.at(k));
  });
  return t;
}

WeakOrder spf_of(const Rule& rule, const Profile& p) {
  std::vector<AltSet> tiers;
  AltSet remaining = p.alternatives();
  while (!remaining.empty()) {
    if (remaining.size() == 1) {
      tiers.push_back(remaining);
      break;
    }
    const auto members = remaining.members();
    const AltSet local = rule.choose(restrict(p, remaining));
    AltSet chosen;
    for (int k : local.members()) chosen = chosen.with(members[k]);
    if (chosen.empty()) throw DomainError("rule returned an empty choice");
    tiers.push_back(chosen);
    remaining = remaining - chosen;
  }
  return WeakOrder(std::move(tiers));
}

FunctionTable tabulate_spf(const Rule& rule, int n, int m, int jobs) {
  const ProfileSpace space(n, m);
  FunctionTable t;
  t.n = n;
  t.m = m;
  t.kind = FunctionKind::spf;
  t.preference.resize(space.size());
  parallel_chunks(space.size(), jobs, [&](std::uint64_t b, std::uint64_t e, int) {
    for (std::uint64_t k = b; k < e; ++k) t.preference[k] = spf_of(rule, space.at(k));
  });
  return t;
}

FunctionTable dictatorship_spf(int n, int m, Voter i) {
  if (i < 0 || i >= n) throw DomainError("dictator index out of range");
  const DomainIndex d(n, m);
  FunctionTable t;
  t.n = n;
  t.m = m;
  t.kind = FunctionKind::spf;
  for (std::uint64_t p = 0; p < d.size(); ++p) t.preference.push_back(WeakOrder::from_ballot(d.ballot(p, i)));
  return t;
}

bool table_matches(const FunctionTable& t, const Rule& rule) {
  const ProfileSpace space(t.n, t.m);
  for (std::uint64_t k = 0; k < space.size(); ++k) {
    if (t.kind == FunctionKind::scf) {
      if (rule.choose(space.at(k)) != t.choice[k]) return false;
    } else if (spf_of(rule, space.at(k)) != t.preference[k]) {
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Shared helpers

namespace {

AltSet map_set(AltSet s, std::span<const int> rho) {
  AltSet out;
  for (int x : s.members()) out = out.with(rho[x]);
  return out;
}

std::vector<int> transposition(int size, int i) {
  std::vector<int> v(size);
  std::iota(v.begin(), v.end(), 0);
  std::swap(v[i], v[i + 1]);
  return v;
}

// Ballot b' keeps the relative order of everything but x and ranks x at
// least as high against every y as b does.
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

// Coalition-level side conditions of monotonicity, checked literally.
bool lift_conditions(const Profile& p, const Profile& q, Alternative x) {
  for (int y = 0; y < p.m(); ++y) {
    if (y == x) continue;
    if (!supporters(p, x, y).is_subset_of(supporters(q, x, y))) return false;
    for (int z = 0; z < p.m(); ++z)
      if (z != x && z != y && supporters(p, y, z) != supporters(q, y, z)) return false;
  }
  return true;
}

std::optional<Alternative> common_top(const Profile& p) {
  const Alternative x = p.ballot(0).top();
  for (const auto& b : p.ballots())
    if (b.top() != x) return std::nullopt;
  return x;
}

std::optional<Alternative> dominator(const Profile& p, Alternative x) {
  for (int y = 0; y < p.m(); ++y)
    if (y != x && support(p, y, x) == p.n()) return y;
  return std::nullopt;
}

// First violation over [0, size) in index order, searched in parallel chunks.
template <class Fn>
std::optional<Witness> first_violation(std::uint64_t size, int jobs, Fn fn) {
  const int chunks = chunk_count(size, jobs);
  std::vector<std::optional<Witness>> found(chunks);
  parallel_chunks(size, jobs, [&](std::uint64_t b, std::uint64_t e, int c) {
    for (std::uint64_t p = b; p < e; ++p)
      if (auto w = fn(p)) {
        found[c] = std::move(w);
        return;
      }
  });
  for (auto& w : found)
    if (w) return w;
  return std::nullopt;
}

CheckReport from_witness(std::optional<Witness> w, std::string detail_ok = "") {
  CheckReport r;
  r.holds = !w.has_value();
  r.witness = std::move(w);
  r.detail = r.holds ? detail_ok : (r.witness->note);
  return r;
}

struct LiftTable {
  // lifts[k * m + x] = ballot indices that are x-lifts of ballot k (k itself included first).
  std::vector<std::vector<int>> lifts;
  LiftTable(const DomainIndex& d) : lifts(static_cast<std::size_t>(d.ballots()) * d.m()) {
    for (int k = 0; k < d.ballots(); ++k)
      for (int x = 0; x < d.m(); ++x) {
        auto& v = lifts[k * d.m() + x];
        v.push_back(k);
        for (int j = 0; j < d.ballots(); ++j)
          if (j != k && is_lift(d.ballot_at(k), d.ballot_at(j), x)) v.push_back(j);
      }
  }
};

CheckReport check_scf_table(const FunctionTable& t, Axiom a, int jobs) {
  const DomainIndex d(t.n, t.m);
  const int n = t.n, m = t.m;
  const Coalition everyone = Coalition::all(n);
  const auto& f = t.choice;
  auto W = [&](std::vector<std::uint64_t> ps) {
    Witness w;
    for (auto p : ps) w.profiles.push_back(d.profile(p));
    return w;
  };

  switch (a) {
    case Axiom::anonymous:
      return from_witness(first_violation(d.size(), jobs, [&](std::uint64_t p) -> std::optional<Witness> {
        for (int i = 0; i + 1 < n; ++i) {
          const auto q = d.swap_voters(p, i, i + 1);
          if (f[q] != f[p]) {
            auto w = W({p, q});
            w.permutation = transposition(n, i);
            w.note = "swapping voters " + std::to_string(i) + " and " + std::to_string(i + 1) + " changes the outcome";
            return w;
          }
        }
        return std::nullopt;
      }));

    case Axiom::neutral: {
      std::vector<std::vector<int>> maps;
      for (int x = 0; x + 1 < m; ++x) maps.push_back(d.ballot_map(transposition(m, x)));
      return from_witness(first_violation(d.size(), jobs, [&](std::uint64_t p) -> std::optional<Witness> {
        for (int x = 0; x + 1 < m; ++x) {
          const auto rho = transposition(m, x);
          const auto q = d.map_ballots(p, maps[x]);
          if (f[q] != map_set(f[p], rho)) {
            auto w = W({p, q});
            w.permutation = rho;
            w.note = "relabelling alternatives does not relabel the outcome";
            return w;
          }
        }
        return std::nullopt;
      }));
    }

    case Axiom::pareto:
      return from_witness(first_violation(d.size(), jobs, [&](std::uint64_t p) -> std::optional<Witness> {
        for (int x : f[p].members())
          for (int y = 0; y < m; ++y)
            if (y != x && d.coalition(p, y, x) == everyone) {
              auto w = W({p});
              w.alternatives = {x, y};
              w.note = "chosen alternative is Pareto dominated";
              return w;
            }
        return std::nullopt;
      }));

    case Axiom::unanimous:
      return from_witness(first_violation(d.size(), jobs, [&](std::uint64_t p) -> std::optional<Witness> {
        const Alternative x = d.ballot(p, 0).top();
        for (int i = 1; i < n; ++i)
          if (d.ballot(p, i).top() != x) return std::nullopt;
        if (f[p] == AltSet::single(x)) return std::nullopt;
        auto w = W({p});
        w.alternatives = {x};
        w.note = "common top is not the unique choice";
        return w;
      }));

    case Axiom::resolute:
      return from_witness(first_violation(d.size(), jobs, [&](std::uint64_t p) -> std::optional<Witness> {
        if (f[p].size() == 1) return std::nullopt;
        auto w = W({p});
        w.note = "outcome is not a singleton";
        return w;
      }));

    case Axiom::condorcet_consistent:
      return from_witness(first_violation(d.size(), jobs, [&](std::uint64_t p) -> std::optional<Witness> {
        for (int x = 0; x < m; ++x) {
          bool cw = true;
          for (int y = 0; y < m && cw; ++y)
            if (y != x && 2 * d.coalition(p, x, y).size() <= n) cw = false;
          if (cw && f[p] != AltSet::single(x)) {
            auto w = W({p});
            w.alternatives = {x};
            w.note = "Condorcet winner is not the unique choice";
            return w;
          }
        }
        return std::nullopt;
      }));

    case Axiom::monotonic:
    case Axiom::positively_responsive: {
      const LiftTable lt(d);
      const bool strict = a == Axiom::positively_responsive;
      return from_witness(first_violation(d.size(), jobs, [&](std::uint64_t p) -> std::optional<Witness> {
        for (int x : f[p].members()) {
          std::vector<const std::vector<int>*> options;
          for (int i = 0; i < n; ++i) options.push_back(&lt.lifts[d.digit(p, i) * m + x]);
          std::vector<std::size_t> pos(n, 0);
          while (true) {
            std::uint64_t q = 0;
            for (int i = 0; i < n; ++i) q = q * d.ballots() + (*options[i])[pos[i]];
            const bool bad = strict ? (q != p && f[q] != AltSet::single(x)) : !f[q].contains(x);
            if (bad) {
              auto w = W({p, q});
              w.alternatives = {x};
              w.note = strict ? "lifting a chosen alternative does not make it the unique choice"
                              : "lifting a chosen alternative removes it from the choice";
              return w;
            }
            int i = n - 1;
            while (i >= 0 && ++pos[i] == options[i]->size()) pos[i--] = 0;
            if (i < 0) break;
          }
        }
        return std::nullopt;
      }));
    }

    case Axiom::strategy_proof: {
      for (const auto& s : f)
        if (s.size() != 1) throw DomainError("STRATEGY_PROOF needs a resolute rule; apply a tie-break");
      return from_witness(first_violation(d.size(), jobs, [&](std::uint64_t p) -> std::optional<Witness> {
        const Alternative truthful = f[p].min();
        for (int i = 0; i < n; ++i) {
          const Ballot& b = d.ballot(p, i);
          for (int k = 0; k < d.ballots(); ++k) {
            const auto q = d.with_digit(p, i, k);
            if (q == p) continue;
            if (b.prefers(f[q].min(), truthful)) {
              auto w = W({p, q});
              w.voter = i;
              w.alternatives = {truthful, f[q].min()};
              w.note = "voter " + std::to_string(i) + " gains by misreporting";
              return w;
            }
          }
        }
        return std::nullopt;
      }));
    }

    case Axiom::independent: {
      const std::uint64_t cs = std::uint64_t{1} << n;
      for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) {
          if (x == y) continue;
          std::vector<std::int64_t> in_out(cs, -1), y_in(cs, -1);
          for (std::uint64_t p = 0; p < d.size(); ++p) {
            const auto c = d.coalition(p, x, y).bits();
            if (f[p].contains(x) && !f[p].contains(y) && in_out[c] < 0) in_out[c] = static_cast<std::int64_t>(p);
            if (f[p].contains(y) && y_in[c] < 0) y_in[c] = static_cast<std::int64_t>(p);
          }
          for (std::uint64_t c = 0; c < cs; ++c)
            if (in_out[c] >= 0 && y_in[c] >= 0) {
              auto w = W({static_cast<std::uint64_t>(in_out[c]), static_cast<std::uint64_t>(y_in[c])});
              w.alternatives = {x, y};
              w.note = "same voters prefer x to y, yet y is excluded in one profile and chosen in the other";
              return from_witness(w);
            }
        }
      return from_witness(std::nullopt);
    }

    case Axiom::non_dictatorial:
      for (int i = 0; i < n; ++i) {
        bool dict = true;
        for (std::uint64_t p = 0; p < d.size() && dict; ++p) dict = f[p] == AltSet::single(d.ballot(p, i).top());
        if (dict) {
          Witness w;
          w.voter = i;
          w.space = std::make_pair(n, m);
          w.note = "voter " + std::to_string(i) + " is a dictator";
          return from_witness(w);
        }
      }
      return from_witness(std::nullopt);

    case Axiom::non_imposed:
      for (int x = 0; x < m; ++x) {
        bool reached = false;
        for (std::uint64_t p = 0; p < d.size() && !reached; ++p) reached = f[p] == AltSet::single(x);
        if (!reached) {
          Witness w;
          w.alternatives = {x};
          w.space = std::make_pair(n, m);
          w.note = "alternative is never the unique choice";
          return from_witness(w);
        }
      }
      return from_witness(std::nullopt);

    case Axiom::liberal: {
      std::string partial;
      for (int i = 0; i < n; ++i) {
        std::optional<std::pair<int, int>> pair;
        for (int x = 0; x < m && !pair; ++x)
          for (int y = x + 1; y < m && !pair; ++y) {
            bool ok = true;
            for (std::uint64_t p = 0; p < d.size() && ok; ++p) {
              const bool xy = d.ballot(p, i).prefers(x, y);
              ok = xy ? !f[p].contains(y) : !f[p].contains(x);
            }
            if (ok) pair = std::make_pair(x, y);
          }
        if (!pair) {
          Witness w;
          w.voter = i;
          w.space = std::make_pair(n, m);
          w.note = "voter " + std::to_string(i) + " is two-way decisive on no pair" +
                   (partial.empty() ? std::string() : "; decisive so far:" + partial);
          return from_witness(w);
        }
        partial += " " + std::to_string(i) + ":" + std::to_string(pair->first) + std::to_string(pair->second);
      }
      return from_witness(std::nullopt);
    }

    default:
      throw DomainError(axiom_name(a) + " applies to social preference functions");
  }
}

CheckReport check_spf_table(const FunctionTable& t, Axiom a, int jobs) {
  const DomainIndex d(t.n, t.m);
  const int n = t.n, m = t.m;
  const auto& F = t.preference;
  switch (a) {
    case Axiom::pareto_spf:
      return from_witness(first_violation(d.size(), jobs, [&](std::uint64_t p) -> std::optional<Witness> {
        for (int x = 0; x < m; ++x)
          for (int y = 0; y < m; ++y)
            if (x != y && d.coalition(p, x, y) == Coalition::all(n) && !F[p].strictly_prefers(x, y)) {
              Witness w;
              w.profiles.push_back(d.profile(p));
              w.alternatives = {x, y};
              w.note = "unanimous pairwise ranking is not respected";
              return w;
            }
        return std::nullopt;
      }));

    case Axiom::iia_spf: {
      const std::uint64_t cs = std::uint64_t{1} << n;
      for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) {
          if (x == y) continue;
          std::vector<std::int64_t> yes(cs, -1), no(cs, -1);
          for (std::uint64_t p = 0; p < d.size(); ++p) {
            const auto c = d.coalition(p, x, y).bits();
            auto& slot = F[p].weakly_prefers(x, y) ? yes[c] : no[c];
            if (slot < 0) slot = static_cast<std::int64_t>(p);
          }
          for (std::uint64_t c = 0; c < cs; ++c)
            if (yes[c] >= 0 && no[c] >= 0) {
              Witness w;
              w.profiles = {d.profile(yes[c]), d.profile(no[c])};
              w.alternatives = {x, y};
              w.note = "same pairwise coalition, different social ranking of the pair";
              return from_witness(w);
            }
        }
      return from_witness(std::nullopt);
    }

    case Axiom::non_dictatorial_spf:
      for (int i = 0; i < n; ++i) {
        bool dict = true;
        for (std::uint64_t p = 0; p < d.size() && dict; ++p) dict = F[p] == WeakOrder::from_ballot(d.ballot(p, i));
        if (dict) {
          Witness w;
          w.voter = i;
          w.space = std::make_pair(n, m);
          w.note = "voter " + std::to_string(i) + " is a dictator";
          return from_witness(w);
        }
      }
      return from_witness(std::nullopt);

    default:
      throw DomainError(axiom_name(a) + " applies to social choice functions");
  }
}

}  // namespace

CheckReport check_axiom(const FunctionTable& t, Axiom a, int jobs) {
  return t.kind == FunctionKind::scf ? check_scf_table(t, a, jobs) : check_spf_table(t, a, jobs);
}

CheckReport check_axiom(const Rule& rule, Axiom a, int n, int m, int jobs) {
  if (is_spf_axiom(a)) return check_axiom(tabulate_spf(rule, n, m, jobs), a, jobs);
  return check_axiom(tabulate(rule, n, m, jobs), a, jobs);
}

// ---------------------------------------------------------------------------
// Literal checks over an explicit domain

namespace {

std::vector<Profile> full_space(int n, int m) { return enumerate_profiles(n, m); }

bool same_shape(const Profile& a, const Profile& b) { return a.n() == b.n() && a.m() == b.m(); }

std::optional<int> single_difference(const Profile& a, const Profile& b) {
  std::optional<int> diff;
  for (int i = 0; i < a.n(); ++i)
    if (a.ballot(i) != b.ballot(i)) {
      if (diff) return std::nullopt;
      diff = i;
    }
  return diff;
}

bool global_violation(const Rule& rule, Axiom a, const std::vector<Profile>& domain, const Witness& w) {
  switch (a) {
    case Axiom::non_dictatorial:
      for (const auto& p : domain)
        if (rule.choose(p) != AltSet::single(p.ballot(*w.voter).top())) return false;
      return true;
    case Axiom::non_dictatorial_spf:
      for (const auto& p : domain)
        if (spf_of(rule, p) != WeakOrder::from_ballot(p.ballot(*w.voter))) return false;
      return true;
    case Axiom::non_imposed:
      for (const auto& p : domain)
        if (rule.choose(p) == AltSet::single(w.alternatives.at(0))) return false;
      return true;
    case Axiom::liberal: {
      const int i = *w.voter;
      const int m = domain.front().m();
      for (int x = 0; x < m; ++x)
        for (int y = x + 1; y < m; ++y) {
          bool ok = true;
          for (const auto& p : domain) {
            const AltSet c = rule.choose(p);
            ok = ok && (p.ballot(i).prefers(x, y) ? !c.contains(y) : !c.contains(x));
            if (!ok) break;
          }
          if (ok) return false;
        }
      return true;
    }
    default:
      return false;
  }
}

}  // namespace

bool replay_witness(const Rule& rule, Axiom a, const Witness& w) {
  const auto& P = w.profiles;
  auto f = [&](const Profile& p) { return rule.choose(p); };
  switch (a) {
    case Axiom::anonymous:
      return P.size() == 2 && w.permutation && P[1] == permute_voters(P[0], *w.permutation) && f(P[0]) != f(P[1]);
    case Axiom::neutral:
      return P.size() == 2 && w.permutation && P[1] == permute_alternatives(P[0], *w.permutation) &&
             f(P[1]) != map_set(f(P[0]), *w.permutation);
    case Axiom::pareto: {
      const int x = w.alternatives.at(0), y = w.alternatives.at(1);
      return f(P.at(0)).contains(x) && support(P[0], y, x) == P[0].n();
    }
    case Axiom::unanimous: {
      auto top = common_top(P.at(0));
      return top && f(P[0]) != AltSet::single(*top);
    }
    case Axiom::resolute:
      return f(P.at(0)).size() != 1;
    case Axiom::condorcet_consistent: {
      const AltSet cw = condorcet_winner(P.at(0), false);
      return !cw.empty() && f(P[0]) != cw;
    }
    case Axiom::monotonic: {
      const int x = w.alternatives.at(0);
      return P.size() == 2 && lift_conditions(P[0], P[1], x) && f(P[0]).contains(x) && !f(P[1]).contains(x);
    }
    case Axiom::positively_responsive: {
      const int x = w.alternatives.at(0);
      return P.size() == 2 && P[0] != P[1] && lift_conditions(P[0], P[1], x) && f(P[0]).contains(x) &&
             f(P[1]) != AltSet::single(x);
    }
    case Axiom::strategy_proof: {
      if (P.size() != 2 || !w.voter) return false;
      const auto diff = single_difference(P[0], P[1]);
      const AltSet a0 = f(P[0]), a1 = f(P[1]);
      return diff == *w.voter && a0.size() == 1 && a1.size() == 1 && P[0].ballot(*w.voter).prefers(a1.min(), a0.min());
    }
    case Axiom::independent: {
      const int x = w.alternatives.at(0), y = w.alternatives.at(1);
      const AltSet a0 = f(P.at(0)), a1 = f(P.at(1));
      return supporters(P[0], x, y) == supporters(P[1], x, y) && a0.contains(x) && !a0.contains(y) && a1.contains(y);
    }
    case Axiom::iia_spf: {
      const int x = w.alternatives.at(0), y = w.alternatives.at(1);
      return supporters(P.at(0), x, y) == supporters(P.at(1), x, y) &&
             spf_of(rule, P[0]).weakly_prefers(x, y) != spf_of(rule, P[1]).weakly_prefers(x, y);
    }
    case Axiom::pareto_spf: {
      const int x = w.alternatives.at(0), y = w.alternatives.at(1);
      return support(P.at(0), x, y) == P[0].n() && !spf_of(rule, P[0]).strictly_prefers(x, y);
    }
    case Axiom::non_dictatorial:
    case Axiom::non_dictatorial_spf:
    case Axiom::non_imposed:
    case Axiom::liberal: {
      const auto domain = w.space ? full_space(w.space->first, w.space->second) : P;
      return !domain.empty() && global_violation(rule, a, domain, w);
    }
  }
  return false;
}

CheckReport check_axiom_on(const Rule& rule, Axiom a, const std::vector<Profile>& domain) {
  if (domain.empty()) throw DomainError("empty domain");
  std::vector<AltSet> out;
  for (const auto& p : domain) out.push_back(rule.choose(p));
  auto single = [&](std::size_t k, std::string note) {
    Witness w;
    w.profiles = {domain[k]};
    w.note = std::move(note);
    return w;
  };
  auto pair = [&](std::size_t j, std::size_t k, std::string note) {
    Witness w;
    w.profiles = {domain[j], domain[k]};
    w.note = std::move(note);
    return w;
  };

  switch (a) {
    case Axiom::anonymous:
      for (std::size_t k = 0; k < domain.size(); ++k)
        for (int i = 0; i + 1 < domain[k].n(); ++i) {
          const auto pi = transposition(domain[k].n(), i);
          const Profile q = permute_voters(domain[k], pi);
          if (rule.choose(q) != out[k]) {
            Witness w;
            w.profiles = {domain[k], q};
            w.permutation = pi;
            w.note = "permuting voters changes the outcome";
            return from_witness(w);
          }
        }
      return from_witness(std::nullopt);
    case Axiom::neutral:
      for (std::size_t k = 0; k < domain.size(); ++k)
        for (int x = 0; x + 1 < domain[k].m(); ++x) {
          const auto rho = transposition(domain[k].m(), x);
          const Profile q = permute_alternatives(domain[k], rho);
          if (rule.choose(q) != map_set(out[k], rho)) {
            Witness w;
            w.profiles = {domain[k], q};
            w.permutation = rho;
            w.note = "relabelling alternatives does not relabel the outcome";
            return from_witness(w);
          }
        }
      return from_witness(std::nullopt);
    case Axiom::pareto:
      for (std::size_t k = 0; k < domain.size(); ++k)
        for (int x : out[k].members())
          if (auto y = dominator(domain[k], x)) {
            auto w = single(k, "chosen alternative is Pareto dominated");
            w.alternatives = {x, *y};
            return from_witness(w);
          }
      return from_witness(std::nullopt);
    case Axiom::unanimous:
      for (std::size_t k = 0; k < domain.size(); ++k)
        if (auto top = common_top(domain[k]); top && out[k] != AltSet::single(*top)) {
          auto w = single(k, "common top is not the unique choice");
          w.alternatives = {*top};
          return from_witness(w);
        }
      return from_witness(std::nullopt);
    case Axiom::resolute:
      for (std::size_t k = 0; k < domain.size(); ++k)
        if (out[k].size() != 1) return from_witness(single(k, "outcome is not a singleton"));
      return from_witness(std::nullopt);
    case Axiom::condorcet_consistent:
      for (std::size_t k = 0; k < domain.size(); ++k) {
        const AltSet cw = condorcet_winner(domain[k], false);
        if (!cw.empty() && out[k] != cw) {
          auto w = single(k, "Condorcet winner is not the unique choice");
          w.alternatives = {cw.min()};
          return from_witness(w);
        }
      }
      return from_witness(std::nullopt);
    case Axiom::monotonic:
    case Axiom::positively_responsive: {
      const bool strict = a == Axiom::positively_responsive;
      for (std::size_t j = 0; j < domain.size(); ++j)
        for (std::size_t k = 0; k < domain.size(); ++k) {
          if (!same_shape(domain[j], domain[k]) || (strict && domain[j] == domain[k])) continue;
          for (int x : out[j].members()) {
            if (!lift_conditions(domain[j], domain[k], x)) continue;
            const bool bad = strict ? out[k] != AltSet::single(x) : !out[k].contains(x);
            if (bad) {
              auto w = pair(j, k, strict ? "lifting a chosen alternative does not make it the unique choice"
                                         : "lifting a chosen alternative removes it from the choice");
              w.alternatives = {x};
              return from_witness(w);
            }
          }
        }
      return from_witness(std::nullopt);
    }
    case Axiom::strategy_proof:
      for (const auto& s : out)
        if (s.size() != 1) throw DomainError("STRATEGY_PROOF needs a resolute rule; apply a tie-break");
      for (std::size_t j = 0; j < domain.size(); ++j)
        for (std::size_t k = 0; k < domain.size(); ++k) {
          if (!same_shape(domain[j], domain[k])) continue;
          const auto i = single_difference(domain[j], domain[k]);
          if (i && domain[j].ballot(*i).prefers(out[k].min(), out[j].min())) {
            auto w = pair(j, k, "voter " + std::to_string(*i) + " gains by misreporting");
            w.voter = *i;
            w.alternatives = {out[j].min(), out[k].min()};
            return from_witness(w);
          }
        }
      return from_witness(std::nullopt);
    case Axiom::independent:
      for (std::size_t j = 0; j < domain.size(); ++j)
        for (std::size_t k = 0; k < domain.size(); ++k) {
          if (!same_shape(domain[j], domain[k])) continue;
          for (int x = 0; x < domain[j].m(); ++x)
            for (int y = 0; y < domain[j].m(); ++y)
              if (x != y && out[j].contains(x) && !out[j].contains(y) && out[k].contains(y) &&
                  supporters(domain[j], x, y) == supporters(domain[k], x, y)) {
                auto w = pair(j, k, "same voters prefer x to y, yet y is excluded in one profile and chosen in the other");
                w.alternatives = {x, y};
                return from_witness(w);
              }
        }
      return from_witness(std::nullopt);
    case Axiom::iia_spf: {
      std::vector<WeakOrder> F;
      for (const auto& p : domain) F.push_back(spf_of(rule, p));
      for (std::size_t j = 0; j < domain.size(); ++j)
        for (std::size_t k = 0; k < domain.size(); ++k) {
          if (!same_shape(domain[j], domain[k])) continue;
          for (int x = 0; x < domain[j].m(); ++x)
            for (int y = 0; y < domain[j].m(); ++y)
              if (x != y && F[j].weakly_prefers(x, y) && !F[k].weakly_prefers(x, y) &&
                  supporters(domain[j], x, y) == supporters(domain[k], x, y)) {
                auto w = pair(j, k, "same pairwise coalition, different social ranking of the pair");
                w.alternatives = {x, y};
                return from_witness(w);
              }
        }
      return from_witness(std::nullopt);
    }
    case Axiom::pareto_spf:
      for (std::size_t k = 0; k < domain.size(); ++k) {
        const WeakOrder F = spf_of(rule, domain[k]);
        for (int x = 0; x < domain[k].m(); ++x)
          for (int y = 0; y < domain[k].m(); ++y)
            if (x != y && support(domain[k], x, y) == domain[k].n() && !F.strictly_prefers(x, y)) {
              auto w = single(k, "unanimous pairwise ranking is not respected");
              w.alternatives = {x, y};
              return from_witness(w);
            }
      }
      return from_witness(std::nullopt);
    case Axiom::non_dictatorial:
    case Axiom::non_dictatorial_spf:
    case Axiom::non_imposed:
    case Axiom::liberal: {
      Witness probe;
      probe.profiles = domain;
      const int n = domain.front().n(), m = domain.front().m();
      if (a == Axiom::non_imposed) {
        for (int x = 0; x < m; ++x) {
          probe.alternatives = {x};
          if (global_violation(rule, a, domain, probe)) {
            probe.note = "alternative is never the unique choice";
            return from_witness(probe);
          }
        }
      } else {
        for (int i = 0; i < n; ++i) {
          probe.voter = i;
          if (global_violation(rule, a, domain, probe)) {
            probe.note = a == Axiom::liberal ? "voter " + std::to_string(i) + " is two-way decisive on no pair"
                                             : "voter " + std::to_string(i) + " is a dictator";
            return from_witness(probe);
          }
        }
      }
      return from_witness(std::nullopt);
    }
  }
  return from_witness(std::nullopt);
}

std::vector<ImplicationRow> implication_suite(int n, int m, const std::vector<Rule>& catalog, int jobs) {
  std::vector<ImplicationRow> rows;
  for (const auto& rule : catalog) {
    const FunctionTable t = tabulate(rule, n, m, jobs);
    ImplicationRow r;
    r.rule = rule.name();
    r.non_imposed = check_axiom(t, Axiom::non_imposed, jobs).holds;
    r.monotonic = check_axiom(t, Axiom::monotonic, jobs).holds;
    r.unanimous = check_axiom(t, Axiom::unanimous, jobs).holds;
    r.pareto = check_axiom(t, Axiom::pareto, jobs).holds;
    r.ok = (!(r.non_imposed && r.monotonic) || r.unanimous) && (!r.pareto || r.unanimous) &&
           (!r.unanimous || r.non_imposed);
    rows.push_back(r);
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Coalitions

bool CoalitionFamily::contains(Coalition c) const { return std::binary_search(members.begin(), members.end(), c); }

namespace {

CoalitionFamily family_from(int n, const std::vector<char>& bad) {
  CoalitionFamily fam;
  fam.n = n;
  for (std::uint64_t c = 0; c < bad.size(); ++c)
    if (!bad[c]) fam.members.push_back(Coalition(c));
  return fam;
}

// bad[C] becomes true when some superset of C was marked bad.
void propagate_to_subsets(std::vector<char>& bad, int n) {
  for (int v = 0; v < n; ++v)
    for (std::uint64_t c = 0; c < bad.size(); ++c)
      if (!((c >> v) & 1U) && bad[c | (std::uint64_t{1} << v)]) bad[c] = 1;
}

template <class Violates>
CoalitionAnalysis coalition_analysis(const DomainIndex& d, Violates violates) {
  const int n = d.n(), m = d.m();
  if (n > 20) throw BudgetExceeded("coalition analysis limited to n <= 20");
  CoalitionAnalysis out;
  out.m = m;
  out.per_pair.resize(m * m);
  std::vector<char> any_bad(std::size_t{1} << n, 0);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      if (x == y) {
        out.per_pair[x * m + y].n = n;
        continue;
      }
      std::vector<char> bad(std::size_t{1} << n, 0);
      for (std::uint64_t p = 0; p < d.size(); ++p)
        if (violates(p, x, y)) bad[d.coalition(p, x, y).bits()] = 1;
      propagate_to_subsets(bad, n);
      for (std::size_t c = 0; c < bad.size(); ++c) any_bad[c] |= bad[c];
      out.per_pair[x * m + y] = family_from(n, bad);
    }
  out.all = family_from(n, any_bad);
  return out;
}

}  // namespace

CoalitionAnalysis decisive_coalitions(const FunctionTable& spf) {
  if (spf.kind != FunctionKind::spf) throw DomainError("decisive coalitions need a social preference function");
  const DomainIndex d(spf.n, spf.m);
  return coalition_analysis(d, [&](std::uint64_t p, int x, int y) { return !spf.preference[p].strictly_prefers(x, y); });
}

CoalitionAnalysis blocking_coalitions(const FunctionTable& scf) {
  if (scf.kind != FunctionKind::scf) throw DomainError("blocking coalitions need a social choice function");
  for (const auto& s : scf.choice)
    if (s.size() != 1) throw DomainError("blocking coalitions need a resolute rule");
  const DomainIndex d(scf.n, scf.m);
  return coalition_analysis(d, [&](std::uint64_t p, int, int y) { return scf.choice[p].contains(y); });
}

UltrafilterReport ultrafilter_check(const CoalitionFamily& fam) {
  UltrafilterReport r;
  const Coalition N = Coalition::all(fam.n);
  r.grand_set = fam.contains(N);
  r.complement_dichotomy = true;
  for (std::uint64_t c = 0; c < (std::uint64_t{1} << fam.n); ++c) {
    const Coalition C(c);
    if (fam.contains(C) == fam.contains(N - C)) {
      r.complement_dichotomy = false;
      r.complement_failure = C;
      break;
    }
  }
  for (std::size_t i = 0; i < fam.members.size(); ++i)
    for (std::size_t j = i + 1; j < fam.members.size(); ++j)
      if (!fam.contains(fam.members[i] & fam.members[j]))
        r.intersection_failures.emplace_back(fam.members[i], fam.members[j]);
  r.intersection_closed = r.intersection_failures.empty();
  r.superset_closed = true;
  for (const auto& C : fam.members) {
    for (int v = 0; v < fam.n && r.superset_closed; ++v)
      if (!C.contains(v) && !fam.contains(C.with(v))) {
        r.superset_closed = false;
        r.superset_failure = std::make_pair(C, C.with(v));
      }
    if (!r.superset_closed) break;
  }
  if (r.grand_set && r.complement_dichotomy && r.intersection_closed)
    for (int v = 0; v < fam.n; ++v)
      if (fam.contains(Coalition::single(v))) {
        r.principal = v;
        break;
      }
  return r;
}

bool contagion_holds(const CoalitionAnalysis& w) {
  for (int x = 0; x < w.m; ++x)
    for (int y = 0; y < w.m; ++y) {
      if (x == y) continue;
      for (const auto& c : w.per_pair[x * w.m + y].members)
        if (!w.all.contains(c)) return false;
    }
  return true;
}

SenWitness sen_witness(int n, int m, const std::vector<std::pair<Alternative, Alternative>>& pairs) {
  if (n < 2) throw DomainError("Sen witness needs at least two voters");
  if (m < 3) throw DomainError("Sen witness needs at least three alternatives");
  if (pairs.size() < 2 || static_cast<int>(pairs.size()) > n) throw DomainError("need a pair for voters 0 and 1");
  for (auto [x, y] : pairs)
    if (x == y || x < 0 || y < 0 || x >= m || y >= m) throw DomainError("degenerate decisive pair");
  auto norm = [](std::pair<int, int> p) { return std::pair<int, int>(std::min(p.first, p.second), std::max(p.first, p.second)); };
  if (norm(pairs[0]) == norm(pairs[1])) throw DomainError("voters 0 and 1 are assigned the same pair");

  auto [a0, b0] = pairs[0];
  auto [a1, b1] = pairs[1];
  std::vector<int> first, second, others;
  if (a0 == a1 || a0 == b1 || b0 == a1 || b0 == b1) {
    const int s = (a0 == a1 || a0 == b1) ? a0 : b0;
    const int u = s == a0 ? b0 : a0;
    const int v = s == a1 ? b1 : a1;
    first = {v, u, s};
    second = {s, v, u};
    others = {v, u, s};
  } else {
    const int x = a0, y = b0, z = a1, w = b1;
    first = {w, x, y, z};
    second = {y, z, w, x};
    others = {w, x, y, z};
  }
  auto complete = [&](std::vector<int> head) {
    for (int t = 0; t < m; ++t)
      if (std::find(head.begin(), head.end(), t) == head.end()) head.push_back(t);
    return Ballot(std::move(head));
  };
  std::vector<Ballot> ballots;
  ballots.push_back(complete(first));
  ballots.push_back(complete(second));
  for (int i = 2; i < n; ++i) ballots.push_back(complete(others));
  Profile p(m, std::move(ballots));

  AltSet vetoed;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto [x, y] = pairs[i];
    vetoed = vetoed.with(p.ballot(static_cast<int>(i)).prefers(x, y) ? y : x);
  }
  AltSet dominated;
  for (int x = 0; x < m; ++x)
    if (dominator(p, x)) dominated = dominated.with(x);
  SenWitness out{p, vetoed, dominated, (vetoed | dominated) == p.alternatives()};
  return out;
}

LinearityReport spf_linearity_check(const FunctionTable& spf) {
  LinearityReport r;
  r.iia = check_axiom(spf, Axiom::iia_spf);
  r.pareto = check_axiom(spf, Axiom::pareto_spf);
  r.premise = r.iia.holds && r.pareto.holds;
  const DomainIndex d(spf.n, spf.m);
  for (std::uint64_t p = 0; p < d.size(); ++p)
    if (!spf.preference[p].is_linear()) {
      r.ties_found = true;
      r.tie_profile = d.profile(p);
      break;
    }
  return r;
}

}  // namespace scrutineer
