// Prints one PASS/FAIL line per acceptance criterion. Exit status is nonzero if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include <sys/wait.h>

#include "oracles.hpp"
#include "scrutineer/axioms.hpp"
#include "scrutineer/consensus.hpp"
#include "scrutineer/epistemic.hpp"
#include "scrutineer/multiwinner.hpp"
#include "scrutineer/rules.hpp"
#include "scrutineer/strategy.hpp"
#include "scrutineer/tournaments.hpp"

using namespace scrutineer;

namespace {

struct Verdict {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

AltSet named(const Profile& p, std::initializer_list<const char*> xs) {
  AltSet s;
  for (auto x : xs) s = s.with(p.index_of(x));
  return s;
}

Committee com(const Profile& p, const char* names) {
  Committee c;
  for (const char* s = names; *s; ++s) c = c.with(p.index_of(std::string(1, *s)));
  return c;
}

Rule lex(const char* spec) { return make_rule(spec).with_tiebreak(TieBreak::lexicographic); }

// ---------------------------------------------------------------------------

void criterion1(Verdict& v) {
  const auto t0 = Clock::now();
  const Profile pliny = fixture("PLINY");
  v.expect(plurality(pliny).winners == named(pliny, {"a"}), "plurality(PLINY)");
  v.expect(condorcet_winner(pliny, false) == named(pliny, {"b"}), "condorcet_winner(PLINY)");

  const Profile gore = fixture("GORE");
  const auto g = positional(gore, borda_vector(4));
  v.expect(g.winners == named(gore, {"Bush"}), "Borda(GORE) winner");
  const std::pair<const char*, int> expected[] = {{"Bush", 246}, {"Gore", 200}, {"Nader", 55}, {"Buchanan", 96}};
  for (auto [name, score] : expected) {
    const Rational got = (*g.scores)[gore.index_of(name)];
    v.expect(got == score, std::string("Borda(GORE) ") + name + " expected " + std::to_string(score) + " got " +
                               to_string(got));
  }

  const Profile young = fixture("YOUNG");
  const auto k = kemeny(young);
  v.expect(k.winners == named(young, {"b"}) && k.distance == 76, "kemeny(YOUNG)");
  v.expect(plurality_runoff(fixture("RUNOFF_A")).winners == named(fixture("RUNOFF_A"), {"c"}), "runoff(RUNOFF_A)");
  v.expect(plurality_runoff(fixture("RUNOFF_B")).winners == named(fixture("RUNOFF_B"), {"b"}), "runoff(RUNOFF_B)");

  const Profile c3 = fixture("CONDORCET3");
  v.expect(copeland(c3).winners == named(c3, {"a", "b", "c"}), "copeland(CONDORCET3)");
  v.expect(condorcet_rule(c3).winners == named(c3, {"a", "b", "c", "d"}), "condorcet_rule(CONDORCET3)");

  const Profile hikers = fixture("HIKERS");
  v.expect(median_rule(hikers, parse_ballot(hikers, "l>m>s")).winners == named(hikers, {"m"}), "median(HIKERS)");

  const Profile z = fixture("ZWICKER");
  const Rule borda = lex("borda");
  const auto zs = positional(z, borda_vector(5));
  v.expect(borda.choose(z) == named(z, {"e"}) && (*zs.scores)[z.index_of("e")] == 17, "Borda(ZWICKER) = e with 17");
  const auto zm = find_manipulation(borda, z, 0, z.index_of("d"));
  v.expect(zm && borda.choose(z.with_ballot(0, zm->strategic)) == named(z, {"d"}), "Borda manipulation to d");

  const Profile sp = fixture("SP_RESOLUTE");
  const Rule plex = lex("plurality");
  v.expect(plex.choose(sp) == named(sp, {"a"}), "plurality+lex(SP_RESOLUTE)");
  const auto sm = find_manipulation(plex, sp, 2);
  v.expect(sm && sm->outcome_strategic == sp.index_of("b"), "voter-3 manipulation to b");
  v.expect(plex.choose(sp.with_ballot(2, parse_ballot(sp, "b>c>a"))) == named(sp, {"b"}), "ballot bca elects b");

  const Profile f = fixture("FALISZ");
  v.expect(chamberlin_courant(f, 2, borda_vector(5)).committees == std::vector<Committee>{com(f, "ac")}, "ChCo(FALISZ,2)");
  const auto pav = pav_k(f, 2);
  v.expect(pav.committees == std::vector<Committee>{com(f, "ab")} && pav.score == Rational(13, 2), "PAV(FALISZ,2)");
  v.expect(best_k(BestKScore::plurality, f, 2).committees ==
               std::vector<Committee>{com(f, "ac"), com(f, "bc"), com(f, "cd"), com(f, "ce")},
           "best_k plurality(FALISZ,2)");
  const auto st = cstv(f, 2, CstvMode::parallel).committees;
  v.expect(std::find(st.begin(), st.end(), com(f, "bc")) != st.end(), "{b,c} in CSTV(FALISZ,2)");

  const Profile b = fixture("BARBERA");
  v.expect(condorcet_committees(b, 1) == std::vector<Committee>{com(b, "a")}, "CC_1(BARBERA)");
  v.expect(condorcet_committees(b, 2) == std::vector<Committee>{com(b, "ab")}, "CC_2(BARBERA)");
  v.expect(condorcet_committees(b, 3) == std::vector<Committee>{com(b, "cde")}, "CC_3(BARBERA)");
  v.expect(seconds_since(t0) < 1.0, "runtime under 1 s");
}

const std::vector<Rational> kJuryGrid{Rational(3, 5), Rational(2, 3), Rational(9, 10)};

void criterion2(Verdict& v) {
  const auto t0 = Clock::now();
  for (const auto& p : kJuryGrid) {
    const auto rec = jury_accuracy_recursive(21, p);
    v.expect(rec.size() == 11, "recursive length");
    for (std::size_t k = 0; k < rec.size(); ++k) {
      const int n = static_cast<int>(2 * k + 1);
      const Rational exact = jury_accuracy(n, p);
      v.expect(rec[k] == exact, "recursion n=" + std::to_string(n) + " p=" + to_string(p));
      v.expect(p <= exact, "floor p <= p(n) at n=" + std::to_string(n));
      if (k + 1 < rec.size()) v.expect(exact <= jury_accuracy(n + 2, p), "monotone at n=" + std::to_string(n));
    }
  }
  v.expect(jury_accuracy(3, Rational(2, 3)) == Rational(20, 27), "p(3) = 20/27");
  for (int n = 1; n <= 21; n += 2) v.expect(jury_accuracy(n, Rational(1, 2)) == Rational(1, 2), "p=1/2 constant");
  v.expect(seconds_since(t0) < 1.0, "runtime under 1 s");
}

void criterion3(Verdict& v) {
  auto t0 = Clock::now();
  const auto a = impossibility_search(2, 2, FunctionKind::scf, {Axiom::anonymous, Axiom::neutral, Axiom::resolute});
  v.expect(a.census == 0 && a.tables_examined == 16, "(2,2) anonymous+neutral+resolute unsat over 16 tables");
  v.expect(seconds_since(t0) < 1.0, "(2,2) under 1 s");

  t0 = Clock::now();
  const auto b = impossibility_search(3, 2, FunctionKind::scf,
                                      {Axiom::resolute, Axiom::anonymous, Axiom::neutral, Axiom::monotonic});
  v.expect(b.census == 1 && b.tables_examined == 256, "(3,2) census 1 over 256 tables");
  v.expect(!b.witnesses.empty() && table_matches(b.witnesses[0], make_rule("plurality")), "(3,2) table is plurality");
  v.expect(seconds_since(t0) < 1.0, "(3,2) under 1 s");

  t0 = Clock::now();
  const auto c = impossibility_search(2, 3, FunctionKind::scf,
                                      {Axiom::resolute, Axiom::non_imposed, Axiom::strategy_proof});
  v.expect(!c.exhaustive_enumeration, "(2,3) uses backtracking");
  v.expect(c.census == 2, "(2,3) census 2, got " + std::to_string(c.census));
  if (c.witnesses.size() == 2) {
    v.expect(table_matches(c.witnesses[0], make_rule("dictatorship:0")), "first table is dictatorship of voter 0");
    v.expect(table_matches(c.witnesses[1], make_rule("dictatorship:1")), "second table is dictatorship of voter 1");
  }
  v.expect(seconds_since(t0) < 600.0, "(2,3) under 10 min");
}

void criterion4(Verdict& v) {
  const auto profiles33 = enumerate_profiles(3, 3);
  struct Characterization {
    const char* name;
    ConsensusClass c;
    Distance d;
    std::function<AltSet(const Profile&)> rule;
  };
  const Characterization rows[] = {
      {"U/discrete = plurality", ConsensusClass::unanimous, Distance::discrete,
       [](const Profile& p) { return plurality(p).winners; }},
      {"U/swap = Borda", ConsensusClass::unanimous, Distance::swap,
       [](const Profile& p) { return positional(p, borda_vector(p.m())).winners; }},
      {"S/swap = Kemeny", ConsensusClass::strong_unanimous, Distance::swap,
       [](const Profile& p) { return kemeny(p).winners; }},
      {"C/swap = Dodgson", ConsensusClass::condorcet, Distance::swap,
       [](const Profile& p) { return dodgson(p).winners; }},
  };
  for (const auto& row : rows) {
    const auto t0 = Clock::now();
    for (const auto& p : profiles33)
      v.expect(closest_consensus(p, row.c, row.d).winners == row.rule(p), std::string(row.name) + " on " + render_profile(p));
    v.expect(seconds_since(t0) < 10.0, std::string(row.name) + " under 10 s");
  }

  for (const auto& p : enumerate_profiles(3, 2)) v.expect(kemeny(p).winners == plurality(p).winners, "kemeny = plurality (3,2)");
  for (const auto& p : profiles33)
    v.expect(symmetric_borda(p).winners == positional(p, borda_vector(3)).winners, "symmetric Borda (3,3)");
  for (const auto& p : enumerate_profiles(2, 4))
    v.expect(symmetric_borda(p).winners == positional(p, borda_vector(4)).winners, "symmetric Borda (2,4)");
  for (const auto& p : profiles33)
    v.expect(borda_mle_winners(p) == positional(p, borda_vector(3)).winners, "Borda MLE (3,3)");

  const Rational q(2, 3);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Ballot truth = all_ballots(4)[seed % 24];
    const auto ts = sample_tournament_profile(truth, q, 5, seed);
    v.expect(mle_rankings(ts, q) == min_disagreement_rankings(ts), "MLE = swap argmin, seed " + std::to_string(seed));
  }
}

void criterion5(Verdict& v) {
  const auto t0 = Clock::now();
  const auto a = black_suite(3, 3);
  v.expect(a.profiles == 64, "64 single-peaked (3,3) profiles, got " + std::to_string(a.profiles));
  v.expect(a.transitive, "(3,3) transitive majority");
  v.expect(a.median_condorcet, "(3,3) median = Condorcet winner");
  v.expect(a.strategyproof, "(3,3) median not manipulable");
  const auto b = black_suite(4, 3);
  v.expect(b.transitive, "(4,3) weak tournament transitive" +
                             (b.transitivity_failure ? ", fails on " + render_profile(*b.transitivity_failure) : ""));
  v.expect(b.median_condorcet, "(4,3) median within weak Condorcet winners");
  v.expect(seconds_since(t0) < 5.0, "runtime under 5 s");
}

void criterion6(Verdict& v) {
  const auto t0 = Clock::now();
  for (int dictator = 0; dictator < 3; ++dictator) {
    const auto w = decisive_coalitions(dictatorship_spf(3, 3, dictator));
    const auto u = ultrafilter_check(w.all);
    v.expect(u.grand_set && u.complement_dichotomy && u.intersection_closed && u.superset_closed,
             "dictatorship ultrafilter properties");
    v.expect(u.principal == dictator, "principal element is the dictator");
  }

  const auto pw = decisive_coalitions(tabulate_spf(make_rule("plurality"), 3, 2));
  const auto pu = ultrafilter_check(pw.all);
  v.expect(!pu.intersection_closed, "plurality spf fails intersection closure");
  const std::pair witness{Coalition::single(0).with(1), Coalition::single(1).with(2)};
  v.expect(std::find(pu.intersection_failures.begin(), pu.intersection_failures.end(), witness) !=
               pu.intersection_failures.end(),
           "intersection witness {0,1} and {1,2}");

  // every family over three voters passing properties i-iii is superset closed
  int passing = 0;
  for (unsigned fam = 0; fam < 256; ++fam) {
    CoalitionFamily f;
    f.n = 3;
    for (unsigned c = 0; c < 8; ++c)
      if (fam >> c & 1u) f.members.push_back(Coalition(c));
    const auto u = ultrafilter_check(f);
    if (u.grand_set && u.complement_dichotomy && u.intersection_closed) {
      ++passing;
      v.expect(u.superset_closed, "superset closure for family " + std::to_string(fam));
    }
  }
  v.expect(passing == 3, "three families pass i-iii, got " + std::to_string(passing));

  SearchOptions opt;
  opt.max_witnesses = 1000;
  const auto arrow = impossibility_search(2, 3, FunctionKind::spf, {Axiom::pareto_spf, Axiom::iia_spf}, opt);
  v.expect(arrow.census >= 1 && arrow.census == arrow.witnesses.size(), "Pareto+IIA SPFs at (2,3) enumerated");
  for (const auto& t : arrow.witnesses) v.expect(contagion_holds(decisive_coalitions(t)), "contagion W^{xy} within W");
  v.expect(seconds_since(t0) < 30.0, "runtime under 30 s");
}

void criterion7(Verdict& v) {
  for (const auto& p : kJuryGrid)
    for (int n = 1; n <= 21; n += 2) {
      const auto h = hoeffding_check(n, p);
      v.expect(h.holds, "Hoeffding bound at n=" + std::to_string(n) + " p=" + to_string(p));
    }
  for (StrategySpace space : {StrategySpace::top_only, StrategySpace::full}) {
    const char* label = space == StrategySpace::top_only ? "top-only" : "full";
    const auto b = dynamic_poa(lex("borda"), 3, 3, space, false, 2);
    const auto p = dynamic_poa(lex("plurality"), 3, 3, space, false, 2);
    v.expect(b.value && p.value, std::string("PoA defined on ") + label);
    if (!b.value || !p.value) continue;
    v.expect(*b.value <= *p.value, std::string("PoA(Borda) <= PoA(plurality) on ") + label + ": " + to_string(*b.value) +
                                       " vs " + to_string(*p.value));
    // witnesses must reproduce
    const auto again = dynamic_poa(lex("borda"), 3, 3, space, false, 1);
    v.expect(again.value == b.value && render_profile(*again.truth) == render_profile(*b.truth) &&
                 render_profile(*again.equilibrium) == render_profile(*b.equilibrium),
             std::string("PoA witness reproducible on ") + label);
  }
}

// ---------------------------------------------------------------------------

std::pair<int, std::string> shell(const std::string& args) {
  const std::string cmd = std::string(SCRUTINEER_BIN) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  char buf[4096];
  std::size_t k;
  while ((k = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, k);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

const std::vector<std::string> kInvocations{
    "elect --rule plurality --fixture PLINY",
    "elect --rule condorcet --fixture PLINY",
    "elect --rule borda --fixture GORE",
    "elect --rule kemeny --fixture YOUNG",
    "elect --rule runoff --fixture RUNOFF_A --trace",
    "elect --rule runoff --fixture RUNOFF_B --trace",
    "elect --rule copeland --fixture CONDORCET3",
    "elect --rule condorcet --fixture CONDORCET3",
    "elect --rule median --fixture HIKERS",
    "elect --rule borda --tiebreak lex --fixture ZWICKER",
    "manipulate --rule borda --tiebreak lex --fixture ZWICKER --voter 0 --target d",
    "manipulate --rule borda --tiebreak lex --fixture ZWICKER --voter 0 --greedy --target d",
    "manipulate --rule plurality --tiebreak lex --fixture SP_RESOLUTE --voter 2",
    "committee --rule chco --k 2 --fixture FALISZ",
    "committee --rule pav --k 2 --fixture FALISZ",
    "committee --rule best-plurality --k 2 --fixture FALISZ",
    "committee --rule cstv --mode parallel --k 2 --fixture FALISZ",
    "committee --rule cstv --k 2 --fixture FALISZ --trace",
    "committee --rule condorcet --k 1 --fixture BARBERA",
    "committee --rule condorcet --k 2 --fixture BARBERA",
    "committee --rule condorcet --k 3 --fixture BARBERA",
    "jury --p 3/5 --n-max 21",
    "jury --p 2/3 --n-max 21 --simulate 20000 --seed 7",
    "jury --p 9/10 --n-max 21 --format json",
    "impossibility --n 2 --m 2 --axioms ANONYMOUS,NEUTRAL,RESOLUTE",
    "impossibility --n 3 --m 2 --axioms RESOLUTE,ANONYMOUS,NEUTRAL,MONOTONIC",
    "impossibility --n 2 --m 3 --axioms RESOLUTE,NON_IMPOSED,STRATEGY_PROOF",
    "impossibility --n 2 --m 3 --kind spf --axioms PARETO_SPF,IIA_SPF",
    "axiom --rule borda --tiebreak lex --axiom STRATEGY_PROOF --n 3 --m 3",
    "axiom --rule plurality --axiom MONOTONIC --n 3 --m 3",
    "consensus --class u --distance discrete --fixture YOUNG",
    "consensus --class s --distance swap --fixture YOUNG",
    "consensus --class c --distance swap --fixture CONDORCET1",
    "tournament --fixture HIKERS",
    "tournament --weak --fixture SP_RESOLUTE",
    "game --rule plurality --tiebreak lex --fixture SP_RESOLUTE --space top --report nash",
    "game --rule borda --tiebreak lex --n 3 --m 3 --space top --report poa",
    "game --rule plurality --tiebreak lex --n 3 --m 3 --space full --report poa --best-only",
};

void criterion8(Verdict& v) {
  for (const auto& args : kInvocations) {
    const auto first = shell("--jobs 1 " + args);
    const auto second = shell("--jobs 1 " + args);
    const auto threaded = shell("--jobs 3 " + args);
    v.expect(first.first == 0, "exit 0: " + args + " -> " + first.second);
    v.expect(first == second, "repeat run identical: " + args);
    v.expect(first == threaded, "--jobs 3 identical: " + args);
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<int, std::function<void(Verdict&)>>> criteria{
      {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4},
      {5, criterion5}, {6, criterion6}, {7, criterion7}, {8, criterion8}};
  int failed = 0;
  for (const auto& [id, fn] : criteria) {
    Verdict v;
    const auto t0 = Clock::now();
    try {
      fn(v);
    } catch (const std::exception& e) {
      v.failures.push_back(std::string("exception: ") + e.what());
    }
    std::ostringstream line;
    line << "criterion " << id << ": " << (v.failures.empty() ? "PASS" : "FAIL");
    line << " (" << static_cast<int>(seconds_since(t0) * 1000) << " ms)";
    if (!v.failures.empty()) {
      line << " " << v.failures.size() << " check(s) failed; first: " << v.failures.front();
      ++failed;
    }
    std::cout << line.str() << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
