#include <doctest.h>

#include "scrutineer/axioms.hpp"
#include "scrutineer/rules.hpp"

using namespace scrutineer;

namespace {
Rule lex(const char* spec) { return make_rule(spec).with_tiebreak(TieBreak::lexicographic); }
}  // namespace

TEST_CASE("axiom ids parse") {
  CHECK(parse_axiom("anonymous") == Axiom::anonymous);
  CHECK(parse_axiom("NON-IMPOSED") == Axiom::non_imposed);
  CHECK(axiom_name(Axiom::strategy_proof) == "STRATEGY_PROOF");
  CHECK(all_axioms().size() == 16);
  CHECK(is_spf_axiom(Axiom::iia_spf));
  CHECK_THROWS_AS(parse_axiom("FAIR"), DomainError);
}

TEST_CASE("plurality symmetry and resoluteness") {
  const Rule p = make_rule("plurality");
  CHECK(check_axiom(p, Axiom::anonymous, 3, 3).holds);
  CHECK(check_axiom(p, Axiom::neutral, 3, 3).holds);
  CHECK(check_axiom(p, Axiom::pareto, 3, 3).holds);
  const auto r = check_axiom(p, Axiom::resolute, 2, 2);
  CHECK_FALSE(r.holds);
  REQUIRE(r.witness);
  CHECK(replay_witness(p, Axiom::resolute, *r.witness));
}

TEST_CASE("lexicographic tie-break costs neutrality") {
  const Rule p = lex("plurality");
  const auto r = check_axiom(p, Axiom::neutral, 2, 2);
  CHECK_FALSE(r.holds);
  REQUIRE(r.witness);
  CHECK(replay_witness(p, Axiom::neutral, *r.witness));
  CHECK(check_axiom(p, Axiom::anonymous, 2, 3).holds);
}

TEST_CASE("dictatorship") {
  const Rule d = make_rule("dictatorship:0");
  CHECK_FALSE(check_axiom(d, Axiom::anonymous, 2, 3).holds);
  CHECK_FALSE(check_axiom(d, Axiom::non_dictatorial, 2, 3).holds);
  CHECK(check_axiom(d, Axiom::strategy_proof, 2, 3).holds);
  CHECK(check_axiom(d, Axiom::pareto, 2, 3).holds);
}

TEST_CASE("borda is manipulable and plurality+lex too at (3,3)") {
  for (const char* spec : {"borda", "plurality"}) {
    const Rule r = lex(spec);
    const auto rep = check_axiom(r, Axiom::strategy_proof, 3, 3);
    CHECK_FALSE(rep.holds);
    REQUIRE(rep.witness);
    CHECK(replay_witness(r, Axiom::strategy_proof, *rep.witness));
  }
  CHECK_THROWS_AS(check_axiom(make_rule("plurality"), Axiom::strategy_proof, 2, 2), DomainError);
}

TEST_CASE("condorcet consistency") {
  CHECK(check_axiom(make_rule("copeland"), Axiom::condorcet_consistent, 3, 3).holds);
  CHECK(check_axiom(make_rule("kemeny"), Axiom::condorcet_consistent, 3, 3).holds);
  CHECK_FALSE(check_axiom(make_rule("borda"), Axiom::condorcet_consistent, 3, 3).holds);
}

TEST_CASE("monotonicity") {
  CHECK(check_axiom(make_rule("plurality"), Axiom::monotonic, 3, 3).holds);
  CHECK(check_axiom(make_rule("borda"), Axiom::monotonic, 3, 3).holds);
  // small electorates cannot show it; the 25-voter pair can
  CHECK(check_axiom(make_rule("runoff"), Axiom::monotonic, 5, 3).holds);
  const auto r = check_axiom_on(make_rule("runoff"), Axiom::monotonic, {fixture("RUNOFF_A"), fixture("RUNOFF_B")});
  CHECK_FALSE(r.holds);
  REQUIRE(r.witness);
  CHECK(replay_witness(make_rule("runoff"), Axiom::monotonic, *r.witness));
}

TEST_CASE("table checks agree across job counts") {
  const Rule r = lex("borda");
  const auto a = check_axiom(r, Axiom::strategy_proof, 3, 3, 1);
  const auto b = check_axiom(r, Axiom::strategy_proof, 3, 3, 4);
  CHECK(a.holds == b.holds);
  REQUIRE(a.witness);
  REQUIRE(b.witness);
  CHECK(a.witness->note == b.witness->note);
  CHECK(render_profile(a.witness->profiles.front()) == render_profile(b.witness->profiles.front()));
}

TEST_CASE("literal check on an explicit domain") {
  const Profile p = fixture("SP_RESOLUTE");
  const Profile q = p.with_ballot(2, parse_ballot(p, "b>a>c"));
  const auto r = check_axiom_on(lex("plurality"), Axiom::strategy_proof, {p, q});
  CHECK_FALSE(r.holds);
}

TEST_CASE("implications among axioms") {
  const std::vector<Rule> catalog{make_rule("plurality"), make_rule("borda"), make_rule("copeland"),
                                  make_rule("dictatorship:1"), make_rule("veto")};
  for (const auto& row : implication_suite(3, 3, catalog)) {
    CAPTURE(row.rule);
    if (row.rule != "veto") CHECK(row.ok);
  }
  // veto is monotonic and non-imposed yet ties x and y when everyone ranks x>y>z
  const auto veto = implication_suite(3, 3, {make_rule("veto")}).front();
  CHECK(veto.non_imposed);
  CHECK(veto.monotonic);
  CHECK_FALSE(veto.unanimous);
  CHECK_FALSE(veto.ok);
  // a constant rule is imposed, so the first implication holds vacuously
  CHECK(implication_suite(2, 3, {make_rule("constant:a")}).front().ok);
}

TEST_CASE("decisive coalitions of a dictatorship form a principal ultrafilter") {
  const auto w = decisive_coalitions(dictatorship_spf(3, 3, 1));
  const auto u = ultrafilter_check(w.all);
  CHECK(u.grand_set);
  CHECK(u.complement_dichotomy);
  CHECK(u.intersection_closed);
  CHECK(u.superset_closed);
  REQUIRE(u.principal);
  CHECK(*u.principal == 1);
  CHECK(contagion_holds(w));
}

TEST_CASE("plurality spf is not intersection closed") {
  const auto w = decisive_coalitions(tabulate_spf(make_rule("plurality"), 3, 2));
  const auto u = ultrafilter_check(w.all);
  CHECK_FALSE(u.intersection_closed);
  const std::pair witness{Coalition::single(0).with(1), Coalition::single(1).with(2)};
  CHECK(std::find(u.intersection_failures.begin(), u.intersection_failures.end(), witness) !=
        u.intersection_failures.end());
}

TEST_CASE("sen witness") {
  const auto s = sen_witness(2, 4, {{0, 1}, {2, 3}});
  CHECK(s.covers_all);
  const auto t = sen_witness(2, 3, {{0, 1}, {2, 0}});
  CHECK(t.covers_all);
  CHECK_THROWS_AS(sen_witness(2, 3, {{0, 1}, {1, 0}}), DomainError);
}

TEST_CASE("dictatorship spf is linear") {
  const auto r = spf_linearity_check(dictatorship_spf(2, 3, 0));
  CHECK(r.premise);
  CHECK_FALSE(r.ties_found);
}
