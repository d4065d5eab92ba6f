#include <doctest.h>

#include "scrutineer/axioms.hpp"
#include "scrutineer/rules.hpp"

using namespace scrutineer;

TEST_CASE("no anonymous, neutral, resolute function for two voters") {
  const auto r = impossibility_search(2, 2, FunctionKind::scf, {Axiom::anonymous, Axiom::neutral, Axiom::resolute});
  CHECK(r.exhaustive_enumeration);
  CHECK(r.tables_examined == 16);
  CHECK(r.census == 0);
}

TEST_CASE("majority is the unique resolute anonymous neutral monotonic function") {
  const auto r = impossibility_search(3, 2, FunctionKind::scf,
                                      {Axiom::resolute, Axiom::anonymous, Axiom::neutral, Axiom::monotonic});
  CHECK(r.tables_examined == 256);
  REQUIRE(r.census == 1);
  CHECK(table_matches(r.witnesses.front(), make_rule("plurality")));
}

TEST_CASE("gibbard-satterthwaite base case") {
  SearchOptions opt;
  opt.jobs = 2;
  const auto r = impossibility_search(2, 3, FunctionKind::scf,
                                      {Axiom::resolute, Axiom::non_imposed, Axiom::strategy_proof}, opt);
  CHECK_FALSE(r.exhaustive_enumeration);
  REQUIRE(r.census == 2);
  CHECK(table_matches(r.witnesses[0], make_rule("dictatorship:0")));
  CHECK(table_matches(r.witnesses[1], make_rule("dictatorship:1")));
}

TEST_CASE("backtracking agrees with enumeration") {
  // anonymous + neutral + pareto at (2,2): the irresolute majority only
  const auto e = impossibility_search(2, 2, FunctionKind::scf, {Axiom::anonymous, Axiom::neutral, Axiom::pareto});
  SearchOptions opt;
  opt.enumeration_limit = 0;
  const auto b =
      impossibility_search(2, 2, FunctionKind::scf, {Axiom::anonymous, Axiom::neutral, Axiom::pareto}, opt);
  CHECK(e.exhaustive_enumeration);
  CHECK_FALSE(b.exhaustive_enumeration);
  CHECK(e.census == b.census);
  CHECK(e.census >= 1);
}

TEST_CASE("arrow base case for social preference functions") {
  const auto r = impossibility_search(2, 3, FunctionKind::spf, {Axiom::pareto_spf, Axiom::iia_spf});
  REQUIRE(r.census == 2);
  CHECK(r.witnesses[0].preference == dictatorship_spf(2, 3, 0).preference);
  CHECK(r.witnesses[1].preference == dictatorship_spf(2, 3, 1).preference);
}

TEST_CASE("search results do not depend on job count") {
  SearchOptions one, four;
  four.jobs = 4;
  const std::vector<Axiom> ax{Axiom::resolute, Axiom::non_imposed, Axiom::strategy_proof};
  const auto a = impossibility_search(2, 3, FunctionKind::scf, ax, one);
  const auto b = impossibility_search(2, 3, FunctionKind::scf, ax, four);
  CHECK(a.census == b.census);
  CHECK(a.nodes == b.nodes);
  REQUIRE(a.witnesses.size() == b.witnesses.size());
  for (std::size_t k = 0; k < a.witnesses.size(); ++k) CHECK(a.witnesses[k].choice == b.witnesses[k].choice);
}

TEST_CASE("mixing function kinds is rejected") {
  CHECK_THROWS_AS(impossibility_search(2, 2, FunctionKind::scf, {Axiom::iia_spf}), DomainError);
  CHECK_THROWS_AS(impossibility_search(2, 2, FunctionKind::spf, {Axiom::monotonic}), DomainError);
}

TEST_CASE("node budget") {
  SearchOptions opt;
  opt.enumeration_limit = 0;
  opt.node_budget = 5;
  CHECK_THROWS_AS(impossibility_search(2, 3, FunctionKind::scf,
                                       {Axiom::resolute, Axiom::non_imposed, Axiom::strategy_proof}, opt),
                  BudgetExceeded);
}
