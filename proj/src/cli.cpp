#include "scrutineer/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "scrutineer/axioms.hpp"
#include "scrutineer/consensus.hpp"
#include "scrutineer/core.hpp"
#include "scrutineer/epistemic.hpp"
#include "scrutineer/multiwinner.hpp"
#include "scrutineer/rules.hpp"
#include "scrutineer/strategy.hpp"
#include "scrutineer/tournaments.hpp"

namespace scrutineer {

namespace {

using json = nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Profile load_profile(const std::string& path) {
  try {
    return parse_profile(read_file(path));
  } catch (const ParseError& e) {
    throw DomainError(path + ": " + e.what());
  }
}

TieBreak parse_tiebreak(const std::string& s) {
  if (s == "none") return TieBreak::none;
  if (s == "lex" || s == "lexicographic") return TieBreak::lexicographic;
  throw DomainError("unknown tie-break '" + s + "'");
}

json labels_of(const std::vector<std::string>& labels, AltSet s) {
  json a = json::array();
  for (int x : s.members()) a.push_back(labels[x]);
  return a;
}

json rational_map(const std::vector<std::string>& labels, const std::vector<Rational>& v) {
  json o = json::object();
  for (std::size_t x = 0; x < v.size(); ++x) o[labels[x]] = to_string(v[x]);
  return o;
}

std::string ballot_text(const std::vector<std::string>& labels, const Ballot& b) {
  std::string s;
  for (int k = 0; k < b.size(); ++k) s += (k ? ">" : "") + labels[b.at(k)];
  return s;
}

// Shared option values; each subcommand binds the subset it needs.
struct Options {
  int jobs = 1;
  std::string rule;
  std::string profile;
  std::vector<std::string> profiles;
  std::string tiebreak = "none";
  bool trace = false;
  int k = 0;
  std::string mode = "canonical";
  std::uint64_t branch_budget = 100'000;
  std::optional<int> approvals;
  std::string axiom;
  std::optional<int> n;
  std::optional<int> m;
  std::string kind = "scf";
  std::string axioms;
  std::uint64_t node_budget = 2'000'000'000ULL;
  std::size_t max_witnesses = 16;
  int voter = 0;
  bool greedy = false;
  std::optional<std::string> target;
  std::vector<std::string> info_set;
  std::string space = "top";
  std::string report = "nash";
  bool best_only = false;
  std::string p;
  int n_max = 1;
  std::optional<std::uint64_t> simulate;
  std::uint64_t seed = 0;
  std::string format = "csv";
  std::string klass;
  std::string distance = "swap";
  std::uint64_t max_minimizers = 100'000;
  int max_budget = 64;
  bool weak = false;
  std::string tournament;
  std::string name;
  std::string fixture;
};

Profile input_profile(const Options& o) {
  if (!o.fixture.empty()) return fixture(o.fixture);
  if (o.profile.empty()) throw DomainError("give --profile or --fixture");
  return load_profile(o.profile);
}

void emit(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

// ---------------------------------------------------------------------------

int cmd_elect(const Options& o, std::ostream& out) {
  const Profile p = input_profile(o);
  const Rule rule = make_rule(o.rule, &p.labels()).with_tiebreak(parse_tiebreak(o.tiebreak));
  const ChoiceResult r = rule.evaluate(p);
  json j;
  j["winners"] = labels_of(p.labels(), resolve(r.winners, rule.tiebreak()));
  if (r.winners != resolve(r.winners, rule.tiebreak())) j["tied"] = labels_of(p.labels(), r.winners);
  if (r.scores) j["scores"] = rational_map(p.labels(), *r.scores);
  if (r.distance) j["distance"] = *r.distance;
  if (!r.orders.empty()) {
    json orders = json::array();
    for (const auto& b : r.orders) orders.push_back(ballot_text(p.labels(), b));
    j["orders"] = orders;
  }
  if (o.trace) j["trace"] = r.trace;
  emit(out, j);
  return 0;
}

int cmd_committee(const Options& o, std::ostream& out) {
  const Profile p = input_profile(o);
  CommitteeResult r;
  json j;
  const std::string& name = o.rule;
  if (name == "best-plurality") {
    r = best_k(BestKScore::plurality, p, o.k);
  } else if (name == "best-approval") {
    r = best_k(BestKScore::k_approval, p, o.k, o.approvals);
  } else if (name == "best-borda") {
    r = best_k(BestKScore::borda, p, o.k);
  } else if (name == "chco") {
    r = chamberlin_courant(p, o.k, borda_vector(p.m()));
  } else if (name == "pav") {
    r = pav_k(p, o.k);
  } else if (name == "seq-plurality") {
    r = sequential_plurality(p, o.k, parse_tiebreak(o.tiebreak));
  } else if (name == "cstv") {
    CstvMode mode;
    if (o.mode == "canonical")
      mode = CstvMode::canonical;
    else if (o.mode == "parallel")
      mode = CstvMode::parallel;
    else
      throw DomainError("unknown mode '" + o.mode + "'");
    r = cstv(p, o.k, mode, o.branch_budget);
    j["quota"] = droop_quota(p.n(), o.k);
  } else if (name == "condorcet") {
    r.committees = condorcet_committees(p, o.k);
  } else {
    throw DomainError("unknown committee rule '" + name + "'");
  }
  json cs = json::array();
  for (auto c : r.committees) cs.push_back(labels_of(p.labels(), c));
  j["committees"] = cs;
  if (r.score) j["score"] = to_string(*r.score);
  if (o.trace && !r.trace.empty()) j["trace"] = r.trace;
  if (r.exhausted) {
    j["partial"] = true;
    emit(out, j);
    return 2;
  }
  emit(out, j);
  return 0;
}

json witness_json(const Witness& w) {
  json j;
  json ps = json::array();
  for (const auto& p : w.profiles) ps.push_back(render_profile(p));
  j["profiles"] = ps;
  if (w.permutation) j["permutation"] = *w.permutation;
  if (w.voter) j["voter"] = *w.voter;
  if (!w.alternatives.empty()) {
    const auto labels = w.profiles.empty() ? default_labels(w.space ? w.space->second : 0) : w.profiles.front().labels();
    json a = json::array();
    for (int x : w.alternatives) a.push_back(labels[x]);
    j["alternatives"] = a;
  }
  if (w.space) j["space"] = {{"n", w.space->first}, {"m", w.space->second}};
  j["note"] = w.note;
  return j;
}

int cmd_axiom(const Options& o, std::ostream& out) {
  const Axiom a = parse_axiom(o.axiom);
  json j;
  j["axiom"] = axiom_name(a);
  CheckReport r;
  if (!o.profiles.empty()) {
    std::vector<Profile> domain;
    for (const auto& path : o.profiles) domain.push_back(load_profile(path));
    const Rule rule = make_rule(o.rule, &domain.front().labels()).with_tiebreak(parse_tiebreak(o.tiebreak));
    j["rule"] = rule.name();
    j["domain"] = domain.size();
    r = check_axiom_on(rule, a, domain);
    if (r.witness) j["replayed"] = replay_witness(rule, a, *r.witness);
  } else {
    if (!o.n || !o.m) throw DomainError("axiom needs --n and --m, or --profile files");
    const Rule rule = make_rule(o.rule).with_tiebreak(parse_tiebreak(o.tiebreak));
    j["rule"] = rule.name();
    j["n"] = *o.n;
    j["m"] = *o.m;
    r = check_axiom(rule, a, *o.n, *o.m, o.jobs);
    if (r.witness) j["replayed"] = replay_witness(rule, a, *r.witness);
  }
  j["holds"] = r.holds;
  if (r.witness) j["witness"] = witness_json(*r.witness);
  emit(out, j);
  return 0;
}

std::vector<Axiom> parse_axiom_list(const std::string& text) {
  std::vector<Axiom> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(parse_axiom(item));
  if (out.empty()) throw DomainError("no axioms given");
  return out;
}

json table_json(const FunctionTable& t) {
  const DomainIndex d(t.n, t.m);
  const auto labels = default_labels(t.m);
  json rows = json::array();
  for (std::uint64_t p = 0; p < d.size(); ++p) {
    std::string key;
    for (int i = 0; i < t.n; ++i) key += (i ? " " : "") + ballot_text(labels, d.ballot(p, i));
    std::string value;
    if (t.kind == FunctionKind::scf) {
      for (int x : t.choice[p].members()) value += (value.empty() ? "" : ",") + labels[x];
    } else {
      value = render_weak_order(labels, t.preference[p]);
    }
    rows.push_back(key + " -> " + value);
  }
  return rows;
}

json table_matches_json(const FunctionTable& t) {
  std::vector<std::string> names = {"plurality", "borda", "copeland", "condorcet", "veto", "runoff", "stv"};
  for (int i = 0; i < t.n; ++i) names.push_back("dictatorship:" + std::to_string(i));
  json matches = json::array();
  for (const auto& name : names)
    for (TieBreak tb : {TieBreak::none, TieBreak::lexicographic}) {
      const Rule rule = make_rule(name).with_tiebreak(tb);
      const bool ok = t.kind == FunctionKind::scf ? table_matches(t, rule) : false;
      if (ok) matches.push_back(name + (tb == TieBreak::lexicographic ? "+lex" : ""));
    }
  if (t.kind == FunctionKind::spf)
    for (int i = 0; i < t.n; ++i)
      if (dictatorship_spf(t.n, t.m, i).preference == t.preference) matches.push_back("dictatorship:" + std::to_string(i));
  return matches;
}

int cmd_impossibility(const Options& o, std::ostream& out) {
  if (!o.n || !o.m) throw DomainError("impossibility needs --n and --m");
  FunctionKind kind;
  if (o.kind == "scf")
    kind = FunctionKind::scf;
  else if (o.kind == "spf")
    kind = FunctionKind::spf;
  else
    throw DomainError("unknown kind '" + o.kind + "'");
  const auto axioms = parse_axiom_list(o.axioms);
  SearchOptions opt;
  opt.jobs = o.jobs;
  opt.node_budget = o.node_budget;
  opt.max_witnesses = o.max_witnesses;
  const SearchResult r = impossibility_search(*o.n, *o.m, kind, axioms, opt);
  json j;
  j["n"] = *o.n;
  j["m"] = *o.m;
  j["kind"] = o.kind;
  json names = json::array();
  for (Axiom a : axioms) names.push_back(axiom_name(a));
  j["axioms"] = names;
  j["method"] = r.exhaustive_enumeration ? "enumeration" : "backtracking";
  if (r.exhaustive_enumeration)
    j["tables_examined"] = r.tables_examined;
  else
    j["nodes"] = r.nodes;
  j["census"] = r.census;
  j["unsat"] = r.census == 0;
  json ws = json::array();
  for (const auto& t : r.witnesses) ws.push_back({{"table", table_json(t)}, {"matches", table_matches_json(t)}});
  j["witnesses"] = ws;
  emit(out, j);
  return 0;
}

Alternative alternative_arg(const Profile& p, const std::string& s) { return p.index_of(s); }

int cmd_manipulate(const Options& o, std::ostream& out) {
  const Profile p = input_profile(o);
  const Rule rule = make_rule(o.rule, &p.labels()).with_tiebreak(parse_tiebreak(o.tiebreak));
  if (o.voter < 0 || o.voter >= p.n()) throw DomainError("voter index out of range");
  const auto& L = p.labels();
  json j;
  j["voter"] = o.voter;
  j["rule"] = rule.name();
  if (o.greedy) {
    if (!o.target) throw DomainError("--greedy needs --target");
    const Alternative x = alternative_arg(p, *o.target);
    const Profile others = p.without_voter(o.voter);
    const auto b = greedy_manipulation(rule, others, x);
    j["target"] = *o.target;
    j["found"] = b.has_value();
    if (b) {
      const Profile replay = p.with_ballot(o.voter, *b);
      j["ballot"] = ballot_text(L, *b);
      j["winner"] = labels_of(L, rule.choose(replay));
      j["profile"] = render_profile(replay);
    }
    const auto exhaustive = find_manipulation(rule, p, o.voter, x);
    const bool truthful_elects = rule.choose(p) == AltSet::single(x);
    j["exhaustive_found"] = exhaustive.has_value() || truthful_elects;
    emit(out, j);
    return 0;
  }
  if (!o.info_set.empty()) {
    std::vector<Profile> is;
    for (const auto& path : o.info_set) is.push_back(load_profile(path));
    const auto b = dominating_manipulation(rule, o.voter, is);
    j["information_set"] = is.size();
    j["found"] = b.has_value();
    if (b) j["ballot"] = ballot_text(L, *b);
    emit(out, j);
    return 0;
  }
  std::optional<Alternative> target;
  if (o.target) target = alternative_arg(p, *o.target);
  const auto w = find_manipulation(rule, p, o.voter, target);
  j["manipulable"] = w.has_value();
  j["outcome_truthful"] = labels_of(L, rule.choose(p));
  if (w) {
    j["truthful"] = ballot_text(L, w->truthful);
    j["strategic"] = ballot_text(L, w->strategic);
    j["outcome_strategic"] = L[w->outcome_strategic];
    j["profile"] = render_profile(p.with_ballot(o.voter, w->strategic));
  }
  emit(out, j);
  return 0;
}

StrategySpace parse_space(const std::string& s) {
  if (s == "top") return StrategySpace::top_only;
  if (s == "full") return StrategySpace::full;
  throw DomainError("unknown strategy space '" + s + "'");
}

int cmd_game(const Options& o, std::ostream& out) {
  const StrategySpace space = parse_space(o.space);
  json j;
  j["space"] = o.space;
  if (o.report == "poa" && o.profile.empty() && o.fixture.empty()) {
    if (!o.n || !o.m) throw DomainError("game --report poa needs --profile or --n and --m");
    const Rule rule = make_rule(o.rule).with_tiebreak(parse_tiebreak(o.tiebreak));
    const PoaResult r = dynamic_poa(rule, *o.n, *o.m, space, o.best_only, o.jobs);
    j["rule"] = rule.name();
    j["n"] = *o.n;
    j["m"] = *o.m;
    j["profiles"] = r.profiles;
    j["poa"] = r.value ? json(to_string(*r.value)) : json(nullptr);
    if (r.truth) j["truth"] = render_profile(*r.truth);
    if (r.equilibrium) j["equilibrium"] = render_profile(*r.equilibrium);
    emit(out, j);
    return 0;
  }
  const Profile p = input_profile(o);
  const Rule rule = make_rule(o.rule, &p.labels()).with_tiebreak(parse_tiebreak(o.tiebreak));
  j["rule"] = rule.name();
  const VotingGame g{p, rule, space};
  const ResponseGraph graph = best_response_graph(g, o.best_only);
  const auto& L = p.labels();
  auto node_json = [&](std::uint32_t u) {
    json n;
    n["profile"] = render_profile(strategy_profile(g, graph, u));
    n["outcome"] = L[graph.outcome[u]];
    return n;
  };
  const auto equilibria = reachable_equilibria(graph);
  if (o.report == "nash") {
    j["nodes"] = graph.outcome.size();
    j["equilibria"] = graph.sinks.size();
    j["truthful"] = node_json(graph.truthful);
    json dev = json::array();
    const Profile truthful = strategy_profile(g, graph, graph.truthful);
    for (auto v : graph.edges[graph.truthful]) {
      const Profile q = strategy_profile(g, graph, v);
      for (int i = 0; i < p.n(); ++i)
        if (q.ballot(i) != truthful.ballot(i))
          dev.push_back({{"voter", i}, {"ballot", ballot_text(L, q.ballot(i))}, {"outcome", L[graph.outcome[v]]}});
    }
    j["deviations"] = dev;
    json reach = json::array();
    for (auto u : equilibria) reach.push_back(node_json(u));
    j["reachable_equilibria"] = reach;
  } else if (o.report == "poa") {
    if (!rule.is_positional() || rule.tiebreak() != TieBreak::lexicographic)
      throw DomainError("price of anarchy needs a positional scoring rule with lexicographic tie-break");
    const ScoreVector w = rule.weights(p.m());
    auto score = [&](const Profile& q, Alternative x) {
      Rational s = 0;
      for (const auto& b : q.ballots()) s += w[b.position(x)];
      return s;
    };
    const Rational truthful = score(p, graph.outcome[graph.truthful]);
    std::optional<Rational> best;
    std::optional<std::uint32_t> arg;
    for (auto u : equilibria) {
      const Rational s = score(strategy_profile(g, graph, u), graph.outcome[u]);
      if (s == 0) continue;
      if (!best || truthful / s < *best) {
        best = truthful / s;
        arg = u;
      }
    }
    j["poa"] = best ? json(to_string(*best)) : json(nullptr);
    if (arg) j["equilibrium"] = node_json(*arg);
  } else {
    throw DomainError("unknown report '" + o.report + "'");
  }
  emit(out, j);
  return 0;
}

std::string fixed6(double v) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(6) << v;
  return s.str();
}

int cmd_jury(const Options& o, std::ostream& out) {
  const Rational p = parse_rational(o.p);
  if (o.format != "csv" && o.format != "json") throw DomainError("unknown format '" + o.format + "'");
  const auto rec = jury_accuracy_recursive(o.n_max, p);
  std::vector<JuryEstimate> est;
  if (o.simulate)
    for (int n = 1; n <= o.n_max; n += 2) est.push_back(jury_simulate(n, p, *o.simulate, o.seed, o.jobs));
  if (o.format == "csv") {
    if (o.simulate) out << "# seed=" << o.seed << " trials=" << *o.simulate << '\n';
    out << "n,exact" << (o.simulate ? ",estimate,ci_low,ci_high" : "") << '\n';
    for (std::size_t k = 0; k < rec.size(); ++k) {
      out << (2 * k + 1) << ',' << to_string(jury_accuracy(static_cast<int>(2 * k + 1), p));
      if (o.simulate) out << ',' << fixed6(est[k].estimate) << ',' << fixed6(est[k].ci_low) << ',' << fixed6(est[k].ci_high);
      out << '\n';
    }
    return 0;
  }
  json j;
  j["p"] = to_string(p);
  json rows = json::array();
  for (std::size_t k = 0; k < rec.size(); ++k) {
    const int n = static_cast<int>(2 * k + 1);
    json row = {{"n", n}, {"exact", to_string(jury_accuracy(n, p))}, {"recursive", to_string(rec[k])}};
    if (o.simulate) {
      row["estimate"] = fixed6(est[k].estimate);
      row["ci_low"] = fixed6(est[k].ci_low);
      row["ci_high"] = fixed6(est[k].ci_high);
    }
    rows.push_back(row);
  }
  j["rows"] = rows;
  if (o.simulate) {
    j["seed"] = o.seed;
    j["trials"] = *o.simulate;
  }
  emit(out, j);
  return 0;
}

int cmd_consensus(const Options& o, std::ostream& out) {
  const Profile p = input_profile(o);
  const ConsensusClass c = parse_consensus_class(o.klass);
  const Distance d = parse_distance(o.distance);
  ConsensusOptions opt;
  opt.max_minimizers = o.max_minimizers;
  opt.max_budget = o.max_budget;
  const ConsensusResult r = closest_consensus(p, c, d, opt);
  json j;
  j["distance"] = r.distance;
  j["winners"] = labels_of(p.labels(), r.winners);
  json ms = json::array();
  for (const auto& q : r.minimizers) ms.push_back(render_profile(q));
  j["minimizers"] = ms;
  j["count"] = r.minimizers.size();
  emit(out, j);
  return 0;
}

int cmd_tournament(const Options& o, std::ostream& out) {
  const Profile p = input_profile(o);
  const Tournament t = majority_graph(p, o.weak);
  const auto& L = p.labels();
  json j;
  json edges = json::array();
  for (auto [x, y] : t.edges()) edges.push_back(L[x] + ">" + L[y]);
  j["edges"] = edges;
  j["weak"] = o.weak;
  j["transitive"] = is_transitive(t);
  j["condorcet_winner"] = labels_of(L, condorcet_winner(p, o.weak));
  json net_matrix = json::object();
  const MajorityGraph g(p);
  for (int x = 0; x < p.m(); ++x) {
    json row = json::object();
    for (int y = 0; y < p.m(); ++y)
      if (x != y) row[L[y]] = g.net(x, y);
    net_matrix[L[x]] = row;
  }
  j["net"] = net_matrix;
  emit(out, j);
  return 0;
}

int cmd_mcgarvey(const Options& o, std::ostream& out) {
  const Tournament t = parse_tournament(read_file(o.tournament));
  const Profile p = mcgarvey_realize(t);
  out << render_profile(p);
  return 0;
}

int cmd_fixtures(const Options& o, std::ostream& out) {
  if (o.name.empty()) {
    for (const auto& n : fixture_names()) out << n << '\n';
    return 0;
  }
  out << render_profile(fixture(o.name));
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"scrutineer: computational social choice engine"};
  app.name("scrutineer");
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--jobs", o.jobs, "worker threads for search commands")->check(CLI::PositiveNumber);

  auto* elect = app.add_subcommand("elect", "evaluate a single-winner rule");
  elect->add_option("--rule", o.rule, "NAME[:PARAMS]")->required();
  elect->add_option("--profile", o.profile, "profile file");
  elect->add_option("--fixture", o.fixture, "built-in profile name");
  elect->add_option("--tiebreak", o.tiebreak, "none|lex");
  elect->add_flag("--trace", o.trace, "include the round log");

  auto* committee = app.add_subcommand("committee", "evaluate a committee rule");
  committee->add_option("--rule", o.rule, "best-plurality|best-approval|best-borda|chco|pav|seq-plurality|cstv|condorcet")
      ->required();
  committee->add_option("--k", o.k, "committee size")->required();
  committee->add_option("--profile", o.profile, "profile file");
  committee->add_option("--fixture", o.fixture, "built-in profile name");
  committee->add_option("--mode", o.mode, "canonical|parallel (cstv)");
  committee->add_option("--branch-budget", o.branch_budget, "cstv parallel branch budget");
  committee->add_option("--approvals", o.approvals, "approvals per voter (best-approval)");
  committee->add_option("--tiebreak", o.tiebreak, "none|lex (seq-plurality)");
  committee->add_flag("--trace", o.trace, "include the stage log");

  auto* axiom = app.add_subcommand("axiom", "check an axiom exhaustively or on given profiles");
  axiom->add_option("--rule", o.rule, "NAME[:PARAMS]")->required();
  axiom->add_option("--axiom", o.axiom, "axiom id")->required();
  axiom->add_option("--n", o.n, "voters");
  axiom->add_option("--m", o.m, "alternatives");
  axiom->add_option("--profile", o.profiles, "restrict the domain to these profiles");
  axiom->add_option("--tiebreak", o.tiebreak, "none|lex");

  auto* impossibility = app.add_subcommand("impossibility", "search all functions satisfying a set of axioms");
  impossibility->add_option("--n", o.n, "voters")->required();
  impossibility->add_option("--m", o.m, "alternatives")->required();
  impossibility->add_option("--kind", o.kind, "scf|spf");
  impossibility->add_option("--axioms", o.axioms, "comma-separated axiom ids")->required();
  impossibility->add_option("--node-budget", o.node_budget, "backtracking node budget");
  impossibility->add_option("--max-witnesses", o.max_witnesses, "tables to print");

  auto* manipulate = app.add_subcommand("manipulate", "search for a profitable misreport");
  manipulate->add_option("--rule", o.rule, "NAME[:PARAMS]")->required();
  manipulate->add_option("--profile", o.profile, "profile file");
  manipulate->add_option("--fixture", o.fixture, "built-in profile name");
  manipulate->add_option("--voter", o.voter, "0-based voter index")->required();
  manipulate->add_option("--tiebreak", o.tiebreak, "none|lex");
  manipulate->add_flag("--greedy", o.greedy, "use the greedy construction");
  manipulate->add_option("--target", o.target, "alternative to elect");
  manipulate->add_option("--info-set", o.info_set, "profiles the voter considers possible");

  auto* game = app.add_subcommand("game", "iterative voting game analysis");
  game->add_option("--rule", o.rule, "NAME[:PARAMS]")->required();
  game->add_option("--profile", o.profile, "true profile");
  game->add_option("--fixture", o.fixture, "built-in profile name");
  game->add_option("--n", o.n, "voters (domain-wide poa)");
  game->add_option("--m", o.m, "alternatives (domain-wide poa)");
  game->add_option("--space", o.space, "top|full");
  game->add_option("--report", o.report, "nash|poa");
  game->add_option("--tiebreak", o.tiebreak, "none|lex");
  game->add_flag("--best-only", o.best_only, "only best responses form edges");

  auto* jury = app.add_subcommand("jury", "jury theorem accuracy table");
  jury->add_option("--p", o.p, "competence as a rational")->required();
  jury->add_option("--n-max", o.n_max, "largest odd jury size")->required();
  jury->add_option("--simulate", o.simulate, "Monte-Carlo trials per row");
  jury->add_option("--seed", o.seed, "generator seed");
  jury->add_option("--format", o.format, "csv|json");

  auto* consensus = app.add_subcommand("consensus", "closest consensus profiles");
  consensus->add_option("--class", o.klass, "u|s|c")->required();
  consensus->add_option("--distance", o.distance, "swap|discrete");
  consensus->add_option("--profile", o.profile, "profile file");
  consensus->add_option("--fixture", o.fixture, "built-in profile name");
  consensus->add_option("--max-minimizers", o.max_minimizers, "cap on reported minimizers");
  consensus->add_option("--max-budget", o.max_budget, "distance budget for the condorcet class");

  auto* tournament = app.add_subcommand("tournament", "majority graph of a profile");
  tournament->add_option("--profile", o.profile, "profile file");
  tournament->add_option("--fixture", o.fixture, "built-in profile name");
  tournament->add_flag("--weak", o.weak, "ties give edges in both directions");

  auto* mcgarvey = app.add_subcommand("mcgarvey", "profile realizing a tournament");
  mcgarvey->add_option("--tournament", o.tournament, "tournament file")->required();

  auto* fixtures = app.add_subcommand("fixtures", "list or print built-in profiles");
  fixtures->add_option("--name", o.name, "fixture name");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return 1;
  }

  try {
    if (elect->parsed()) return cmd_elect(o, out);
    if (committee->parsed()) return cmd_committee(o, out);
    if (axiom->parsed()) return cmd_axiom(o, out);
    if (impossibility->parsed()) return cmd_impossibility(o, out);
    if (manipulate->parsed()) return cmd_manipulate(o, out);
    if (game->parsed()) return cmd_game(o, out);
    if (jury->parsed()) return cmd_jury(o, out);
    if (consensus->parsed()) return cmd_consensus(o, out);
    if (tournament->parsed()) return cmd_tournament(o, out);
    if (mcgarvey->parsed()) return cmd_mcgarvey(o, out);
    if (fixtures->parsed()) return cmd_fixtures(o, out);
  } catch (const BudgetExceeded& e) {
    emit(out, json{{"partial", true}, {"error", e.what()}});
    err << "budget exceeded: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  err << app.help();
  return 1;
}

}  // namespace scrutineer
