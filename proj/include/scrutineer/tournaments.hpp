#ifndef SCRUTINEER_TOURNAMENTS_HPP
#define SCRUTINEER_TOURNAMENTS_HPP

#include <string>
#include <string_view>
#include <vector>

#include "scrutineer/core.hpp"

namespace scrutineer {

/// Net pairwise preferences of a profile.
class MajorityGraph {
 public:
  explicit MajorityGraph(const Profile& p);

  int m() const { return m_; }
  int n() const { return n_; }
  int net(Alternative x, Alternative y) const { return net_[x * m_ + y]; }

 private:
  int m_;
  int n_;
  std::vector<int> net_;
};

/// A binary relation over alternatives, stored as out-neighbour sets.
/// The weak majority relation carries both directions on ties.
class Tournament {
 public:
  explicit Tournament(int m) : out_(m) {}
  Tournament(int m, std::vector<std::string> labels) : labels_(std::move(labels)), out_(m) {}

  int m() const { return static_cast<int>(out_.size()); }
  bool beats(Alternative x, Alternative y) const { return out_[x].contains(y); }
  AltSet successors(Alternative x) const { return out_[x]; }
  void add(Alternative x, Alternative y) { out_[x] = out_[x].with(y); }
  int edge_count() const;
  std::vector<std::pair<Alternative, Alternative>> edges() const;

  /// Irreflexive, and exactly one direction between every distinct pair.
  bool is_strict_complete() const;

  const std::vector<std::string>& labels() const { return labels_; }

  friend bool operator==(const Tournament& a, const Tournament& b) { return a.out_ == b.out_; }

 private:
  std::vector<std::string> labels_;
  std::vector<AltSet> out_;
};

/// support(x,y) - support(y,x).
int net(const Profile& p, Alternative x, Alternative y);

Tournament majority_graph(const Profile& p, bool weak);

/// Strict: the Condorcet winner if any. Weak: every weak Condorcet winner.
AltSet condorcet_winner(const Profile& p, bool weak);

bool is_transitive(const Tournament& t);

/// Two ballots per edge; every other pair cancels between them.
Profile mcgarvey_realize(const Tournament& t);

/// Every strict complete tournament on m alternatives (2^C(m,2) of them).
std::vector<Tournament> all_tournaments(int m);

/// Header `tournament: m` or `tournament: a,b,c`, then one `x>y` line per edge.
Tournament parse_tournament(std::string_view text);
std::string render_tournament(const Tournament& t);

}  // namespace scrutineer

#endif
