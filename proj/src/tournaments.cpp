#include "scrutineer/tournaments.hpp"

#include <algorithm>
#include <charconv>

namespace scrutineer {

MajorityGraph::MajorityGraph(const Profile& p) : m_(p.m()), n_(p.n()), net_(p.m() * p.m(), 0) {
  for (const auto& b : p.ballots())
    for (int i = 0; i < m_; ++i)
      for (int j = i + 1; j < m_; ++j) {
        const int x = b.at(i), y = b.at(j);
        ++net_[x * m_ + y];
        --net_[y * m_ + x];
      }
}

int Tournament::edge_count() const {
  int c = 0;
  for (auto s : out_) c += s.size();
  return c;
}

std::vector<std::pair<Alternative, Alternative>> Tournament::edges() const {
  std::vector<std::pair<Alternative, Alternative>> e;
  for (int x = 0; x < m(); ++x)
    for (int y : out_[x].members()) e.emplace_back(x, y);
  return e;
}

bool Tournament::is_strict_complete() const {
  for (int x = 0; x < m(); ++x) {
    if (beats(x, x)) return false;
    for (int y = x + 1; y < m(); ++y)
      if (beats(x, y) == beats(y, x)) return false;
  }
  return true;
}

int net(const Profile& p, Alternative x, Alternative y) { return 2 * support(p, x, y) - p.n(); }

Tournament majority_graph(const Profile& p, bool weak) {
  const MajorityGraph g(p);
  Tournament t(p.m(), p.labels());
  for (int x = 0; x < p.m(); ++x)
    for (int y = 0; y < p.m(); ++y) {
      if (x == y) continue;
      if (g.net(x, y) > 0 || (weak && g.net(x, y) == 0)) t.add(x, y);
    }
  return t;
}

AltSet condorcet_winner(const Profile& p, bool weak) {
  const MajorityGraph g(p);
  AltSet winners;
  for (int x = 0; x < p.m(); ++x) {
    bool ok = true;
    for (int y = 0; y < p.m() && ok; ++y)
      if (y != x) ok = weak ? g.net(x, y) >= 0 : g.net(x, y) > 0;
    if (ok) winners = winners.with(x);
  }
  return winners;
}

bool is_transitive(const Tournament& t) {
  for (int x = 0; x < t.m(); ++x)
    for (int y : t.successors(x).members())
      for (int z : t.successors(y).members())
        if (z != x && !t.beats(x, z)) return false;
  return true;
}

Profile mcgarvey_realize(const Tournament& t) {
  if (!t.is_strict_complete()) throw DomainError("McGarvey construction needs a strict complete tournament");
  const int m = t.m();
  std::vector<Ballot> ballots;
  for (auto [x, y] : t.edges()) {
    std::vector<Alternative> rest;
    for (int z = 0; z < m; ++z)
      if (z != x && z != y) rest.push_back(z);
    std::vector<Alternative> first{x, y};
    first.insert(first.end(), rest.begin(), rest.end());
    std::vector<Alternative> second(rest.rbegin(), rest.rend());
    second.push_back(x);
    second.push_back(y);
    ballots.emplace_back(std::move(first));
    ballots.emplace_back(std::move(second));
  }
  if (ballots.empty()) ballots.push_back(Ballot::identity(m));
  auto labels = t.labels().empty() ? default_labels(m) : t.labels();
  return Profile(std::move(labels), std::move(ballots));
}

std::vector<Tournament> all_tournaments(int m) {
  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < m; ++x)
    for (int y = x + 1; y < m; ++y) pairs.emplace_back(x, y);
  if (pairs.size() > 20) throw BudgetExceeded("too many tournaments to enumerate");
  std::vector<Tournament> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    Tournament t(m, default_labels(m));
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      auto [x, y] = pairs[k];
      if ((mask >> k) & 1U) t.add(y, x);
      else t.add(x, y);
    }
    out.push_back(std::move(t));
  }
  return out;
}

namespace {
std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}
}  // namespace

Tournament parse_tournament(std::string_view text) {
  std::vector<std::string> labels;
  std::optional<Tournament> t;
  int line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (!t) {
      const auto colon = line.find(':');
      if (colon == std::string_view::npos || trim(line.substr(0, colon)) != "tournament")
        throw ParseError(line_no, "expected 'tournament:' header");
      const auto rest = trim(line.substr(colon + 1));
      int m = 0;
      auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), m);
      if (ec == std::errc() && ptr == rest.data() + rest.size()) {
        if (m < 1 || m > 64) throw ParseError(line_no, "tournament size out of range");
        labels = default_labels(m);
      } else {
        std::size_t s = 0;
        while (true) {
          auto comma = rest.find(',', s);
          auto item = trim(rest.substr(s, comma == std::string_view::npos ? std::string_view::npos : comma - s));
          if (item.empty()) throw ParseError(line_no, "empty label");
          if (std::find(labels.begin(), labels.end(), item) != labels.end())
            throw ParseError(line_no, "duplicate label '" + std::string(item) + "'");
          labels.emplace_back(item);
          if (comma == std::string_view::npos) break;
          s = comma + 1;
        }
      }
      t.emplace(static_cast<int>(labels.size()), labels);
      continue;
    }
    const auto gt = line.find('>');
    if (gt == std::string_view::npos) throw ParseError(line_no, "expected 'x>y'");
    const auto xs = trim(line.substr(0, gt));
    const auto ys = trim(line.substr(gt + 1));
    auto find = [&](std::string_view l) {
      auto it = std::find(labels.begin(), labels.end(), l);
      if (it == labels.end()) throw ParseError(line_no, "unknown alternative '" + std::string(l) + "'");
      return static_cast<int>(it - labels.begin());
    };
    const int x = find(xs), y = find(ys);
    if (x == y) throw ParseError(line_no, "reflexive edge");
    t->add(x, y);
  }
  if (!t) throw ParseError(line_no, "missing 'tournament:' header");
  return *t;
}

std::string render_tournament(const Tournament& t) {
  const auto labels = t.labels().empty() ? default_labels(t.m()) : t.labels();
  std::string s = "tournament: ";
  for (int x = 0; x < t.m(); ++x) s += (x ? "," : "") + labels[x];
  s += '\n';
  for (auto [x, y] : t.edges()) s += labels[x] + ">" + labels[y] + "\n";
  return s;
}

}  // namespace scrutineer
