#include "scrutineer/core.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace scrutineer {

std::string to_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

bool valid_label(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
  });
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(trim(s.substr(start)));
      return out;
    }
    out.push_back(trim(s.substr(start, pos - start)));
    start = pos + 1;
  }
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational value;
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const auto num = trim(s.substr(0, slash));
    const auto den = trim(s.substr(slash + 1));
    if (!all_digits(num) || !all_digits(den)) throw DomainError("malformed rational '" + std::string(text) + "'");
    const BigInt d{std::string(den)};
    if (d == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
    value = Rational(BigInt(std::string(num)), d);
  } else if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    const auto whole = s.substr(0, dot);
    const auto frac = s.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac))
      throw DomainError("malformed rational '" + std::string(text) + "'");
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    BigInt num(std::string(whole.empty() ? "0" : whole) + std::string(frac));
    value = Rational(num, scale);
  } else {
    if (!all_digits(s)) throw DomainError("malformed rational '" + std::string(text) + "'");
    value = Rational(BigInt(std::string(s)));
  }
  return negative ? Rational(-value) : value;
}

Ballot::Ballot(std::vector<Alternative> order) : order_(std::move(order)), position_(order_.size(), -1) {
  const int m = static_cast<int>(order_.size());
  for (int p = 0; p < m; ++p) {
    const int x = order_[p];
    if (x < 0 || x >= m || position_[x] != -1) throw DomainError("ballot is not a permutation");
    position_[x] = p;
  }
}

Ballot Ballot::identity(int m) {
  std::vector<Alternative> v(m);
  std::iota(v.begin(), v.end(), 0);
  return Ballot(std::move(v));
}

Alternative Ballot::top_among(AltSet among) const {
  for (Alternative x : order_)
    if (among.contains(x)) return x;
  throw DomainError("top_among: empty set");
}

Ballot Ballot::with_top(Alternative x) const {
  std::vector<Alternative> v;
  v.reserve(order_.size());
  v.push_back(x);
  for (Alternative y : order_)
    if (y != x) v.push_back(y);
  return Ballot(std::move(v));
}

Ballot Ballot::reversed() const { return Ballot(std::vector<Alternative>(order_.rbegin(), order_.rend())); }

int rank_of(const Ballot& b, Alternative x) { return b.position(x) + 1; }

std::uint64_t factorial(int k) {
  std::uint64_t f = 1;
  for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::vector<std::vector<int>> all_permutations(int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> v(k);
  std::iota(v.begin(), v.end(), 0);
  do out.push_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

const std::vector<Ballot>& all_ballots(int m) {
  static std::mutex mu;
  static std::map<int, std::vector<Ballot>> cache;
  if (m < 1 || m > 10) throw BudgetExceeded("ballot enumeration limited to m <= 10");
  std::lock_guard lock(mu);
  auto it = cache.find(m);
  if (it == cache.end()) {
    std::vector<Ballot> v;
    for (auto& p : all_permutations(m)) v.emplace_back(std::move(p));
    it = cache.emplace(m, std::move(v)).first;
  }
  return it->second;
}

std::size_t ballot_index(const Ballot& b) {
  // Lehmer code
  const int m = b.size();
  std::size_t idx = 0;
  for (int i = 0; i < m; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < m; ++j)
      if (b.at(j) < b.at(i)) ++smaller;
    idx += smaller * factorial(m - 1 - i);
  }
  return idx;
}

std::vector<std::string> default_labels(int m) {
  std::vector<std::string> out;
  for (int i = 0; i < m; ++i) {
    if (i < 26) out.emplace_back(1, static_cast<char>('a' + i));
    else out.push_back("x" + std::to_string(i));
  }
  return out;
}

Profile::Profile(std::vector<std::string> labels, std::vector<Ballot> ballots)
    : labels_(std::move(labels)), ballots_(std::move(ballots)) {
  if (labels_.empty()) throw DomainError("profile needs at least one alternative");
  if (labels_.size() > 64) throw DomainError("at most 64 alternatives supported");
  if (ballots_.empty()) throw DomainError("profile needs at least one voter");
  for (std::size_t i = 0; i < labels_.size(); ++i)
    for (std::size_t j = i + 1; j < labels_.size(); ++j)
      if (labels_[i] == labels_[j]) throw DomainError("duplicate label '" + labels_[i] + "'");
  for (const auto& b : ballots_)
    if (b.size() != m()) throw DomainError("ballot length does not match number of alternatives");
}

Profile::Profile(int m, std::vector<Ballot> ballots) : Profile(default_labels(m), std::move(ballots)) {}

Alternative Profile::index_of(std::string_view label) const {
  for (int i = 0; i < m(); ++i)
    if (labels_[i] == label) return i;
  throw DomainError("unknown alternative '" + std::string(label) + "'");
}

Profile Profile::with_ballot(Voter i, Ballot b) const {
  if (i < 0 || i >= n()) throw DomainError("voter index out of range");
  auto copy = ballots_;
  copy[i] = std::move(b);
  return Profile(labels_, std::move(copy));
}

Profile Profile::without_voter(Voter i) const {
  if (i < 0 || i >= n()) throw DomainError("voter index out of range");
  auto copy = ballots_;
  copy.erase(copy.begin() + i);
  return Profile(labels_, std::move(copy));
}

Profile Profile::with_voter_appended(Ballot b) const {
  auto copy = ballots_;
  copy.push_back(std::move(b));
  return Profile(labels_, std::move(copy));
}

int support(const Profile& p, Alternative x, Alternative y) {
  if (x == y) throw DomainError("support requires distinct alternatives");
  int s = 0;
  for (const auto& b : p.ballots())
    if (b.prefers(x, y)) ++s;
  return s;
}

Coalition supporters(const Profile& p, Alternative x, Alternative y) {
  if (p.n() > 64) throw DomainError("coalitions limited to 64 voters");
  Coalition c;
  for (int i = 0; i < p.n(); ++i)
    if (p.ballot(i).prefers(x, y)) c = c.with(i);
  return c;
}

std::vector<int> plurality_scores(const Profile& p, AltSet active) {
  std::vector<int> s(p.m(), 0);
  for (const auto& b : p.ballots()) ++s[b.top_among(active)];
  return s;
}

Profile restrict(const Profile& p, AltSet keep) {
  keep = keep & p.alternatives();
  if (keep.empty()) throw DomainError("restriction to an empty set");
  std::vector<int> newindex(p.m(), -1);
  std::vector<std::string> labels;
  for (int x : keep.members()) {
    newindex[x] = static_cast<int>(labels.size());
    labels.push_back(p.label(x));
  }
  std::vector<Ballot> ballots;
  for (const auto& b : p.ballots()) {
    std::vector<Alternative> order;
    for (Alternative x : b.order())
      if (keep.contains(x)) order.push_back(newindex[x]);
    ballots.emplace_back(std::move(order));
  }
  return Profile(std::move(labels), std::move(ballots));
}

namespace {
void require_bijection(std::span<const int> f, int size) {
  if (static_cast<int>(f.size()) != size) throw DomainError("permutation has wrong length");
  std::vector<bool> seen(size, false);
  for (int v : f) {
    if (v < 0 || v >= size || seen[v]) throw DomainError("mapping is not a bijection");
    seen[v] = true;
  }
}
}  // namespace

Profile permute_voters(const Profile& p, std::span<const int> pi) {
  require_bijection(pi, p.n());
  std::vector<Ballot> ballots;
  for (int i = 0; i < p.n(); ++i) ballots.push_back(p.ballot(pi[i]));
  return Profile(p.labels(), std::move(ballots));
}

Ballot permute_ballot(const Ballot& b, std::span<const int> rho) {
  std::vector<Alternative> order;
  for (Alternative x : b.order()) order.push_back(rho[x]);
  return Ballot(std::move(order));
}

Profile permute_alternatives(const Profile& p, std::span<const int> rho) {
  require_bijection(rho, p.m());
  std::vector<Ballot> ballots;
  for (const auto& b : p.ballots()) ballots.push_back(permute_ballot(b, rho));
  return Profile(p.labels(), std::move(ballots));
}

Ballot parse_ballot(const std::vector<std::string>& labels, std::string_view text) {
  const int m = static_cast<int>(labels.size());
  auto parts = split(text, '>');
  // Compact form "abc" when every label is one character.
  if (parts.size() == 1 && m > 1 &&
      std::all_of(labels.begin(), labels.end(), [](const std::string& l) { return l.size() == 1; })) {
    parts.clear();
    for (std::size_t i = 0; i < text.size(); ++i)
      if (text[i] != ' ') parts.push_back(text.substr(i, 1));
  }
  std::vector<Alternative> order;
  std::vector<bool> seen(m, false);
  for (auto part : parts) {
    auto it = std::find(labels.begin(), labels.end(), part);
    if (it == labels.end()) throw DomainError("unknown alternative '" + std::string(part) + "'");
    const int x = static_cast<int>(it - labels.begin());
    if (seen[x]) throw DomainError("duplicate alternative '" + std::string(part) + "'");
    seen[x] = true;
    order.push_back(x);
  }
  if (static_cast<int>(order.size()) != m) throw DomainError("ballot is missing alternatives");
  return Ballot(std::move(order));
}

Ballot parse_ballot(const Profile& context, std::string_view text) { return parse_ballot(context.labels(), text); }

std::string render_ballot(const Profile& context, const Ballot& b) {
  std::string s;
  for (int i = 0; i < b.size(); ++i) {
    if (i) s += '>';
    s += context.label(b.at(i));
  }
  return s;
}

std::string render_set(const Profile& context, AltSet set) {
  std::string s = "{";
  bool first = true;
  for (int x : set.members()) {
    if (!first) s += ',';
    first = false;
    s += context.label(x);
  }
  return s + "}";
}

Profile parse_profile(std::string_view text) {
  std::vector<std::string> labels;
  std::vector<Ballot> ballots;
  bool have_header = false;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError(line_no, "expected ':'");
    const auto key = trim(line.substr(0, colon));
    const auto rest = trim(line.substr(colon + 1));
    if (!have_header) {
      if (key != "alternatives") throw ParseError(line_no, "expected 'alternatives:' header");
      for (auto l : split(rest, ',')) {
        if (!valid_label(l)) throw ParseError(line_no, "invalid label '" + std::string(l) + "'");
        if (std::find(labels.begin(), labels.end(), l) != labels.end())
          throw ParseError(line_no, "duplicate label '" + std::string(l) + "'");
        labels.emplace_back(l);
      }
      if (labels.size() > 64) throw ParseError(line_no, "at most 64 alternatives supported");
      have_header = true;
      continue;
    }
    if (!all_digits(key)) throw ParseError(line_no, "count must be a positive integer");
    long long count = 0;
    auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), count);
    if (ec != std::errc() || count <= 0) throw ParseError(line_no, "count must be a positive integer");
    if (count > 10'000'000 || ballots.size() + count > 10'000'000)
      throw ParseError(line_no, "too many voters");
    Ballot b;
    std::vector<Alternative> order;
    std::vector<bool> seen(labels.size(), false);
    for (auto part : split(rest, '>')) {
      auto it = std::find(labels.begin(), labels.end(), part);
      if (it == labels.end()) throw ParseError(line_no, "unknown alternative '" + std::string(part) + "'");
      const auto x = it - labels.begin();
      if (seen[x]) throw ParseError(line_no, "duplicate alternative '" + std::string(part) + "'");
      seen[x] = true;
      order.push_back(static_cast<int>(x));
    }
    if (order.size() != labels.size()) throw ParseError(line_no, "ballot is missing alternatives");
    b = Ballot(std::move(order));
    for (long long c = 0; c < count; ++c) ballots.push_back(b);
  }
  if (!have_header) throw ParseError(line_no, "missing 'alternatives:' header");
  if (ballots.empty()) throw ParseError(line_no, "profile has no ballots");
  return Profile(std::move(labels), std::move(ballots));
}

std::string render_profile(const Profile& p) {
  std::ostringstream out;
  out << "alternatives: ";
  for (int x = 0; x < p.m(); ++x) out << (x ? "," : "") << p.label(x);
  out << '\n';
  int i = 0;
  while (i < p.n()) {
    int j = i;
    while (j < p.n() && p.ballot(j) == p.ballot(i)) ++j;
    out << (j - i) << ": " << render_ballot(p, p.ballot(i)) << '\n';
    i = j;
  }
  return out.str();
}

ProfileSpace::ProfileSpace(int n, int m, std::uint64_t guard) : n_(n), m_(m) {
  if (n < 1 || m < 1) throw DomainError("profile space needs n >= 1 and m >= 1");
  if (m > 10) throw BudgetExceeded("profile space too large");
  ballots_ = factorial(m);
  size_ = 1;
  for (int i = 0; i < n; ++i) {
    if (size_ > guard / ballots_) throw BudgetExceeded("profile space (" + std::to_string(m) + "!)^" +
                                                       std::to_string(n) + " exceeds guard " + std::to_string(guard));
    size_ *= ballots_;
  }
}

Profile ProfileSpace::at(std::uint64_t index) const {
  const auto& all = all_ballots(m_);
  std::vector<Ballot> ballots(n_);
  for (int i = n_ - 1; i >= 0; --i) {
    ballots[i] = all[index % ballots_];
    index /= ballots_;
  }
  return Profile(m_, std::move(ballots));
}

std::uint64_t ProfileSpace::index_of(const Profile& p) const {
  std::uint64_t idx = 0;
  for (const auto& b : p.ballots()) idx = idx * ballots_ + ballot_index(b);
  return idx;
}

std::vector<Profile> ProfileSpace::materialize() const {
  std::vector<Profile> out;
  out.reserve(size_);
  for (std::uint64_t k = 0; k < size_; ++k) out.push_back(at(k));
  return out;
}

std::vector<Profile> enumerate_profiles(int n, int m, std::uint64_t guard) {
  return ProfileSpace(n, m, guard).materialize();
}

WeakOrder::WeakOrder(std::vector<AltSet> tiers) : tiers_(std::move(tiers)) {
  AltSet seen;
  for (auto t : tiers_) {
    if (t.empty()) throw DomainError("weak order has an empty tier");
    if (!(t & seen).empty()) throw DomainError("weak order tiers overlap");
    seen = seen | t;
  }
}

WeakOrder WeakOrder::from_ballot(const Ballot& b) {
  std::vector<AltSet> tiers;
  for (Alternative x : b.order()) tiers.push_back(AltSet::single(x));
  return WeakOrder(std::move(tiers));
}

WeakOrder WeakOrder::from_scores(std::span<const Rational> scores) {
  std::vector<int> idx(scores.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return scores[a] > scores[b]; });
  std::vector<AltSet> tiers;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k > 0 && scores[idx[k]] == scores[idx[k - 1]]) tiers.back() = tiers.back().with(idx[k]);
    else tiers.push_back(AltSet::single(idx[k]));
  }
  return WeakOrder(std::move(tiers));
}

int WeakOrder::tier_of(Alternative x) const {
  for (std::size_t t = 0; t < tiers_.size(); ++t)
    if (tiers_[t].contains(x)) return static_cast<int>(t);
  throw DomainError("alternative not in weak order");
}

bool WeakOrder::is_linear() const {
  return std::all_of(tiers_.begin(), tiers_.end(), [](AltSet t) { return t.size() == 1; });
}

std::string render_weak_order(const std::vector<std::string>& labels, const WeakOrder& w) {
  std::string s;
  for (std::size_t t = 0; t < w.tiers().size(); ++t) {
    if (t) s += '>';
    bool first = true;
    for (int x : w.tiers()[t].members()) {
      if (!first) s += '=';
      first = false;
      s += labels[x];
    }
  }
  return s;
}

std::string render_weak_order(const Profile& context, const WeakOrder& w) {
  return render_weak_order(context.labels(), w);
}

namespace {
void weak_orders_rec(AltSet remaining, std::vector<AltSet>& prefix, std::vector<WeakOrder>& out) {
  if (remaining.empty()) {
    out.emplace_back(prefix);
    return;
  }
  const std::uint64_t r = remaining.bits();
  // Nonempty subsets of `remaining` in increasing bit order.
  for (std::uint64_t s = r & (~r + 1);; s = (s - r) & r) {
    if (s == 0) break;
    prefix.push_back(AltSet(s));
    weak_orders_rec(remaining - AltSet(s), prefix, out);
    prefix.pop_back();
  }
}
}  // namespace

const std::vector<WeakOrder>& all_weak_orders(int m) {
  static std::mutex mu;
  static std::map<int, std::vector<WeakOrder>> cache;
  if (m < 1 || m > 6) throw BudgetExceeded("weak order enumeration limited to m <= 6");
  std::lock_guard lock(mu);
  auto it = cache.find(m);
  if (it == cache.end()) {
    std::vector<WeakOrder> v;
    std::vector<AltSet> prefix;
    weak_orders_rec(AltSet::all(m), prefix, v);
    it = cache.emplace(m, std::move(v)).first;
  }
  return it->second;
}

}  // namespace scrutineer
