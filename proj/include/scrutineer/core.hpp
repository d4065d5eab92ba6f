#ifndef SCRUTINEER_CORE_HPP
#define SCRUTINEER_CORE_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace scrutineer {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Renders a rational as "p/q" in lowest terms, or "p" when integral.
std::string to_string(const Rational& r);

/// Parses "p/q", "p" or a terminating decimal such as "0.6".
Rational parse_rational(std::string_view text);

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid input or a violated precondition.
class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public DomainError {
 public:
  ParseError(int line, const std::string& what)
      : DomainError("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// A search or enumeration would exceed its configured guard.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

using Alternative = int;
using Voter = int;

/// Small bitmask set over indices 0..63. Tag keeps alternative sets and
/// voter coalitions apart at compile time.
template <class Tag>
class IndexSet {
 public:
  constexpr IndexSet() = default;
  constexpr explicit IndexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr IndexSet all(int count) {
    return IndexSet(count >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << count) - 1));
  }
  static constexpr IndexSet single(int i) { return IndexSet(std::uint64_t{1} << i); }

  constexpr bool contains(int i) const { return (bits_ >> i) & 1U; }
  constexpr IndexSet with(int i) const { return IndexSet(bits_ | (std::uint64_t{1} << i)); }
  constexpr IndexSet without(int i) const { return IndexSet(bits_ & ~(std::uint64_t{1} << i)); }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint64_t bits() const { return bits_; }
  /// Smallest member; undefined on the empty set.
  constexpr int min() const { return std::countr_zero(bits_); }
  constexpr bool is_subset_of(IndexSet other) const { return (bits_ & ~other.bits_) == 0; }

  std::vector<int> members() const {
    std::vector<int> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  friend constexpr IndexSet operator|(IndexSet a, IndexSet b) { return IndexSet(a.bits_ | b.bits_); }
  friend constexpr IndexSet operator&(IndexSet a, IndexSet b) { return IndexSet(a.bits_ & b.bits_); }
  friend constexpr IndexSet operator-(IndexSet a, IndexSet b) { return IndexSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(IndexSet, IndexSet) = default;
  friend constexpr auto operator<=>(IndexSet, IndexSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

struct AlternativeTag;
struct VoterTag;
using AltSet = IndexSet<AlternativeTag>;
using Coalition = IndexSet<VoterTag>;

/// A strict linear order over alternatives 0..m-1, most preferred first.
class Ballot {
 public:
  Ballot() = default;
  /// Throws DomainError unless `order` is a permutation of 0..size-1.
  explicit Ballot(std::vector<Alternative> order);

  static Ballot identity(int m);

  int size() const { return static_cast<int>(order_.size()); }
  Alternative at(int position) const { return order_[position]; }
  Alternative top() const { return order_.front(); }
  /// 0-based position of x.
  int position(Alternative x) const { return position_[x]; }
  bool prefers(Alternative x, Alternative y) const { return position_[x] < position_[y]; }
  std::span<const Alternative> order() const { return order_; }

  /// Most preferred member of `among`; `among` must be nonempty.
  Alternative top_among(AltSet among) const;
  /// Moves x to the front, keeping the relative order of everything else.
  Ballot with_top(Alternative x) const;
  Ballot reversed() const;

  friend bool operator==(const Ballot& a, const Ballot& b) { return a.order_ == b.order_; }
  friend auto operator<=>(const Ballot& a, const Ballot& b) { return a.order_ <=> b.order_; }

 private:
  std::vector<Alternative> order_;
  std::vector<int> position_;
};

/// 1-based rank of x in b.
int rank_of(const Ballot& b, Alternative x);

/// All m! ballots in lexicographic order of their alternative sequences.
const std::vector<Ballot>& all_ballots(int m);

/// Lexicographic index of b within all_ballots(b.size()).
std::size_t ballot_index(const Ballot& b);

std::vector<std::string> default_labels(int m);

/// An indexed tuple of ballots over a labelled alternative set.
class Profile {
 public:
  Profile(std::vector<std::string> labels, std::vector<Ballot> ballots);
  Profile(int m, std::vector<Ballot> ballots);

  int m() const { return static_cast<int>(labels_.size()); }
  int n() const { return static_cast<int>(ballots_.size()); }
  const Ballot& ballot(Voter i) const { return ballots_[i]; }
  std::span<const Ballot> ballots() const { return ballots_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Alternative x) const { return labels_[x]; }
  AltSet alternatives() const { return AltSet::all(m()); }

  /// Throws DomainError for unknown labels.
  Alternative index_of(std::string_view label) const;

  Profile with_ballot(Voter i, Ballot b) const;
  Profile without_voter(Voter i) const;
  Profile with_voter_appended(Ballot b) const;

  friend bool operator==(const Profile&, const Profile&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<Ballot> ballots_;
};

/// Number of voters strictly preferring x to y.
int support(const Profile& p, Alternative x, Alternative y);

/// Voters strictly preferring x to y, as a coalition (n <= 64).
Coalition supporters(const Profile& p, Alternative x, Alternative y);

/// Plurality score of every alternative in the profile restricted to `active`.
std::vector<int> plurality_scores(const Profile& p, AltSet active);

/// Profile restricted to X, re-indexed in canonical order with labels kept.
Profile restrict(const Profile& p, AltSet keep);

/// Output ballot i is input ballot pi[i].
Profile permute_voters(const Profile& p, std::span<const int> pi);

/// Every alternative x is replaced by rho[x] inside each ballot.
Profile permute_alternatives(const Profile& p, std::span<const int> rho);

Ballot permute_ballot(const Ballot& b, std::span<const int> rho);

Profile parse_profile(std::string_view text);

/// Run-length grouped form: consecutive identical ballots share one line.
std::string render_profile(const Profile& p);

Ballot parse_ballot(const Profile& context, std::string_view text);
Ballot parse_ballot(const std::vector<std::string>& labels, std::string_view text);
std::string render_ballot(const Profile& context, const Ballot& b);
std::string render_set(const Profile& context, AltSet s);

/// The (m!)^n profiles over default labels, addressable by index.
/// Index order is lexicographic over ballot-index tuples (voter 0 most
/// significant).
class ProfileSpace {
 public:
  static constexpr std::uint64_t kDefaultGuard = 10'000'000;

  ProfileSpace(int n, int m, std::uint64_t guard = kDefaultGuard);

  int n() const { return n_; }
  int m() const { return m_; }
  std::uint64_t size() const { return size_; }
  Profile at(std::uint64_t index) const;
  std::uint64_t index_of(const Profile& p) const;
  std::vector<Profile> materialize() const;

 private:
  int n_;
  int m_;
  std::uint64_t ballots_;
  std::uint64_t size_;
};

std::vector<Profile> enumerate_profiles(int n, int m, std::uint64_t guard = ProfileSpace::kDefaultGuard);

/// A total preorder: ordered tiers of tied alternatives, best first.
class WeakOrder {
 public:
  WeakOrder() = default;
  explicit WeakOrder(std::vector<AltSet> tiers);

  static WeakOrder from_ballot(const Ballot& b);
  /// Tiers by descending key.
  static WeakOrder from_scores(std::span<const Rational> scores);

  const std::vector<AltSet>& tiers() const { return tiers_; }
  int tier_of(Alternative x) const;
  bool strictly_prefers(Alternative x, Alternative y) const { return tier_of(x) < tier_of(y); }
  bool weakly_prefers(Alternative x, Alternative y) const { return tier_of(x) <= tier_of(y); }
  bool is_linear() const;
  AltSet top() const { return tiers_.front(); }

  friend bool operator==(const WeakOrder&, const WeakOrder&) = default;
  friend auto operator<=>(const WeakOrder& a, const WeakOrder& b) {
    return a.tiers_ <=> b.tiers_;
  }

 private:
  std::vector<AltSet> tiers_;
};

std::string render_weak_order(const Profile& context, const WeakOrder& w);
std::string render_weak_order(const std::vector<std::string>& labels, const WeakOrder& w);

/// Every total preorder over m alternatives, in a fixed deterministic order.
const std::vector<WeakOrder>& all_weak_orders(int m);

enum class TieBreak { none, lexicographic };

/// Profiles transcribed from the worked examples.
Profile fixture(std::string_view name);
const std::vector<std::string>& fixture_names();

/// All permutations of 0..k-1 in lexicographic order.
std::vector<std::vector<int>> all_permutations(int k);

std::uint64_t factorial(int k);

}  // namespace scrutineer

#endif
