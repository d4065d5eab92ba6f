// Naive reference implementations used to cross-check the library.
#ifndef SCRUTINEER_TEST_ORACLES_HPP
#define SCRUTINEER_TEST_ORACLES_HPP

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "scrutineer/core.hpp"

namespace oracle {

using scrutineer::AltSet;
using scrutineer::Ballot;
using scrutineer::Profile;
using scrutineer::Rational;

inline AltSet argmax(const std::vector<Rational>& s) {
  const Rational best = *std::max_element(s.begin(), s.end());
  AltSet out;
  for (std::size_t x = 0; x < s.size(); ++x)
    if (s[x] == best) out = out.with(static_cast<int>(x));
  return out;
}

inline std::vector<Rational> plurality_scores(const Profile& p) {
  std::vector<Rational> s(p.m(), 0);
  for (int i = 0; i < p.n(); ++i) s[p.ballot(i).order()[0]] += 1;
  return s;
}

inline std::vector<Rational> borda_scores(const Profile& p) {
  std::vector<Rational> s(p.m(), 0);
  for (int i = 0; i < p.n(); ++i)
    for (int x = 0; x < p.m(); ++x) s[x] += p.m() - 1 - p.ballot(i).position(x);
  return s;
}

inline int prefer_count(const Profile& p, int x, int y) {
  int c = 0;
  for (int i = 0; i < p.n(); ++i) c += p.ballot(i).position(x) < p.ballot(i).position(y);
  return c;
}

inline AltSet condorcet_winner(const Profile& p) {
  for (int x = 0; x < p.m(); ++x) {
    bool wins = true;
    for (int y = 0; y < p.m(); ++y)
      if (y != x && 2 * prefer_count(p, x, y) <= p.n()) wins = false;
    if (wins) return AltSet::single(x);
  }
  return {};
}

inline int pair_disagreements(const std::vector<int>& order, const Profile& p) {
  int d = 0;
  for (std::size_t a = 0; a < order.size(); ++a)
    for (std::size_t b = a + 1; b < order.size(); ++b) d += prefer_count(p, order[b], order[a]);
  return d;
}

// Kemeny winners: tops of every order minimizing total pairwise disagreement.
inline std::pair<AltSet, int> kemeny(const Profile& p) {
  std::vector<int> order(p.m());
  std::iota(order.begin(), order.end(), 0);
  int best = -1;
  AltSet tops;
  do {
    const int d = pair_disagreements(order, p);
    if (best < 0 || d < best) {
      best = d;
      tops = AltSet::single(order[0]);
    } else if (d == best) {
      tops = tops.with(order[0]);
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return {tops, best};
}

// Majority accuracy by summing over every vote vector.
inline Rational jury_by_enumeration(int n, const Rational& p) {
  Rational total = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    const int correct = __builtin_popcount(mask);
    if (2 * correct <= n) continue;
    Rational w = 1;
    for (int i = 0; i < n; ++i) w *= (mask >> i & 1u) ? p : Rational(1) - p;
    total += w;
  }
  return total;
}

}  // namespace oracle

#endif
