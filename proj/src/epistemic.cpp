#include "scrutineer/epistemic.hpp"

#include <cmath>

#include "scrutineer/parallel.hpp"

namespace scrutineer {

namespace {

void check_probability(const Rational& p) {
  if (p < 0 || p > 1) throw DomainError("probability must lie in [0, 1]");
}

Rational power(const Rational& base, int e) {
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

BigInt binomial(int n, int k) {
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

Rational jury_accuracy(int n, const Rational& p) {
  if (n < 1 || n % 2 == 0) throw DomainError("jury size must be a positive odd number");
  check_probability(p);
  Rational sum = 0;
  for (int h = (n + 1) / 2; h <= n; ++h) sum += Rational(binomial(n, h)) * power(p, h) * power(1 - p, n - h);
  return sum;
}

std::vector<Rational> jury_accuracy_recursive(int n_max, const Rational& p) {
  if (n_max < 1 || n_max % 2 == 0) throw DomainError("n-max must be a positive odd number");
  check_probability(p);
  std::vector<Rational> out{p};
  const Rational q = p * (1 - p);
  for (int n = 1; n + 2 <= n_max; n += 2)
    out.push_back(out.back() + (2 * p - 1) * Rational(binomial(n, (n + 1) / 2)) * power(q, (n + 1) / 2));
  return out;
}

BernoulliThreshold::BernoulliThreshold(const Rational& p) {
  check_probability(p);
  const BigInt scaled = numerator(p) * (BigInt(1) << 64) / denominator(p);
  if (scaled >= (BigInt(1) << 64))
    always_ = true;
  else
    threshold_ = static_cast<std::uint64_t>(scaled);
}

JuryEstimate jury_simulate(int n, const Rational& p, std::uint64_t trials, std::uint64_t seed, int jobs) {
  if (n < 1) throw DomainError("jury size must be positive");
  if (trials < 1) throw DomainError("need at least one trial");
  const BernoulliThreshold draw(p);
  const SplitMix64 rng(seed);
  std::vector<std::uint64_t> hits(chunk_count(trials, jobs), 0);
  parallel_chunks(trials, jobs, [&](std::uint64_t b, std::uint64_t e, int c) {
    for (std::uint64_t t = b; t < e; ++t) {
      int right = 0;
      for (int i = 0; i < n; ++i) right += draw(rng.at(t * n + i)) ? 1 : 0;
      if (2 * right > n) ++hits[c];
    }
  });
  JuryEstimate r;
  r.trials = trials;
  for (auto h : hits) r.correct += h;
  r.estimate = static_cast<double>(r.correct) / static_cast<double>(trials);
  const double half = 1.96 * std::sqrt(r.estimate * (1 - r.estimate) / static_cast<double>(trials));
  r.ci_low = std::max(0.0, r.estimate - half);
  r.ci_high = std::min(1.0, r.estimate + half);
  return r;
}

HoeffdingCheck hoeffding_check(int n, const Rational& p) {
  HoeffdingCheck h;
  h.error = static_cast<double>(Rational(1 - jury_accuracy(n, p)));
  const double gap = static_cast<double>(p) - 0.5;
  h.bound = std::exp(-2.0 * n * gap * gap);
  h.holds = h.error <= h.bound;
  return h;
}

Tournament tournament_of(const Ballot& b) {
  Tournament t(b.size());
  for (int i = 0; i < b.size(); ++i)
    for (int j = i + 1; j < b.size(); ++j) t.add(b.at(i), b.at(j));
  return t;
}

std::vector<Tournament> sample_tournament_profile(const Ballot& truth, const Rational& p, int n, std::uint64_t seed) {
  if (p <= Rational(1, 2) || p > 1) throw DomainError("competence must lie in (1/2, 1]");
  if (n < 1) throw DomainError("need at least one voter");
  const BernoulliThreshold draw(p);
  const SplitMix64 rng(seed);
  const int m = truth.size();
  const std::uint64_t pairs = static_cast<std::uint64_t>(m) * (m - 1) / 2;
  std::vector<Tournament> out;
  for (int i = 0; i < n; ++i) {
    Tournament t(m);
    std::uint64_t k = 0;
    for (int x = 0; x < m; ++x)
      for (int y = x + 1; y < m; ++y, ++k) {
        const bool agree = draw(rng.at(i * pairs + k));
        const bool x_first = truth.prefers(x, y) == agree;
        if (x_first)
          t.add(x, y);
        else
          t.add(y, x);
      }
    out.push_back(std::move(t));
  }
  return out;
}

int disagreement(const Ballot& order, const Tournament& t) {
  if (order.size() != t.m()) throw DomainError("order and tournament sizes differ");
  int d = 0;
  for (int i = 0; i < order.size(); ++i)
    for (int j = i + 1; j < order.size(); ++j)
      if (!t.beats(order.at(i), order.at(j))) ++d;
  return d;
}

int disagreement(const Ballot& order, const std::vector<Tournament>& ts) {
  int d = 0;
  for (const auto& t : ts) d += disagreement(order, t);
  return d;
}

Rational likelihood(const Ballot& order, const std::vector<Tournament>& ts, const Rational& p) {
  const int m = order.size();
  const int total = static_cast<int>(ts.size()) * m * (m - 1) / 2;
  const int d = disagreement(order, ts);
  return power(p, total - d) * power(1 - p, d);
}

namespace {

int tournament_size(const std::vector<Tournament>& ts, int max_m) {
  if (ts.empty()) throw DomainError("need at least one tournament ballot");
  const int m = ts.front().m();
  for (const auto& t : ts)
    if (t.m() != m || !t.is_strict_complete()) throw DomainError("ballots must be strict complete tournaments of equal size");
  if (m > max_m) throw BudgetExceeded("ranking search limited to m <= " + std::to_string(max_m));
  return m;
}

}  // namespace

std::vector<Ballot> mle_rankings(const std::vector<Tournament>& ts, const Rational& p, int max_m) {
  const int m = tournament_size(ts, max_m);
  if (p <= Rational(1, 2) || p > 1) throw DomainError("competence must lie in (1/2, 1]");
  std::vector<Ballot> best;
  Rational best_value = -1;
  for (const auto& order : all_ballots(m)) {
    const Rational l = likelihood(order, ts, p);
    if (l > best_value) {
      best_value = l;
      best.clear();
    }
    if (l == best_value) best.push_back(order);
  }
  return best;
}

std::vector<Ballot> min_disagreement_rankings(const std::vector<Tournament>& ts, int max_m) {
  const int m = tournament_size(ts, max_m);
  std::vector<Ballot> best;
  int best_value = -1;
  for (const auto& order : all_ballots(m)) {
    const int d = disagreement(order, ts);
    if (best_value < 0 || d < best_value) {
      best_value = d;
      best.clear();
    }
    if (d == best_value) best.push_back(order);
  }
  return best;
}

AltSet borda_mle_winners(const Profile& p) {
  // Pr(rank k | x correct) ~ 2^(m-k): the log2 likelihood of x is a sum of exponents.
  std::vector<long> exponent(p.m(), 0);
  for (const auto& b : p.ballots())
    for (int x = 0; x < p.m(); ++x) exponent[x] += p.m() - rank_of(b, x);
  const long best = *std::max_element(exponent.begin(), exponent.end());
  AltSet out;
  for (int x = 0; x < p.m(); ++x)
    if (exponent[x] == best) out = out.with(x);
  return out;
}

}  // namespace scrutineer
