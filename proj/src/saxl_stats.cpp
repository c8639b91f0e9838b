#include "saxlkit/saxl.hpp"

namespace saxlkit {

bool is_graphical(const Partition& lambda) {
  const Partition t = conjugate(lambda);
  const int d = durfee(lambda);
  int rows = 0, cols = 0;
  for (int i = 1; i <= d; ++i) {
    rows += lambda[i - 1];
    cols += t[i - 1];
    if (cols < rows + i) return false;
  }
  return true;
}

bool is_conjugate_upward(const Partition& lambda) { return dominates(conjugate(lambda), lambda); }

DominanceStats dominance_stats(const Partition& lambda) {
  DominanceStats s;
  s.lambda = lambda;
  for_each_partition(lambda.size(), [&](const Partition& nu) {
    ++s.partitions;
    const bool below = dominates(lambda, nu), above = dominates(nu, lambda);
    s.below += below;
    s.above += above;
    s.comparable += below || above;
    s.conjugate_upward += is_conjugate_upward(nu);
    s.graphical += is_graphical(nu);
    return true;
  });
  return s;
}

namespace {

using u128 = unsigned __int128;

// cnt[j] = number of partitions of j with parts ≤ k, for j ≤ n.
std::vector<std::vector<u128>> bounded_counts(int n, int k) {
  std::vector<std::vector<u128>> t(k + 1, std::vector<u128>(n + 1, 0));
  t[0][0] = 1;
  for (int p = 1; p <= k; ++p)
    for (int j = 0; j <= n; ++j) t[p][j] = t[p - 1][j] + (j >= p ? t[p][j - p] : 0);
  return t;
}

u128 below(u128 bound, std::mt19937_64& rng) {
  // Rejection sampling on the smallest covering power of two.
  int bits = 0;
  while (bits < 128 && (u128(1) << bits) < bound) ++bits;
  for (;;) {
    u128 r = (u128(rng()) << 64) | rng();
    if (bits < 128) r &= (u128(1) << bits) - 1;
    if (r < bound) return r;
  }
}

// Uniform partition of j with parts ≤ k, returned as a part list.
std::vector<int> sample_bounded(int j, int k, const std::vector<std::vector<u128>>& t, std::mt19937_64& rng) {
  std::vector<int> parts;
  while (j > 0) {
    // Either no part equals k (t[k-1][j]) or peel off one part k (t[k][j-k]).
    u128 r = below(t[k][j], rng);
    if (r < t[k - 1][j]) {
      --k;
    } else {
      parts.push_back(k);
      j -= k;
    }
  }
  return parts;
}

}  // namespace

Partition sample_durfee(int n, int k, std::mt19937_64& rng) {
  if (k < 1 || k * k > n) throw std::invalid_argument("sample_durfee: need 1 <= k*k <= n");
  const int rest = n - k * k;
  const auto t = bounded_counts(rest, k);
  // Arm (≤ k rows, as a conjugate) and leg (parts ≤ k) are independent.
  u128 total = 0;
  for (int j = 0; j <= rest; ++j) total += t[k][j] * t[k][rest - j];
  u128 r = below(total, rng);
  int j = 0;
  for (;; ++j) {
    u128 w = t[k][j] * t[k][rest - j];
    if (r < w) break;
    r -= w;
  }
  Partition arm = conjugate(Partition(sample_bounded(j, k, t, rng)));
  std::vector<int> leg = sample_bounded(rest - j, k, t, rng);
  std::vector<int> parts;
  for (int i = 0; i < k; ++i) parts.push_back(k + arm[i]);
  parts.insert(parts.end(), leg.begin(), leg.end());
  return Partition(std::move(parts));
}

std::optional<int> pigeonhole_strip(const Partition& mu, int m) {
  const auto p = arm_leg_profile(mu);
  for (int i = 1; i <= p.k; ++i)
    if (p.arm(i) >= 2 * m - 2 * i + 1 || p.leg(i) >= 2 * m - 2 * i + 1) return i;
  return std::nullopt;
}

}  // namespace saxlkit
