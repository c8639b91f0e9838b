#include "saxlkit/characters.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>

namespace saxlkit {

namespace {

// Beta-set (abacus) encoding: a shape with L rows is the set of bead
// positions λ_j + L - 1 - j. Removing an r-rim hook moves a bead from b to
// b - r; its height is the number of beads strictly in between.
using Mask = unsigned __int128;

constexpr Mask bit(int i) { return Mask(1) << i; }

int popcount(Mask m) {
  return __builtin_popcountll(static_cast<std::uint64_t>(m)) +
         __builtin_popcountll(static_cast<std::uint64_t>(m >> 64));
}

Mask to_mask(const Partition& p, int beads) {
  Mask m = 0;
  for (int j = 0; j < beads; ++j) m |= bit(p[j] + beads - 1 - j);
  return m;
}

Partition from_mask(Mask m, int beads) {
  std::vector<int> parts;
  int j = 0;
  for (int pos = 127; pos >= 0 && j < beads; --pos) {
    if (m & bit(pos)) {
      parts.push_back(pos - (beads - 1 - j));
      ++j;
    }
  }
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return Partition(std::move(parts));
}

// Parity of beads strictly between positions lo and hi.
int between_sign(Mask m, int lo, int hi) {
  const Mask window = (bit(hi) - 1) & ~(bit(lo + 1) - 1);
  return popcount(m & window) % 2 ? -1 : 1;
}

template <class F>
void for_each_bead(Mask m, F&& f) {
  for (int half = 0; half < 2; ++half) {
    std::uint64_t w = static_cast<std::uint64_t>(m >> (64 * half));
    while (w) {
      const int b = __builtin_ctzll(w) + 64 * half;
      w &= w - 1;
      f(b);
    }
  }
}

using Terms = std::vector<std::pair<Mask, CharInt>>;

void merge_terms(Terms& t) {
  std::sort(t.begin(), t.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::size_t w = 0;
  for (std::size_t i = 0; i < t.size();) {
    Mask m = t[i].first;
    CharInt acc = std::move(t[i].second);
    std::size_t j = i + 1;
    for (; j < t.size() && t[j].first == m; ++j) acc += t[j].second;
    if (!acc.is_zero()) t[w++] = {m, std::move(acc)};
    i = j;
  }
  t.resize(w);
}

Terms remove_strips(const Terms& in, int r) {
  Terms out;
  for (const auto& [m, c] : in) {
    for_each_bead(m, [&](int b) {
      if (b < r || (m & bit(b - r))) return;
      const Mask nm = (m & ~bit(b)) | bit(b - r);
      out.emplace_back(nm, between_sign(m, b - r, b) < 0 ? -c : c);
    });
  }
  merge_terms(out);
  return out;
}

std::atomic<std::size_t> g_capacity{std::size_t(1) << 22};

struct Memo {
  std::shared_mutex mu;
  std::unordered_map<std::string, CharInt> map;
};
Memo& memo() {
  static Memo m;
  return m;
}

struct RowCache {
  std::shared_mutex mu;
  std::map<Partition, std::shared_ptr<const std::vector<CharInt>>> rows;
  std::size_t values = 0;
};
RowCache& row_cache() {
  static RowCache c;
  return c;
}

std::string memo_key(const Partition& shape, const std::vector<int>& cycles, std::size_t from) {
  std::string key;
  key.reserve(shape.length() + cycles.size() - from + 1);
  for (int x : shape.parts()) key.push_back(static_cast<char>(x));
  key.push_back('\0');
  for (std::size_t i = from; i < cycles.size(); ++i) key.push_back(static_cast<char>(cycles[i]));
  return key;
}

// cycles sorted decreasing; evaluates on cycles[from..].
CharInt mn(const Partition& shape, const std::vector<int>& cycles, std::size_t from) {
  if (from == cycles.size() || cycles[from] == 1) return dimension(shape);
  const std::string key = memo_key(shape, cycles, from);
  auto& M = memo();
  {
    std::shared_lock lock(M.mu);
    if (auto it = M.map.find(key); it != M.map.end()) return it->second;
  }
  const int r = cycles[from];
  const int beads = shape.length();
  const Mask m = to_mask(shape, beads);
  CharInt total;
  for_each_bead(m, [&](int b) {
    if (b < r || (m & bit(b - r))) return;
    const Partition child = from_mask((m & ~bit(b)) | bit(b - r), beads);
    CharInt v = mn(child, cycles, from + 1);
    if (between_sign(m, b - r, b) < 0) total -= v;
    else total += v;
  });
  {
    std::unique_lock lock(M.mu);
    if (M.map.size() >= g_capacity.load()) M.map.clear();
    M.map.emplace(key, total);
  }
  return total;
}

// p(s, ≤ r) table for zero-filling pruned subtrees of the class trie.
std::vector<std::vector<std::uint64_t>> bounded_counts(int n) {
  std::vector<std::vector<std::uint64_t>> t(n + 1, std::vector<std::uint64_t>(n + 1, 0));
  for (int r = 0; r <= n; ++r) t[0][r] = 1;
  for (int s = 1; s <= n; ++s)
    for (int r = 1; r <= n; ++r) t[s][r] = t[s][r - 1] + (s >= r ? t[s - r][r] : 0);
  return t;
}

struct RowBuilder {
  int beads;
  std::vector<std::vector<std::uint64_t>> counts;
  std::map<Mask, CharInt> dim_cache;
  std::vector<CharInt>* out;

  const CharInt& dim(Mask m) {
    auto it = dim_cache.find(m);
    if (it == dim_cache.end()) it = dim_cache.emplace(m, dimension(from_mask(m, beads))).first;
    return it->second;
  }

  void run(int rem, int maxp, const Terms& state) {
    for (int r = std::min(rem, maxp); r >= 2; --r) {
      Terms next = remove_strips(state, r);
      if (next.empty()) {
        out->insert(out->end(), counts[rem - r][r], CharInt(0));
      } else if (rem == r) {
        out->push_back(next.front().second);
      } else {
        run(rem - r, r, next);
      }
    }
    CharInt acc;
    for (const auto& [m, c] : state) acc += c * dim(m);
    out->push_back(std::move(acc));
  }
};

}  // namespace

std::vector<int> CycleType::multiplicities() const {
  std::vector<int> m(p_.size() + 1, 0);
  for (int x : p_.parts()) ++m[x];
  return m;
}

CharInt class_size(const CycleType& mu) {
  CharInt z(1);
  const auto m = mu.multiplicities();
  for (std::size_t i = 1; i < m.size(); ++i) {
    for (int j = 0; j < m[i]; ++j) z *= CharInt(static_cast<std::int64_t>(i));
    z *= CharInt::factorial(m[i]);
  }
  return z;
}

CharInt class_cardinality(const CycleType& mu) { return CharInt::factorial(mu.size()) / class_size(mu); }

CharInt dimension(const Partition& lambda) {
  const Partition conj = conjugate(lambda);
  CharInt hooks(1);
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda[i]; ++j) hooks *= CharInt(lambda[i] - j + conj[j] - i - 1);
  return CharInt::factorial(lambda.size()) / hooks;
}

CharInt character_value(const Partition& lambda, const CycleType& mu) {
  if (lambda.size() != mu.size())
    throw SizeMismatch("character_value: " + lambda.to_string() + " vs class " + mu.partition().to_string());
  if (lambda.size() > 127) throw std::domain_error("character_value: n > 127 unsupported");
  return mn(lambda, mu.partition().parts(), 0);
}

std::vector<CharInt> character_row(const Partition& lambda) {
  const int n = lambda.size();
  if (n > 126) throw std::domain_error("character_row: n > 126 unsupported");
  std::vector<CharInt> out;
  if (n == 0) {
    out.emplace_back(1);
    return out;
  }
  out.reserve(partition_count(n));
  RowBuilder rb{lambda.length(), bounded_counts(n), {}, &out};
  rb.run(n, n, Terms{{to_mask(lambda, lambda.length()), CharInt(1)}});
  return out;
}

std::shared_ptr<const std::vector<CharInt>> cached_character_row(const Partition& lambda) {
  auto& C = row_cache();
  {
    std::shared_lock lock(C.mu);
    if (auto it = C.rows.find(lambda); it != C.rows.end()) return it->second;
  }
  auto row = std::make_shared<const std::vector<CharInt>>(character_row(lambda));
  std::unique_lock lock(C.mu);
  if (auto it = C.rows.find(lambda); it != C.rows.end()) return it->second;
  if (C.values + row->size() > g_capacity.load()) {
    C.rows.clear();
    C.values = 0;
  }
  C.rows.emplace(lambda, row);
  C.values += row->size();
  return row;
}

std::vector<CharInt> character_column(const CycleType& mu) {
  const int n = mu.size();
  if (n > 63) throw std::domain_error("character_column: n > 63 unsupported");
  const auto shapes = partitions_of(n);
  std::vector<CharInt> out(shapes.size());
  if (n == 0) {
    out[0] = CharInt(1);
    return out;
  }
  // Build up from the empty shape by adding rim hooks (beads move up).
  Terms state{{bit(n) - 1, CharInt(1)}};
  const int top = 2 * n - 1;
  for (int r : mu.partition().parts()) {
    Terms next;
    for (const auto& [m, c] : state) {
      for_each_bead(m, [&](int b) {
        if (b + r > top || (m & bit(b + r))) return;
        const Mask nm = (m & ~bit(b)) | bit(b + r);
        next.emplace_back(nm, between_sign(m, b, b + r) < 0 ? -c : c);
      });
    }
    merge_terms(next);
    state = std::move(next);
  }
  std::unordered_map<Partition, std::size_t, PartitionHash> index;
  for (std::size_t i = 0; i < shapes.size(); ++i) index.emplace(shapes[i], i);
  for (auto& [m, c] : state) out[index.at(from_mask(m, n))] = std::move(c);
  return out;
}

ColumnStats vanishing_count(const CycleType& mu) {
  ColumnStats s{mu, 0, 0, 0};
  for (const auto& v : character_column(mu)) {
    ++s.total;
    if (v.is_zero()) ++s.zero_count;
    else ++s.nonzero_count;
  }
  return s;
}

void set_cache_capacity(std::size_t entries) { g_capacity.store(std::max<std::size_t>(entries, 1)); }
std::size_t cache_capacity() { return g_capacity.load(); }

std::size_t character_memo_size() {
  std::shared_lock lock(memo().mu);
  return memo().map.size();
}

void clear_caches() {
  {
    std::unique_lock lock(memo().mu);
    memo().map.clear();
  }
  std::unique_lock lock(row_cache().mu);
  row_cache().rows.clear();
  row_cache().values = 0;
}

}  // namespace saxlkit
