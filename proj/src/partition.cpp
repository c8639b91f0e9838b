#include "saxlkit/partition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>

namespace saxlkit {

namespace {

void normalize(std::vector<int>& parts) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0)
      throw std::invalid_argument("partition parts must be positive");
    if (i && parts[i] > parts[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

// Partition from a vector already known to be valid.
Partition trusted(std::vector<int> parts) { return Partition(std::move(parts)); }

}  // namespace

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  normalize(parts_);
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (!s.empty() && (s.front() == '[' || s.front() == '(')) {
    const char close = s.front() == '[' ? ']' : ')';
    if (s.back() != close) throw std::invalid_argument("unbalanced brackets in partition: " + s);
    s = s.substr(1, s.size() - 2);
  }
  std::vector<int> parts;
  if (s.empty()) return Partition();

  auto number = [&](std::string_view tok) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty())
      throw std::invalid_argument("bad number in partition: '" + std::string(tok) + "'");
    return v;
  };

  std::string_view rest(s);
  while (true) {
    auto comma = rest.find(',');
    std::string_view tok = rest.substr(0, comma);
    auto caret = tok.find('^');
    int part = number(tok.substr(0, caret));
    int mult = caret == std::string_view::npos ? 1 : number(tok.substr(caret + 1));
    if (mult < 0) throw std::invalid_argument("negative exponent in partition");
    parts.insert(parts.end(), mult, part);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return Partition(std::move(parts));
}

int Partition::count(int i) const noexcept {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

bool Partition::distinct_parts() const noexcept {
  return std::adjacent_find(parts_.begin(), parts_.end()) == parts_.end();
}

bool Partition::self_conjugate() const { return conjugate(*this) == *this; }

std::string Partition::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + "]";
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (int x : p.parts()) {
    h ^= static_cast<std::uint64_t>(x);
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> out(lambda.largest(), 0);
  for (int part : lambda.parts())
    for (int j = 0; j < part; ++j) ++out[j];
  return trusted(std::move(out));
}

bool dominates(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size())
    throw SizeMismatch("dominates: " + lambda.to_string() + " and " + mu.to_string());
  int sl = 0, sm = 0;
  const int len = std::max(lambda.length(), mu.length());
  for (int i = 0; i < len; ++i) {
    sl += lambda[i];
    sm += mu[i];
    if (sl < sm) return false;
  }
  return true;
}

int durfee(const Partition& lambda) {
  int k = 0;
  while (k < lambda.length() && lambda[k] >= k + 1) ++k;
  return k;
}

DurfeeHooks durfee_and_principal_hooks(const Partition& lambda) {
  DurfeeHooks out;
  out.k = durfee(lambda);
  const Partition conj = conjugate(lambda);
  std::vector<int> hooks;
  for (int i = 0; i < out.k; ++i) hooks.push_back(lambda[i] - i + conj[i] - i - 1);
  out.hooks = trusted(std::move(hooks));
  return out;
}

ArmLegProfile arm_leg_profile(const Partition& mu) {
  ArmLegProfile p;
  p.k = durfee(mu);
  p.a.assign(p.k, 0);
  p.b.assign(p.k, 0);
  // Arm columns are the columns beyond index k; their lengths are ≤ k.
  const Partition conj = conjugate(mu);
  for (int j = p.k; j < conj.length(); ++j) ++p.a[conj[j] - 1];
  for (int i = p.k; i < mu.length(); ++i) ++p.b[mu[i] - 1];
  for (int i = 1; i <= p.k; ++i) {
    p.A += i * p.a[i - 1];
    p.B += i * p.b[i - 1];
  }
  return p;
}

Partition vertical_sum(const Partition& lambda, const Partition& mu) {
  std::vector<int> out;
  out.reserve(lambda.length() + mu.length());
  std::merge(lambda.parts().begin(), lambda.parts().end(), mu.parts().begin(), mu.parts().end(),
             std::back_inserter(out), std::greater<>());
  return trusted(std::move(out));
}

Partition row_add(const Partition& lambda, const Partition& mu) {
  const int len = std::max(lambda.length(), mu.length());
  std::vector<int> out(len);
  for (int i = 0; i < len; ++i) out[i] = lambda[i] + mu[i];
  return trusted(std::move(out));
}

std::optional<Partition> row_sub(const Partition& lambda, const Partition& mu) {
  if (mu.length() > lambda.length()) return std::nullopt;
  std::vector<int> out(lambda.length());
  for (int i = 0; i < lambda.length(); ++i) {
    out[i] = lambda[i] - mu[i];
    if (out[i] < 0 || (i && out[i] > out[i - 1])) return std::nullopt;
  }
  // Zeros may only trail.
  auto first_zero = std::find(out.begin(), out.end(), 0);
  if (std::any_of(first_zero, out.end(), [](int x) { return x != 0; })) return std::nullopt;
  return trusted(std::move(out));
}

Partition scale(const Partition& lambda, int s) {
  if (s < 0) throw std::invalid_argument("scale: negative factor");
  std::vector<int> out(lambda.parts());
  for (int& x : out) x *= s;
  return trusted(std::move(out));
}

bool contained_in(const Partition& lambda, const Partition& mu) {
  if (lambda.length() > mu.length()) return false;
  for (int i = 0; i < lambda.length(); ++i)
    if (lambda[i] > mu[i]) return false;
  return true;
}

Partition staircase(int m) {
  if (m < 0) throw std::invalid_argument("staircase: m < 0");
  std::vector<int> out;
  for (int j = m; j >= 1; --j) out.push_back(j);
  return trusted(std::move(out));
}

Partition tau(int m, int i) {
  if (i < 0 || i > m) throw std::invalid_argument("tau: need 0 <= i <= m");
  std::vector<int> out;
  for (int j = 0; j < i; ++j) out.push_back(m - j);
  return trusted(std::move(out));
}

Partition sigma(int m, int i) { return conjugate(tau(m, i)); }

Partition chopped_square(int k) {
  if (k < 1) throw std::invalid_argument("chopped_square: k < 1");
  if (k == 1) return {};
  std::vector<int> out(k - 1, k);
  out.push_back(k - 1);
  return trusted(std::move(out));
}

Partition caret(int k) {
  if (k < 1) throw std::invalid_argument("caret: k < 1");
  std::vector<int> out;
  for (int j = 3 * k - 1; j >= k + 1; j -= 2) out.push_back(j);
  out.push_back(k);
  for (int j = k - 1; j >= 1; --j) {
    out.push_back(j);
    out.push_back(j);
  }
  return trusted(std::move(out));
}

Partition rectangle(int rows, int cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("rectangle: negative side");
  return trusted(cols ? std::vector<int>(rows, cols) : std::vector<int>{});
}

Partition hook(int arm_len, int leg_len) {
  std::vector<int> out{arm_len + 1};
  out.insert(out.end(), leg_len, 1);
  return trusted(std::move(out));
}

namespace {

struct Enumerator {
  const PartitionFilter& f;
  const std::function<bool(const Partition&)>& visit;
  std::vector<int> parts;
  int d;    // required Durfee size, -1 if unconstrained
  int len;  // max length

  int upper_at(int row, int prev) const {
    int ub = prev;
    if (d >= 0 && row >= d) ub = std::min(ub, d);
    return ub;
  }
  int lower_at(int row) const { return d >= 0 && row < d ? d : 1; }

  // Can `rem` boxes be placed in rows row.. with parts ≤ prev?
  bool feasible(int rem, int row, int prev) const {
    if (d >= 0 && row < d) {
      if (rem < (d - row) * d) return false;
    }
    if (rem == 0) return true;
    if (row >= len) return false;
    if (len == std::numeric_limits<int>::max()) return upper_at(row, prev) >= 1;
    // Capacity of rows row..len-1.
    long long cap = 0;
    for (int r = row; r < len && cap < rem; ++r) cap += upper_at(r, prev);
    return cap >= rem;
  }

  bool run(int rem, int row, int prev) {
    if (rem == 0) return visit(Partition(parts));
    const int hi = std::min(rem, upper_at(row, prev));
    const int lo = lower_at(row);
    for (int p = hi; p >= lo; --p) {
      if (!feasible(rem - p, row + 1, p)) continue;
      parts.push_back(p);
      const bool go = run(rem - p, row + 1, p);
      parts.pop_back();
      if (!go) return false;
    }
    return true;
  }
};

}  // namespace

void for_each_partition(int n, const std::function<bool(const Partition&)>& visit,
                        const PartitionFilter& filter) {
  if (n < 0) return;
  Enumerator e{filter, visit, {}, filter.durfee.value_or(-1),
               filter.max_length.value_or(std::numeric_limits<int>::max())};
  const int maxp = filter.max_part.value_or(n);
  if (n == 0) {
    if (e.d <= 0) visit(Partition());
    return;
  }
  if (e.d == 0) return;
  if (!e.feasible(n, 0, maxp)) return;
  e.run(n, 0, maxp);
}

std::vector<Partition> partitions_of(int n, const PartitionFilter& filter) {
  std::vector<Partition> out;
  for_each_partition(n, [&](const Partition& p) { out.push_back(p); return true; }, filter);
  return out;
}

std::uint64_t partition_count(int n) {
  if (n < 0) return 0;
  std::vector<std::uint64_t> p(n + 1, 0);
  p[0] = 1;
  for (int i = 1; i <= n; ++i) {
    // Euler: p(i) = Σ_k (-1)^{k+1} [p(i - k(3k-1)/2) + p(i - k(3k+1)/2)]
    __int128 acc = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > i) break;
      const int sgn = (k % 2) ? 1 : -1;
      acc += sgn * static_cast<__int128>(p[i - g1]);
      if (g2 <= i) acc += sgn * static_cast<__int128>(p[i - g2]);
    }
    p[i] = static_cast<std::uint64_t>(acc);
  }
  return p[n];
}

}  // namespace saxlkit
