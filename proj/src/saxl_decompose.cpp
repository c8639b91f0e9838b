#include "saxlkit/saxl.hpp"

#include <algorithm>

namespace saxlkit {

const char* to_string(Side s) { return s == Side::Arm ? "arm" : "leg"; }

const char* to_string(StripLeaf s) {
  switch (s) {
    case StripLeaf::SigmaTwo: return "SigmaTwo";
    case StripLeaf::TripleColumn: return "TripleColumn";
    case StripLeaf::Dominance: return "Dominance";
  }
  return "?";
}

Partition induced_partition(const std::vector<int>& x) {
  std::vector<int> parts(x.size());
  int acc = 0;
  for (std::size_t i = x.size(); i-- > 0;) {
    acc += x[i];
    parts[i] = acc;
  }
  return Partition(std::move(parts));
}

namespace {

// Enumerates x with 0 ≤ x_j ≤ cap[j-1] and Σ j·x_j = l, largest index first,
// each coordinate descending. Returns true if the visitor stopped the walk.
bool walk_select(const std::vector<int>& cap, int l, const std::function<bool(const std::vector<int>&)>& visit) {
  const int k = static_cast<int>(cap.size());
  std::vector<int> x(k, 0);
  auto rec = [&](auto&& self, int j, int rem) -> bool {
    if (j == 1) {
      if (k == 0) return rem == 0 && !visit(x);
      if (rem > cap[0]) return false;
      x[0] = rem;
      bool stop = !visit(x);
      x[0] = 0;
      return stop;
    }
    for (int v = std::min(cap[j - 1], rem / j); v >= 0; --v) {
      x[j - 1] = v;
      if (self(self, j - 1, rem - v * j)) return true;
    }
    x[j - 1] = 0;
    return false;
  };
  if (k == 0) return l == 0 && !visit(x);
  return rec(rec, k, l);
}

struct ColumnGroup {
  int len;
  int count;  // all columns of this length
  int arm;    // of which outside the Durfee square
};

std::vector<ColumnGroup> column_groups(const Partition& xi) {
  Partition cols = conjugate(xi);
  int k = durfee(xi);
  std::vector<ColumnGroup> g;
  for (int j = 0; j < cols.length(); ++j) {
    int len = cols[j];
    if (g.empty() || g.back().len != len) g.push_back({len, 0, 0});
    ++g.back().count;
    if (j >= k) ++g.back().arm;
  }
  return g;
}

// Partition whose conjugate has `take[g]` columns of length groups[g].len.
Partition from_columns(const std::vector<ColumnGroup>& groups, const std::vector<int>& take) {
  std::vector<int> cols;
  for (std::size_t g = 0; g < groups.size(); ++g) cols.insert(cols.end(), take[g], groups[g].len);
  return conjugate(Partition(std::move(cols)));
}

}  // namespace

std::optional<SelectVector> find_select_vector(const ArmLegProfile& profile, int l,
                                               const std::function<bool(const Partition&)>& pred) {
  if (l < 0) return std::nullopt;
  std::optional<SelectVector> hit;
  walk_select(profile.a, l, [&](const std::vector<int>& x) {
    if (!pred(induced_partition(x))) return true;
    hit = SelectVector{x, l};
    return false;
  });
  return hit;
}

int strip_size(int m, int i) { return i * m - i * (i - 1) / 2; }

std::optional<StripLeaf> strip_leaf_rule(int m, int i, const Partition& upsilon) {
  if (upsilon.size() != strip_size(m, i)) return std::nullopt;
  if (i == 2 && upsilon.length() <= 4) return StripLeaf::SigmaTwo;
  if (i == 3 && m >= 3 && upsilon == rectangle(3, m - 1)) return StripLeaf::TripleColumn;
  if (upsilon.length() <= i && dominates(upsilon, tau(m, i))) return StripLeaf::Dominance;
  return std::nullopt;
}

void for_each_decomposition(const Partition& mu, int m,
                            const std::function<bool(const DecompositionStep&)>& visit) {
  if (mu.size() != m * (m + 1) / 2) throw SizeMismatch("decompose: μ must have size m(m+1)/2");
  const Partition mu_t = conjugate(mu);
  for (Side side : {Side::Arm, Side::Leg}) {
    const Partition& xi = side == Side::Arm ? mu : mu_t;
    if (side == Side::Leg && xi == mu) break;  // self-conjugate: same candidates
    const auto profile = arm_leg_profile(xi);
    const auto groups = column_groups(xi);
    for (int i = 1; i < m; ++i) {
      const int l = strip_size(m, i);
      const int maxlen = i == 2 ? 4 : i;
      bool stop = false;
      auto offer = [&](Partition upsilon, std::optional<SelectVector> sv) {
        auto rule = strip_leaf_rule(m, i, upsilon);
        if (!rule) return true;
        auto rem = row_sub(xi, upsilon);
        if (!rem) return true;  // cannot happen for column selections
        DecompositionStep step{side, i, std::move(upsilon), std::move(sv), *rule, std::move(*rem)};
        if (!visit(step)) stop = true;
        return !stop;
      };

      // Select vectors over arm columns.
      std::vector<int> cap = profile.a;
      for (int j = maxlen + 1; j <= profile.k; ++j) cap[j - 1] = 0;
      walk_select(cap, l, [&](const std::vector<int>& x) {
        return offer(induced_partition(x), SelectVector{x, l});
      });
      if (stop) return;

      // Selections that also use Durfee columns.
      std::vector<ColumnGroup> usable;
      for (const auto& g : groups)
        if (g.len <= maxlen) usable.push_back(g);
      std::vector<int> take(usable.size(), 0);
      auto rec = [&](auto&& self, std::size_t g, int rem, bool durfee_used) -> bool {
        if (rem == 0) {
          if (!durfee_used) return true;
          return offer(from_columns(usable, take), std::nullopt);
        }
        if (g == usable.size()) return true;
        const int len = usable[g].len;
        for (int v = std::min(usable[g].count, rem / len); v >= 0; --v) {
          take[g] = v;
          if (!self(self, g + 1, rem - v * len, durfee_used || v > usable[g].arm)) {
            take[g] = 0;
            return false;
          }
        }
        take[g] = 0;
        return true;
      };
      rec(rec, 0, l, false);
      if (stop) return;
    }
  }
}

std::optional<DecompositionStep> decompose(const Partition& mu, int m, const RulePolicy&) {
  std::optional<DecompositionStep> out;
  for_each_decomposition(mu, m, [&](const DecompositionStep& s) {
    out = s;
    return false;
  });
  return out;
}

CertPtr triple_column_certificate(int m, const RulePolicy& policy) {
  if (m < 2) throw std::invalid_argument("triple_column_certificate: m >= 2");
  const int s = (m - 2) / 3, t = (m - 2) % 3;
  CertPtr tail = leaf_from_oracle(Partition{t + 2, t + 1, t}, rectangle(3, t + 1), policy);
  CertPtr body = tail;
  if (s > 0) {
    CertPtr nine = leaf_from_oracle(Partition{3, 3, 3}, Partition{3, 3, 3}, policy);
    body = semigroup(derive_scalar_multiple(nine, s), tail);
  }
  return transpose_alpha(body);
}

CertPtr strip_leaf(int m, int i, const Partition& upsilon, StripLeaf rule, const RulePolicy& policy) {
  switch (rule) {
    case StripLeaf::SigmaTwo: return axiom_leaf(kSigmaTwo, sigma(m, 2), upsilon, policy);
    case StripLeaf::TripleColumn: return triple_column_certificate(m, policy);
    case StripLeaf::Dominance: return transpose_alpha(axiom_leaf(kDominance, tau(m, i), upsilon, policy));
  }
  throw std::logic_error("strip_leaf: bad rule");
}

}  // namespace saxlkit
