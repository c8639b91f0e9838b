// Select-vector tables: every printed row, re-derived by the generic search
// over a grid of profiles satisfying that row's branch condition.
#pragma once

#include "saxlkit/saxl.hpp"

#include <string>
#include <vector>

namespace tables {

using namespace saxlkit;

struct TableResult {
  std::string name;
  int rows = 0;           // printed rows exercised
  long instances = 0;     // profiles checked
  std::vector<std::string> mismatches;
  bool ok() const { return mismatches.empty() && instances > 0; }
};

inline ArmLegProfile profile(std::vector<int> a) {
  ArmLegProfile p;
  p.k = static_cast<int>(a.size());
  p.a = std::move(a);
  p.b.assign(p.k, 0);
  for (int i = 1; i <= p.k; ++i) p.A += i * p.a[i - 1];
  return p;
}

inline std::string show(const std::vector<int>& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + std::to_string(x[i]);
  return s + ")";
}

inline void expect(TableResult& r, const ArmLegProfile& p, int l, const std::function<bool(const Partition&)>& pred,
                   const std::vector<int>& want, const std::string& where) {
  ++r.instances;
  auto got = find_select_vector(p, l, pred);
  if (!got || got->x != want)
    r.mismatches.push_back(where + " a=" + show(p.a) + ": want " + show(want) + " got " +
                           (got ? show(got->x) : std::string("none")));
}

// a1, a2, a3 > 0 and A ≥ 2m−1; the strip is σ_m^2.
inline TableResult table_three_columns() {
  TableResult r{"three arm lengths, l = 2m-1", 6};
  for (int m = 5; m <= 16; ++m) {
    const int l = 2 * m - 1;
    auto pred = [m](const Partition& u) { return strip_leaf_rule(m, 2, u).has_value(); };
    for (int a1 = 1; a1 <= l; ++a1)
      for (int a2 = 1; a2 <= l; ++a2)
        for (int a3 = 1; a3 <= l; ++a3) {
          if (a1 + 2 * a2 + 3 * a3 < l) continue;
          std::vector<int> want;
          if (3 * a3 >= l) {
            const int s = l / 3, t = l % 3;
            want = t == 0 ? std::vector{0, 0, s} : t == 1 ? std::vector{1, 0, s} : std::vector{0, 1, s};
          } else if (2 * a2 >= l - 3 * a3) {
            const int rest = l - 3 * a3;
            want = rest % 2 == 0 ? std::vector{0, rest / 2, a3} : std::vector{1, (2 * m - 3 * a3 - 2) / 2, a3};
          } else {
            want = {l - 3 * a3 - 2 * a2, a2, a3};
          }
          expect(r, profile({a1, a2, a3}), l, pred, want, "m=" + std::to_string(m));
        }
  }
  return r;
}

// k = 4, a1 = a2 = 0 < a3, A4 ≥ 2m−1, A ≥ 8m−28, m ≥ 11.
inline TableResult table_four_columns() {
  TableResult r{"four arm lengths, a1 = a2 = 0", 4};
  for (int m = 11; m <= 40; ++m) {
    const int l2 = 2 * m - 1;
    const bool three = l2 % 4 == 3;
    const int s = l2 / 4;
    for (int a3 = 1; a3 <= 8; ++a3) {
      int lo = std::max((l2 + 3) / 4, (8 * m - 28 - 3 * a3 + 3) / 4);
      for (int a4 = lo; a4 <= lo + 6; ++a4) {
        const auto p = profile({0, 0, a3, a4});
        if (three) {
          auto pred = [m](const Partition& u) { return strip_leaf_rule(m, 2, u).has_value(); };
          expect(r, p, l2, pred, {0, 0, 1, s}, "m=" + std::to_string(m) + " 2m-1=4s+3");
        } else if (a3 <= 2) {
          // Six-column strip: τ_m^6 ⊴ υ.
          const int l6 = strip_size(m, 6);
          auto pred = [m](const Partition& u) { return strip_leaf_rule(m, 6, u) == StripLeaf::Dominance; };
          expect(r, p, l6, pred, {0, 0, 1, 3 * s - 3}, "m=" + std::to_string(m) + " a3<=2 2m-1=4s+1");
        } else {
          auto pred = [m](const Partition& u) { return strip_leaf_rule(m, 2, u).has_value(); };
          expect(r, p, l2, pred, {0, 0, 3, s - 2}, "m=" + std::to_string(m) + " a3>=3 2m-1=4s+1");
        }
      }
    }
  }
  return r;
}

// m = 12, leg side with B2 + B3 = 29, l = 23. Admissible strips in order of
// preference: (9,9,5), then (11,11,1), then (8,8,7).
inline TableResult table_b29() {
  TableResult r{"m = 12, B = 29", 5};
  const std::vector<Partition> menu = {{9, 9, 5}, {11, 11, 1}, {8, 8, 7}};
  struct Row {
    int b2, b3;
    std::vector<int> x;
    Partition upsilon;
  };
  const std::vector<Row> rows = {{1, 9, {0, 1, 7}, {8, 8, 7}},
                                 {4, 7, {0, 4, 5}, {9, 9, 5}},
                                 {7, 5, {0, 4, 5}, {9, 9, 5}},
                                 {10, 3, {0, 10, 1}, {11, 11, 1}},
                                 {13, 1, {0, 10, 1}, {11, 11, 1}}};
  for (const auto& row : rows) {
    const auto p = profile({0, row.b2, row.b3});
    std::optional<SelectVector> got;
    for (const auto& target : menu) {
      got = find_select_vector(p, 23, [&](const Partition& u) { return u == target; });
      if (got) break;
    }
    ++r.instances;
    if (!got || got->x != row.x || induced_partition(got->x) != row.upsilon || !strip_leaf_rule(12, 2, row.upsilon))
      r.mismatches.push_back("(b2,b3)=(" + std::to_string(row.b2) + "," + std::to_string(row.b3) + "): want " +
                             show(row.x) + " got " + (got ? show(got->x) : std::string("none")));
  }
  return r;
}

}  // namespace tables
