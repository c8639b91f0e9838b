// Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fails.
// Usage: acceptance [--only N] [--cli PATH]
#include "oracle.hpp"
#include "saxlkit/certificate.hpp"
#include "saxlkit/characters.hpp"
#include "saxlkit/kronecker.hpp"
#include "saxlkit/saxl.hpp"
#include "tables.hpp"

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

using namespace saxlkit;
namespace fs = std::filesystem;

namespace {

std::string cli_path = SAXLKIT_BIN;

// Collects mismatches; the first few are shown in the detail text.
struct Outcome {
  long checks = 0;
  std::vector<std::string> errors;
  std::string note;

  void expect(bool ok, const std::function<std::string()>& what) {
    ++checks;
    if (!ok) errors.push_back(what());
  }
  bool ok() const { return errors.empty() && checks > 0; }
};

template <class T>
std::string str(const T& v) {
  std::ostringstream s;
  s << v;
  return s.str();
}

int shell(const std::string& args) {
  const int status = std::system((cli_path + " " + args + " >/dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Partition random_partition(std::mt19937_64& rng, int n) {
  auto all = partitions_of(n);
  return all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
}

RulePolicy manifest_policy() {
  RulePolicy p;
  p.manifest = std::make_shared<Manifest>(Manifest::load(SAXLKIT_DATA_DIR "/manifest.json"));
  return p;
}

// ---------------------------------------------------------------------------

Outcome c1() {
  Outcome o;
  for (int m = 2; m <= 6; ++m) {
    const auto support = tensor_square_support(staircase(m));
    const auto n = static_cast<std::uint64_t>(m * (m + 1) / 2);
    o.expect(support.size() == partition_count(n) && support == partitions_of(n), [&] {
      return "rho_" + std::to_string(m) + ": " + std::to_string(support.size()) + " of " +
             std::to_string(partition_count(n));
    });
  }
  o.note = "support of rho_m (x) rho_m is all of P(n), m = 2..6";
  return o;
}

Outcome c2() {
  Outcome o;
  for (int k = 2; k <= 5; ++k) {
    const auto g = kronecker(rectangle(2, k), rectangle(2, k), rectangle(2, k));
    o.expect(g == CharInt(k % 2 ? 0 : 1), [&] { return "g((k,k)^3), k=" + std::to_string(k) + " is " + str(g); });
  }
  for (int n = 5; n <= 8; ++n) {
    const auto g = kronecker({n, n - 2}, {n, n - 2}, {n - 1, n - 1});
    o.expect(g == CharInt(n % 2 ? 1 : 0), [&] { return "n=" + std::to_string(n) + " gives " + str(g); });
  }
  o.note = "(k,k) triples 1,0,1,0; (n,n-2)^2 vs (n-1,n-1) 1,0,1,0";
  return o;
}

Outcome c3() {
  Outcome o;
  auto pos = [&](const Partition& a, const Partition& b) {
    o.expect(is_positive(a, a, b), [&] { return "g(" + str(a) + "," + str(a) + "," + str(b) + ") = 0"; });
  };
  for (int t = 0; t <= 2; ++t) pos({t + 2, t + 1, t}, rectangle(3, t + 1));
  pos(rectangle(4, 3), {6, 6});
  pos({4, 4}, {4, 4});
  pos(staircase(4), {5, 5});
  for (int k = 1; k <= 3; ++k)
    for (const Partition& shape : {caret(k), chopped_square(k)}) {
      if (shape.empty()) continue;
      for (const auto& h : partitions_of(shape.size(), {.durfee = 1})) pos(shape, h);
    }
  o.note = "explicit positive pairs and all hooks against gamma_k, eta_k, k <= 3";
  return o;
}

Outcome c4() {
  Outcome o;
  const RulePolicy policy = manifest_policy();
  FamilyOptions opt;
  opt.roundtrip_every = 1;  // every certificate is re-read from JSON and re-checked
  auto r = verify_family(Family::TripleHooks, 10, 14, policy, opt);
  o.expect(r.ok() && r.total > 0, [&] { return r.summary(); });
  for (const auto& f : r.failures) o.errors.push_back(f.target + ": " + f.detail);

  // The same path through the executable on a sample, including the hard m = 10 targets.
  const auto dir = fs::temp_directory_path() / "saxlkit_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);
  std::vector<std::pair<int, Partition>> sample;
  for (const auto& t : hard_targets_m10()) sample.emplace_back(10, t);
  std::mt19937_64 rng(2024);
  for (int m = 10; m <= 14; ++m) {
    const auto all = family_targets(Family::TripleHooks, m);
    for (int j = 0; j < 3; ++j) sample.emplace_back(m, all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)]);
  }
  int idx = 0;
  for (const auto& [m, mu] : sample) {
    const auto path = (dir / ("s" + std::to_string(idx++) + ".kcert.json")).string();
    const int a = shell("certify " + std::to_string(m) + " " + mu.to_string() + " --out " + path);
    const int b = a == 0 ? shell("check-cert " + path) : -1;
    o.expect(a == 0 && b == 0,
             [&] { return "cli " + std::to_string(m) + " " + mu.to_string() + ": certify=" + std::to_string(a) +
                          " check-cert=" + std::to_string(b); });
  }
  fs::remove_all(dir);
  o.note = std::to_string(r.total) + " targets in S(m,3), m = 10..14, certified and JSON round-tripped; " +
           std::to_string(sample.size()) + " sampled through certify/check-cert";
  return o;
}

Outcome c5() {
  Outcome o;
  RulePolicy policy;
  std::string totals;
  for (auto [f, to] : {std::pair{Family::StaircaseHooks, 10}, {Family::ChoppedHooks, 6}, {Family::CaretHooks, 4}}) {
    FamilyOptions opt;
    opt.keep_records = true;
    auto r = verify_family(f, 1, to, policy, opt);
    o.expect(r.ok(), [&] { return r.summary(); });
    // The brute-force base stays small; everything above it is an induction step.
    const int base = family_shape(f, f == Family::StaircaseHooks ? 2 : 3).size();
    std::size_t bf_above = 0;
    for (const auto& rec : r.records)
      if (rec.status == TargetStatus::BruteForced && Partition::parse(rec.target).size() > base) ++bf_above;
    o.expect(bf_above == 0, [&] { return std::string(to_string(f)) + ": brute force above the base"; });
    totals += std::string(totals.empty() ? "" : ", ") + to_string(f) + " " + std::to_string(r.total);
  }
  o.note = "hook inductions: " + totals;
  return o;
}

Outcome c6() {
  Outcome o;
  auto s3 = dominance_stats(staircase(3));
  o.expect(s3.below == 6, [&] { return "|Lambda(rho_3)| = " + std::to_string(s3.below); });
  double prev = 2;
  std::string cs;
  for (int m = 3; m <= 8; ++m) {
    auto s = dominance_stats(staircase(m));
    cs += (m > 3 ? "," : "") + std::to_string(s.comparable);
    o.expect(s.comparable > (std::uint64_t{1} << m), [&] { return "|C| <= 2^m at m=" + std::to_string(m); });
    if (m <= 7) {
      o.expect(s.comparable == 2 * s.below - 1, [&] { return "|C| != 2|Lambda|-1 at m=" + std::to_string(m); });
      o.expect(s.comparable_ratio() < prev, [&] { return "ratio not decreasing at m=" + std::to_string(m); });
      prev = s.comparable_ratio();
    }
  }
  o.note = "|C(rho_m)|, m = 3..8: " + cs;
  return o;
}

Outcome c7() {
  Outcome o;
  for (int n = 1; n <= 15; ++n) {
    const auto col = character_column(CycleType(rectangle(n, 1)));
    const auto all = partitions_of(n);
    for (std::size_t i = 0; i < all.size(); ++i)
      o.expect(col[i] == dimension(all[i]), [&] { return "chi^" + str(all[i]) + "(1) != f"; });
  }
  for (int n = 1; n <= 8; ++n) {
    const auto cls = partitions_of(n);
    std::vector<std::vector<CharInt>> cols;
    for (const auto& c : cls) cols.push_back(character_column(CycleType(c)));
    for (std::size_t a = 0; a < cls.size(); ++a)
      for (std::size_t b = a; b < cls.size(); ++b) {
        CharInt s(0);
        for (std::size_t i = 0; i < cls.size(); ++i) s += cols[a][i] * cols[b][i];
        const CharInt want = a == b ? class_size(CycleType(cls[a])) : CharInt(0);
        o.expect(s == want, [&] { return "column orthogonality " + str(cls[a]) + " " + str(cls[b]); });
      }
  }
  for (int n = 1; n <= 10; ++n) {
    CharInt s(0), fact(1);
    for (int i = 2; i <= n; ++i) fact = fact * CharInt(i);
    for (const auto& l : partitions_of(n)) s += dimension(l) * dimension(l);
    o.expect(s == fact, [&] { return "sum of f^2 != n! at n=" + std::to_string(n); });
  }
  std::mt19937_64 rng(99);
  for (int t = 0; t < 100; ++t) {
    const int n = std::uniform_int_distribution<int>(1, 10)(rng);
    const Partition a = random_partition(rng, n), b = random_partition(rng, n), c = random_partition(rng, n);
    const CharInt g = kronecker(a, b, c);
    for (const auto& [x, y, z] : {std::tuple{a, c, b}, {b, a, c}, {b, c, a}, {c, a, b}, {c, b, a},
                                  {conjugate(a), conjugate(b), c}, {conjugate(a), b, conjugate(c)}})
      o.expect(kronecker(x, y, z) == g, [&] { return "symmetry " + str(a) + " " + str(b) + " " + str(c); });
  }
  for (int t = 0, done = 0; done < 50 && t < 5000; ++t) {
    const int n1 = std::uniform_int_distribution<int>(1, 7)(rng), n2 = std::uniform_int_distribution<int>(1, 7)(rng);
    const Partition a = random_partition(rng, n1), b = random_partition(rng, n1);
    const Partition c = random_partition(rng, n2), d = random_partition(rng, n2);
    if (!is_positive(a, a, b) || !is_positive(c, c, d)) continue;
    ++done;
    o.expect(is_positive(row_add(a, c), row_add(a, c), row_add(b, d)),
             [&] { return "semigroup " + str(a) + "," + str(b) + " + " + str(c) + "," + str(d); });
    o.expect(is_positive(vertical_sum(a, c), vertical_sum(a, c), row_add(b, d)),
             [&] { return "vertical sum " + str(a) + "," + str(b) + " + " + str(c) + "," + str(d); });
  }
  for (int n = 1; n <= 6; ++n) {
    const auto table = oracle::character_table(n);
    for (const auto& l : partitions_of(n))
      for (const auto& m : partitions_of(n))
        o.expect(character_value(l, CycleType(m)) == CharInt(table.at(l).at(m)),
                 [&] { return "MN vs brute force " + str(l) + " " + str(m); });
  }
  o.note = "hook length, orthogonality, Burnside, symmetries, closure, brute-force characters";
  return o;
}

Outcome c8() {
  Outcome o;
  std::string rows;
  for (const auto& t : {tables::table_three_columns(), tables::table_four_columns(), tables::table_b29()}) {
    o.expect(t.ok(), [&] { return t.name + ": " + (t.mismatches.empty() ? "no instances" : t.mismatches.front()); });
    rows += (rows.empty() ? "" : ", ") + t.name + " (" + std::to_string(t.instances) + ")";
  }
  o.note = rows;
  return o;
}

Outcome c9() {
  Outcome o;
  auto r = verify_generalized_saxl(3, 18);
  o.expect(r.ok() && r.total > 0, [&] { return r.summary(); });
  for (const auto& f : r.failures) o.errors.push_back(f.target + ": " + f.detail);
  o.note = std::to_string(r.total) + " staircase-like shapes, 3 <= n <= 18, full support";
  return o;
}

Outcome c10() {
  Outcome o;
  std::mt19937_64 rng(4);
  for (int k = 3; k <= 5; ++k) {
    const int m = 4 * k * k + 4 * k - 1;
    const int n = m * (m + 1) / 2;
    for (int s = 0; s < 200; ++s) {
      const Partition mu = sample_durfee(n, k, rng);
      o.expect(durfee(mu) == k && mu.size() == n && pigeonhole_strip(mu, m).has_value(),
               [&] { return "k=" + std::to_string(k) + ": " + str(mu); });
    }
  }
  o.note = "600 uniform samples from S(4k^2+4k-1, k), k = 3,4,5";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i + 1 < argc; i += 2) {
    const std::string flag = argv[i];
    if (flag == "--only") only = std::atoi(argv[i + 1]);
    else if (flag == "--cli") cli_path = argv[i + 1];
  }
  const std::vector<std::pair<std::string, Outcome (*)()>> criteria = {
      {"Saxl at small staircases", c1},   {"parity families", c2},
      {"explicit positive checks", c3},   {"triple-hook certification", c4},
      {"hook inductions", c5},            {"dominance statistics", c6},
      {"property suites", c7},            {"select-vector tables", c8},
      {"generalized Saxl, n <= 18", c9},  {"pigeonhole strips", c10}};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only && only != static_cast<int>(i + 1)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.errors.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.1fs", secs);
    std::cout << (o.ok() ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " — "
              << o.note << " [" << o.checks << " checks, " << timing << "]\n";
    for (std::size_t e = 0; e < std::min<std::size_t>(o.errors.size(), 5); ++e)
      std::cout << "    " << o.errors[e] << '\n';
    std::cout.flush();
    failed += !o.ok();
  }
  return failed ? 1 : 0;
}
