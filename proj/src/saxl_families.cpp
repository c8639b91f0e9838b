#include "saxlkit/saxl.hpp"

#include "saxlkit/kronecker.hpp"
#include "saxlkit/parallel.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>

namespace saxlkit {

namespace {

// Leaf that is allowed to be out of reach: nullptr instead of throwing.
CertPtr soft_leaf(const Partition& a, const Partition& b, const RulePolicy& policy) {
  if (a.size() > policy.brute_force_size_cap) return nullptr;
  return try_leaf_from_oracle(a, b, policy);
}

CertPtr dom(const Partition& a, const Partition& b, const RulePolicy& policy) {
  return axiom_leaf(kDominance, a, b, policy);
}

CertPtr check_shape(CertPtr c, const Partition& alpha, const Partition& beta) {
  if (c && (c->alpha != alpha || c->beta != beta))
    throw std::logic_error("reduction produced " + c->alpha.to_string() + "," + c->beta.to_string());
  return c;
}

// Shared skeleton for η_k and γ_k: a one-row strip of `strip` boxes, plus
// the two-row reductions supplied by `two_row`.
template <class Self, class TwoRow>
CertPtr reduce_double(const Partition& shape, int k, const Partition& nu, int base_k, int strip,
                      const RulePolicy& policy, Self&& self, TwoRow&& two_row) {
  if (nu.size() != shape.size()) throw SizeMismatch("target size differs from the shape");
  if (durfee(nu) > 2) throw std::invalid_argument("target needs Durfee size <= 2");
  if (k <= base_k) return soft_leaf(shape, nu, policy);

  const Partition nu_t = conjugate(nu);
  for (const Partition* xi : {&nu, &nu_t}) {
    if (xi == &nu_t && nu_t == nu) break;
    const auto p = arm_leg_profile(*xi);
    CertPtr c;
    if (p.k >= 1 && p.arm(1) >= strip) {
      // shape_k = (shape_{k-1} + (1^{h-1})) ∪ (h) with 2h − 1 = strip.
      const int h = (strip + 1) / 2;
      if (CertPtr rest = self(k - 1, *row_sub(*xi, Partition{strip})))
        c = vertical_sum(semigroup(rest, transpose_alpha(dom(Partition{h - 1}, Partition{h - 1}, policy))),
                         dom(Partition{h}, Partition{h}, policy));
    }
    if (!c && p.k == 2) c = two_row(*xi, p);
    if (c) return xi == &nu ? c : transpose_beta(c);
  }
  return soft_leaf(shape, nu, policy);
}

}  // namespace

CertPtr four_row_certificate(int j, const RulePolicy& policy) {
  if (j < 3 || j % 2 == 0) throw std::invalid_argument("four_row_certificate: odd j >= 3");
  const int s = (j - 1) / 2;
  CertPtr base = leaf_from_oracle(rectangle(4, 3), Partition{6, 6}, policy);
  if (s == 1) return base;
  CertPtr two = transpose_alpha(leaf_from_oracle(Partition{4, 4}, Partition{4, 4}, policy));
  return semigroup(derive_scalar_multiple(two, s - 1), base);
}

CertPtr chopped_certificate(int k, const Partition& nu, const RulePolicy& policy) {
  const Partition shape = chopped_square(k);
  auto self = [&](int kk, const Partition& v) { return chopped_certificate(kk, v, policy); };
  auto two_row = [&](const Partition& xi, const ArmLegProfile& p) -> CertPtr {
    if (k % 2 == 0 && k >= 4 && p.arm_boxes(2) >= 4 * k - 4) {
      // η_k = (η_{k-2} + (2^{k-2})) ∪ (k,k)
      const Partition rest_nu = *row_sub(xi, Partition{2 * k - 2, 2 * k - 2});
      CertPtr rest = chopped_certificate(k - 2, rest_nu, policy);
      CertPtr inner = soft_leaf(Partition{k - 2, k - 2}, Partition{k - 2, k - 2}, policy);
      CertPtr outer = soft_leaf(Partition{k, k}, Partition{k, k}, policy);
      if (rest && inner && outer) return vertical_sum(semigroup(rest, transpose_alpha(inner)), outer);
    }
    if (k % 2 == 1 && k >= 7 && p.arm_boxes(2) >= 8 * k - 16) {
      // η_k = (η_{k-4} + (4^{k-4})) ∪ (k^4)
      const Partition rest_nu = *row_sub(xi, Partition{4 * k - 8, 4 * k - 8});
      if (CertPtr rest = chopped_certificate(k - 4, rest_nu, policy))
        return vertical_sum(semigroup(rest, transpose_alpha(four_row_certificate(k - 4, policy))),
                            four_row_certificate(k, policy));
    }
    return nullptr;
  };
  return check_shape(reduce_double(shape, k, nu, 3, 2 * k - 1, policy, self, two_row), shape, nu);
}

CertPtr caret_certificate(int k, const Partition& nu, const RulePolicy& policy) {
  const Partition shape = caret(k);
  auto self = [&](int kk, const Partition& v) { return caret_certificate(kk, v, policy); };
  auto two_row = [&](const Partition& xi, const ArmLegProfile& p) -> CertPtr {
    if (k % 2 == 0 && p.arm_boxes(2) >= 12 * k - 12) {
      // ((n,n−2),(n−1,n−1)) ∈ K for odd n = 3k−1.
      const Partition rest_nu = *row_sub(xi, Partition{6 * k - 6, 6 * k - 6});
      CertPtr rest = caret_certificate(k - 2, rest_nu, policy);
      CertPtr inner = soft_leaf(Partition{3 * k - 3, 3 * k - 5}, Partition{3 * k - 4, 3 * k - 4}, policy);
      CertPtr outer = soft_leaf(Partition{3 * k - 1, 3 * k - 3}, Partition{3 * k - 2, 3 * k - 2}, policy);
      if (rest && inner && outer) return vertical_sum(semigroup(rest, transpose_alpha(inner)), outer);
    }
    if (k % 2 == 1 && k >= 5 && p.arm_boxes(2) >= 24 * k - 48) {
      const Partition rest_nu = *row_sub(xi, Partition{12 * k - 24, 12 * k - 24});
      if (CertPtr rest = caret_certificate(k - 4, rest_nu, policy)) {
        CertPtr inner = dom(Partition{3 * k - 5, 3 * k - 7, 3 * k - 9, 3 * k - 11}, Partition{6 * k - 16, 6 * k - 16},
                            policy);
        CertPtr outer = dom(Partition{3 * k - 1, 3 * k - 3, 3 * k - 5, 3 * k - 7}, Partition{6 * k - 8, 6 * k - 8},
                            policy);
        return vertical_sum(semigroup(rest, transpose_alpha(inner)), outer);
      }
    }
    return nullptr;
  };
  return check_shape(reduce_double(shape, k, nu, 3, 6 * k - 3, policy, self, two_row), shape, nu);
}

// ---------------------------------------------------------------------------
// Campaigns

const char* to_string(Family f) {
  switch (f) {
    case Family::StaircaseHooks: return "staircase_hooks";
    case Family::TripleHooks: return "triple_hooks";
    case Family::ChoppedHooks: return "chopped_hooks";
    case Family::CaretHooks: return "caret_hooks";
    case Family::ChoppedDouble: return "chopped_double";
    case Family::CaretDouble: return "caret_double";
  }
  return "?";
}

std::optional<Family> parse_family(const std::string& s) {
  for (Family f : {Family::StaircaseHooks, Family::TripleHooks, Family::ChoppedHooks, Family::CaretHooks,
                   Family::ChoppedDouble, Family::CaretDouble})
    if (s == to_string(f)) return f;
  return std::nullopt;
}

Partition family_shape(Family f, int p) {
  switch (f) {
    case Family::StaircaseHooks:
    case Family::TripleHooks: return staircase(p);
    case Family::ChoppedHooks:
    case Family::ChoppedDouble: return chopped_square(p);
    case Family::CaretHooks:
    case Family::CaretDouble: return caret(p);
  }
  throw std::logic_error("family_shape");
}

std::vector<Partition> family_targets(Family f, int p) {
  const int n = family_shape(f, p).size();
  const int d = (f == Family::TripleHooks) ? 3 : (f == Family::ChoppedDouble || f == Family::CaretDouble) ? 2 : 1;
  if (n == 0) return {};
  return partitions_of(n, {.durfee = d});
}

namespace {

std::string file_stem(const Partition& p) {
  std::string s = p.to_string();
  return s.substr(1, s.size() - 2);
}

struct Outcome {
  TargetRecord rec;
  std::string json;  // only when writing files
};

}  // namespace

VerificationReport verify_family(Family f, int from, int to, const RulePolicy& policy, const FamilyOptions& opt) {
  if (from < 1 || to < from) throw std::invalid_argument("verify_family: need 1 <= from <= to");
  using clock = std::chrono::steady_clock;
  const auto t0 = clock::now();

  VerificationReport report;
  report.family = to_string(f);
  report.range = std::to_string(from) + ".." + std::to_string(to);
  report.keep_records = opt.keep_records;
  report.sink = opt.sink;

  namespace fs = std::filesystem;
  std::ofstream csv;
  if (!opt.out_dir.empty()) {
    fs::create_directories(opt.out_dir);
    csv.open(fs::path(opt.out_dir) / "report.csv");
    if (!csv) throw std::ios_base::failure("cannot write report.csv in " + opt.out_dir);
    write_csv_header(csv);
  }

  const bool staircase_family = f == Family::StaircaseHooks || f == Family::TripleHooks;
  StaircaseReducer reducer(policy, opt.reduce.value_or(f == Family::StaircaseHooks ? ReduceOptions::hooks()
                                                                                   : ReduceOptions{}));
  CertificateChecker checker(policy);
  std::size_t seq = 0;

  for (int p = from; p <= to; ++p) {
    const std::vector<Partition> targets = family_targets(f, p);
    fs::path dir;
    if (!opt.out_dir.empty()) {
      dir = fs::path(opt.out_dir) / "certs" / report.family / std::to_string(p);
      fs::create_directories(dir);
    }
    constexpr std::size_t kChunk = 512;
    for (std::size_t lo = 0; lo < targets.size(); lo += kChunk) {
      const std::size_t hi = std::min(targets.size(), lo + kChunk);
      std::vector<Outcome> out(hi - lo);
      parallel_for(hi - lo, [&](std::size_t j) {
        const Partition& mu = targets[lo + j];
        const std::size_t index = seq + lo + j;
        const auto start = clock::now();
        Outcome& o = out[j];
        o.rec.target = mu.to_string();
        try {
          CertPtr c;
          switch (f) {
            case Family::StaircaseHooks:
            case Family::TripleHooks: c = reducer.certify(p, mu); break;
            case Family::ChoppedHooks:
            case Family::ChoppedDouble: c = chopped_certificate(p, mu, policy); break;
            case Family::CaretHooks:
            case Family::CaretDouble: c = caret_certificate(p, mu, policy); break;
          }
          if (!c) {
            o.rec.detail = staircase_family ? ReductionFailure(p, mu, "every route exhausted").what()
                                            : "no reduction applies and the target exceeds the brute-force cap";
          } else {
            CheckResult r = checker.check(*c);
            if (r && opt.roundtrip_every && index % opt.roundtrip_every == 0) {
              CertPtr back = parse_certificate(emit_certificate(*c));
              if (!(*back == *c)) r = {false, "root", "JSON round trip changed the certificate"};
              else r = checker.check(*back);
            }
            if (!r) {
              o.rec.detail = "checker rejected at " + r.path + ": " + r.message;
            } else {
              o.rec.status = c->rule == Rule::BruteForce ? TargetStatus::BruteForced : TargetStatus::Certified;
              if (!dir.empty()) {
                const fs::path file = dir / (file_stem(mu) + ".kcert.json");
                save_certificate(*c, file.string());
                // Relative to the report, so output trees compare byte for byte.
                o.rec.certificate = file.lexically_relative(opt.out_dir).generic_string();
              }
            }
          }
        } catch (const std::exception& e) {
          o.rec.status = TargetStatus::Failed;
          o.rec.detail = e.what();
        }
        if (opt.timings) o.rec.millis = std::chrono::duration<double, std::milli>(clock::now() - start).count();
      });
      for (auto& o : out) {
        if (csv.is_open()) write_csv_row(csv, o.rec);
        report.add(std::move(o.rec));
      }
    }
    seq += targets.size();
  }
  report.seconds = opt.timings ? std::chrono::duration<double>(clock::now() - t0).count() : 0.0;
  if (csv.is_open()) csv << "# " << report.summary() << '\n';
  return report;
}

// ---------------------------------------------------------------------------
// Staircase-like partitions

std::vector<Partition> staircase_like(int n) {
  if (n < 0) throw std::invalid_argument("staircase_like: n >= 0");
  int m = 0;
  while ((m + 1) * (m + 2) / 2 <= n) ++m;
  const int k = n - m * (m + 1) / 2;
  Partition inner = staircase(m), outer = staircase(m + 1);
  if (m % 2 == 1 && k % 2 == 1) {
    if (k == 1) inner = staircase(m - 1);
    else outer = staircase(m + 2);
  }
  std::vector<Partition> out;
  for_each_partition(n, [&](const Partition& l) {
    if (l.self_conjugate() && contained_in(inner, l) && contained_in(l, outer)) out.push_back(l);
    return true;
  }, {.max_length = outer.length(), .max_part = outer.largest()});
  return out;
}

VerificationReport verify_generalized_saxl(int n_min, int n_max) {
  VerificationReport report;
  report.family = "staircase_like";
  report.range = std::to_string(n_min) + ".." + std::to_string(n_max);
  const auto t0 = std::chrono::steady_clock::now();
  for (int n = std::max(n_min, 1); n <= n_max; ++n) {
    if (n == 2 || n == 4 || n == 9) continue;
    const std::uint64_t full = partition_count(n);
    for (const Partition& l : staircase_like(n)) {
      const auto start = std::chrono::steady_clock::now();
      TargetRecord rec;
      rec.target = l.to_string();
      auto support = tensor_square_support(l, {.max_n = std::max(n_max, 1)});
      if (support.size() == full) {
        rec.status = TargetStatus::BruteForced;
      } else {
        rec.detail = std::to_string(full - support.size()) + " constituents missing";
      }
      rec.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      report.add(std::move(rec));
    }
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

}  // namespace saxlkit
