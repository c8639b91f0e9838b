// Command-line front end: character/Kronecker queries and verification campaigns.
#include "saxlkit/certificate.hpp"
#include "saxlkit/characters.hpp"
#include "saxlkit/kronecker.hpp"
#include "saxlkit/parallel.hpp"
#include "saxlkit/saxl.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#ifndef SAXLKIT_DATA_DIR
#define SAXLKIT_DATA_DIR "data"
#endif

using namespace saxlkit;

namespace {

enum Exit { kOk = 0, kUsage = 2, kZero = 3, kInvalid = 4, kFailed = 5 };

struct Config {
  unsigned threads = 0;
  std::size_t cache_entries = 0;
  bool extended = false;
  int brute_cap = 36;
  int audit_cap = 11;
  std::string manifest = std::string(SAXLKIT_DATA_DIR) + "/manifest.json";
  bool no_timings = false;
};

RulePolicy make_policy(const Config& cfg) {
  RulePolicy p;
  p.brute_force_size_cap = cfg.brute_cap;
  p.audit_cap = cfg.audit_cap;
  p.extended = cfg.extended;
  if (std::filesystem::exists(cfg.manifest)) p.manifest = std::make_shared<Manifest>(Manifest::load(cfg.manifest));
  return p;
}

void print_failures(const VerificationReport& r) {
  for (const auto& f : r.failures) std::cerr << "FAILED " << f.target << ": " << f.detail << '\n';
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"saxlkit: characters, Kronecker coefficients and positivity certificates for S_n"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;

  if (const char* env = std::getenv("SAXLKIT_CACHE_ENTRIES")) {
    try {
      cfg.cache_entries = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "SAXLKIT_CACHE_ENTRIES is not a number: " << env << '\n';
      return kUsage;
    }
  }
  app.add_option("--threads", cfg.threads, "Worker threads (default: logical cores)")->check(CLI::PositiveNumber);
  app.add_option("--cache-entries", cfg.cache_entries,
                 "Memo capacity in entries (default 4194304; env SAXLKIT_CACHE_ENTRIES, the flag wins)");
  app.add_flag("--extended", cfg.extended, "Recompute manifest-backed leaves instead of reading the manifest");
  app.add_option("--brute-cap", cfg.brute_cap, "Largest size closed by brute force")->capture_default_str();
  app.add_option("--audit-cap", cfg.audit_cap, "Axiom instances up to this size are recomputed")->capture_default_str();
  app.add_option("--manifest", cfg.manifest, "Manifest of recorded leaf coefficients")->capture_default_str();
  app.add_flag("--no-timings", cfg.no_timings, "Zero all timings so output is byte-reproducible");

  // kron
  auto* kron = app.add_subcommand("kron", "Kronecker coefficient g(λ,μ,ν); exit 3 when it is zero");
  std::string ka, kb, kc;
  kron->add_option("lambda", ka)->required();
  kron->add_option("mu", kb)->required();
  kron->add_option("nu", kc)->required();

  // char
  auto* chr = app.add_subcommand("char", "Character value χ^λ(μ)");
  std::string ca, cb;
  chr->add_option("lambda", ca)->required();
  chr->add_option("mu", cb, "cycle type")->required();

  // support
  auto* sup = app.add_subcommand("support", "Constituents ν of [λ]⊗[λ], one per line with g(λ,λ,ν)");
  std::string sa;
  int max_n = 30;
  sup->add_option("lambda", sa)->required();
  sup->add_option("--max-n", max_n, "Refuse larger n")->capture_default_str();

  // saxl-verify
  auto* ver = app.add_subcommand("saxl-verify", "Certify every target of a family over a parameter range");
  std::string family;
  int from = 1, to = 1;
  std::string out_dir;
  std::size_t roundtrip = 0;
  ver->add_option("--family", family,
                  "staircase_hooks | triple_hooks | chopped_hooks | caret_hooks | chopped_double | caret_double")
      ->required();
  ver->add_option("--from", from)->required();
  ver->add_option("--to", to)->required();
  ver->add_option("--out", out_dir, "Write certs/<family>/<m>/*.kcert.json and report.csv here");
  ver->add_option("--roundtrip", roundtrip, "Re-read every N-th certificate from JSON before checking");

  // certify
  auto* cert = app.add_subcommand("certify", "Certificate for (shape, μ); prints JSON or writes --out");
  int cm = 0;
  std::string cmu, cshape = "staircase", cout_path;
  cert->add_option("m", cm, "order of the shape")->required();
  cert->add_option("mu", cmu)->required();
  cert->add_option("--shape", cshape, "staircase | chopped | caret")->capture_default_str();
  cert->add_option("--out", cout_path);

  // check-cert
  auto* chk = app.add_subcommand("check-cert", "Validate a certificate file; exit 4 if invalid");
  std::string cpath;
  chk->add_option("path", cpath)->required();

  // stats
  auto* st = app.add_subcommand("stats", "Dominance statistics for the staircases ρ_3..ρ_M");
  int rho_max = 7;
  st->add_option("--rho-max", rho_max, "")->capture_default_str();

  // staircase-like
  auto* sl = app.add_subcommand("staircase-like", "Staircase-like partitions of N");
  int sl_n = 0;
  bool sl_verify = false;
  sl->add_option("N", sl_n)->required();
  sl->add_flag("--verify", sl_verify, "Check full tensor-square support for every n in 3..N");

  // audit
  auto* aud = app.add_subcommand("audit", "Recompute every axiom instance of size <= --audit-cap");

  // manifest
  auto* man = app.add_subcommand("manifest", "Compute the recorded leaf coefficients and write the manifest");
  std::string man_out;
  man->add_option("--out", man_out, "Destination (default: --manifest path)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  if (cfg.threads) set_thread_count(cfg.threads);
  if (cfg.cache_entries) set_cache_capacity(cfg.cache_entries);

  try {
    if (kron->parsed()) {
      const CharInt g = kronecker(Partition::parse(ka), Partition::parse(kb), Partition::parse(kc));
      std::cout << g << '\n';
      return g.sign() > 0 ? kOk : kZero;
    }
    if (chr->parsed()) {
      std::cout << character_value(Partition::parse(ca), CycleType::parse(cb)) << '\n';
      return kOk;
    }
    if (sup->parsed()) {
      const Partition l = Partition::parse(sa);
      const auto g = tensor_square(l, {.max_n = max_n});
      const auto all = partitions_of(l.size());
      std::size_t count = 0;
      for (std::size_t i = 0; i < all.size(); ++i)
        if (g[i].sign() > 0) {
          std::cout << all[i] << ' ' << g[i] << '\n';
          ++count;
        }
      std::cerr << count << " of " << all.size() << " partitions occur\n";
      return kOk;
    }
    if (ver->parsed()) {
      auto f = parse_family(family);
      if (!f) {
        std::cerr << "unknown family: " << family << '\n';
        return kUsage;
      }
      FamilyOptions opt;
      opt.out_dir = out_dir;
      opt.timings = !cfg.no_timings;
      opt.roundtrip_every = roundtrip;
      auto report = verify_family(*f, from, to, make_policy(cfg), opt);
      std::cout << report.summary() << '\n';
      print_failures(report);
      return report.ok() ? kOk : kFailed;
    }
    if (cert->parsed()) {
      const Partition mu = Partition::parse(cmu);
      const RulePolicy policy = make_policy(cfg);
      CertPtr c;
      if (cshape == "staircase") {
        StaircaseReducer r(policy, durfee(mu) == 1 ? ReduceOptions::hooks() : ReduceOptions{});
        c = r.certify(cm, mu);
      } else if (cshape == "chopped") {
        c = chopped_certificate(cm, mu, policy);
      } else if (cshape == "caret") {
        c = caret_certificate(cm, mu, policy);
      } else {
        std::cerr << "unknown shape: " << cshape << '\n';
        return kUsage;
      }
      if (!c) {
        std::cerr << "no certificate found for " << cshape << ' ' << cm << ", " << mu << '\n';
        return kFailed;
      }
      if (auto res = check_certificate(*c, policy); !res) {
        std::cerr << "internal: derived certificate rejected at " << res.path << ": " << res.message << '\n';
        return kFailed;
      }
      if (cout_path.empty()) std::cout << emit_certificate(*c);
      else save_certificate(*c, cout_path);
      return kOk;
    }
    if (chk->parsed()) {
      CertPtr c;
      try {
        c = load_certificate(cpath);
      } catch (const std::ios_base::failure& e) {
        std::cerr << e.what() << '\n';
        return kUsage;
      } catch (const CertificateError& e) {
        std::cout << "invalid: " << e.what() << '\n';
        return kInvalid;
      }
      auto res = check_certificate(*c, make_policy(cfg));
      if (!res) {
        std::cout << "invalid at " << res.path << ": " << res.message << '\n';
        return kInvalid;
      }
      std::cout << "valid (" << c->alpha << ", " << c->beta << ") nodes=" << c->node_count() << '\n';
      return kOk;
    }
    if (st->parsed()) {
      std::cout << "m,n,partitions,below,above,comparable,conjugate_upward,graphical,comparable_ratio\n";
      for (int m = 3; m <= rho_max; ++m) {
        const auto s = dominance_stats(staircase(m));
        std::cout << m << ',' << s.lambda.size() << ',' << s.partitions << ',' << s.below << ',' << s.above << ','
                  << s.comparable << ',' << s.conjugate_upward << ',' << s.graphical << ','
                  << fixed(s.comparable_ratio(), 6) << '\n';
      }
      return kOk;
    }
    if (sl->parsed()) {
      if (!sl_verify) {
        for (const auto& l : staircase_like(sl_n)) std::cout << l << '\n';
        return kOk;
      }
      auto report = verify_generalized_saxl(3, sl_n);
      if (cfg.no_timings) report.seconds = 0;
      std::cout << report.summary() << '\n';
      print_failures(report);
      return report.ok() ? kOk : kFailed;
    }
    if (aud->parsed()) {
      auto report = audit_axioms(make_policy(cfg));
      if (cfg.no_timings) report.seconds = 0;
      std::cout << report.summary() << '\n';
      print_failures(report);
      return report.ok() ? kOk : kFailed;
    }
    if (man->parsed()) {
      Manifest m;
      const auto pairs = hard_case_manifest_pairs();
      std::vector<CharInt> values(pairs.size());
      parallel_for(pairs.size(), [&](std::size_t i) {
        values[i] = kronecker(pairs[i].first, pairs[i].first, pairs[i].second);
      });
      for (std::size_t i = 0; i < pairs.size(); ++i) m.add(pairs[i].first, pairs[i].second, values[i]);
      const std::string dest = man_out.empty() ? cfg.manifest : man_out;
      m.save(dest);
      std::cout << "wrote " << m.size() << " entries to " << dest << '\n';
      return kOk;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const CertificateError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailed;
  }
  return kUsage;
}
