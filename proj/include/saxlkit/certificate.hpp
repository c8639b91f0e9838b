#pragma once

#include "saxlkit/charint.hpp"
#include "saxlkit/partition.hpp"
#include "saxlkit/report.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace saxlkit {

/// Rule justifying (α,β) ∈ K, i.e. g(α,α,β) > 0.
enum class Rule { BruteForce, Axiom, Semigroup, VerticalSum, Transpose };
enum class LeafSource { Computed, Manifest };

const char* to_string(Rule r);
const char* to_string(LeafSource s);

struct Certificate;
using CertPtr = std::shared_ptr<const Certificate>;

/// Immutable proof node. Subtrees may be shared between certificates.
struct Certificate {
  Rule rule = Rule::BruteForce;
  Partition alpha, beta;
  std::string name;      // Axiom: allowlisted lemma name
  std::string citation;  // Axiom: where the lemma comes from
  CharInt value;         // BruteForce: g(α,α,β)
  LeafSource source = LeafSource::Computed;
  std::vector<CertPtr> children;

  std::size_t node_count() const;
};

/// Deep structural equality (sharing is irrelevant).
bool operator==(const Certificate& a, const Certificate& b);

struct CertificateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Recorded coefficients for leaves too large to recompute routinely.
class Manifest {
 public:
  std::string note = "recorded values, re-derivable with --extended";

  static Manifest load(const std::string& path);
  void save(const std::string& path) const;

  void add(const Partition& alpha, const Partition& beta, const CharInt& value);
  std::optional<CharInt> find(const Partition& alpha, const Partition& beta) const;
  std::size_t size() const { return entries_.size(); }
  const std::map<std::pair<Partition, Partition>, CharInt>& entries() const { return entries_; }

 private:
  std::map<std::pair<Partition, Partition>, CharInt> entries_;
};

struct RulePolicy {
  int brute_force_size_cap = 36;
  int audit_cap = 11;
  /// name → citation. Ships with Dominance and SigmaTwo.
  std::map<std::string, std::string> axiom_allowlist = default_allowlist();
  /// Re-execute manifest-backed leaves instead of trusting the manifest.
  bool extended = false;
  std::shared_ptr<const Manifest> manifest;

  static std::map<std::string, std::string> default_allowlist();
};

inline constexpr const char* kDominance = "Dominance";
inline constexpr const char* kSigmaTwo = "SigmaTwo";

// Builders. Each validates what it can and throws CertificateError otherwise.

/// Oracle leaf: |α| ≤ cap, coefficient must be positive.
CertPtr leaf_from_oracle(const Partition& alpha, const Partition& beta, const RulePolicy& policy);
/// Oracle leaf, or nullptr when the coefficient is zero.
CertPtr try_leaf_from_oracle(const Partition& alpha, const Partition& beta, const RulePolicy& policy);
/// Leaf backed by the manifest (recomputed instead when policy.extended).
CertPtr manifest_leaf(const Partition& alpha, const Partition& beta, const RulePolicy& policy);
/// Allowlisted lemma; the lemma's syntactic precondition is checked.
CertPtr axiom_leaf(const std::string& name, const Partition& alpha, const Partition& beta,
                   const RulePolicy& policy);
CertPtr semigroup(CertPtr a, CertPtr b);
CertPtr vertical_sum(CertPtr a, CertPtr b);
/// (α′, β) from (α, β).
CertPtr transpose_alpha(CertPtr c);
/// (α, β′) from (α, β); needs α self-conjugate.
CertPtr transpose_beta(CertPtr c);
/// s·(α,β) as a chain of s−1 Semigroup nodes over the base.
CertPtr derive_scalar_multiple(CertPtr base, int s);

/// Precondition of a named axiom instance; empty string when it holds.
std::string axiom_precondition_failure(const std::string& name, const Partition& alpha, const Partition& beta);

struct CheckResult {
  bool ok = true;
  std::string path;     // e.g. root/children[1]/children[0]
  std::string message;
  explicit operator bool() const { return ok; }
};

/// Validates certificates against a policy. Oracle values are memoized by
/// content, so batches of certificates with shared leaves stay cheap.
class CertificateChecker {
 public:
  explicit CertificateChecker(RulePolicy policy);
  CheckResult check(const Certificate& c);

 private:
  CheckResult check_node(const Certificate& c, const std::string& path);
  CharInt oracle(const Partition& alpha, const Partition& beta);

  RulePolicy policy_;
  std::mutex mu_;
  std::map<std::pair<Partition, Partition>, CharInt> oracle_memo_;
};

CheckResult check_certificate(const Certificate& c, const RulePolicy& policy);

// JSON, schema version 1.
std::string emit_certificate(const Certificate& c);
/// Throws CertificateError naming the offending node path.
CertPtr parse_certificate(const std::string& text);
CertPtr load_certificate(const std::string& path);
void save_certificate(const Certificate& c, const std::string& path);

/// Re-verifies every allowlisted axiom on all instances of size ≤ audit_cap.
VerificationReport audit_axioms(const RulePolicy& policy);

}  // namespace saxlkit
