#pragma once

#include "saxlkit/certificate.hpp"
#include "saxlkit/partition.hpp"
#include "saxlkit/report.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace saxlkit {

// ---------------------------------------------------------------------------
// Select vectors and decomposition steps

/// x[i-1] arm columns of length i are taken; l = Σ i·x_i.
struct SelectVector {
  std::vector<int> x;
  int l = 0;
};

/// υ(x) = (Σ_{i≥1} x_i, Σ_{i≥2} x_i, ..., x_k).
Partition induced_partition(const std::vector<int>& x);

/// First x with 0 ≤ x_i ≤ a_i, Σ i·x_i = l and pred(υ(x)), enumerating by
/// decreasing x_k, then decreasing x_{k-1}, ...; x_1 is forced.
std::optional<SelectVector> find_select_vector(const ArmLegProfile& profile, int l,
                                               const std::function<bool(const Partition&)>& pred);

enum class Side { Arm, Leg };
const char* to_string(Side s);

/// Rule used to justify (σ_m^i, υ) ∈ K.
enum class StripLeaf { SigmaTwo, TripleColumn, Dominance };
const char* to_string(StripLeaf s);

struct DecompositionStep {
  Side side = Side::Arm;
  int i = 0;
  Partition upsilon;
  /// Set when υ only uses columns outside the Durfee square.
  std::optional<SelectVector> s_vector;
  StripLeaf leaf = StripLeaf::Dominance;
  /// (μ or μ′) − υ, a partition of (m−i)(m−i+1)/2.
  Partition remainder;
};

/// |σ_m^i| = im − i(i−1)/2.
int strip_size(int m, int i);

/// Which leaf rule, if any, certifies (σ_m^i, υ).
std::optional<StripLeaf> strip_leaf_rule(int m, int i, const Partition& upsilon);

/// Every candidate step for (ρ_m, μ) with an applicable leaf rule, in search
/// order: arm side then leg side; i ascending; per i, select-vector
/// candidates first, then selections involving Durfee columns.
/// The visitor returns false to stop.
void for_each_decomposition(const Partition& mu, int m,
                            const std::function<bool(const DecompositionStep&)>& visit);

/// First candidate step (no recursion into the remainder).
std::optional<DecompositionStep> decompose(const Partition& mu, int m, const RulePolicy& policy);

/// Certificate for (σ_m^i, υ) by the given leaf rule.
CertPtr strip_leaf(int m, int i, const Partition& upsilon, StripLeaf rule, const RulePolicy& policy);

/// (σ_m^3, ((m−1)^3)) from ((3^3),(3^3)) and ((t+2,t+1,t),((t+1)^3)), m−2 = 3s+t.
CertPtr triple_column_certificate(int m, const RulePolicy& policy);

// ---------------------------------------------------------------------------
// Staircase reduction

struct ReduceOptions {
  /// Targets with |ρ_m| ≤ this are closed by a brute-force leaf immediately.
  int direct_leaf_max_n = 21;
  /// Close (ρ_m, μ) directly when μ is comparable with ρ_m.
  bool top_dominance = true;
  bool hard_cases = true;

  /// Shape of the hook induction: only strip steps, tiny base.
  static ReduceOptions hooks() { return {3, false, false}; }
};

struct ReductionFailure : std::runtime_error {
  ReductionFailure(int m, Partition mu, const std::string& why);
  int m;
  Partition mu;
};

/// Memoized search for certificates of (ρ_m, μ). Thread-safe; plans for
/// remainders are shared across targets.
class StaircaseReducer {
 public:
  explicit StaircaseReducer(RulePolicy policy, ReduceOptions opt = {});
  ~StaircaseReducer();
  StaircaseReducer(const StaircaseReducer&) = delete;
  StaircaseReducer& operator=(const StaircaseReducer&) = delete;

  /// nullptr when every route is exhausted.
  CertPtr certify(int m, const Partition& mu);
  std::size_t memo_size() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// pre: d(μ) = k, μ ⊢ m(m+1)/2. Throws ReductionFailure naming (m, μ).
CertPtr reduce_durfee_k(int m, const Partition& mu, int k, const RulePolicy& policy,
                        std::optional<ReduceOptions> opt = std::nullopt);

/// The four exceptional targets of S(10,3) and their 34-box parts.
const std::vector<Partition>& hard_targets_m10();
const std::vector<Partition>& hard_upsilons_m10();
/// μ ∈ S(10,3) with a_1 = a_3 = 0 < a_2 and 23 ≤ A_2 < 34.
bool in_hard_set_c6(const Partition& mu);
/// Certificate for the exceptional m = 10 targets; nullopt for any other μ.
std::optional<CertPtr> hard_case_m10(const Partition& mu, const RulePolicy& policy);
/// Every (α, β) leaf the exceptional m = 10 constructions read from the manifest.
std::vector<std::pair<Partition, Partition>> hard_case_manifest_pairs();

// ---------------------------------------------------------------------------
// Chopped square and caret

/// (η_k, ν) for d(ν) ≤ 2; nullptr if no implemented reduction closes it.
CertPtr chopped_certificate(int k, const Partition& nu, const RulePolicy& policy);
/// (γ_k, ν) for d(ν) ≤ 2; nullptr if no implemented reduction closes it.
CertPtr caret_certificate(int k, const Partition& nu, const RulePolicy& policy);
/// ((j^4), (2j,2j)) for odd j ≥ 3.
CertPtr four_row_certificate(int j, const RulePolicy& policy);

// ---------------------------------------------------------------------------
// Campaigns

enum class Family { StaircaseHooks, TripleHooks, ChoppedHooks, CaretHooks, ChoppedDouble, CaretDouble };
const char* to_string(Family f);
std::optional<Family> parse_family(const std::string& s);

struct FamilyOptions {
  /// Only used by the staircase families; hooks default to ReduceOptions::hooks().
  std::optional<ReduceOptions> reduce;
  /// When non-empty, certificates go to <out_dir>/certs/<family>/<m>/ and a
  /// CSV report to <out_dir>/report.csv.
  std::string out_dir;
  bool timings = true;
  bool keep_records = false;
  std::function<void(const TargetRecord&)> sink;
  /// Every N-th certificate is re-read from JSON and re-checked (0 = never).
  std::size_t roundtrip_every = 0;
};

/// Targets of one family and parameter value, in enumeration order.
std::vector<Partition> family_targets(Family f, int param);
/// The self-conjugate shape the family is about (ρ_m, η_k or γ_k).
Partition family_shape(Family f, int param);

VerificationReport verify_family(Family f, int from, int to, const RulePolicy& policy,
                                 const FamilyOptions& opt = {});

/// Self-conjugate λ ⊢ n in the staircase envelope for n = m(m+1)/2 + k.
std::vector<Partition> staircase_like(int n);
/// Full tensor-square support for every staircase-like λ, n_min ≤ n ≤ n_max,
/// n ∉ {2, 4, 9}.
VerificationReport verify_generalized_saxl(int n_min, int n_max);

// ---------------------------------------------------------------------------
// Statistics

bool is_graphical(const Partition& lambda);
/// λ ⊴ λ′.
bool is_conjugate_upward(const Partition& lambda);

struct DominanceStats {
  Partition lambda;
  std::uint64_t partitions = 0;  // |P(n)|
  std::uint64_t below = 0;       // |Λ(λ)|, λ included
  std::uint64_t above = 0;       // |V(λ)|, λ included
  std::uint64_t comparable = 0;  // |C(λ)| = |Λ ∪ V|
  std::uint64_t conjugate_upward = 0;  // |U(n)|
  std::uint64_t graphical = 0;         // |G(n)|
  double comparable_ratio() const { return partitions ? double(comparable) / double(partitions) : 0; }
};
DominanceStats dominance_stats(const Partition& lambda);

/// Uniform sample from D(n, k) (Durfee size exactly k).
Partition sample_durfee(int n, int k, std::mt19937_64& rng);
/// Smallest i with a_i ≥ 2m−2i+1 or b_i ≥ 2m−2i+1, if any.
std::optional<int> pigeonhole_strip(const Partition& mu, int m);

}  // namespace saxlkit
