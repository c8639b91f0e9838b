#include "saxlkit/saxl.hpp"

#include "saxlkit/characters.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace saxlkit {

ReductionFailure::ReductionFailure(int m_, Partition mu_, const std::string& why)
    : std::runtime_error("no reduction for (rho_" + std::to_string(m_) + ", " + mu_.to_string() + "): " + why),
      m(m_),
      mu(std::move(mu_)) {}

// ---------------------------------------------------------------------------
// m = 10 exceptions

const std::vector<Partition>& hard_targets_m10() {
  static const std::vector<Partition> v = {
      Partition::parse("11,11,10,3^7,2"), Partition::parse("12,12,11,3^6,2"),
      Partition::parse("12,12,11,3^4,2^4"), Partition::parse("12,12,11,3^2,2^7")};
  return v;
}

const std::vector<Partition>& hard_upsilons_m10() {
  static const std::vector<Partition> v = {
      Partition::parse("4^2,3^8,2"), Partition::parse("5^2,4,3^6,2"),
      Partition::parse("5^2,4,3^4,2^4"), Partition::parse("5^2,4,3^2,2^7")};
  return v;
}

bool in_hard_set_c6(const Partition& mu) {
  if (mu.size() != 55 || durfee(mu) != 3) return false;
  auto p = arm_leg_profile(mu);
  return p.arm(1) == 0 && p.arm(3) == 0 && p.arm(2) > 0 && p.arm_boxes(2) >= 23 && p.arm_boxes(2) < 34;
}

std::optional<CertPtr> hard_case_m10(const Partition& mu, const RulePolicy& policy) {
  if (in_hard_set_c6(mu)) {
    // ρ_10 = (η_6 ∪ ρ_4) + ρ_4 and μ = ν + (5,5) + (5,5).
    Partition nu = *row_sub(mu, Partition{10, 10});
    CertPtr small = leaf_from_oracle(staircase(4), Partition{5, 5}, policy);
    return semigroup(vertical_sum(manifest_leaf(chopped_square(6), nu, policy), small), small);
  }
  const auto& targets = hard_targets_m10();
  for (std::size_t j = 0; j < targets.size(); ++j) {
    if (mu != targets[j]) continue;
    CertPtr head = leaf_from_oracle(staircase(6), Partition{7, 7, 7}, policy);
    return semigroup(head, manifest_leaf(sigma(10, 4), hard_upsilons_m10()[j], policy));
  }
  return std::nullopt;
}

std::vector<std::pair<Partition, Partition>> hard_case_manifest_pairs() {
  std::vector<std::pair<Partition, Partition>> out;
  for_each_partition(55, [&](const Partition& mu) {
    if (in_hard_set_c6(mu)) out.emplace_back(chopped_square(6), *row_sub(mu, Partition{10, 10}));
    return true;
  }, {.durfee = 3});
  for (const auto& u : hard_upsilons_m10()) out.emplace_back(sigma(10, 4), u);
  return out;
}

// ---------------------------------------------------------------------------
// Reducer

namespace {

enum class PlanKind : std::uint8_t { Fail, Leaf, DomAbove, DomBelow, Strip, Hard };

struct Plan {
  PlanKind kind = PlanKind::Fail;
  Side side = Side::Arm;
  int i = 0;
  Partition upsilon;
  StripLeaf leaf = StripLeaf::Dominance;
};

std::string key_of(int m, const Partition& mu) {
  std::string k;
  k.reserve(mu.length() + 1);
  k.push_back(static_cast<char>(m));
  for (int p : mu.parts()) k.push_back(static_cast<char>(static_cast<unsigned char>(p)));
  return k;
}

}  // namespace

struct StaircaseReducer::Impl {
  RulePolicy policy;
  ReduceOptions opt;

  mutable std::shared_mutex plan_mu;
  std::unordered_map<std::string, Plan> plans;

  std::mutex leaf_mu;
  std::map<std::string, CertPtr> leaves;  // brute-force leaves by (m, μ)
  std::map<std::tuple<int, int, Partition>, CertPtr> strips;

  std::optional<Plan> lookup(const std::string& key) const {
    std::shared_lock lock(plan_mu);
    auto it = plans.find(key);
    if (it == plans.end()) return std::nullopt;
    return it->second;
  }

  void store(const std::string& key, const Plan& p) {
    std::unique_lock lock(plan_mu);
    if (plans.size() >= cache_capacity()) plans.clear();
    plans.emplace(key, p);
  }

  // Brute-force leaf (ρ_m, μ), or nullptr if the coefficient vanishes.
  CertPtr leaf(int m, const Partition& mu) {
    const std::string key = key_of(m, mu);
    {
      std::lock_guard lock(leaf_mu);
      if (auto it = leaves.find(key); it != leaves.end()) return it->second;
    }
    CertPtr c = try_leaf_from_oracle(staircase(m), mu, policy);
    std::lock_guard lock(leaf_mu);
    leaves.emplace(key, c);
    return c;
  }

  CertPtr strip(int m, int i, const Partition& upsilon, StripLeaf rule) {
    auto key = std::make_tuple(m, i, upsilon);
    {
      std::lock_guard lock(leaf_mu);
      if (auto it = strips.find(key); it != strips.end()) return it->second;
    }
    CertPtr c = strip_leaf(m, i, upsilon, rule, policy);
    std::lock_guard lock(leaf_mu);
    strips.emplace(std::move(key), c);
    return c;
  }

  Plan plan(int m, const Partition& mu) {
    const std::string key = key_of(m, mu);
    if (auto p = lookup(key)) return *p;
    Plan p = search(m, mu);
    store(key, p);
    return p;
  }

  Plan search(int m, const Partition& mu) {
    const int n = m * (m + 1) / 2;
    if (n <= opt.direct_leaf_max_n) return {leaf(m, mu) ? PlanKind::Leaf : PlanKind::Fail};
    if (opt.top_dominance) {
      const Partition rho = staircase(m);
      if (dominates(mu, rho)) return {PlanKind::DomAbove};
      if (dominates(rho, mu)) return {PlanKind::DomBelow};
    }
    Plan found;
    for_each_decomposition(mu, m, [&](const DecompositionStep& s) {
      if (plan(m - s.i, s.remainder).kind == PlanKind::Fail) return true;
      found = {PlanKind::Strip, s.side, s.i, s.upsilon, s.leaf};
      return false;
    });
    if (found.kind != PlanKind::Fail) return found;
    if (opt.hard_cases && m == 10) {
      if (in_hard_set_c6(mu) || std::find(hard_targets_m10().begin(), hard_targets_m10().end(), mu) !=
                                    hard_targets_m10().end())
        return {PlanKind::Hard, Side::Arm};
      const Partition mu_t = conjugate(mu);
      if (in_hard_set_c6(mu_t) || std::find(hard_targets_m10().begin(), hard_targets_m10().end(), mu_t) !=
                                      hard_targets_m10().end())
        return {PlanKind::Hard, Side::Leg};
    }
    if (n <= policy.brute_force_size_cap && leaf(m, mu)) return {PlanKind::Leaf};
    return {PlanKind::Fail};
  }

  CertPtr build(int m, const Partition& mu) {
    const Plan p = plan(m, mu);
    switch (p.kind) {
      case PlanKind::Fail: return nullptr;
      case PlanKind::Leaf: return leaf(m, mu);
      case PlanKind::DomAbove: return axiom_leaf(kDominance, staircase(m), mu, policy);
      case PlanKind::DomBelow: return transpose_beta(axiom_leaf(kDominance, staircase(m), conjugate(mu), policy));
      case PlanKind::Hard: {
        if (p.side == Side::Arm) return *hard_case_m10(mu, policy);
        return transpose_beta(*hard_case_m10(conjugate(mu), policy));
      }
      case PlanKind::Strip: {
        const Partition xi = p.side == Side::Arm ? mu : conjugate(mu);
        CertPtr rest = build(m - p.i, *row_sub(xi, p.upsilon));
        if (!rest) return nullptr;
        CertPtr c = semigroup(rest, strip(m, p.i, p.upsilon, p.leaf));
        return p.side == Side::Arm ? c : transpose_beta(c);
      }
    }
    return nullptr;
  }
};

StaircaseReducer::StaircaseReducer(RulePolicy policy, ReduceOptions opt) : impl_(std::make_unique<Impl>()) {
  impl_->policy = std::move(policy);
  impl_->opt = opt;
}

StaircaseReducer::~StaircaseReducer() = default;

CertPtr StaircaseReducer::certify(int m, const Partition& mu) {
  if (m < 1) throw std::invalid_argument("certify: m >= 1");
  if (mu.size() != m * (m + 1) / 2) throw SizeMismatch("certify: μ must have size m(m+1)/2");
  if (m > 22) throw std::invalid_argument("certify: m <= 22");
  return impl_->build(m, mu);
}

std::size_t StaircaseReducer::memo_size() const {
  std::shared_lock lock(impl_->plan_mu);
  return impl_->plans.size();
}

CertPtr reduce_durfee_k(int m, const Partition& mu, int k, const RulePolicy& policy,
                        std::optional<ReduceOptions> opt) {
  if (mu.size() != m * (m + 1) / 2) throw SizeMismatch("reduce_durfee_k: μ must have size m(m+1)/2");
  if (durfee(mu) != k) throw std::invalid_argument("reduce_durfee_k: Durfee size differs from k");
  StaircaseReducer r(policy, opt.value_or(k == 1 ? ReduceOptions::hooks() : ReduceOptions{}));
  CertPtr c = r.certify(m, mu);
  if (!c) throw ReductionFailure(m, mu, "every decomposition route is exhausted");
  return c;
}

}  // namespace saxlkit
