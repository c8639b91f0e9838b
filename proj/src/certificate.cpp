#include "saxlkit/certificate.hpp"

#include "saxlkit/kronecker.hpp"
#include "saxlkit/parallel.hpp"

#include <chrono>

namespace saxlkit {

const char* to_string(Rule r) {
  switch (r) {
    case Rule::BruteForce: return "BruteForce";
    case Rule::Axiom: return "Axiom";
    case Rule::Semigroup: return "Semigroup";
    case Rule::VerticalSum: return "VerticalSum";
    case Rule::Transpose: return "Transpose";
  }
  return "?";
}

const char* to_string(LeafSource s) { return s == LeafSource::Computed ? "computed" : "manifest"; }

std::size_t Certificate::node_count() const {
  std::size_t n = 1;
  for (const auto& c : children) n += c->node_count();
  return n;
}

bool operator==(const Certificate& a, const Certificate& b) {
  if (a.rule != b.rule || a.alpha != b.alpha || a.beta != b.beta || a.name != b.name ||
      a.citation != b.citation || !(a.value == b.value) || a.source != b.source ||
      a.children.size() != b.children.size())
    return false;
  for (std::size_t i = 0; i < a.children.size(); ++i)
    if (a.children[i] != b.children[i] && !(*a.children[i] == *b.children[i])) return false;
  return true;
}

void Manifest::add(const Partition& alpha, const Partition& beta, const CharInt& value) {
  entries_[{alpha, beta}] = value;
}

std::optional<CharInt> Manifest::find(const Partition& alpha, const Partition& beta) const {
  auto it = entries_.find({alpha, beta});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

std::map<std::string, std::string> RulePolicy::default_allowlist() {
  return {{kDominance, "distinct row lengths and alpha dominated by beta; Kostka positivity argument"},
          {kSigmaTwo, "alpha = sigma_m^2, l(beta) <= 4; two-column tensor square positivity"}};
}

namespace {

std::string pair_text(const Partition& a, const Partition& b) {
  return "(" + a.to_string() + ", " + b.to_string() + ")";
}

void require_same_size(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) throw CertificateError("size mismatch in " + pair_text(a, b));
}

std::shared_ptr<Certificate> node(Rule r, Partition a, Partition b) {
  auto c = std::make_shared<Certificate>();
  c->rule = r;
  c->alpha = std::move(a);
  c->beta = std::move(b);
  return c;
}

}  // namespace

CertPtr try_leaf_from_oracle(const Partition& alpha, const Partition& beta, const RulePolicy& policy) {
  require_same_size(alpha, beta);
  if (alpha.size() > policy.brute_force_size_cap)
    throw CertificateError("brute-force leaf " + pair_text(alpha, beta) + " exceeds size cap " +
                           std::to_string(policy.brute_force_size_cap));
  CharInt g = kronecker(alpha, alpha, beta);
  if (g.is_zero()) return nullptr;
  auto c = node(Rule::BruteForce, alpha, beta);
  c->value = std::move(g);
  return c;
}

CertPtr leaf_from_oracle(const Partition& alpha, const Partition& beta, const RulePolicy& policy) {
  auto c = try_leaf_from_oracle(alpha, beta, policy);
  if (!c) throw CertificateError("g(α,α,β) = 0 for " + pair_text(alpha, beta));
  return c;
}

CertPtr manifest_leaf(const Partition& alpha, const Partition& beta, const RulePolicy& policy) {
  require_same_size(alpha, beta);
  auto c = node(Rule::BruteForce, alpha, beta);
  c->source = LeafSource::Manifest;
  if (policy.extended) {
    c->value = kronecker(alpha, alpha, beta);
  } else {
    auto v = policy.manifest ? policy.manifest->find(alpha, beta) : std::nullopt;
    if (!v) throw CertificateError("no manifest entry for " + pair_text(alpha, beta));
    c->value = *v;
  }
  if (c->value.sign() <= 0) throw CertificateError("manifest leaf not positive: " + pair_text(alpha, beta));
  return c;
}

std::string axiom_precondition_failure(const std::string& name, const Partition& alpha, const Partition& beta) {
  if (alpha.size() != beta.size()) return "size mismatch";
  if (name == kDominance) {
    if (!alpha.distinct_parts()) return "alpha must have distinct parts";
    if (!dominates(beta, alpha)) return "alpha must be dominated by beta";
    return {};
  }
  if (name == kSigmaTwo) {
    const int n = alpha.size();
    if (n % 2 == 0 || n < 3) return "alpha must be sigma_m^2";
    if (alpha != sigma((n + 1) / 2, 2)) return "alpha must be sigma_m^2";
    if (beta.length() > 4) return "beta must have at most 4 parts";
    return {};
  }
  return {};  // no syntactic test known for other names
}

CertPtr axiom_leaf(const std::string& name, const Partition& alpha, const Partition& beta,
                   const RulePolicy& policy) {
  auto it = policy.axiom_allowlist.find(name);
  if (it == policy.axiom_allowlist.end()) throw CertificateError("axiom not allowlisted: " + name);
  if (auto why = axiom_precondition_failure(name, alpha, beta); !why.empty())
    throw CertificateError(name + " " + pair_text(alpha, beta) + ": " + why);
  auto c = node(Rule::Axiom, alpha, beta);
  c->name = name;
  c->citation = it->second;
  return c;
}

CertPtr semigroup(CertPtr a, CertPtr b) {
  auto c = node(Rule::Semigroup, row_add(a->alpha, b->alpha), row_add(a->beta, b->beta));
  c->children = {std::move(a), std::move(b)};
  return c;
}

CertPtr vertical_sum(CertPtr a, CertPtr b) {
  auto c = node(Rule::VerticalSum, saxlkit::vertical_sum(a->alpha, b->alpha), row_add(a->beta, b->beta));
  c->children = {std::move(a), std::move(b)};
  return c;
}

CertPtr transpose_alpha(CertPtr child) {
  auto c = node(Rule::Transpose, conjugate(child->alpha), child->beta);
  c->children = {std::move(child)};
  return c;
}

CertPtr transpose_beta(CertPtr child) {
  if (!child->alpha.self_conjugate())
    throw CertificateError("transpose of beta needs self-conjugate alpha, got " + child->alpha.to_string());
  auto c = node(Rule::Transpose, child->alpha, conjugate(child->beta));
  c->children = {std::move(child)};
  return c;
}

CertPtr derive_scalar_multiple(CertPtr base, int s) {
  if (s <= 0) throw CertificateError("scalar multiple needs s >= 1");
  CertPtr acc = base;
  for (int i = 1; i < s; ++i) acc = semigroup(acc, base);
  return acc;
}

CertificateChecker::CertificateChecker(RulePolicy policy) : policy_(std::move(policy)) {}

CharInt CertificateChecker::oracle(const Partition& alpha, const Partition& beta) {
  {
    std::lock_guard lock(mu_);
    if (auto it = oracle_memo_.find({alpha, beta}); it != oracle_memo_.end()) return it->second;
  }
  CharInt g = kronecker(alpha, alpha, beta);
  std::lock_guard lock(mu_);
  oracle_memo_.emplace(std::make_pair(alpha, beta), g);
  return g;
}

CheckResult CertificateChecker::check(const Certificate& c) { return check_node(c, "root"); }

CheckResult CertificateChecker::check_node(const Certificate& c, const std::string& path) {
  auto fail = [&](const std::string& msg) {
    return CheckResult{false, path, msg + " at " + pair_text(c.alpha, c.beta)};
  };
  if (c.alpha.size() != c.beta.size()) return fail("size mismatch");

  auto arity = [&](std::size_t k) -> std::optional<CheckResult> {
    if (c.children.size() != k) return fail(std::string(to_string(c.rule)) + " expects " + std::to_string(k) + " children");
    for (std::size_t i = 0; i < k; ++i)
      if (!c.children[i]) return fail("null child");
    return std::nullopt;
  };

  switch (c.rule) {
    case Rule::BruteForce: {
      if (auto bad = arity(0)) return *bad;
      if (c.value.sign() <= 0) return fail("recorded coefficient is not positive");
      if (c.source == LeafSource::Manifest && !policy_.extended) {
        auto v = policy_.manifest ? policy_.manifest->find(c.alpha, c.beta) : std::nullopt;
        if (!v) return fail("leaf not in manifest");
        if (!(*v == c.value)) return fail("value disagrees with manifest (" + v->to_string() + ")");
        return {};
      }
      if (c.alpha.size() > policy_.brute_force_size_cap && !policy_.extended)
        return fail("brute-force leaf exceeds size cap");
      const CharInt g = oracle(c.alpha, c.beta);
      if (!(g == c.value)) return fail("recorded " + c.value.to_string() + " but oracle gives " + g.to_string());
      return {};
    }
    case Rule::Axiom: {
      if (auto bad = arity(0)) return *bad;
      if (!policy_.axiom_allowlist.count(c.name)) return fail("axiom '" + c.name + "' not allowlisted");
      if (auto why = axiom_precondition_failure(c.name, c.alpha, c.beta); !why.empty())
        return fail(c.name + ": " + why);
      if (c.alpha.size() <= policy_.audit_cap && oracle(c.alpha, c.beta).sign() <= 0)
        return fail(c.name + " instance fails its audit");
      return {};
    }
    case Rule::Semigroup:
    case Rule::VerticalSum: {
      if (auto bad = arity(2)) return *bad;
      const Certificate& a = *c.children[0];
      const Certificate& b = *c.children[1];
      const Partition alpha =
          c.rule == Rule::Semigroup ? row_add(a.alpha, b.alpha) : saxlkit::vertical_sum(a.alpha, b.alpha);
      if (alpha != c.alpha) return fail("alpha is not the combination of the children");
      if (row_add(a.beta, b.beta) != c.beta) return fail("beta is not the rowwise sum of the children");
      break;
    }
    case Rule::Transpose: {
      if (auto bad = arity(1)) return *bad;
      const Certificate& k = *c.children[0];
      const Partition alpha_t = conjugate(c.alpha);
      if (k.alpha != c.alpha && k.alpha != alpha_t) return fail("child alpha is neither alpha nor its conjugate");
      if (k.beta != c.beta) {
        if (alpha_t != c.alpha) return fail("beta transposition needs self-conjugate alpha");
        if (k.beta != conjugate(c.beta)) return fail("child beta is neither beta nor its conjugate");
      }
      break;
    }
    default:
      return fail("unknown rule");
  }
  for (std::size_t i = 0; i < c.children.size(); ++i) {
    auto r = check_node(*c.children[i], path + "/children[" + std::to_string(i) + "]");
    if (!r.ok) return r;
  }
  return {};
}

CheckResult check_certificate(const Certificate& c, const RulePolicy& policy) {
  CertificateChecker checker(policy);
  return checker.check(c);
}

VerificationReport audit_axioms(const RulePolicy& policy) {
  VerificationReport report;
  report.family = "audit";
  report.range = "n<=" + std::to_string(policy.audit_cap);
  report.keep_records = true;
  const auto start = std::chrono::steady_clock::now();

  struct Instance {
    std::string name;
    Partition alpha, beta;
  };
  std::vector<Instance> todo;
  for (const auto& [name, citation] : policy.axiom_allowlist) {
    if (name == kSigmaTwo) {
      for (int m = 2; 2 * m - 1 <= policy.audit_cap; ++m)
        for (auto& beta : partitions_of(2 * m - 1, {.max_length = 4}))
          todo.push_back({name, sigma(m, 2), beta});
    } else if (name == kDominance) {
      for (int n = 1; n <= policy.audit_cap; ++n) {
        auto all = partitions_of(n);
        for (auto& alpha : all) {
          if (!alpha.distinct_parts()) continue;
          for (auto& beta : all)
            if (dominates(beta, alpha)) todo.push_back({name, alpha, beta});
        }
      }
    }
  }
  std::vector<TargetRecord> out(todo.size());
  parallel_for(todo.size(), [&](std::size_t i) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto& in = todo[i];
    const CharInt g = kronecker(in.alpha, in.alpha, in.beta);
    TargetRecord& r = out[i];
    r.target = in.name + " " + pair_text(in.alpha, in.beta);
    r.status = g.sign() > 0 ? TargetStatus::BruteForced : TargetStatus::Failed;
    if (g.sign() <= 0) r.detail = "coefficient " + g.to_string();
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  });
  for (auto& r : out) report.add(std::move(r));
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace saxlkit
