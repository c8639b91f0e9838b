#include <doctest.h>

#include "oracle.hpp"
#include "saxlkit/certificate.hpp"
#include "saxlkit/characters.hpp"
#include "saxlkit/kronecker.hpp"
#include "saxlkit/saxl.hpp"

#include <filesystem>
#include <random>

using namespace saxlkit;

namespace {

// g(α,α,β) from the Young's-rule character table of the oracle.
long long table_g(const std::map<Partition, std::map<Partition, long long>>& t, const Partition& a,
                  const Partition& b) {
  long long num = 0;
  long long nfact = 1;
  for (int i = 2; i <= a.size(); ++i) nfact *= i;
  for (const auto& [cls, _] : t.begin()->second) {
    const long long card = nfact / class_size(CycleType(cls)).small();
    num += card * t.at(a).at(cls) * t.at(a).at(cls) * t.at(b).at(cls);
  }
  return num / nfact;
}

std::shared_ptr<Certificate> mutable_copy(const CertPtr& c) { return std::make_shared<Certificate>(*c); }

}  // namespace

TEST_CASE("derived staircase certificates are sound against an independent table") {
  RulePolicy policy;
  for (int m : {3, 4}) {
    const int n = m * (m + 1) / 2;
    const auto table = oracle::character_table(n);
    StaircaseReducer reducer(policy, ReduceOptions{1, true, false});
    for (const auto& mu : partitions_of(n)) {
      CertPtr c = reducer.certify(m, mu);
      REQUIRE(c);
      CHECK(check_certificate(*c, policy).ok);
      CHECK(table_g(table, staircase(m), mu) > 0);
    }
  }
}

TEST_CASE("every accepted small certificate has a positive coefficient") {
  // Random combinations of positive leaves; whatever the checker accepts must be positive.
  RulePolicy policy;
  std::mt19937_64 rng(7);
  const auto t6 = oracle::character_table(6);
  int accepted = 0;
  for (int trial = 0; trial < 60; ++trial) {
    auto pick = [&](int n) {
      auto all = partitions_of(n);
      return all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
    };
    const int n1 = std::uniform_int_distribution<int>(1, 3)(rng);
    CertPtr a = try_leaf_from_oracle(pick(n1), pick(n1), policy);
    CertPtr b = try_leaf_from_oracle(pick(6 - n1), pick(6 - n1), policy);
    if (!a || !b) continue;
    for (CertPtr c : {semigroup(a, b), vertical_sum(a, b), transpose_alpha(semigroup(a, b))}) {
      if (!check_certificate(*c, policy)) continue;
      ++accepted;
      CHECK(table_g(t6, c->alpha, c->beta) > 0);
    }
  }
  CHECK(accepted > 20);
}

TEST_CASE("checker rejects tampered certificates") {
  RulePolicy policy;
  CertPtr good = StaircaseReducer(policy, ReduceOptions{3, false, false}).certify(4, {5, 1, 1, 1, 1, 1});
  REQUIRE(good);
  REQUIRE(check_certificate(*good, policy).ok);

  SUBCASE("conclusion beta changed") {
    auto c = mutable_copy(good);
    c->beta = {4, 2, 1, 1, 1, 1};
    auto r = check_certificate(*c, policy);
    CHECK_FALSE(r.ok);
    CHECK(r.path == "root");
  }
  SUBCASE("leaf value changed") {
    auto leaf = mutable_copy(leaf_from_oracle({2, 1}, {3}, policy));
    leaf->value = CharInt(2);
    auto r = check_certificate(*leaf, policy);
    CHECK_FALSE(r.ok);
    CHECK(r.message.find("oracle") != std::string::npos);
  }
  SUBCASE("zero coefficient recorded as positive") {
    auto leaf = std::make_shared<Certificate>();
    leaf->alpha = {3, 3};
    leaf->beta = {3, 3};
    leaf->value = CharInt(1);
    REQUIRE(kronecker({3, 3}, {3, 3}, {3, 3}).sign() == 0);
    CHECK_FALSE(check_certificate(*leaf, policy).ok);
    CHECK(try_leaf_from_oracle({3, 3}, {3, 3}, policy) == nullptr);
  }
  SUBCASE("unknown axiom") {
    auto ax = mutable_copy(axiom_leaf(kDominance, {3}, {3}, policy));
    ax->name = "Wishful";
    CHECK_FALSE(check_certificate(*ax, policy).ok);
  }
  SUBCASE("axiom precondition") {
    CHECK_THROWS_AS(axiom_leaf(kDominance, {2, 2}, {3, 1}, policy), CertificateError);
    CHECK_THROWS_AS(axiom_leaf(kDominance, {3, 1}, {2, 2}, policy), CertificateError);
    CHECK_THROWS_AS(axiom_leaf(kSigmaTwo, sigma(3, 2), {1, 1, 1, 1, 1}, policy), CertificateError);
    CHECK(axiom_leaf(kSigmaTwo, sigma(3, 2), {2, 1, 1, 1}, policy));
  }
  SUBCASE("transposing beta needs a self-conjugate alpha") {
    CertPtr leaf = leaf_from_oracle({3, 1}, {2, 1, 1}, policy);
    CHECK_THROWS_AS(transpose_beta(leaf), CertificateError);
    auto forged = std::make_shared<Certificate>();
    forged->rule = Rule::Transpose;
    forged->alpha = {3, 1};
    forged->beta = {3, 1};
    forged->children = {leaf};
    auto r = check_certificate(*forged, policy);
    CHECK_FALSE(r.ok);
    CHECK(r.message.find("self-conjugate") != std::string::npos);
  }
  SUBCASE("semigroup arithmetic") {
    auto c = mutable_copy(semigroup(leaf_from_oracle({2, 1}, {3}, policy), leaf_from_oracle({1}, {1}, policy)));
    c->alpha = {2, 1, 1};
    CHECK_FALSE(check_certificate(*c, policy).ok);
  }
  SUBCASE("error path names the offending child") {
    auto bad_leaf = mutable_copy(leaf_from_oracle({1}, {1}, policy));
    bad_leaf->value = CharInt(5);
    CertPtr c = semigroup(leaf_from_oracle({2, 1}, {3}, policy), bad_leaf);
    auto r = check_certificate(*c, policy);
    CHECK_FALSE(r.ok);
    CHECK(r.path == "root/children[1]");
  }
}

TEST_CASE("leaf size cap and manifest gating") {
  RulePolicy policy;
  policy.brute_force_size_cap = 6;
  CHECK_THROWS_AS(leaf_from_oracle(staircase(3), {4, 3}, {.brute_force_size_cap = 6}), CertificateError);
  CertPtr big = leaf_from_oracle(staircase(4), {5, 5}, RulePolicy{});
  CHECK_FALSE(check_certificate(*big, policy).ok);

  auto manifest = std::make_shared<Manifest>();
  manifest->add(staircase(4), {5, 5}, kronecker(staircase(4), staircase(4), {5, 5}));
  policy.manifest = manifest;
  CertPtr ml = manifest_leaf(staircase(4), {5, 5}, policy);
  CHECK(ml->source == LeafSource::Manifest);
  CHECK(check_certificate(*ml, policy).ok);
  CHECK_THROWS_AS(manifest_leaf(staircase(4), {4, 4, 2}, policy), CertificateError);

  auto forged = mutable_copy(ml);
  forged->value = ml->value;
  forged->value += CharInt(1);
  CHECK_FALSE(check_certificate(*forged, policy).ok);

  policy.extended = true;  // recompute instead of trusting the manifest
  CHECK(check_certificate(*ml, policy).ok);
  CHECK_FALSE(check_certificate(*forged, policy).ok);
}

TEST_CASE("JSON round trip and malformed input") {
  RulePolicy policy;
  CertPtr c = StaircaseReducer(policy).certify(7, Partition::parse("13,3,3,2^3,1^3"));
  REQUIRE(c);
  const std::string text = emit_certificate(*c);
  CHECK(text.rfind("{\n \"v\": 1,\n \"rule\"", 0) == 0);
  CertPtr back = parse_certificate(text);
  CHECK(*back == *c);
  CHECK(emit_certificate(*back) == text);

  CHECK_THROWS_AS(parse_certificate("{"), CertificateError);
  CHECK_THROWS_AS(parse_certificate(R"({"rule":"BruteForce"})"), CertificateError);
  CHECK_THROWS_AS(parse_certificate(R"({"v":2,"rule":"BruteForce"})"), CertificateError);
  try {
    parse_certificate(R"({"v":1,"rule":"Semigroup","alpha":"[2]","beta":"[2]","children":[{"rule":"Nope"}]})");
    FAIL("expected an error");
  } catch (const CertificateError& e) {
    CHECK(std::string(e.what()).find("root/children[0]") != std::string::npos);
  }

  const auto path = std::filesystem::temp_directory_path() / "saxlkit_rt.kcert.json";
  save_certificate(*c, path.string());
  CHECK(*load_certificate(path.string()) == *c);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(load_certificate("/nonexistent/x.kcert.json"), std::ios_base::failure);
}

TEST_CASE("manifest persistence") {
  Manifest m;
  m.add({3, 2, 1}, {4, 2}, CharInt::parse("123456789012345678901234567890"));
  m.add({2, 1}, {3}, CharInt(1));
  const auto path = std::filesystem::temp_directory_path() / "saxlkit_manifest.json";
  m.save(path.string());
  Manifest back = Manifest::load(path.string());
  std::filesystem::remove(path);
  CHECK(back.entries() == m.entries());
  CHECK(back.note == m.note);
}

TEST_CASE("axiom audit passes at small sizes") {
  RulePolicy policy;
  policy.audit_cap = 8;
  auto report = audit_axioms(policy);
  CHECK(report.ok());
  CHECK(report.total > 50);
}
