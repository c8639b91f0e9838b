#include "saxlkit/kronecker.hpp"

#include "saxlkit/parallel.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace saxlkit {

namespace {

constexpr std::size_t kBlock = 1024;

CharInt finish(const CharInt& total, const ClassData& cd, const char* what) {
  if (!(total % cd.n_factorial).is_zero())
    throw std::logic_error(std::string(what) + ": class sum not divisible by n!");
  CharInt g = total / cd.n_factorial;
  if (g.sign() < 0) throw std::logic_error(std::string(what) + ": negative coefficient");
  return g;
}

// Σ_c f(c) over fixed blocks, combined in block order.
template <class F>
CharInt class_sum(std::size_t count, F&& term) {
  const std::size_t blocks = (count + kBlock - 1) / kBlock;
  std::vector<CharInt> partial(blocks);
  auto run = [&](std::size_t b) {
    CharInt acc;
    for (std::size_t c = b * kBlock; c < std::min(count, (b + 1) * kBlock); ++c) acc += term(c);
    partial[b] = std::move(acc);
  };
  if (blocks > 1) parallel_for(blocks, run);
  else if (blocks == 1) run(0);
  CharInt total;
  for (auto& p : partial) total += p;
  return total;
}

}  // namespace

const ClassData& class_data(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<ClassData>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (!slot) {
    auto cd = std::make_unique<ClassData>();
    cd->n = n;
    cd->classes = partitions_of(n);
    cd->n_factorial = CharInt::factorial(n);
    cd->cardinality.reserve(cd->classes.size());
    for (const auto& c : cd->classes) cd->cardinality.push_back(cd->n_factorial / class_size(CycleType(c)));
    slot = std::move(cd);
  }
  return *slot;
}

CharInt kronecker(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (lambda.size() != mu.size() || mu.size() != nu.size())
    throw SizeMismatch("kronecker: " + lambda.to_string() + ", " + mu.to_string() + ", " + nu.to_string());
  const ClassData& cd = class_data(lambda.size());
  const auto a = cached_character_row(lambda);
  const auto b = cached_character_row(mu);
  const auto c = cached_character_row(nu);
  const CharInt total = class_sum(cd.classes.size(), [&](std::size_t i) {
    if ((*a)[i].is_zero() || (*b)[i].is_zero() || (*c)[i].is_zero()) return CharInt();
    return (*a)[i] * (*b)[i] * (*c)[i] * cd.cardinality[i];
  });
  return finish(total, cd, "kronecker");
}

bool is_positive(const Partition& lambda, const Partition& mu, const Partition& nu) {
  return kronecker(lambda, mu, nu).sign() > 0;
}

std::vector<CharInt> tensor_square(const Partition& lambda, const SupportOptions& opt) {
  const int n = lambda.size();
  if (n > opt.max_n)
    throw std::invalid_argument("tensor_square: n = " + std::to_string(n) + " exceeds --max-n " +
                                std::to_string(opt.max_n));
  const ClassData& cd = class_data(n);
  const auto row = cached_character_row(lambda);
  std::vector<CharInt> sq(cd.classes.size());
  for (std::size_t i = 0; i < sq.size(); ++i) sq[i] = (*row)[i] * (*row)[i] * cd.cardinality[i];

  std::vector<CharInt> out(cd.classes.size());
  parallel_for(cd.classes.size(), [&](std::size_t v) {
    const auto nu = character_row(cd.classes[v]);
    CharInt acc;
    for (std::size_t i = 0; i < sq.size(); ++i)
      if (!sq[i].is_zero() && !nu[i].is_zero()) acc += sq[i] * nu[i];
    out[v] = finish(acc, cd, "tensor_square");
  });
  return out;
}

std::vector<Partition> tensor_square_support(const Partition& lambda, const SupportOptions& opt) {
  const auto g = tensor_square(lambda, opt);
  const ClassData& cd = class_data(lambda.size());
  std::vector<Partition> out;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g[i].sign() > 0) out.push_back(cd.classes[i]);
  return out;
}

}  // namespace saxlkit
