#pragma once

#include "saxlkit/charint.hpp"
#include "saxlkit/partition.hpp"

#include <cstddef>
#include <memory>
#include <vector>

namespace saxlkit {

/// A partition used as a conjugacy-class label of S_n.
class CycleType {
 public:
  CycleType() = default;
  CycleType(std::initializer_list<int> parts) : p_(parts) {}
  explicit CycleType(Partition p) : p_(std::move(p)) {}
  static CycleType parse(std::string_view text) { return CycleType(Partition::parse(text)); }

  const Partition& partition() const noexcept { return p_; }
  int size() const noexcept { return p_.size(); }
  /// m[i] = number of cycles of length i, for i = 0..n (m[0] = 0).
  std::vector<int> multiplicities() const;
  /// Sign of any permutation in the class, (-1)^(n - ℓ).
  int sign() const noexcept { return (p_.size() - p_.length()) % 2 ? -1 : 1; }

  friend bool operator==(const CycleType&, const CycleType&) = default;

 private:
  Partition p_;
};

/// Centralizer order z_μ = Π i^{m_i} m_i!.
CharInt class_size(const CycleType& mu);
/// Number of permutations in the class, n!/z_μ.
CharInt class_cardinality(const CycleType& mu);
/// f^λ by the hook-length formula.
CharInt dimension(const Partition& lambda);

/// χ^λ(μ) by Murnaghan–Nakayama, memoized on (shape, remaining cycles).
/// Throws SizeMismatch when |λ| ≠ |μ|.
CharInt character_value(const Partition& lambda, const CycleType& mu);

/// All of χ^λ, indexed like partitions_of(|λ|) (reverse-lexicographic classes).
std::vector<CharInt> character_row(const Partition& lambda);
/// Row through a bounded process-wide cache.
std::shared_ptr<const std::vector<CharInt>> cached_character_row(const Partition& lambda);
/// χ^λ(μ) for every λ ⊢ n, indexed like partitions_of(n). Requires n ≤ 63.
std::vector<CharInt> character_column(const CycleType& mu);

struct ColumnStats {
  CycleType cls;
  std::size_t zero_count = 0;
  std::size_t nonzero_count = 0;
  std::size_t total = 0;
};
/// N(μ) = #{λ ⊢ n : χ^λ(μ) = 0}.
ColumnStats vanishing_count(const CycleType& mu);

/// Entry cap shared by the character memo and the row cache (row cache counts
/// stored values). On overflow a cache is discarded wholesale. Default 2^22.
void set_cache_capacity(std::size_t entries);
std::size_t cache_capacity();
std::size_t character_memo_size();
void clear_caches();

}  // namespace saxlkit
