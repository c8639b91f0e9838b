#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace saxlkit {

/// Thrown when two partitions that must have equal size do not.
struct SizeMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Weakly decreasing sequence of positive integers; immutable value type.
/// Trailing zeros are dropped on construction, so equality is structural.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  /// Parses `[3^3,2^2,1]`; brackets optional, `[]` is the empty partition.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return size_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }
  /// i-th part (0-based), 0 past the end.
  int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }
  int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

  /// Multiplicity of the part value i.
  int count(int i) const noexcept;
  bool distinct_parts() const noexcept;
  bool self_conjugate() const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept;
};

Partition conjugate(const Partition& lambda);

/// λ ⊵ μ. Throws SizeMismatch when |λ| ≠ |μ|.
bool dominates(const Partition& lambda, const Partition& mu);

int durfee(const Partition& lambda);

struct DurfeeHooks {
  int k = 0;
  Partition hooks;  // principal hook lengths, strictly decreasing
};
DurfeeHooks durfee_and_principal_hooks(const Partition& lambda);

/// Column/row multiplicities outside the Durfee square.
/// a[i-1] = number of arm columns of length i, b[i-1] = number of leg rows of length i.
struct ArmLegProfile {
  int k = 0;
  std::vector<int> a, b;
  int A = 0, B = 0;

  int arm(int i) const { return a.at(i - 1); }
  int leg(int i) const { return b.at(i - 1); }
  /// A_i = i·a_i, the number of boxes in arm columns of length i.
  int arm_boxes(int i) const { return i * arm(i); }
  int leg_boxes(int i) const { return i * leg(i); }
};
ArmLegProfile arm_leg_profile(const Partition& mu);

/// Multiset union of parts.
Partition vertical_sum(const Partition& lambda, const Partition& mu);
Partition row_add(const Partition& lambda, const Partition& mu);
/// Rowwise difference; nullopt when it is not a partition.
std::optional<Partition> row_sub(const Partition& lambda, const Partition& mu);
/// Rowwise scalar multiple.
Partition scale(const Partition& lambda, int s);

/// True when λ ⊆ μ as diagrams.
bool contained_in(const Partition& lambda, const Partition& mu);

// Shapes.
Partition staircase(int m);                // ρ_m
Partition tau(int m, int i);               // (m, m-1, ..., m-i+1)
Partition sigma(int m, int i);             // τ_m^i transposed
Partition chopped_square(int k);           // η_k = (k^{k-1}, k-1)
Partition caret(int k);                    // γ_k, self-conjugate, size 3k²
Partition rectangle(int rows, int cols);   // (cols^rows)
Partition hook(int arm_len, int leg_len);  // (arm_len+1, 1^leg_len)

struct PartitionFilter {
  std::optional<int> durfee;
  std::optional<int> max_length;
  std::optional<int> max_part;
};

/// Visits every partition of n passing the filter, in reverse-lexicographic order.
/// The visitor may return false to stop early.
void for_each_partition(int n, const std::function<bool(const Partition&)>& visit,
                        const PartitionFilter& filter = {});
std::vector<Partition> partitions_of(int n, const PartitionFilter& filter = {});

/// p(n) via the pentagonal recurrence (independent of the enumerator).
std::uint64_t partition_count(int n);

}  // namespace saxlkit
