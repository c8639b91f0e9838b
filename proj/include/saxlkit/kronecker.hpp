#pragma once

#include "saxlkit/characters.hpp"

#include <vector>

namespace saxlkit {

struct KroneckerQuery {
  Partition lambda, mu, nu;
};

/// Class labels of S_n (reverse-lexicographic) with their cardinalities n!/z_c.
struct ClassData {
  int n = 0;
  std::vector<Partition> classes;
  std::vector<CharInt> cardinality;
  CharInt n_factorial;
};
const ClassData& class_data(int n);

/// g(λ,μ,ν) = (1/n!) Σ_c χ^λ(c) χ^μ(c) χ^ν(c) · n!/z_c, exact.
/// Throws SizeMismatch on unequal sizes and std::logic_error if the final
/// division is inexact or negative (which would mean a character bug).
CharInt kronecker(const Partition& lambda, const Partition& mu, const Partition& nu);
inline CharInt kronecker(const KroneckerQuery& q) { return kronecker(q.lambda, q.mu, q.nu); }

bool is_positive(const Partition& lambda, const Partition& mu, const Partition& nu);
inline bool is_positive(const KroneckerQuery& q) { return is_positive(q.lambda, q.mu, q.nu); }

/// Refuses |λ| > max_n unless the caller raises the guard.
struct SupportOptions {
  int max_n = 30;
};

/// All g(λ,λ,ν) for ν ⊢ |λ|, in enumeration order.
std::vector<CharInt> tensor_square(const Partition& lambda, const SupportOptions& opt = {});
/// {ν ⊢ n : g(λ,λ,ν) > 0}, in enumeration order.
std::vector<Partition> tensor_square_support(const Partition& lambda, const SupportOptions& opt = {});

}  // namespace saxlkit
