#pragma once

#include <cstdint>
#include <vector>

#include "orchard/relation.hpp"
#include "orchard/sign_function.hpp"

namespace orchard {

/// Orientation of the complete graph on players 1..n as a skew {-1, 0, +1}
/// matrix: entry(i, j) = +1 means i beats j. The diagonal is 0.
class Tournament {
 public:
  /// Row-major n x n entries. Throws input_error unless the matrix is skew
  /// with zero diagonal and +-1 off the diagonal.
  Tournament(int n, std::vector<int> entries);

  /// entry(i, j) = +1 for all i < j.
  static Tournament transitive(int n);
  /// Uniform random signs above the diagonal, deterministic in `seed`.
  static Tournament random(int n, std::uint64_t seed);

  int n() const noexcept { return n_; }
  /// 1-based access.
  int entry(int i, int j) const noexcept { return entries_[(i - 1) * n_ + (j - 1)]; }
  const std::vector<int>& entries() const noexcept { return entries_; }

  friend bool operator==(const Tournament&, const Tournament&) = default;

 private:
  int n_;
  std::vector<int> entries_;
};

/// Arity-2 antisymmetric function with stored sign entry(i, j) at i < j.
SignFunction tournament_to_signfn(const Tournament& t);
/// Inverse of tournament_to_signfn. Requires arity 2 and antisymmetric kind.
Tournament signfn_to_tournament(const SignFunction& f);

/// (n - 2 - S) / 2 with S = sum over k != i, j of entry(i,k) * entry(j,k).
std::uint64_t closed_form_separation(const Tournament& t, int i, int j);

/// S = sum over k != i, j of entry(i,k) * entry(j,k), the quantity whose
/// residue mod 4 decides relatedness.
int common_score_sum(const Tournament& t, int i, int j);

/// i ~ j iff common_score_sum(t, i, j) == n (mod 4), for i != j.
bool mod4_related(const Tournament& t, int i, int j);

/// Wins per player.
std::vector<int> score_vector(const Tournament& t);

/// Classes by score parity. Throws unsupported_configuration for n < 3.
OrchardPartition score_parity_partition(const Tournament& t);

}  // namespace orchard
