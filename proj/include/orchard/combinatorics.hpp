#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace orchard {

/// A k-subset of the ground set [1..n], elements strictly increasing.
///
/// Construction validates; a Subset that exists is always well formed.
class Subset {
 public:
  Subset(int n, std::vector<int> elements);

  int n() const noexcept { return n_; }
  int k() const noexcept { return static_cast<int>(elements_.size()); }
  const std::vector<int>& elements() const noexcept { return elements_; }
  bool contains(int x) const noexcept;

  std::string to_string() const;

  friend bool operator==(const Subset&, const Subset&) = default;

 private:
  int n_;
  std::vector<int> elements_;
};

/// Exact C(n, k); 0 when k < 0 or k > n. Throws input_error on n < 0 or
/// if the value does not fit in 64 bits.
std::uint64_t binomial(int n, int k);

/// C(n, k) mod 2 by bit domination: odd iff every set bit of k is set in n.
/// Returns 0 when k > n. Throws input_error on negative arguments.
int binomial_parity(std::int64_t n, std::int64_t k);

/// Colexicographic rank: sum over i = 1..k of C(s_i - 1, i).
std::uint64_t colex_rank(const Subset& subset);

/// Unchecked rank of an increasing sequence; for hot loops.
std::uint64_t colex_rank_sorted(std::span<const int> sorted) noexcept;

/// Inverse of colex_rank. Throws input_error unless rank < C(n, k).
Subset colex_unrank(std::uint64_t rank, int n, int k);

/// Writes the rank-th k-subset of [1..n] into `out` (size k). Unchecked.
void colex_unrank_into(std::uint64_t rank, std::span<int> out) noexcept;

/// All C(n, k) subsets in colex order.
std::vector<Subset> enumerate_subsets(int n, int k);

/// Advances an increasing k-sequence over [1..n] to its colex successor.
/// Returns false (leaving `s` unspecified) after the last subset.
bool next_colex(std::span<int> s, int n) noexcept;

/// (-1)^(number of inversions). Throws input_error on a repeated entry.
int permutation_parity(std::span<const int> seq);

}  // namespace orchard
