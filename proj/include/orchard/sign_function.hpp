#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "orchard/combinatorics.hpp"

namespace orchard {

enum class SymmetryKind { Symmetric, Antisymmetric };

std::string_view to_string(SymmetryKind kind) noexcept;
/// Parses "symmetric" / "antisymmetric". Throws input_error otherwise.
SymmetryKind parse_kind(std::string_view text);

/// Kind of a product: kinds multiply like {+1, -1} with Symmetric as +1.
constexpr SymmetryKind operator*(SymmetryKind a, SymmetryKind b) noexcept {
  return a == b ? SymmetryKind::Symmetric : SymmetryKind::Antisymmetric;
}

/// A generic symmetric or antisymmetric function on the `arity`-subsets of
/// [1..n], reduced to its signs.
///
/// Only the value on each increasing tuple is stored, indexed by colex rank.
/// The value on any other ordering of the same subset follows from `kind`:
/// unchanged for Symmetric, times the sort permutation's parity for
/// Antisymmetric. Every stored value is -1 or +1, so the function is generic
/// by construction.
class SignFunction {
 public:
  /// Throws input_error unless 1 <= arity <= n, signs.size() == C(n, arity)
  /// and every entry is -1 or +1.
  SignFunction(int n, int arity, SymmetryKind kind, std::vector<std::int8_t> signs);

  int n() const noexcept { return n_; }
  int arity() const noexcept { return arity_; }
  /// The paper-facing dimension parameter: arity - 1.
  int d() const noexcept { return arity_ - 1; }
  SymmetryKind kind() const noexcept { return kind_; }
  std::span<const std::int8_t> signs() const noexcept { return signs_; }

  /// Stored sign at a colex rank (an increasing tuple).
  int sign_at(std::uint64_t rank) const noexcept { return signs_[rank]; }
  /// Stored sign of an increasing tuple. Unchecked.
  int sign_of_sorted(std::span<const int> sorted) const noexcept {
    return signs_[colex_rank_sorted(sorted)];
  }

  /// Value on an arbitrary ordering of distinct elements of [1..n].
  int evaluate(std::span<const int> args) const;
  int evaluate(std::initializer_list<int> args) const {
    return evaluate(std::span<const int>(args.begin(), args.size()));
  }

  friend bool operator==(const SignFunction&, const SignFunction&) = default;

 private:
  int n_;
  int arity_;
  SymmetryKind kind_;
  std::vector<std::int8_t> signs_;
};

/// Every increasing tuple maps to +1.
SignFunction constant_one(int n, int arity, SymmetryKind kind);

/// Negates the single stored sign at `flipset`.
SignFunction flip(const SignFunction& f, const Subset& flipset);

/// Pointwise product; kind follows the {+1, -1} group rule.
SignFunction product(const SignFunction& f, const SignFunction& g);

/// Each stored sign is a deterministic function of (seed, colex rank), so the
/// result is reproducible on every platform and prefix-stable in n.
SignFunction random_sign_function(int n, int arity, SymmetryKind kind,
                                  std::uint64_t seed);

}  // namespace orchard
