#pragma once

#include <cstdint>
#include <vector>

#include "orchard/combinatorics.hpp"
#include "orchard/sign_function.hpp"

namespace orchard {

/// A partition of [1..n] into at most two classes, canonically labelled so
/// that element 1 is in class 0.
class OrchardPartition {
 public:
  /// `labels[i]` is the class of element i+1. Labels must be 0/1 and are
  /// canonicalised (flipped if labels[0] == 1).
  explicit OrchardPartition(std::vector<std::uint8_t> labels);

  static OrchardPartition single_class(int n);

  int n() const noexcept { return static_cast<int>(labels_.size()); }
  const std::vector<std::uint8_t>& labels() const noexcept { return labels_; }
  int label(int element) const { return labels_.at(element - 1); }
  bool same_class(int a, int b) const { return label(a) == label(b); }
  bool is_single_class() const noexcept;

  /// Elements of class 0 and class 1, 1-based and increasing.
  std::vector<int> class_members(int cls) const;

  friend bool operator==(const OrchardPartition&, const OrchardPartition&) = default;

 private:
  std::vector<std::uint8_t> labels_;
};

/// n_f(a, b) for every unordered pair.
class SeparationProfile {
 public:
  SeparationProfile(int n, int d, std::vector<std::uint64_t> counts);

  int n() const noexcept { return n_; }
  int d() const noexcept { return d_; }
  /// Count for a != b, in either order.
  std::uint64_t count(int a, int b) const;

 private:
  int n_;
  int d_;
  std::vector<std::uint64_t> counts_;  // colex order over 2-subsets
};

/// True iff f(X, a) * f(X, b) = -1, X taken in the given order with the
/// extra element appended.
bool separates(const SignFunction& f, std::span<const int> X, int a, int b);

/// n_f(a, b) by enumerating every d-subset of [1..n] \ {a, b}.
/// Throws unsupported_configuration when n < d + 2.
std::uint64_t separation_count(const SignFunction& f, int a, int b);

SeparationProfile separation_profile(const SignFunction& f);

/// The parity a separation count must have for two elements to be related:
/// 0 for symmetric f, C(n-3, d-1) mod 2 for antisymmetric f (0 when d = 0).
int threshold_parity(const SignFunction& f);

bool related(const SignFunction& f, int a, int b);

/// Labels every element by its relation to element 1, then checks every pair
/// against the labels. Throws consistency_error if the relation is not a
/// two-class equivalence.
OrchardPartition partition(const SignFunction& f);
OrchardPartition partition(const SignFunction& f, const SeparationProfile& profile);

/// Number of d-subsets X of [1..n] \ {x} with f(x, X) > 0. Symmetric only.
std::uint64_t mu(const SignFunction& f, int x);

/// (n(a,b) + n(b,c) + n(a,c)) mod 2 == threshold parity.
bool check_triple_identity(const SignFunction& f, int a, int b, int c);

}  // namespace orchard
