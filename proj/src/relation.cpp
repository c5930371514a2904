#include "orchard/relation.hpp"

#include <algorithm>
#include <string>

#include "orchard/errors.hpp"

namespace orchard {

OrchardPartition::OrchardPartition(std::vector<std::uint8_t> labels)
    : labels_(std::move(labels)) {
  if (labels_.empty()) throw input_error("partition of an empty set");
  for (auto l : labels_)
    if (l > 1) throw input_error("partition labels must be 0 or 1");
  if (labels_[0] == 1)
    for (auto& l : labels_) l ^= 1;
}

OrchardPartition OrchardPartition::single_class(int n) {
  return OrchardPartition(std::vector<std::uint8_t>(static_cast<std::size_t>(n), 0));
}

bool OrchardPartition::is_single_class() const noexcept {
  return std::all_of(labels_.begin(), labels_.end(), [](auto l) { return l == 0; });
}

std::vector<int> OrchardPartition::class_members(int cls) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == cls) out.push_back(static_cast<int>(i) + 1);
  return out;
}

SeparationProfile::SeparationProfile(int n, int d, std::vector<std::uint64_t> counts)
    : n_(n), d_(d), counts_(std::move(counts)) {
  if (counts_.size() != binomial(n_, 2))
    throw input_error("separation profile needs one count per pair");
}

std::uint64_t SeparationProfile::count(int a, int b) const {
  if (a == b || a < 1 || b < 1 || a > n_ || b > n_)
    throw input_error("separation count needs two distinct elements of [1, n]");
  const int pair[2] = {std::min(a, b), std::max(a, b)};
  return counts_[colex_rank_sorted(pair)];
}

namespace {

void check_element(const SignFunction& f, int x) {
  if (x < 1 || x > f.n())
    throw input_error("element " + std::to_string(x) + " outside [1, " +
                      std::to_string(f.n()) + "]");
}

void check_supported(const SignFunction& f) {
  if (f.n() < f.d() + 2)
    throw unsupported_configuration(
        "orchard relation needs n >= d + 2 (n=" + std::to_string(f.n()) +
        ", d=" + std::to_string(f.d()) + ")");
}

void check_pair(const SignFunction& f, int a, int b) {
  check_element(f, a);
  check_element(f, b);
  if (a == b) throw input_error("elements must be distinct");
}

// f(X, x) for increasing X not containing x. Appending x after the m
// elements of X larger than it costs m transpositions to sort.
int value_with_appended(const SignFunction& f, std::span<const int> X, int x,
                        std::vector<int>& scratch) {
  scratch.assign(X.begin(), X.end());
  auto pos = std::upper_bound(scratch.begin(), scratch.end(), x);
  const auto larger = scratch.end() - pos;
  scratch.insert(pos, x);
  const int stored = f.sign_of_sorted(scratch);
  if (f.kind() == SymmetryKind::Antisymmetric && (larger % 2)) return -stored;
  return stored;
}

// Calls visit(X) for every d-subset X of [1..n] minus `excluded` (sorted),
// X increasing.
template <typename Visit>
void for_each_subset_avoiding(int n, int d, std::span<const int> excluded,
                              Visit&& visit) {
  std::vector<int> rest;
  for (int x = 1; x <= n; ++x)
    if (!std::binary_search(excluded.begin(), excluded.end(), x)) rest.push_back(x);
  const int m = static_cast<int>(rest.size());
  if (d > m) return;
  std::vector<int> idx(static_cast<std::size_t>(d));
  std::vector<int> X(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) idx[i] = i + 1;
  do {
    for (int i = 0; i < d; ++i) X[i] = rest[idx[i] - 1];
    visit(std::span<const int>(X));
  } while (next_colex(idx, m));
}

}  // namespace

bool separates(const SignFunction& f, std::span<const int> X, int a, int b) {
  check_pair(f, a, b);
  if (static_cast<int>(X.size()) != f.d())
    throw input_error("separating set must have d = " + std::to_string(f.d()) +
                      " elements");
  for (int x : X) {
    if (x == a || x == b)
      throw input_error("separating set must avoid a and b");
  }
  std::vector<int> with(X.begin(), X.end());
  with.push_back(a);
  const int fa = f.evaluate(with);
  with.back() = b;
  return fa * f.evaluate(with) == -1;
}

std::uint64_t separation_count(const SignFunction& f, int a, int b) {
  check_pair(f, a, b);
  check_supported(f);
  const int excluded[2] = {std::min(a, b), std::max(a, b)};
  std::uint64_t count = 0;
  std::vector<int> scratch;
  for_each_subset_avoiding(f.n(), f.d(), excluded, [&](std::span<const int> X) {
    const int fa = value_with_appended(f, X, a, scratch);
    const int fb = value_with_appended(f, X, b, scratch);
    count += (fa != fb);
  });
  return count;
}

SeparationProfile separation_profile(const SignFunction& f) {
  check_supported(f);
  std::vector<std::uint64_t> counts;
  counts.reserve(binomial(f.n(), 2));
  for (int b = 2; b <= f.n(); ++b)
    for (int a = 1; a < b; ++a) counts.push_back(separation_count(f, a, b));
  return SeparationProfile(f.n(), f.d(), std::move(counts));
}

int threshold_parity(const SignFunction& f) {
  check_supported(f);
  if (f.kind() == SymmetryKind::Symmetric || f.d() == 0) return 0;
  return binomial_parity(f.n() - 3, f.d() - 1);
}

bool related(const SignFunction& f, int a, int b) {
  check_element(f, a);
  check_element(f, b);
  check_supported(f);
  if (a == b) return true;
  return static_cast<int>(separation_count(f, a, b) % 2) == threshold_parity(f);
}

OrchardPartition partition(const SignFunction& f, const SeparationProfile& profile) {
  if (profile.n() != f.n() || profile.d() != f.d())
    throw input_error("separation profile does not match the function");
  const int threshold = threshold_parity(f);
  const int n = f.n();
  auto rel = [&](int a, int b) {
    return static_cast<int>(profile.count(a, b) % 2) == threshold;
  };
  std::vector<std::uint8_t> labels(static_cast<std::size_t>(n), 0);
  for (int x = 2; x <= n; ++x) labels[x - 1] = rel(1, x) ? 0 : 1;
  for (int b = 2; b <= n; ++b)
    for (int a = 2; a < b; ++a)
      if (rel(a, b) != (labels[a - 1] == labels[b - 1]))
        throw consistency_error("orchard relation is not a two-class equivalence at (" +
                                std::to_string(a) + "," + std::to_string(b) + ")");
  return OrchardPartition(std::move(labels));
}

OrchardPartition partition(const SignFunction& f) {
  return partition(f, separation_profile(f));
}

std::uint64_t mu(const SignFunction& f, int x) {
  if (f.kind() != SymmetryKind::Symmetric)
    throw kind_error("mu is defined for symmetric functions only");
  check_element(f, x);
  const int excluded[1] = {x};
  std::uint64_t count = 0;
  std::vector<int> scratch;
  for_each_subset_avoiding(f.n(), f.d(), excluded, [&](std::span<const int> X) {
    count += value_with_appended(f, X, x, scratch) > 0;
  });
  return count;
}

bool check_triple_identity(const SignFunction& f, int a, int b, int c) {
  check_element(f, c);
  if (a == b || b == c || a == c)
    throw input_error("triple identity needs three distinct elements");
  const auto sum = separation_count(f, a, b) + separation_count(f, b, c) +
                   separation_count(f, a, c);
  return static_cast<int>(sum % 2) == threshold_parity(f);
}

}  // namespace orchard
