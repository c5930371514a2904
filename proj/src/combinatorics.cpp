#include "orchard/combinatorics.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "orchard/errors.hpp"

namespace orchard {

Subset::Subset(int n, std::vector<int> elements)
    : n_(n), elements_(std::move(elements)) {
  if (n_ < 0) throw input_error("ground-set size must be nonnegative");
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const int x = elements_[i];
    if (x < 1 || x > n_)
      throw input_error("subset element " + std::to_string(x) +
                        " outside [1, " + std::to_string(n_) + "]");
    if (i > 0 && elements_[i - 1] >= x)
      throw input_error("subset elements must be strictly increasing: " +
                        to_string());
  }
}

bool Subset::contains(int x) const noexcept {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

std::string Subset::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < elements_.size(); ++i)
    os << (i ? "," : "") << elements_[i];
  os << '}';
  return os.str();
}

std::uint64_t binomial(int n, int k) {
  if (n < 0) throw input_error("binomial: n must be nonnegative");
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (r > std::numeric_limits<std::uint64_t>::max())
      throw input_error("binomial C(" + std::to_string(n) + "," +
                        std::to_string(k) + ") overflows 64 bits");
  }
  return static_cast<std::uint64_t>(r);
}

int binomial_parity(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0) throw input_error("binomial_parity: negative argument");
  if (k > n) return 0;
  return (k & ~n) == 0 ? 1 : 0;
}

std::uint64_t colex_rank_sorted(std::span<const int> sorted) noexcept {
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i)
    r += binomial(sorted[i] - 1, static_cast<int>(i) + 1);
  return r;
}

std::uint64_t colex_rank(const Subset& subset) {
  return colex_rank_sorted(subset.elements());
}

void colex_unrank_into(std::uint64_t rank, std::span<int> out) noexcept {
  // Greedy from the top slot: the largest c with C(c, i) <= rank gives s_i = c+1.
  for (int i = static_cast<int>(out.size()); i >= 1; --i) {
    int c = i - 1;
    while (binomial(c + 1, i) <= rank) ++c;
    out[i - 1] = c + 1;
    rank -= binomial(c, i);
  }
}

Subset colex_unrank(std::uint64_t rank, int n, int k) {
  if (k < 0 || k > n)
    throw input_error("colex_unrank: need 0 <= k <= n");
  const auto count = binomial(n, k);
  if (rank >= count)
    throw input_error("colex_unrank: rank " + std::to_string(rank) +
                      " out of range [0, " + std::to_string(count) + ")");
  std::vector<int> s(static_cast<std::size_t>(k));
  colex_unrank_into(rank, s);
  return Subset(n, std::move(s));
}

bool next_colex(std::span<int> s, int n) noexcept {
  const std::size_t k = s.size();
  // Bump the lowest slot that has room below its upper neighbour, then
  // reset everything beneath it to 1, 2, ...
  for (std::size_t i = 0; i < k; ++i) {
    const int limit = (i + 1 < k) ? s[i + 1] : n + 1;
    if (s[i] + 1 < limit) {
      ++s[i];
      for (std::size_t j = 0; j < i; ++j) s[j] = static_cast<int>(j) + 1;
      return true;
    }
  }
  return false;
}

std::vector<Subset> enumerate_subsets(int n, int k) {
  if (n < 0 || k < 0 || k > n)
    throw input_error("enumerate_subsets: need 0 <= k <= n");
  std::vector<Subset> out;
  out.reserve(binomial(n, k));
  std::vector<int> s(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) s[i] = i + 1;
  do {
    out.emplace_back(n, s);
  } while (next_colex(s, n));
  return out;
}

int permutation_parity(std::span<const int> seq) {
  int inversions = 0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      if (seq[i] == seq[j])
        throw input_error("permutation_parity: repeated entry " +
                          std::to_string(seq[i]));
      if (seq[i] > seq[j]) ++inversions;
    }
  }
  return (inversions % 2) ? -1 : 1;
}

}  // namespace orchard
