#include "orchard/gf2_matrix.hpp"

#include <algorithm>
#include <bit>
#include <utility>

#include "orchard/errors.hpp"

namespace orchard {

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(rows * words_, 0) {}

std::size_t Gf2Matrix::rank() const {
  Gf2Matrix m = *this;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
    const std::size_t word = c / 64;
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    std::size_t pivot = rank;
    while (pivot < rows_ && !(m.row(pivot)[word] & bit)) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != rank)
      std::swap_ranges(m.row(pivot), m.row(pivot) + words_, m.row(rank));
    const std::uint64_t* p = m.row(rank);
    for (std::size_t r = rank + 1; r < rows_; ++r) {
      std::uint64_t* q = m.row(r);
      if (!(q[word] & bit)) continue;
      // Columns before `word` are already cleared in the pivot row.
      for (std::size_t w = word; w < words_; ++w) q[w] ^= p[w];
    }
    ++rank;
  }
  return rank;
}

bool Gf2Matrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](auto w) { return w == 0; });
}

Gf2Matrix Gf2Matrix::operator*(const Gf2Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw input_error("Gf2Matrix product: shape mismatch");
  Gf2Matrix out(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t* dst = out.row(r);
    for (std::size_t k = 0; k < cols_; ++k) {
      if (!get(r, k)) continue;
      const std::uint64_t* src = rhs.row(k);
      for (std::size_t w = 0; w < out.words_; ++w) dst[w] ^= src[w];
    }
  }
  return out;
}

std::vector<std::uint8_t> Gf2Matrix::apply(const std::vector<std::uint8_t>& v) const {
  if (v.size() != cols_) throw input_error("Gf2Matrix apply: length mismatch");
  std::vector<std::uint64_t> packed(words_, 0);
  for (std::size_t c = 0; c < cols_; ++c)
    if (v[c] & 1u) packed[c / 64] |= std::uint64_t{1} << (c % 64);
  std::vector<std::uint8_t> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    int ones = 0;
    for (std::size_t w = 0; w < words_; ++w) ones += std::popcount(row(r)[w] & packed[w]);
    out[r] = static_cast<std::uint8_t>(ones & 1);
  }
  return out;
}

}  // namespace orchard
