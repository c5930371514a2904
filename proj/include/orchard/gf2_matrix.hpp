#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace orchard {

/// Dense matrix over F2 with rows packed into 64-bit words.
class Gf2Matrix {
 public:
  Gf2Matrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  bool get(std::size_t r, std::size_t c) const noexcept {
    return (data_[r * words_ + c / 64] >> (c % 64)) & 1u;
  }
  void set(std::size_t r, std::size_t c, bool v = true) noexcept {
    auto& w = data_[r * words_ + c / 64];
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    w = v ? (w | bit) : (w & ~bit);
  }

  /// Rank by Gaussian elimination on a copy.
  std::size_t rank() const;
  std::size_t nullity() const { return cols_ - rank(); }
  bool is_zero() const noexcept;

  /// Product over F2. Throws input_error on a shape mismatch.
  Gf2Matrix operator*(const Gf2Matrix& rhs) const;
  /// Matrix-vector product; `v` holds one bit per column.
  std::vector<std::uint8_t> apply(const std::vector<std::uint8_t>& v) const;

 private:
  std::uint64_t* row(std::size_t r) noexcept { return data_.data() + r * words_; }
  const std::uint64_t* row(std::size_t r) const noexcept { return data_.data() + r * words_; }

  std::size_t rows_;
  std::size_t cols_;
  std::size_t words_;
  std::vector<std::uint64_t> data_;
};

}  // namespace orchard
