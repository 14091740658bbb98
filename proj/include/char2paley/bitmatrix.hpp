#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace char2paley {

// Square 0/1 matrix stored as rows of 64-bit words.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

  std::size_t size() const { return n_; }
  std::size_t words_per_row() const { return words_; }

  bool test(std::size_t r, std::size_t c) const {
    return (bits_[r * words_ + c / 64] >> (c % 64)) & 1u;
  }
  void set(std::size_t r, std::size_t c, bool value = true) {
    std::uint64_t& w = bits_[r * words_ + c / 64];
    const std::uint64_t mask = std::uint64_t{1} << (c % 64);
    w = value ? (w | mask) : (w & ~mask);
  }

  std::span<const std::uint64_t> row(std::size_t r) const {
    return {bits_.data() + r * words_, words_};
  }
  std::span<std::uint64_t> row(std::size_t r) { return {bits_.data() + r * words_, words_}; }

  std::size_t row_count(std::size_t r) const {
    std::size_t total = 0;
    for (std::uint64_t w : row(r)) total += std::popcount(w);
    return total;
  }

  // |row(r1) AND row(r2)|
  std::size_t common(std::size_t r1, std::size_t r2) const {
    const std::uint64_t* a = bits_.data() + r1 * words_;
    const std::uint64_t* b = bits_.data() + r2 * words_;
    std::size_t total = 0;
    for (std::size_t i = 0; i < words_; ++i) total += std::popcount(a[i] & b[i]);
    return total;
  }

  std::size_t count() const {
    std::size_t total = 0;
    for (std::uint64_t w : bits_) total += std::popcount(w);
    return total;
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

}  // namespace char2paley
