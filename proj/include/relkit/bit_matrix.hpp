#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace relkit {

/// Row-major boolean matrix, each row packed into 64-bit words.
/// Bits beyond cols() in the last word of a row are always zero.
class BitMatrix {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t words_per_row() const { return wpr_; }

  bool test(std::size_t i, std::size_t j) const {
    return (words_[i * wpr_ + j / kWordBits] >> (j % kWordBits)) & 1u;
  }
  void set(std::size_t i, std::size_t j) {
    words_[i * wpr_ + j / kWordBits] |= Word{1} << (j % kWordBits);
  }
  void reset(std::size_t i, std::size_t j) {
    words_[i * wpr_ + j / kWordBits] &= ~(Word{1} << (j % kWordBits));
  }

  Word* row(std::size_t i) { return words_.data() + i * wpr_; }
  const Word* row(std::size_t i) const { return words_.data() + i * wpr_; }
  bool row_empty(std::size_t i) const;

  /// Mask of the valid bits in the last word of each row.
  Word tail_mask() const;

  void fill();
  std::size_t count() const;
  bool none() const;

  std::vector<Word>& words() { return words_; }
  const std::vector<Word>& words() const { return words_; }

  friend bool operator==(const BitMatrix& a, const BitMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.words_ == b.words_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t wpr_ = 0;
  std::vector<Word> words_;
};

}  // namespace relkit
