#include "relkit/bit_matrix.hpp"

#include <algorithm>
#include <bit>

namespace relkit {

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), wpr_((cols + kWordBits - 1) / kWordBits), words_(rows * wpr_, 0) {}

bool BitMatrix::row_empty(std::size_t i) const {
  const Word* r = row(i);
  return std::all_of(r, r + wpr_, [](Word w) { return w == 0; });
}

BitMatrix::Word BitMatrix::tail_mask() const {
  std::size_t rem = cols_ % kWordBits;
  return rem == 0 ? ~Word{0} : (Word{1} << rem) - 1;
}

void BitMatrix::fill() {
  if (wpr_ == 0) return;
  Word tail = tail_mask();
  for (std::size_t i = 0; i < rows_; ++i) {
    Word* r = row(i);
    std::fill(r, r + wpr_, ~Word{0});
    r[wpr_ - 1] = tail;
  }
}

std::size_t BitMatrix::count() const {
  std::size_t n = 0;
  for (Word w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool BitMatrix::none() const {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

}  // namespace relkit
