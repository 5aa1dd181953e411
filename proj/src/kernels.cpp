#include "relkit/kernels.hpp"

#include <atomic>
#include <bit>
#include <cassert>
#include <cstdint>

namespace relkit::kernels {
namespace {

std::atomic<std::size_t> g_threshold{256};

using Word = BitMatrix::Word;

inline void or_into(Word* dst, const Word* src, std::size_t n) {
  for (std::size_t w = 0; w < n; ++w) dst[w] |= src[w];
}

}  // namespace

std::size_t parallel_threshold() { return g_threshold.load(std::memory_order_relaxed); }
void set_parallel_threshold(std::size_t rows) { g_threshold.store(rows, std::memory_order_relaxed); }

BitMatrix compose(const BitMatrix& a, const BitMatrix& b) {
  assert(a.cols() == b.rows());
  BitMatrix out(a.rows(), b.cols());
  const std::size_t awords = a.words_per_row();
  const std::size_t bwords = b.words_per_row();
  const auto rows = static_cast<std::int64_t>(a.rows());
  const bool par = a.rows() >= parallel_threshold();
#pragma omp parallel for schedule(static) if (par)
  for (std::int64_t i = 0; i < rows; ++i) {
    const Word* arow = a.row(static_cast<std::size_t>(i));
    Word* orow = out.row(static_cast<std::size_t>(i));
    for (std::size_t w = 0; w < awords; ++w) {
      Word bits = arow[w];
      while (bits != 0) {
        std::size_t j = w * BitMatrix::kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
        or_into(orow, b.row(j), bwords);
        bits &= bits - 1;
      }
    }
  }
  return out;
}

BitMatrix transpose(const BitMatrix& a) {
  BitMatrix out(a.cols(), a.rows());
  const auto cols = static_cast<std::int64_t>(a.cols());
  const bool par = a.cols() >= parallel_threshold();
#pragma omp parallel for schedule(static) if (par)
  for (std::int64_t j = 0; j < cols; ++j) {
    auto col = static_cast<std::size_t>(j);
    for (std::size_t i = 0; i < a.rows(); ++i)
      if (a.test(i, col)) out.set(col, i);
  }
  return out;
}

BitMatrix closure(const BitMatrix& a) {
  assert(a.rows() == a.cols());
  BitMatrix x = a;
  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i) x.set(i, i);
  const std::size_t words = x.words_per_row();
  const auto rows = static_cast<std::int64_t>(n);
  const bool par = n >= parallel_threshold();
  for (std::size_t k = 0; k < n; ++k) {
    const Word* krow = x.row(k);
    const std::size_t kw = k / BitMatrix::kWordBits;
    const Word kbit = Word{1} << (k % BitMatrix::kWordBits);
#pragma omp parallel for schedule(static) if (par)
    for (std::int64_t i = 0; i < rows; ++i) {
      auto r = static_cast<std::size_t>(i);
      if (r == k) continue;
      Word* irow = x.row(r);
      if (irow[kw] & kbit) or_into(irow, krow, words);
    }
  }
  return x;
}

BitMatrix meet(const BitMatrix& a, const BitMatrix& b) {
  BitMatrix out = a;
  auto& w = out.words();
  const auto& v = b.words();
  for (std::size_t i = 0; i < w.size(); ++i) w[i] &= v[i];
  return out;
}

BitMatrix join(const BitMatrix& a, const BitMatrix& b) {
  BitMatrix out = a;
  auto& w = out.words();
  const auto& v = b.words();
  for (std::size_t i = 0; i < w.size(); ++i) w[i] |= v[i];
  return out;
}

BitMatrix negate(const BitMatrix& a) {
  BitMatrix out = a;
  const std::size_t wpr = out.words_per_row();
  if (wpr == 0) return out;
  const Word tail = out.tail_mask();
  for (std::size_t i = 0; i < out.rows(); ++i) {
    Word* r = out.row(i);
    for (std::size_t w = 0; w < wpr; ++w) r[w] = ~r[w];
    r[wpr - 1] &= tail;
  }
  return out;
}

bool leq(const BitMatrix& a, const BitMatrix& b) {
  const auto& w = a.words();
  const auto& v = b.words();
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] & ~v[i]) return false;
  return true;
}

namespace reference {

BitMatrix compose(const BitMatrix& a, const BitMatrix& b) {
  BitMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < b.cols(); ++k)
      for (std::size_t j = 0; j < a.cols(); ++j)
        if (a.test(i, j) && b.test(j, k)) {
          out.set(i, k);
          break;
        }
  return out;
}

BitMatrix transpose(const BitMatrix& a) {
  BitMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a.test(i, j)) out.set(j, i);
  return out;
}

BitMatrix closure(const BitMatrix& a) {
  BitMatrix x(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) x.set(i, i);
  while (true) {
    BitMatrix next = reference::compose(a, x);
    for (std::size_t i = 0; i < a.rows(); ++i) next.set(i, i);
    if (next == x) return x;
    x = std::move(next);
  }
}

}  // namespace reference
}  // namespace relkit::kernels
