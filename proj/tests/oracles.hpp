#pragma once
// Test-only reference implementations. They work on plain boolean matrices
// and share no code with the library beyond reading and building Rel values.

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <vector>

#include "relkit/rel.hpp"

namespace oracle {

using Mat = std::vector<std::vector<bool>>;

inline Mat mat(const relkit::Rel& r) {
  Mat m(r.rows(), std::vector<bool>(r.cols()));
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j) m[i][j] = r.test(i, j);
  return m;
}

inline relkit::Rel rel(const relkit::Carrier& t, const relkit::Carrier& s, const Mat& m) {
  return relkit::Rel::tabulate(t, s, [&](std::size_t i, std::size_t j) { return bool(m[i][j]); });
}

inline std::size_t cols(const Mat& m, std::size_t fallback) { return m.empty() ? fallback : m[0].size(); }

inline Mat compose(const Mat& r, const Mat& s, std::size_t mid, std::size_t c) {
  Mat out(r.size(), std::vector<bool>(c));
  for (std::size_t a = 0; a < r.size(); ++a)
    for (std::size_t x = 0; x < c; ++x)
      for (std::size_t b = 0; b < mid; ++b)
        if (r[a][b] && s[b][x]) out[a][x] = true;
  return out;
}

// R\S: b (R\S) c iff for all a, a R b ⇒ a S c.
inline relkit::Rel under(const relkit::Rel& r, const relkit::Rel& s) {
  return relkit::Rel::tabulate(r.source(), s.source(), [&](std::size_t b, std::size_t c) {
    for (std::size_t a = 0; a < r.rows(); ++a)
      if (r.test(a, b) && !s.test(a, c)) return false;
    return true;
  });
}

// S/T: a (S/T) c iff for all b, c T b ⇒ a S b.
inline relkit::Rel over(const relkit::Rel& s, const relkit::Rel& t) {
  return relkit::Rel::tabulate(s.target(), t.target(), [&](std::size_t a, std::size_t c) {
    for (std::size_t b = 0; b < s.cols(); ++b)
      if (t.test(c, b) && !s.test(a, b)) return false;
    return true;
  });
}

// Riguet's difference: a ΔR b iff a R b and every x R b, a R y give x R y.
inline relkit::Rel diagonal(const relkit::Rel& r) {
  return relkit::Rel::tabulate(r.target(), r.source(), [&](std::size_t a, std::size_t b) {
    if (!r.test(a, b)) return false;
    for (std::size_t x = 0; x < r.rows(); ++x) {
      if (!r.test(x, b)) continue;
      for (std::size_t y = 0; y < r.cols(); ++y)
        if (r.test(a, y) && !r.test(x, y)) return false;
    }
    return true;
  });
}

inline bool difunctional(const relkit::Rel& r) {
  for (std::size_t a = 0; a < r.rows(); ++a)
    for (std::size_t b = 0; b < r.cols(); ++b)
      for (std::size_t c = 0; c < r.rows(); ++c)
        for (std::size_t d = 0; d < r.cols(); ++d)
          if (r.test(a, b) && r.test(c, b) && r.test(c, d) && !r.test(a, d)) return false;
  return true;
}

// Ferrers condition: a R b ∧ c R d ⇒ a R d ∨ c R b.
inline bool staircase(const relkit::Rel& r) {
  for (std::size_t a = 0; a < r.rows(); ++a)
    for (std::size_t b = 0; b < r.cols(); ++b)
      for (std::size_t c = 0; c < r.rows(); ++c)
        for (std::size_t d = 0; d < r.cols(); ++d)
          if (r.test(a, b) && r.test(c, d) && !r.test(a, d) && !r.test(c, b)) return false;
  return true;
}

inline bool row_nonempty(const relkit::Rel& r, std::size_t a) {
  for (std::size_t b = 0; b < r.cols(); ++b)
    if (r.test(a, b)) return true;
  return false;
}

inline bool col_nonempty(const relkit::Rel& r, std::size_t b) {
  for (std::size_t a = 0; a < r.rows(); ++a)
    if (r.test(a, b)) return true;
  return false;
}

// Domains of R and of its (oracle) diagonal coincide.
inline bool block_ordered(const relkit::Rel& r) {
  const relkit::Rel d = diagonal(r);
  for (std::size_t a = 0; a < r.rows(); ++a)
    if (row_nonempty(r, a) != row_nonempty(d, a)) return false;
  for (std::size_t b = 0; b < r.cols(); ++b)
    if (col_nonempty(r, b) != col_nonempty(d, b)) return false;
  return true;
}

// Reflexive-transitive closure by repeated squaring to a fixpoint.
inline Mat rtc(Mat m) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) m[i][i] = true;
  while (true) {
    Mat next = compose(m, m, n, n);
    if (next == m) return m;
    m = std::move(next);
  }
}

// Tarjan's algorithm; returns a component id per node.
inline std::vector<int> tarjan(const Mat& g) {
  const int n = int(g.size());
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1), stack;
  std::vector<bool> on(n, false);
  int counter = 0, ncomp = 0;
  std::function<void(int)> visit = [&](int v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on[v] = true;
    for (int w = 0; w < n; ++w) {
      if (!g[v][w]) continue;
      if (index[w] < 0) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      int w;
      do {
        w = stack.back();
        stack.pop_back();
        on[w] = false;
        comp[w] = ncomp;
      } while (w != v);
      ++ncomp;
    }
  };
  for (int v = 0; v < n; ++v)
    if (index[v] < 0) visit(v);
  return comp;
}

// Partition of nodes as sorted groups, sorted by least member.
inline std::vector<std::vector<std::size_t>> groups(const std::vector<int>& comp) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<int> seen;
  for (std::size_t v = 0; v < comp.size(); ++v) {
    auto it = std::find(seen.begin(), seen.end(), comp[v]);
    if (it == seen.end()) {
      seen.push_back(comp[v]);
      out.push_back({v});
    } else {
      out[std::size_t(it - seen.begin())].push_back(v);
    }
  }
  return out;
}

// All total functions from n elements to m elements, as image vectors.
inline std::vector<std::vector<std::size_t>> functions(std::size_t n, std::size_t m) {
  std::vector<std::vector<std::size_t>> out;
  if (m == 0) {
    if (n == 0) out.push_back({});
    return out;
  }
  std::vector<std::size_t> f(n, 0);
  while (true) {
    out.push_back(f);
    std::size_t i = 0;
    while (i < n && f[i] == m - 1) f[i++] = 0;
    if (i == n) return out;
    ++f[i];
  }
}

// Maps F with a R b ≡ F.a ⊑ b, by exhaustive search.
inline std::vector<std::vector<std::size_t>> lower_adjoints(const relkit::Rel& r, const relkit::Rel& order_b) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& f : functions(r.rows(), r.cols())) {
    bool ok = true;
    for (std::size_t a = 0; a < r.rows() && ok; ++a)
      for (std::size_t b = 0; b < r.cols() && ok; ++b) ok = r.test(a, b) == order_b.test(f[a], b);
    if (ok) out.push_back(f);
  }
  return out;
}

// Maps G with a R b ≡ a ⊑ G.b, by exhaustive search.
inline std::vector<std::vector<std::size_t>> upper_adjoints(const relkit::Rel& r, const relkit::Rel& order_a) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& g : functions(r.cols(), r.rows())) {
    bool ok = true;
    for (std::size_t a = 0; a < r.rows() && ok; ++a)
      for (std::size_t b = 0; b < r.cols() && ok; ++b) ok = r.test(a, b) == order_a.test(a, g[b]);
    if (ok) out.push_back(g);
  }
  return out;
}

}  // namespace oracle
