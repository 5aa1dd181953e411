#include "relkit/pair_algebra.hpp"

#include "relkit/errors.hpp"

namespace relkit {
namespace {

std::optional<std::size_t> greatest(const Rel& order, const std::vector<std::size_t>& candidates) {
  for (std::size_t m : candidates) {
    bool top = true;
    for (std::size_t y : candidates)
      if (!order(y, m)) {
        top = false;
        break;
      }
    if (top) return m;
  }
  return std::nullopt;
}

std::uint32_t fiber(const Rel& r, std::size_t a) {
  std::uint32_t mask = 0;
  for (std::size_t b = 0; b < r.cols(); ++b)
    if (r(a, b)) mask |= 1u << b;
  return mask;
}

void require_lattice(const Rel& r, const Rel& order, const char* op) {
  if (!(order.target() == r.source()) || !order.homogeneous())
    throw TypeError(std::string(op) + ": order " + order.type_string() + " is not on the source of " +
                    r.type_string());
  if (!is_partial_order(order)) throw PreconditionError(std::string(op) + ": order is not a partial order");
  if (!is_complete_lattice(order)) throw PreconditionError(std::string(op) + ": order is not a complete lattice");
}

}  // namespace

bool is_partial_order(const Rel& order) {
  require_homogeneous(order, "is_partial_order");
  const std::size_t n = order.rows();
  for (std::size_t i = 0; i < n; ++i) {
    if (!order(i, i)) return false;
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && order(i, j) && order(j, i)) return false;
  }
  return leq(compose(order, order), order);
}

std::optional<std::size_t> infimum(const Rel& order, std::uint32_t subset) {
  std::vector<std::size_t> lower;
  for (std::size_t y = 0; y < order.rows(); ++y) {
    bool below = true;
    for (std::size_t x = 0; x < order.rows() && below; ++x)
      if ((subset >> x) & 1u) below = order(y, x);
    if (below) lower.push_back(y);
  }
  return greatest(order, lower);
}

std::optional<std::size_t> supremum(const Rel& order, std::uint32_t subset) {
  return infimum(converse(order), subset);
}

bool is_complete_lattice(const Rel& order) {
  const std::size_t n = order.rows();
  if (n > kLatticeLimit)
    throw PreconditionError("complete-lattice check: carrier of size " + std::to_string(n) + " is too large");
  for (std::uint32_t s = 0; s < (1u << n); ++s)
    if (!infimum(order, s)) return false;
  return true;
}

bool represented_by_infimum(const Rel& r, const Rel& order_b) {
  for (std::size_t a = 0; a < r.rows(); ++a) {
    auto f = infimum(order_b, fiber(r, a));
    if (!f) return false;
    for (std::size_t b = 0; b < r.cols(); ++b)
      if (r(a, b) != order_b(*f, b)) return false;
  }
  return true;
}

bool fibers_inf_preserving(const Rel& r, const Rel& order_b) {
  const std::size_t n = r.cols();
  for (std::size_t a = 0; a < r.rows(); ++a) {
    const std::uint32_t fib = fiber(r, a);
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
      auto inf = infimum(order_b, s);
      if (!inf) return false;
      const bool all_in = (s & ~fib) == 0;
      if (r(a, *inf) != all_in) return false;
    }
  }
  return true;
}

std::optional<Rel> lower_adjoint(const Rel& r, const Rel& order_b) {
  require_lattice(r, order_b, "lower_adjoint");
  const bool by_inf = represented_by_infimum(r, order_b);
  if (by_inf != fibers_inf_preserving(r, order_b))
    throw LawViolation("lower_adjoint: infimum representation and inf-preservation disagree");
  if (!by_inf) return std::nullopt;
  BitMatrix m(r.cols(), r.rows());
  for (std::size_t a = 0; a < r.rows(); ++a) m.set(*infimum(order_b, fiber(r, a)), a);
  return Rel(r.source(), r.target(), std::move(m));
}

std::optional<Rel> upper_adjoint(const Rel& r, const Rel& order_a) {
  return lower_adjoint(converse(r), converse(order_a));
}

bool is_pair_algebra(const Rel& r, const Rel& order_a, const Rel& order_b) {
  return lower_adjoint(r, order_b).has_value() && upper_adjoint(r, order_a).has_value();
}

}  // namespace relkit
