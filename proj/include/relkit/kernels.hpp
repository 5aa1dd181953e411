#pragma once

#include <cstddef>

#include "relkit/bit_matrix.hpp"

// Matrix kernels behind the relation algebra. The default versions split rows
// across OpenMP threads once a matrix is large enough to repay the fork; the
// `reference` versions are plain serial loops kept to test and benchmark the
// parallel ones against.
namespace relkit::kernels {

/// Row count from which the parallel kernels actually fork.
std::size_t parallel_threshold();
void set_parallel_threshold(std::size_t rows);

/// Boolean product: result row i is the OR of b's rows j for every set a[i][j].
BitMatrix compose(const BitMatrix& a, const BitMatrix& b);
BitMatrix transpose(const BitMatrix& a);
/// Reflexive-transitive closure of a square matrix (Warshall).
BitMatrix closure(const BitMatrix& a);

BitMatrix meet(const BitMatrix& a, const BitMatrix& b);
BitMatrix join(const BitMatrix& a, const BitMatrix& b);
BitMatrix negate(const BitMatrix& a);
/// a is pointwise below b.
bool leq(const BitMatrix& a, const BitMatrix& b);

namespace reference {

BitMatrix compose(const BitMatrix& a, const BitMatrix& b);
BitMatrix transpose(const BitMatrix& a);
/// Iterates X := I | a*X until nothing changes.
BitMatrix closure(const BitMatrix& a);

}  // namespace reference
}  // namespace relkit::kernels
