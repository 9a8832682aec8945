#pragma once

#include <cstddef>
#include <vector>

#include "humbert/exact/matrix.hpp"

namespace humbert::lie {

/// Sorted r-element subsets of {0, ..., n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t r);

/// Position of a sorted subset in subsets(n, r).
std::size_t subset_rank(const std::vector<std::size_t>& s, std::size_t n);

/// Derivation action of A (column convention, A e_j = sum_i A(i,j) e_i) on
/// the wedge basis e_S, S in subsets(n, r).
exact::MatrixG wedge_derivation(const exact::MatrixG& a, std::size_t r);

/// Dimension of the common kernel of the derivation actions on the r-th
/// exterior power.
std::size_t wedge_invariants_dim(const std::vector<exact::MatrixG>& actions, std::size_t n, std::size_t r);

}  // namespace humbert::lie
