#pragma once

#include <random>
#include <string>
#include <vector>

#include "humbert/fock/harmonics.hpp"
#include "humbert/fock/isotypic.hpp"
#include "humbert/lie/parabolic.hpp"
#include "humbert/weyl/omega.hpp"

namespace humbert::fock {

using lie::Bidegree;

/// Alternating map wedge^k p -> polynomials, stored on the sorted k-subsets
/// of the basis p14, p15, p24, p25, p34, p35 (indices 0..5).
struct EquivariantCochain {
  int degree = 0;
  std::vector<Poly5> values;  // indexed by lie::subset_rank

  static EquivariantCochain zero(int degree);
  const Poly5& at(const std::vector<std::size_t>& subset) const;
  bool is_zero() const;
};

/// phi+ = sum z_a z_b w_{a4} ^ w_{b5}, w the dual basis of p: its value on
/// (p_{a4}, p_{b5}) is z_a z_b and it vanishes on pairs with equal mu.
EquivariantCochain phi_plus();

/// Multilinear evaluation on p-vectors given in coordinates (length 6).
Poly5 evaluate(const EquivariantCochain& c, const std::vector<VectorG>& args);

/// Number of (k-basis element, subset) pairs where
/// omega(k0) c(X) != sum_i c(..., [k0, X_i], ...).
std::size_t equivariance_failures(const EquivariantCochain& c, const weyl::OmegaMap& om);

/// (dc)(X_0..X_k) = sum_i (-1)^i omega(X_i) c(..., X_i omitted, ...); the
/// bracket terms drop out because [p, p] lies in k.
EquivariantCochain rel_lie_differential(const EquivariantCochain& c, const weyl::OmegaMap& om);

/// Types (p, q) on which the cochain is nonzero, probed on root vectors of
/// p+ and p-.
std::vector<Bidegree> bidegree_support(const EquivariantCochain& c);

/// Basis of the K-equivariant degree-k cochains whose values are homogeneous
/// of degree e.
std::vector<EquivariantCochain> equivariant_cochains(int k, int e, const weyl::OmegaMap& om);

/// Random integer combination of equivariant_cochains(k, e) over the listed
/// value degrees.
EquivariantCochain random_equivariant_cochain(int k, const std::vector<int>& value_degrees,
                                              const weyl::OmegaMap& om, std::mt19937_64& rng);

struct WedgeDecomposition {
  std::vector<IsotypicPiece> pieces;  // basis vectors in wedge^2 p coordinates (15 entries)
  std::size_t total_dim = 0;
};

/// K-types of wedge^{1,1} p = span{v+ ^ v-}.
WedgeDecomposition wedge_decompose_p11();

/// Value of a cochain of degree 2 on an element of wedge^2 p (15 coordinates).
Poly5 evaluate_on_bivector(const EquivariantCochain& c, const VectorG& w);

/// Coordinates (length 6) of the p-components of p+ and p- root vectors.
std::vector<VectorG> p_plus_vectors();
std::vector<VectorG> p_minus_vectors();

}  // namespace humbert::fock
