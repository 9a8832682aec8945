#pragma once

#include <array>
#include <string>
#include <vector>

#include "humbert/lie/so32.hpp"
#include "humbert/weyl/sl2.hpp"

namespace humbert::weyl {

/// Default normalization of the z1 z4 coefficient of omega(p14).
GaussRational default_gauge();

/// omega on the basis of so(3,2) (see lie::so32_basis()).
struct OmegaMap {
  std::array<WeylElement, lie::kAlgebraDim> images;
  GaussRational gauge;     // z_alpha z_mu coefficient fixed on p14
  GaussRational z_coeff;   // common z_alpha z_mu coefficient of omega(p_{alpha mu})
  GaussRational d_coeff;   // common d_alpha d_mu coefficient

  const WeylElement& operator[](std::size_t i) const { return images.at(i); }
  /// omega of a coordinate vector in the so(3,2) basis.
  WeylElement of(const lie::VectorG& coords) const;
  std::string convention() const;
};

/// Derivation action of a k-element: X -> -sum_ij X_ij z_j d_i.
WeylElement omega_compact(const lie::MatrixG& x);

/// Solves omega(p_{alpha mu}) = a z_alpha z_mu + b d_alpha d_mu from the
/// bracket constraints (k-p pairs first, then p-p pairs), fixing the gauge
/// a(p14). Throws NoSolution or UnderdeterminedAfterGauge.
OmegaMap build_omega_so32(const GaussRational& gauge = default_gauge());

/// Shared instance for the default gauge.
const OmegaMap& default_omega();

struct BracketFailure {
  std::size_t i;
  std::size_t j;
};

/// Unordered pairs i < j where [omega(b_i), omega(b_j)] != omega([b_i, b_j]).
std::vector<BracketFailure> bracket_failures(const OmegaMap& om);

struct DualSl2 {
  WeylElement e;
  WeylElement f;
  WeylElement h;
  std::size_t centralizer_dim = 0;
};

/// Centralizer of omega(so(3,2)) inside span{X_a, X_m, Y_a, Y_m, H_a, H_m}.
/// Throws CentralizerDimensionUnexpected unless it is 3-dimensional.
DualSl2 dual_sl2(const OmegaMap& om);

}  // namespace humbert::weyl
