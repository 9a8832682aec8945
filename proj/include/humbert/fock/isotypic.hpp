#pragma once

#include <array>
#include <vector>

#include "humbert/exact/matrix.hpp"
#include "humbert/ktype.hpp"

namespace humbert::fock {

using exact::GaussRational;
using exact::Rational;
using exact::MatrixG;
using exact::VectorG;

/// Matrices of e12, e13, e23, e45 acting on some finite-dimensional space.
using KAction = std::array<MatrixG, 4>;

struct IsotypicPiece {
  KType ktype;
  std::vector<VectorG> basis;
};

/// Simultaneous eigenspaces of e45 (eigenvalue i*n) and the SO(3) Casimir
/// -(e12^2 + e13^2 + e23^2) (eigenvalue l(l+1)). Only characters with
/// |n| <= max_char and spins l <= max_spin are searched; throws
/// DimensionMismatch if the pieces do not exhaust the space.
std::vector<IsotypicPiece> isotypic_decompose(const KAction& action, int max_char, int max_spin);

}  // namespace humbert::fock
