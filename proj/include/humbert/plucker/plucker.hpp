#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "humbert/exact/matrix.hpp"

namespace humbert::plucker {

using exact::MatrixQ;
using exact::Rational;
using exact::VectorQ;

/// Wedge coordinates are ordered (12, 13, 14, 23, 24, 34), zero-based pairs.
constexpr std::array<std::pair<int, int>, 6> kWedgePairs{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

/// Delta on the rescaled dual lattice {f1, f2/2, f3, f4, f5} is this multiple
/// of b0(M, M).
constexpr long kDualLatticeScale = 2;

/// 2x2 minors p_ij of the plane x ^ y.
VectorQ wedge_of(const VectorQ& x, const VectorQ& y);

/// Action of g on wedge^2 coordinates; throws Singular when det g = 0.
MatrixQ wedge_square(const MatrixQ& g);

/// xi ^ eta = b(xi, eta) e1^e2^e3^e4.
Rational b_form(const VectorQ& xi, const VectorQ& eta);

/// 1/2 Tr(M Psi N Psi) - 1/4 Tr(M Psi) Tr(N Psi).
Rational b0_form(const MatrixQ& m, const MatrixQ& n);
/// m12 n34 + m34 n12 + m23 n14 + m14 n23 - m24 n13 - m13 n24.
Rational b0_coordinates(const MatrixQ& m, const MatrixQ& n);

/// R_xi with r_ij = xi_ij for i < j.
MatrixQ skew_from_wedge(const VectorQ& xi);
/// Inverse of skew_from_wedge; throws NotSymmetric unless m is skew.
VectorQ wedge_from_skew(const MatrixQ& m);

/// Psi = [[0, 1], [-1, 0]] in 2x2 blocks, and psi = e1^e3 + e2^e4.
MatrixQ psi_matrix();
VectorQ psi_wedge();

/// Q(p) = p12 p34 - p13 p24 + p14 p23.
Rational plucker_q(const VectorQ& p);
/// q(p) = p13^2 + p12 p34 + p14 p23.
Rational isotropic_q(const VectorQ& p);
bool plucker_quadric_check(const VectorQ& x, const VectorQ& y);

/// Coordinates (a, b, c, d, e) of M in the basis {f1, f2/2, f3, f4, f5} of
/// Psi-perp; throws NotOrthogonalToPsi unless m13 + m24 = 0.
VectorQ project_psi_perp(const MatrixQ& m);
/// a f1 + b f2/2 + c f3 + d f4 + e f5 as a skew matrix.
MatrixQ embed_five(const VectorQ& f);

/// b^2 - 4ac - 4de.
Rational delta(const VectorQ& f);
/// Gram matrix of the polarization of delta (x^t G x = delta(x)).
MatrixQ delta_gram();
Rational delta_pairing(const VectorQ& x, const VectorQ& y);

bool is_symplectic(const MatrixQ& g);

/// 5x5 matrix of M -> g M g^t on Psi-perp in the coordinates of
/// project_psi_perp; throws NotSymplectic.
MatrixQ iso_rho(const MatrixQ& g);

/// J = Psi and the transvections [[1, S], [0, 1]], [[1, 0], [S, 1]] for
/// S in {E11, E22, E12 + E21}, each with its inverse.
struct NamedMatrix {
  std::string name;
  MatrixQ matrix;
};
std::vector<NamedMatrix> symplectic_generators();

}  // namespace humbert::plucker
