#pragma once

#include <array>
#include <string>
#include <vector>

#include "humbert/exact/matrix.hpp"

namespace humbert::lie {

using exact::GaussRational;
using exact::MatrixG;
using exact::Rational;
using exact::VectorG;

/// so(3,2) as 5x5 matrices [[A, B], [B^t, D]] with A, D skew. Indices 0..2
/// are the alpha (compact SO(3)) directions, 3..4 the mu (SO(2)) directions.
constexpr std::size_t kAlgebraDim = 10;
constexpr std::size_t kCompactDim = 4;
constexpr std::size_t kNoncompactDim = 6;

/// Basis e12, e13, e23, e45 of k (E_ij - E_ji) followed by
/// p14, p15, p24, p25, p34, p35 of p (E_ij + E_ji), 1-based labels.
struct So32Basis {
  std::array<std::string, kAlgebraDim> labels;
  std::array<MatrixG, kAlgebraDim> elements;
};

const So32Basis& so32_basis();

/// Index into so32_basis() of P_{alpha mu}, alpha in 1..3, mu in 4..5.
std::size_t p_index(int alpha, int mu);

MatrixG bracket(const MatrixG& x, const MatrixG& y);
bool in_so32(const MatrixG& x);

struct CartanParts {
  MatrixG k;
  MatrixG p;
};

/// Throws NotInAlgebra when the block symmetries fail.
CartanParts cartan_split(const MatrixG& x);

/// Coordinates in so32_basis(); throws NotInAlgebra.
VectorG coordinates(const MatrixG& x);
MatrixG from_coordinates(const VectorG& c);

/// c[i][j] = coordinates of [b_i, b_j].
const std::vector<std::vector<VectorG>>& structure_constants();

/// Torus element [x1, x2] = x1 e12 + x2 e45.
MatrixG torus(const Rational& x1, const Rational& x2);

/// Root n1*alpha + n2*beta with gamma([x1, x2]) = i(n1 x1 + n2 x2).
struct Root {
  int n1 = 0;
  int n2 = 0;

  bool compact() const { return n2 == 0; }
  /// Noncompact roots split by the sign of the beta coefficient.
  bool in_p_plus() const { return n2 > 0; }
  bool in_p_minus() const { return n2 < 0; }
  Root operator-() const { return {-n1, -n2}; }
  std::string str() const;

  friend auto operator<=>(const Root&, const Root&) = default;
};

GaussRational evaluate(const Root& r, const Rational& x1, const Rational& x2);

struct RootDatum {
  std::vector<Root> roots;
  std::vector<MatrixG> vectors;

  const MatrixG& vector(const Root& r) const;
};

/// The eight roots with the displayed root vectors for alpha, beta,
/// alpha+beta, alpha-beta; negatives are complex conjugates.
const RootDatum& root_datum();

MatrixG conj(const MatrixG& m);

}  // namespace humbert::lie
