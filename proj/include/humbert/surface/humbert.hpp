#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "humbert/exact/algebra.hpp"

namespace humbert::surface {

using exact::AlgebraElement;
using exact::AlgebraPtr;
using exact::MatrixQ;
using exact::Rational;
using exact::VectorQ;

constexpr double kPositivityTolerance = 1e-9;

/// a*tau1 + b*tau12 + c*tau2 + d*(tau12^2 - tau1*tau2) + e = 0.
struct SingularRelation {
  std::int64_t a = 0, b = 0, c = 0, d = 0, e = 0;

  std::int64_t discriminant() const;
  std::int64_t content() const;
  bool is_primitive() const { return content() == 1; }

  /// Coordinates in the rescaled dual basis {f1, f2/2, f3, f4, f5} of
  /// Psi-perp: (d, b, e, a, c).
  VectorQ five_coords() const;
  static SingularRelation from_five_coords(const VectorQ& f);

  std::string str() const;
  friend bool operator==(const SingularRelation&, const SingularRelation&) = default;
};

std::int64_t discriminant(const SingularRelation& rel);

/// (1, k, (k^2 - delta)/4, 0, 0) with k = delta mod 2; throws BadDiscriminant
/// unless delta > 0 and delta = 0, 1 mod 4.
SingularRelation normal_form(std::int64_t delta);

/// Relation-coordinate vectors (a, b, c, d, e) <-> five coordinates.
VectorQ relation_to_five(const VectorQ& rel);
VectorQ five_to_relation(const VectorQ& f);

class SiegelPointExact {
 public:
  /// Throws MixedAlgebras or NotInSiegelSpace.
  SiegelPointExact(AlgebraElement tau1, AlgebraElement tau2, AlgebraElement tau12);

  /// {algebra, tau1, tau2, tau12}; the algebra is an AlgebraSpec object or
  /// one of the names "Q", "Q(i)", "Q(i,sqrt2)".
  static SiegelPointExact from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  const AlgebraPtr& algebra() const { return tau1_.algebra(); }
  const AlgebraElement& tau1() const { return tau1_; }
  const AlgebraElement& tau2() const { return tau2_; }
  const AlgebraElement& tau12() const { return tau12_; }

  Eigen::Matrix2cd numeric() const;

 private:
  AlgebraElement tau1_, tau2_, tau12_;
};

/// Left side of the singular relation evaluated exactly.
AlgebraElement relation_value(const SiegelPointExact& tau, const SingularRelation& rel);
bool membership(const SiegelPointExact& tau, const SingularRelation& rel);

struct NsResult {
  /// Q-basis of rational relations, as relation coordinates (a, b, c, d, e).
  std::vector<VectorQ> t11_basis;
  std::size_t kernel_dim() const { return t11_basis.size(); }
  /// 1 + kernel_dim; the extra class is psi itself.
  std::size_t ns_rank() const { return 1 + t11_basis.size(); }
};

NsResult t11_and_ns_rank(const SiegelPointExact& tau);

using ZMatrix = Eigen::Matrix<double, 3, 5>;

struct HodgeFiber {
  NsResult ns;
  /// Orthonormal rows spanning Z_tau in five coordinates.
  ZMatrix z_tau;
  /// Eigenvalues of the delta form restricted to Z_tau.
  Eigen::Vector3d delta_eigenvalues;
};

/// Real solutions (five coordinates) of the singular relation at the numeric
/// point tau; throws NumericalRankDeficiency unless the solution space is
/// 3-dimensional.
ZMatrix z_tau_numeric(const Eigen::Matrix2cd& tau);
HodgeFiber z_tau(const SiegelPointExact& tau);

/// Orthonormal basis (rows) of the row space of m.
Eigen::MatrixXd orthonormal_rows(const Eigen::MatrixXd& m);
/// Spectral norm of the difference of orthogonal projectors.
double subspace_distance(const Eigen::MatrixXd& rows1, const Eigen::MatrixXd& rows2);
/// Distance from v / |v| to the row space of rows.
double distance_to_subspace(const Eigen::VectorXd& v, const Eigen::MatrixXd& rows);

/// (A tau + B)(C tau + D)^-1.
Eigen::Matrix2cd act_numeric(const MatrixQ& g, const Eigen::Matrix2cd& tau);
/// Same, computed in the algebra of tau; g must be symplectic.
SiegelPointExact act_exact(const MatrixQ& g, const SiegelPointExact& tau);

/// Matrix by which g moves Z_tau in five coordinates: iso_rho(g^-t).
MatrixQ z_action(const MatrixQ& g);

Eigen::MatrixXd to_eigen(const MatrixQ& m);

}  // namespace humbert::surface
