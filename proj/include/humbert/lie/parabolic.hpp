#pragma once

#include <string>
#include <utility>
#include <vector>

#include "humbert/ktype.hpp"
#include "humbert/lie/so32.hpp"

namespace humbert::lie {

using Bidegree = std::pair<int, int>;

/// Parameters x = [-i x1, i x2] in i*t are normalized to the real pair
/// (x1, x2); ad(x) then acts on g_{n1 alpha + n2 beta} by n1*x1 - n2*x2.
Rational ad_eigenvalue(const Root& r, const Rational& x1, const Rational& x2);

struct ParabolicData {
  Rational x1;
  Rational x2;
  int family = 0;  // 1..5 in the order of the cohomological table
  std::string levi_label;
  std::vector<Root> l_roots;  // roots with eigenvalue 0
  std::vector<Root> u_roots;  // roots with positive eigenvalue
  int r_plus = 0;
  int r_minus = 0;
  std::vector<Bidegree> bidegrees;  // table entries for the family

  std::size_t dim_l() const { return 2 + l_roots.size(); }
  std::size_t dim_u() const { return u_roots.size(); }
  std::vector<MatrixG> l_basis() const;
  std::vector<MatrixG> u_basis() const;
};

ParabolicData parabolic_from(const Rational& x1, const Rational& x2);

/// Highest weight 2 rho(u cap p) converted to an SO(3) x SO(2) type.
/// Throws WeightNotDominant if the weight is not dominant for the compact
/// positive root chosen inside q.
KType vz_ktype(const ParabolicData& q);

/// Torus weight 2 rho(u cap p) as (n1, n2).
Root two_rho_u_p(const ParabolicData& q);

/// dim Hom_{l cap k}(wedge^{2j}(l cap p), C) when p - R+ = q - R- = j >= 0, else 0.
int cohomology_dim(const ParabolicData& q, int p, int qq);

/// Bidegrees where cohomology_dim is nonzero, found by scanning 0..3 x 0..3.
std::vector<Bidegree> computed_bidegrees(const ParabolicData& q);

/// One sample parameter for each family row, with both signs of x2 where the
/// table distinguishes them.
std::vector<std::pair<Rational, Rational>> table_sample_points();

}  // namespace humbert::lie
