#include "humbert/lie/parabolic.hpp"

#include "humbert/error.hpp"
#include "humbert/lie/exterior.hpp"

namespace humbert::lie {

namespace {

struct Family {
  int index;
  std::string levi;
  std::vector<Bidegree> bidegrees;
};

Family classify(const Rational& x1, const Rational& x2) {
  const Rational a1 = x1.abs(), a2 = x2.abs();
  const bool neg = x2.sign() < 0;
  if (a1.is_zero() && a2.is_zero()) return {1, "SO₀(3,2)", {{0, 0}, {1, 1}, {2, 2}, {3, 3}}};
  if (a2.is_zero()) return {2, "S¹×SO₀(1,2)", {{1, 1}, {2, 2}}};
  if (a1 == a2) return {3, "U(1,1)", neg ? std::vector<Bidegree>{{2, 0}, {3, 1}} : std::vector<Bidegree>{{0, 2}, {1, 3}}};
  if (a1 > a2) return {4, "S¹×U(0,1)", {neg ? Bidegree{2, 1} : Bidegree{1, 2}}};
  // |x2| > |x1|; with x1 = 0 the compact roots stay in the Levi factor.
  return {5, a1.is_zero() ? "SO(3)×SO(2)" : "S¹×U(0,1)", {neg ? Bidegree{3, 0} : Bidegree{0, 3}}};
}

// Coordinates of a complexified so(3,2) element in the basis torus(1,0),
// torus(0,1), then the given root vectors.
VectorG root_coordinates(const MatrixG& x, const std::vector<MatrixG>& span) {
  std::vector<VectorG> cols;
  for (const auto& m : span) cols.push_back(m.data());
  const auto c = exact::coordinates_in_span(cols, x.data());
  if (!c) throw Error(ErrorCode::NotInAlgebra, "bracket leaves the expected subspace");
  return *c;
}

}  // namespace

Rational ad_eigenvalue(const Root& r, const Rational& x1, const Rational& x2) {
  return Rational(r.n1) * x1 - Rational(r.n2) * x2;
}

ParabolicData parabolic_from(const Rational& x1, const Rational& x2) {
  ParabolicData q;
  q.x1 = x1;
  q.x2 = x2;
  for (const Root& r : root_datum().roots) {
    const int s = ad_eigenvalue(r, x1, x2).sign();
    if (s == 0) q.l_roots.push_back(r);
    if (s > 0) {
      q.u_roots.push_back(r);
      if (r.in_p_plus()) ++q.r_plus;
      if (r.in_p_minus()) ++q.r_minus;
    }
  }
  const Family f = classify(x1, x2);
  q.family = f.index;
  q.levi_label = f.levi;
  q.bidegrees = f.bidegrees;
  return q;
}

std::vector<MatrixG> ParabolicData::l_basis() const {
  std::vector<MatrixG> out{torus(1, 0), torus(0, 1)};
  for (const Root& r : l_roots) out.push_back(root_datum().vector(r));
  return out;
}

std::vector<MatrixG> ParabolicData::u_basis() const {
  std::vector<MatrixG> out;
  for (const Root& r : u_roots) out.push_back(root_datum().vector(r));
  return out;
}

Root two_rho_u_p(const ParabolicData& q) {
  Root sum{0, 0};
  for (const Root& r : q.u_roots)
    if (!r.compact()) {
      sum.n1 += r.n1;
      sum.n2 += r.n2;
    }
  return sum;
}

KType vz_ktype(const ParabolicData& q) {
  const Root w = two_rho_u_p(q);
  // Positive compact root: the one lying in u, or alpha when both are in l.
  int positive = 1;
  for (const Root& r : q.u_roots)
    if (r.compact()) positive = r.n1;
  if (w.n1 * positive < 0)
    throw Error(ErrorCode::WeightNotDominant, "2rho(u cap p) = " + w.str() + " is not dominant");
  return KType{2 * std::abs(w.n1) + 1, w.n2};
}

int cohomology_dim(const ParabolicData& q, int p, int qq) {
  const int j = p - q.r_plus;
  if (j < 0 || qq - q.r_minus != j) return 0;
  std::vector<MatrixG> lp, lk{torus(1, 0), torus(0, 1)};
  for (const Root& r : q.l_roots) (r.compact() ? lk : lp).push_back(root_datum().vector(r));
  const std::size_t n = lp.size();
  if (static_cast<std::size_t>(2 * j) > n) return 0;
  std::vector<MatrixG> actions;
  for (const MatrixG& k0 : lk) {
    MatrixG a(n, n);
    for (std::size_t col = 0; col < n; ++col) {
      const VectorG c = root_coordinates(bracket(k0, lp[col]), lp);
      for (std::size_t row = 0; row < n; ++row) a(row, col) = c[row];
    }
    actions.push_back(std::move(a));
  }
  return static_cast<int>(wedge_invariants_dim(actions, n, static_cast<std::size_t>(2 * j)));
}

std::vector<Bidegree> computed_bidegrees(const ParabolicData& q) {
  std::vector<Bidegree> out;
  for (int p = 0; p <= 3; ++p)
    for (int qq = 0; qq <= 3; ++qq)
      if (cohomology_dim(q, p, qq) > 0) out.emplace_back(p, qq);
  return out;
}

std::vector<std::pair<Rational, Rational>> table_sample_points() {
  return {{0, 0}, {1, 0}, {1, -1}, {1, 1}, {2, -1}, {2, 1}, {1, -2}, {1, 2}};
}

}  // namespace humbert::lie
