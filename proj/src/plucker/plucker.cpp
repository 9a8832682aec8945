#include "humbert/plucker/plucker.hpp"

#include "humbert/error.hpp"

namespace humbert::plucker {

namespace {

Rational trace(const MatrixQ& m) {
  Rational t(0);
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

void require_size(const VectorQ& v, std::size_t n, const char* what) {
  if (v.size() != n) throw Error(ErrorCode::DimensionMismatch, what);
}

}  // namespace

VectorQ wedge_of(const VectorQ& x, const VectorQ& y) {
  require_size(x, 4, "wedge_of needs 4-vectors");
  require_size(y, 4, "wedge_of needs 4-vectors");
  VectorQ p;
  for (auto [i, j] : kWedgePairs) p.push_back(x[i] * y[j] - x[j] * y[i]);
  return p;
}

MatrixQ wedge_square(const MatrixQ& g) {
  if (g.rows() != 4 || g.cols() != 4) throw Error(ErrorCode::DimensionMismatch, "wedge_square needs a 4x4 matrix");
  if (exact::determinant(g).is_zero()) throw Error(ErrorCode::Singular, "wedge_square of a singular matrix");
  MatrixQ w(6, 6);
  for (std::size_t c = 0; c < 6; ++c) {
    const auto [i, j] = kWedgePairs[c];
    for (std::size_t r = 0; r < 6; ++r) {
      const auto [k, l] = kWedgePairs[r];
      w(r, c) = g(k, i) * g(l, j) - g(k, j) * g(l, i);
    }
  }
  return w;
}

Rational b_form(const VectorQ& x, const VectorQ& y) {
  require_size(x, 6, "wedge vector");
  require_size(y, 6, "wedge vector");
  return x[0] * y[5] + x[5] * y[0] - x[1] * y[4] - x[4] * y[1] + x[2] * y[3] + x[3] * y[2];
}

Rational b0_form(const MatrixQ& m, const MatrixQ& n) {
  const MatrixQ psi = psi_matrix();
  const MatrixQ mp = m * psi, np = n * psi;
  return Rational(1, 2) * trace(mp * np) - Rational(1, 4) * trace(mp) * trace(np);
}

Rational b0_coordinates(const MatrixQ& m, const MatrixQ& n) {
  return m(0, 1) * n(2, 3) + m(2, 3) * n(0, 1) + m(1, 2) * n(0, 3) + m(0, 3) * n(1, 2) - m(1, 3) * n(0, 2) -
         m(0, 2) * n(1, 3);
}

MatrixQ skew_from_wedge(const VectorQ& xi) {
  require_size(xi, 6, "wedge vector");
  MatrixQ m(4, 4);
  for (std::size_t k = 0; k < 6; ++k) {
    const auto [i, j] = kWedgePairs[k];
    m(i, j) = xi[k];
    m(j, i) = -xi[k];
  }
  return m;
}

VectorQ wedge_from_skew(const MatrixQ& m) {
  if (m.rows() != 4 || m.cols() != 4) throw Error(ErrorCode::DimensionMismatch, "skew matrix must be 4x4");
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j)
      if (!(m(i, j) == -m(j, i))) throw Error(ErrorCode::NotSymmetric, "matrix is not skew-symmetric");
  VectorQ xi;
  for (auto [i, j] : kWedgePairs) xi.push_back(m(i, j));
  return xi;
}

MatrixQ psi_matrix() {
  MatrixQ p(4, 4);
  p(0, 2) = 1;
  p(1, 3) = 1;
  p(2, 0) = -1;
  p(3, 1) = -1;
  return p;
}

VectorQ psi_wedge() { return {0, 1, 0, 0, 1, 0}; }

Rational plucker_q(const VectorQ& p) { return p[0] * p[5] - p[1] * p[4] + p[2] * p[3]; }

Rational isotropic_q(const VectorQ& p) { return p[1] * p[1] + p[0] * p[5] + p[2] * p[3]; }

bool plucker_quadric_check(const VectorQ& x, const VectorQ& y) { return plucker_q(wedge_of(x, y)).is_zero(); }

VectorQ project_psi_perp(const MatrixQ& m) {
  const VectorQ xi = wedge_from_skew(m);
  if (!(xi[1] + xi[4]).is_zero()) throw Error(ErrorCode::NotOrthogonalToPsi, "m13 + m24 != 0");
  // m12 = a, m13 = b/2, m34 = -c, m14 = -d, m23 = e
  return {xi[0], Rational(2) * xi[1], -xi[5], -xi[2], xi[3]};
}

MatrixQ embed_five(const VectorQ& f) {
  require_size(f, 5, "five-coordinate vector");
  const Rational half_b = f[1] * Rational(1, 2);
  return skew_from_wedge({f[0], half_b, -f[3], f[4], -half_b, -f[2]});
}

Rational delta(const VectorQ& f) {
  require_size(f, 5, "five-coordinate vector");
  return f[1] * f[1] - Rational(4) * f[0] * f[2] - Rational(4) * f[3] * f[4];
}

MatrixQ delta_gram() {
  MatrixQ g(5, 5);
  g(1, 1) = 1;
  g(0, 2) = g(2, 0) = -2;
  g(3, 4) = g(4, 3) = -2;
  return g;
}

Rational delta_pairing(const VectorQ& x, const VectorQ& y) {
  const MatrixQ g = delta_gram();
  Rational s(0);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j)
      if (!g(i, j).is_zero()) s += x[i] * g(i, j) * y[j];
  return s;
}

bool is_symplectic(const MatrixQ& g) {
  if (g.rows() != 4 || g.cols() != 4) return false;
  return g.transpose() * psi_matrix() * g == psi_matrix();
}

MatrixQ iso_rho(const MatrixQ& g) {
  if (!is_symplectic(g)) throw Error(ErrorCode::NotSymplectic, "g^t Psi g != Psi");
  MatrixQ r(5, 5);
  const MatrixQ gt = g.transpose();
  for (std::size_t j = 0; j < 5; ++j) {
    VectorQ e(5, Rational(0));
    e[j] = 1;
    const VectorQ col = project_psi_perp(g * embed_five(e) * gt);
    for (std::size_t i = 0; i < 5; ++i) r(i, j) = col[i];
  }
  return r;
}

std::vector<NamedMatrix> symplectic_generators() {
  std::vector<NamedMatrix> out;
  const MatrixQ j = psi_matrix();
  out.push_back({"J", j});
  out.push_back({"J^-1", -j});
  const std::array<std::pair<const char*, std::array<long, 4>>, 3> sym{
      {{"E11", {1, 0, 0, 0}}, {"E22", {0, 0, 0, 1}}, {"E12+E21", {0, 1, 1, 0}}}};
  for (const auto& [name, s] : sym)
    for (long sign : {1L, -1L}) {
      MatrixQ upper = MatrixQ::identity(4), lower = MatrixQ::identity(4);
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
          upper(a, 2 + b) = Rational(sign * s[2 * a + b]);
          lower(2 + a, b) = Rational(sign * s[2 * a + b]);
        }
      const std::string suffix = sign > 0 ? "" : "^-1";
      out.push_back({std::string("U(") + name + ")" + suffix, upper});
      out.push_back({std::string("L(") + name + ")" + suffix, lower});
    }
  return out;
}

}  // namespace humbert::plucker
