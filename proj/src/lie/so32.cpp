#include "humbert/lie/so32.hpp"


#include "humbert/error.hpp"

namespace humbert::lie {

namespace {

MatrixG unit_skew(int i, int j) {
  MatrixG m(5, 5);
  m(i, j) = 1;
  m(j, i) = -1;
  return m;
}

MatrixG unit_sym(int i, int j) {
  MatrixG m(5, 5);
  m(i, j) = 1;
  m(j, i) = 1;
  return m;
}

MatrixG from_rows(const std::vector<std::vector<GaussRational>>& rows) { return MatrixG::from_rows(rows); }

}  // namespace

const So32Basis& so32_basis() {
  static const So32Basis b = [] {
    So32Basis out;
    const std::array<std::pair<int, int>, 4> k{{{0, 1}, {0, 2}, {1, 2}, {3, 4}}};
    std::size_t n = 0;
    for (auto [i, j] : k) {
      out.labels[n] = "e" + std::to_string(i + 1) + std::to_string(j + 1);
      out.elements[n++] = unit_skew(i, j);
    }
    for (int a = 0; a < 3; ++a)
      for (int m = 3; m < 5; ++m) {
        out.labels[n] = "p" + std::to_string(a + 1) + std::to_string(m + 1);
        out.elements[n++] = unit_sym(a, m);
      }
    return out;
  }();
  return b;
}

std::size_t p_index(int alpha, int mu) {
  if (alpha < 1 || alpha > 3 || mu < 4 || mu > 5) throw Error(ErrorCode::DimensionMismatch, "p_index range");
  return kCompactDim + static_cast<std::size_t>(2 * (alpha - 1) + (mu - 4));
}

MatrixG bracket(const MatrixG& x, const MatrixG& y) { return x * y - y * x; }

bool in_so32(const MatrixG& x) {
  if (x.rows() != 5 || x.cols() != 5) return false;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      const bool same_block = (i < 3) == (j < 3);
      const GaussRational expected = same_block ? -x(j, i) : x(j, i);
      if (!(x(i, j) == expected)) return false;
    }
  return true;
}

CartanParts cartan_split(const MatrixG& x) {
  if (!in_so32(x)) throw Error(ErrorCode::NotInAlgebra, "matrix violates the so(3,2) block symmetries");
  CartanParts parts{MatrixG(5, 5), MatrixG(5, 5)};
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) ((i < 3) == (j < 3) ? parts.k : parts.p)(i, j) = x(i, j);
  return parts;
}

VectorG coordinates(const MatrixG& x) {
  if (!in_so32(x)) throw Error(ErrorCode::NotInAlgebra, "matrix violates the so(3,2) block symmetries");
  return {x(0, 1), x(0, 2), x(1, 2), x(3, 4), x(0, 3), x(0, 4), x(1, 3), x(1, 4), x(2, 3), x(2, 4)};
}

MatrixG from_coordinates(const VectorG& c) {
  if (c.size() != kAlgebraDim) throw Error(ErrorCode::DimensionMismatch, "so(3,2) coordinate vector");
  MatrixG m(5, 5);
  const auto& b = so32_basis();
  for (std::size_t i = 0; i < kAlgebraDim; ++i)
    if (!c[i].is_zero()) m += b.elements[i] * c[i];
  return m;
}

const std::vector<std::vector<VectorG>>& structure_constants() {
  static const std::vector<std::vector<VectorG>> c = [] {
    const auto& b = so32_basis();
    std::vector<std::vector<VectorG>> out(kAlgebraDim, std::vector<VectorG>(kAlgebraDim));
    for (std::size_t i = 0; i < kAlgebraDim; ++i)
      for (std::size_t j = 0; j < kAlgebraDim; ++j) out[i][j] = coordinates(bracket(b.elements[i], b.elements[j]));
    return out;
  }();
  return c;
}

MatrixG torus(const Rational& x1, const Rational& x2) {
  return unit_skew(0, 1) * GaussRational(x1) + unit_skew(3, 4) * GaussRational(x2);
}

std::string Root::str() const {
  auto term = [](int n, const char* name) -> std::string {
    if (n == 0) return "";
    if (n == 1) return name;
    if (n == -1) return std::string("-") + name;
    return std::to_string(n) + name;
  };
  if (n1 == 0 && n2 == 0) return "0";
  std::string s = term(n1, "alpha");
  const std::string t = term(n2, "beta");
  if (!s.empty() && !t.empty() && t.front() != '-') s += "+";
  return s + t;
}

GaussRational evaluate(const Root& r, const Rational& x1, const Rational& x2) {
  return {Rational(0), Rational(r.n1) * x1 + Rational(r.n2) * x2};
}

MatrixG conj(const MatrixG& m) {
  MatrixG c = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) c(i, j) = m(i, j).conj();
  return c;
}

const MatrixG& RootDatum::vector(const Root& r) const {
  for (std::size_t k = 0; k < roots.size(); ++k)
    if (roots[k] == r) return vectors[k];
  throw Error(ErrorCode::NotInAlgebra, "no root " + r.str());
}

const RootDatum& root_datum() {
  static const RootDatum d = [] {
    const GaussRational i = GaussRational::i();
    const GaussRational o(0), l(1), m(-1), mi = -i;
    const MatrixG xa = from_rows({{o, o, l, o, o}, {o, o, i, o, o}, {m, mi, o, o, o}, {o, o, o, o, o}, {o, o, o, o, o}});
    const MatrixG xb = from_rows({{o, o, o, o, o}, {o, o, o, o, o}, {o, o, o, i, m}, {o, o, i, o, o}, {o, o, m, o, o}});
    const MatrixG xapb =
        from_rows({{o, o, o, mi, l}, {o, o, o, l, i}, {o, o, o, o, o}, {mi, l, o, o, o}, {l, i, o, o, o}});
    const MatrixG xamb = from_rows({{o, o, o, i, l}, {o, o, o, m, i}, {o, o, o, o, o}, {i, m, o, o, o}, {l, i, o, o, o}});
    RootDatum out;
    const std::vector<std::pair<Root, MatrixG>> positive{{{1, 0}, xa}, {{0, 1}, xb}, {{1, 1}, xapb}, {{1, -1}, xamb}};
    for (const auto& [r, v] : positive) {
      out.roots.push_back(r);
      out.vectors.push_back(v);
      out.roots.push_back(-r);
      out.vectors.push_back(conj(v));
    }
    return out;
  }();
  return d;
}

}  // namespace humbert::lie
