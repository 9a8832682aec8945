#include "humbert/exact/algebra.hpp"

#include <cmath>
#include <sstream>

namespace humbert::exact {

namespace {

std::string triple_name(const AlgebraSpec& a, std::size_t i, std::size_t j, std::size_t k) {
  return "(" + a.label(i) + ", " + a.label(j) + ", " + a.label(k) + ")";
}

VectorQ unit_vector(std::size_t n, std::size_t k) {
  VectorQ v(n, Rational(0));
  v[k] = Rational(1);
  return v;
}

}  // namespace

AlgebraPtr AlgebraSpec::create(std::vector<std::string> labels, Table table,
                               std::vector<std::complex<double>> embedding) {
  std::shared_ptr<AlgebraSpec> a(new AlgebraSpec(std::move(labels), std::move(table), std::move(embedding)));
  a->validate();
  return a;
}

void AlgebraSpec::validate() const {
  const std::size_t n = labels_.size();
  if (n == 0) throw Error(ErrorCode::BadAlgebraTable, "algebra dimension must be positive");
  if (table_.size() != n) throw Error(ErrorCode::BadAlgebraTable, "table has wrong number of rows");
  for (const auto& row : table_) {
    if (row.size() != n) throw Error(ErrorCode::BadAlgebraTable, "table row has wrong length");
    for (const auto& v : row)
      if (v.size() != n) throw Error(ErrorCode::BadAlgebraTable, "table entry has wrong length");
  }
  if (embedding_.size() != n) throw Error(ErrorCode::BadAlgebraTable, "embedding needs one value per basis element");

  for (std::size_t j = 0; j < n; ++j) {
    const VectorQ ej = unit_vector(n, j);
    if (table_[0][j] != ej || table_[j][0] != ej)
      throw Error(ErrorCode::BadUnit, "e0 is not a unit on " + triple_name(*this, 0, j, 0));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (table_[i][j] != table_[j][i])
        throw Error(ErrorCode::NonCommutative, "basis pair (" + labels_[i] + ", " + labels_[j] + ")");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const VectorQ left = multiply(table_[i][j], unit_vector(n, k));
        const VectorQ right = multiply(unit_vector(n, i), table_[j][k]);
        if (left != right) throw Error(ErrorCode::NonAssociative, "basis triple " + triple_name(*this, i, j, k));
      }
}

VectorQ AlgebraSpec::multiply(const VectorQ& x, const VectorQ& y) const {
  const std::size_t n = dim();
  VectorQ out(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const Rational xy = x[i] * y[j];
      const VectorQ& e = table_[i][j];
      for (std::size_t k = 0; k < n; ++k)
        if (!e[k].is_zero()) out[k] += xy * e[k];
    }
  }
  return out;
}

AlgebraPtr AlgebraSpec::rationals() {
  static const AlgebraPtr q = create({"1"}, {{{Rational(1)}}}, {{1.0, 0.0}});
  return q;
}

AlgebraPtr AlgebraSpec::gaussian() {
  static const AlgebraPtr qi = [] {
    const VectorQ one{1, 0}, i{0, 1}, minus_one{-1, 0};
    return create({"1", "i"}, {{one, i}, {i, minus_one}}, {{1.0, 0.0}, {0.0, 1.0}});
  }();
  return qi;
}

AlgebraPtr AlgebraSpec::gaussian_sqrt2() {
  static const AlgebraPtr a = [] {
    auto v = [](long c0, long c1, long c2, long c3) { return VectorQ{c0, c1, c2, c3}; };
    const Table t = {
        {v(1, 0, 0, 0), v(0, 1, 0, 0), v(0, 0, 1, 0), v(0, 0, 0, 1)},
        {v(0, 1, 0, 0), v(-1, 0, 0, 0), v(0, 0, 0, 1), v(0, 0, -1, 0)},
        {v(0, 0, 1, 0), v(0, 0, 0, 1), v(2, 0, 0, 0), v(0, 2, 0, 0)},
        {v(0, 0, 0, 1), v(0, 0, -1, 0), v(0, 2, 0, 0), v(-2, 0, 0, 0)},
    };
    const double r2 = std::sqrt(2.0);
    return create({"1", "i", "s", "is"}, t, {{1.0, 0.0}, {0.0, 1.0}, {r2, 0.0}, {0.0, r2}});
  }();
  return a;
}

AlgebraElement::AlgebraElement(AlgebraPtr algebra, VectorQ coords)
    : algebra_(std::move(algebra)), coords_(std::move(coords)) {
  if (!algebra_) throw Error(ErrorCode::BadAlgebraTable, "element without algebra");
  if (coords_.size() != algebra_->dim()) throw Error(ErrorCode::DimensionMismatch, "element coordinate count");
}

AlgebraElement AlgebraElement::scalar(const AlgebraPtr& algebra, const Rational& value) {
  VectorQ c(algebra->dim(), Rational(0));
  c[0] = value;
  return {algebra, std::move(c)};
}

AlgebraElement AlgebraElement::basis(const AlgebraPtr& algebra, std::size_t k) {
  return {algebra, unit_vector(algebra->dim(), k)};
}

bool AlgebraElement::is_zero() const {
  for (const Rational& c : coords_)
    if (!c.is_zero()) return false;
  return true;
}

MatrixQ AlgebraElement::multiplication_matrix() const {
  const std::size_t n = algebra_->dim();
  MatrixQ m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const VectorQ col = algebra_->multiply(coords_, unit_vector(n, j));
    for (std::size_t i = 0; i < n; ++i) m(i, j) = col[i];
  }
  return m;
}

AlgebraElement AlgebraElement::inverse() const {
  const std::size_t n = algebra_->dim();
  const VectorQ one = unit_vector(n, 0);
  auto x = solve(multiplication_matrix(), std::span<const Rational>(one));
  if (!x) throw Error(ErrorCode::DivisionByZero, "element " + str() + " is not invertible");
  return {algebra_, std::move(*x)};
}

std::complex<double> AlgebraElement::to_complex() const {
  std::complex<double> z{0.0, 0.0};
  for (std::size_t k = 0; k < coords_.size(); ++k) z += coords_[k].to_double() * algebra_->embedding(k);
  return z;
}

std::string AlgebraElement::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    if (coords_[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << coords_[k].str();
    if (k != 0) os << "*" << algebra_->label(k);
  }
  if (first) os << "0";
  return os.str();
}

void AlgebraElement::require_same(const AlgebraElement& o) const {
  if (algebra_ != o.algebra_) throw Error(ErrorCode::MixedAlgebras, "operands live in different algebras");
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  require_same(o);
  for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] += o.coords_[k];
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  require_same(o);
  for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] -= o.coords_[k];
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const AlgebraElement& o) {
  require_same(o);
  coords_ = algebra_->multiply(coords_, o.coords_);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& s) {
  for (Rational& c : coords_) c *= s;
  return *this;
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement r = *this;
  for (Rational& c : r.coords_) c = -c;
  return r;
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  a.require_same(b);
  return a.coords_ == b.coords_;
}

MatrixQ restrict_scalars(const std::vector<AlgebraElement>& coefficients) {
  if (coefficients.empty()) return MatrixQ();
  const AlgebraPtr& alg = coefficients.front().algebra();
  for (const auto& c : coefficients)
    if (c.algebra() != alg) throw Error(ErrorCode::MixedAlgebras, "coefficients live in different algebras");
  MatrixQ m(alg->dim(), coefficients.size());
  for (std::size_t j = 0; j < coefficients.size(); ++j)
    for (std::size_t k = 0; k < alg->dim(); ++k) m(k, j) = coefficients[j].coords()[k];
  return m;
}

Rational rational_from_json(const nlohmann::json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw Error(ErrorCode::ParseError, "expected a rational string or integer, got " + j.dump());
}

nlohmann::json to_json(const Rational& r) { return r.str(); }

VectorQ vector_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "expected an array of rationals");
  VectorQ v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

nlohmann::json to_json(const VectorQ& v) {
  nlohmann::json j = nlohmann::json::array();
  for (const Rational& x : v) j.push_back(x.str());
  return j;
}

nlohmann::json to_json(const MatrixQ& m) {
  nlohmann::json j = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) j.push_back(to_json(m.row(i)));
  return j;
}

MatrixQ matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "expected an array of rows");
  std::vector<VectorQ> rows;
  for (const auto& r : j) rows.push_back(vector_from_json(r));
  return MatrixQ::from_rows(rows);
}

AlgebraPtr algebra_from_json(const nlohmann::json& j) {
  try {
    const std::size_t dim = j.at("dim").get<std::size_t>();
    std::vector<std::string> labels = j.at("labels").get<std::vector<std::string>>();
    if (labels.size() != dim) throw Error(ErrorCode::BadAlgebraTable, "labels do not match dim");
    AlgebraSpec::Table table;
    for (const auto& row : j.at("table")) {
      std::vector<VectorQ> r;
      for (const auto& entry : row) r.push_back(vector_from_json(entry));
      table.push_back(std::move(r));
    }
    std::vector<std::complex<double>> emb;
    for (const auto& z : j.at("embedding")) {
      if (!z.is_array() || z.size() != 2) throw Error(ErrorCode::ParseError, "embedding entries are [re, im]");
      emb.emplace_back(z[0].get<double>(), z[1].get<double>());
    }
    return AlgebraSpec::create(std::move(labels), std::move(table), std::move(emb));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

nlohmann::json to_json(const AlgebraSpec& a) {
  nlohmann::json table = nlohmann::json::array();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t k = 0; k < a.dim(); ++k) row.push_back(to_json(a.product(i, k)));
    table.push_back(row);
  }
  nlohmann::json emb = nlohmann::json::array();
  for (std::size_t i = 0; i < a.dim(); ++i) emb.push_back({a.embedding(i).real(), a.embedding(i).imag()});
  nlohmann::json labels = nlohmann::json::array();
  for (std::size_t i = 0; i < a.dim(); ++i) labels.push_back(a.label(i));
  return {{"dim", a.dim()}, {"labels", labels}, {"table", table}, {"embedding", emb}};
}

}  // namespace humbert::exact
