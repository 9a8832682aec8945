#pragma once

#include <complex>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "humbert/exact/matrix.hpp"
#include "humbert/exact/rational.hpp"

namespace humbert::exact {

class AlgebraSpec;
using AlgebraPtr = std::shared_ptr<const AlgebraSpec>;

/// Finite-dimensional commutative associative Q-algebra given by structure
/// constants: e_i * e_j = sum_k table[i][j][k] e_k, with e_0 the unit.
class AlgebraSpec {
 public:
  using Table = std::vector<std::vector<VectorQ>>;

  /// Validates the table on every basis pair and triple.
  static AlgebraPtr create(std::vector<std::string> labels, Table table,
                           std::vector<std::complex<double>> embedding);

  static AlgebraPtr rationals();
  /// Q(i), basis {1, i}.
  static AlgebraPtr gaussian();
  /// Q(i, sqrt 2), basis {1, i, s, is} with s^2 = 2.
  static AlgebraPtr gaussian_sqrt2();

  std::size_t dim() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const VectorQ& product(std::size_t i, std::size_t j) const { return table_[i][j]; }
  std::complex<double> embedding(std::size_t i) const { return embedding_[i]; }

  VectorQ multiply(const VectorQ& x, const VectorQ& y) const;

 private:
  AlgebraSpec(std::vector<std::string> labels, Table table, std::vector<std::complex<double>> embedding)
      : labels_(std::move(labels)), table_(std::move(table)), embedding_(std::move(embedding)) {}
  void validate() const;

  std::vector<std::string> labels_;
  Table table_;
  std::vector<std::complex<double>> embedding_;
};

class AlgebraElement {
 public:
  AlgebraElement(AlgebraPtr algebra, VectorQ coords);

  static AlgebraElement scalar(const AlgebraPtr& algebra, const Rational& value);
  static AlgebraElement basis(const AlgebraPtr& algebra, std::size_t k);

  const AlgebraPtr& algebra() const { return algebra_; }
  const VectorQ& coords() const { return coords_; }
  bool is_zero() const;

  /// Matrix of y -> x*y in the basis (column j = x * e_j).
  MatrixQ multiplication_matrix() const;
  AlgebraElement inverse() const;
  std::complex<double> to_complex() const;
  std::string str() const;

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(const AlgebraElement& o);
  AlgebraElement& operator*=(const Rational& s);

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(AlgebraElement a, const AlgebraElement& b) { return a *= b; }
  friend AlgebraElement operator*(AlgebraElement a, const Rational& s) { return a *= s; }
  friend AlgebraElement operator*(const Rational& s, AlgebraElement a) { return a *= s; }
  AlgebraElement operator-() const;

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

 private:
  void require_same(const AlgebraElement& o) const;

  AlgebraPtr algebra_;
  VectorQ coords_;
};

/// Splits sum_j coefficients[j] * x_j = 0 (x_j rational unknowns) into one
/// rational equation per basis element. Row k, column j is coord k of
/// coefficients[j].
MatrixQ restrict_scalars(const std::vector<AlgebraElement>& coefficients);

Rational rational_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Rational& r);
VectorQ vector_from_json(const nlohmann::json& j);
nlohmann::json to_json(const VectorQ& v);
nlohmann::json to_json(const MatrixQ& m);
MatrixQ matrix_from_json(const nlohmann::json& j);

/// {dim, labels, table, embedding}; table[i][j] is a coordinate vector of
/// "p/q" strings, embedding a list of [re, im] pairs.
AlgebraPtr algebra_from_json(const nlohmann::json& j);
nlohmann::json to_json(const AlgebraSpec& a);

}  // namespace humbert::exact
