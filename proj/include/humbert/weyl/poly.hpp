#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "humbert/exact/matrix.hpp"
#include "humbert/exact/rational.hpp"

namespace humbert::weyl {

using exact::GaussRational;
using exact::Rational;

constexpr std::size_t kVars = 5;
using Exp = std::array<std::uint8_t, kVars>;

int total_degree(const Exp& e);
std::string exp_str(const Exp& e);

/// Polynomial in z1..z5 over Q(i); zero coefficients are never stored.
class Poly5 {
 public:
  using Terms = std::map<Exp, GaussRational>;

  Poly5() = default;
  explicit Poly5(const GaussRational& c);

  /// z_{i+1} for i in 0..4.
  static Poly5 z(std::size_t i);
  static Poly5 monomial(const Exp& e, const GaussRational& c = GaussRational(1));

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  GaussRational coefficient(const Exp& e) const;
  void add_term(const Exp& e, const GaussRational& c);

  /// -1 for the zero polynomial; otherwise the degree when homogeneous,
  /// else throws DimensionMismatch.
  int homogeneous_degree() const;
  int max_degree() const;

  Poly5& operator+=(const Poly5& o);
  Poly5& operator-=(const Poly5& o);
  Poly5& operator*=(const GaussRational& c);
  friend Poly5 operator+(Poly5 a, const Poly5& b) { return a += b; }
  friend Poly5 operator-(Poly5 a, const Poly5& b) { return a -= b; }
  friend Poly5 operator*(Poly5 a, const GaussRational& c) { return a *= c; }
  friend Poly5 operator*(const GaussRational& c, Poly5 a) { return a *= c; }
  friend Poly5 operator*(const Poly5& a, const Poly5& b);
  Poly5 operator-() const;

  friend bool operator==(const Poly5&, const Poly5&) = default;

  std::string str() const;

 private:
  Terms terms_;
};

/// Monomials of total degree d in a fixed deterministic order, with an
/// index for converting homogeneous polynomials to coordinate vectors.
class MonomialBasis {
 public:
  explicit MonomialBasis(int degree);

  int degree() const { return degree_; }
  std::size_t size() const { return monomials_.size(); }
  const Exp& operator[](std::size_t k) const { return monomials_[k]; }
  std::size_t index(const Exp& e) const;

  exact::VectorG to_vector(const Poly5& p) const;
  Poly5 to_poly(const exact::VectorG& v) const;

 private:
  int degree_;
  std::vector<Exp> monomials_;
  std::map<Exp, std::size_t> index_;
};

/// Number of monomials of degree d in 5 variables, C(d+4, 4).
std::size_t monomial_count(int d);

}  // namespace humbert::weyl
