#pragma once

#include <map>
#include <string>
#include <utility>

#include "humbert/weyl/poly.hpp"

namespace humbert::weyl {

/// Differential operator sum c * z^a d^b stored in normal order (all z to
/// the left of all derivatives), so equal operators have equal term maps.
class WeylElement {
 public:
  using Key = std::pair<Exp, Exp>;  // (z exponents, d exponents)
  using Terms = std::map<Key, GaussRational>;

  WeylElement() = default;
  explicit WeylElement(const GaussRational& c);

  static WeylElement z(std::size_t i);
  static WeylElement d(std::size_t i);
  static WeylElement term(const Exp& zexp, const Exp& dexp, const GaussRational& c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  GaussRational coefficient(const Exp& zexp, const Exp& dexp) const;
  void add_term(const Exp& zexp, const Exp& dexp, const GaussRational& c);

  /// True when every term has |a| - |b| = k.
  bool has_fock_degree(int k) const;

  WeylElement& operator+=(const WeylElement& o);
  WeylElement& operator-=(const WeylElement& o);
  WeylElement& operator*=(const GaussRational& c);
  friend WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
  friend WeylElement operator-(WeylElement a, const WeylElement& b) { return a -= b; }
  friend WeylElement operator*(WeylElement a, const GaussRational& c) { return a *= c; }
  friend WeylElement operator*(const GaussRational& c, WeylElement a) { return a *= c; }
  WeylElement operator-() const;

  /// Composition (first apply b, then a) brought back to normal order.
  friend WeylElement operator*(const WeylElement& a, const WeylElement& b);

  friend bool operator==(const WeylElement&, const WeylElement&) = default;

  /// One "coeff * z^(a1,..,a5) d^(b1,..,b5)" line per term; "0" when empty.
  std::string to_text() const;
  static WeylElement from_text(const std::string& text);

 private:
  Terms terms_;
};

Poly5 apply(const WeylElement& w, const Poly5& p);
WeylElement commutator(const WeylElement& a, const WeylElement& b);

}  // namespace humbert::weyl
