#pragma once

#include <vector>

#include "humbert/ktype.hpp"
#include "humbert/weyl/omega.hpp"
#include "humbert/weyl/poly.hpp"

namespace humbert::fock {

using weyl::Poly5;

constexpr int kDefaultDegreeCap = 6;
constexpr int kMaxDegreeCap = 8;

/// Isotypic component of type ktype inside the homogeneous polynomials of
/// one degree.
struct KTypeComponent {
  KType ktype;
  int degree = 0;
  std::vector<Poly5> basis;

  int multiplicity() const { return static_cast<int>(basis.size()) / ktype.so3_dim; }
};

/// Matrix of an operator that preserves degree d, in the monomial basis.
exact::MatrixG operator_matrix(const weyl::WeylElement& w, int from_degree, int to_degree);

/// K-isotypic decomposition of the degree-d polynomials, computed from the
/// rotation action omega(k) block by block in (alpha-degree, mu-degree).
/// Results are memoized; throws DegreeCapExceeded unless 0 <= d <= cap <= 8.
const std::vector<KTypeComponent>& decompose_degree(int d, int cap = kDefaultDegreeCap);

/// The component of type ktype in degree d, or an empty basis.
KTypeComponent isotypic_component(const KType& ktype, int d, int cap = kDefaultDegreeCap);

/// Smallest degree at which ktype occurs; throws KTypeNotFound.
int degree_of(const KType& ktype, int cap = kDefaultDegreeCap);

/// Elements of the lowest-degree component annihilated by Y_alpha and Y_mu.
/// Throws KTypeNotFound.
KTypeComponent harmonics(const KType& ktype, int cap = kDefaultDegreeCap);

struct HoweRow {
  int degree;
  std::size_t isotypic_dim;
  std::size_t span_dim;
  bool contained;
};

struct HoweCertificate {
  bool ok = true;
  std::vector<HoweRow> rows;
};

/// Compares the isotypic component with the span of X_alpha^i X_mu^j applied
/// to the harmonics, degree by degree up to dmax.
HoweCertificate howe_span_check(const KType& ktype, int dmax, int cap = kDefaultDegreeCap);

/// Basis of the traceless quadratic forms in z1, z2, z3.
std::vector<Poly5> traceless_quadratics();

/// Dimension of the span of a family of homogeneous degree-d polynomials.
std::size_t poly_span_rank(const std::vector<Poly5>& ps, int d);

/// True when span(a) == span(b) (all homogeneous of degree d).
bool same_span(const std::vector<Poly5>& a, const std::vector<Poly5>& b, int d);

}  // namespace humbert::fock
