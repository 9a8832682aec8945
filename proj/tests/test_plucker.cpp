#include <doctest.h>

#include <random>

#include "humbert/error.hpp"
#include "humbert/plucker/plucker.hpp"

using namespace humbert;
using namespace humbert::exact;
using namespace humbert::plucker;

namespace {

VectorQ random_vector(std::mt19937_64& rng, std::size_t n, int lo = -4, int hi = 4) {
  std::uniform_int_distribution<int> dist(lo, hi);
  VectorQ v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(Rational(dist(rng)));
  return v;
}

MatrixQ random_word(std::mt19937_64& rng, int length) {
  const auto gens = symplectic_generators();
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  MatrixQ g = MatrixQ::identity(4);
  for (int k = 0; k < length; ++k) g = g * gens[pick(rng)].matrix;
  return g;
}

// Oracle: x1^x2^y1^y2 = det[x1 x2 y1 y2] e1^e2^e3^e4.
Rational wedge4_det(const VectorQ& x1, const VectorQ& x2, const VectorQ& y1, const VectorQ& y2) {
  return determinant(MatrixQ::from_columns({x1, x2, y1, y2}, 4));
}

}  // namespace

TEST_CASE("b agrees with the 4x4 determinant on decomposable bivectors") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    const auto x1 = random_vector(rng, 4), x2 = random_vector(rng, 4);
    const auto y1 = random_vector(rng, 4), y2 = random_vector(rng, 4);
    CHECK(b_form(wedge_of(x1, x2), wedge_of(y1, y2)) == wedge4_det(x1, x2, y1, y2));
    CHECK(plucker_quadric_check(x1, x2));
    CHECK(Rational(2) * plucker_q(wedge_of(x1, x2)) == b_form(wedge_of(x1, x2), wedge_of(x1, x2)));
  }
}

TEST_CASE("b0 trace formula equals coordinate formula and b") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 50; ++t) {
    const auto xi = random_vector(rng, 6), eta = random_vector(rng, 6);
    const MatrixQ m = skew_from_wedge(xi), n = skew_from_wedge(eta);
    CHECK(b0_form(m, n) == b0_coordinates(m, n));
    CHECK(b0_form(m, n) == b_form(xi, eta));
    CHECK(wedge_from_skew(m) == xi);
  }
  CHECK(plucker_q(psi_wedge()) == Rational(-1));
  CHECK(skew_from_wedge(psi_wedge()) == psi_matrix());
  MatrixQ not_skew = MatrixQ::identity(4);
  CHECK_THROWS_AS(wedge_from_skew(not_skew), Error);
}

TEST_CASE("Psi-perp coordinates and delta") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 50; ++t) {
    const auto f = random_vector(rng, 5);
    const MatrixQ m = embed_five(f);
    CHECK(b0_form(m, psi_matrix()).is_zero());
    CHECK(project_psi_perp(m) == f);
    CHECK(delta(f) == Rational(kDualLatticeScale) * b0_form(m, m));
    CHECK(delta_pairing(f, f) == delta(f));
  }
  CHECK(signature_of_symmetric(delta_gram()) == Signature{3, 2, 0});
  CHECK(delta(VectorQ{1, 0, 0, 0, 0}).is_zero());
  CHECK(delta(VectorQ{0, 1, 0, 0, 0}) == Rational(1));
  try {
    project_psi_perp(psi_matrix());
    FAIL("expected NotOrthogonalToPsi");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotOrthogonalToPsi);
  }
}

TEST_CASE("wedge_square is a representation and scales b by det") {
  std::mt19937_64 rng(14);
  std::uniform_int_distribution<int> dist(-3, 3);
  int tested = 0;
  while (tested < 20) {
    MatrixQ g(4, 4), h(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        g(i, j) = dist(rng);
        h(i, j) = dist(rng);
      }
    if (determinant(g).is_zero() || determinant(h).is_zero()) continue;
    ++tested;
    CHECK(wedge_square(g * h) == wedge_square(g) * wedge_square(h));
    const auto xi = random_vector(rng, 6), eta = random_vector(rng, 6);
    CHECK(b_form(wedge_square(g).apply(xi), wedge_square(g).apply(eta)) == determinant(g) * b_form(xi, eta));
    CHECK(skew_from_wedge(wedge_square(g).apply(xi)) == g * skew_from_wedge(xi) * g.transpose());
  }
  CHECK_THROWS_AS(wedge_square(MatrixQ(4, 4)), Error);
}

TEST_CASE("generators are symplectic") {
  for (const auto& [name, g] : symplectic_generators()) {
    CAPTURE(name);
    CHECK(is_symplectic(g));
    CHECK(wedge_square(g).apply(psi_wedge()) == psi_wedge());
  }
  CHECK(symplectic_generators().size() == 14);
}

TEST_CASE("iso_rho: homomorphism onto SO(delta) with kernel +-1") {
  std::mt19937_64 rng(15);
  const MatrixQ gram = delta_gram();
  CHECK(iso_rho(-MatrixQ::identity(4)) == MatrixQ::identity(5));
  CHECK(iso_rho(MatrixQ::identity(4)) == MatrixQ::identity(5));
  for (int t = 0; t < 30; ++t) {
    const MatrixQ g = random_word(rng, 6), h = random_word(rng, 6);
    const MatrixQ rg = iso_rho(g);
    CHECK(iso_rho(g * h) == rg * iso_rho(h));
    CHECK(rg.transpose() * gram * rg == gram);
    CHECK(determinant(rg) == Rational(1));
    for (std::size_t j = 0; j < 5; ++j)
      for (std::size_t i = 0; i < 5; ++i) CHECK(rg(i, j).is_integer());
    // Column j of rho(g) is the projection of g e_j g^t, checked through wedge^2 g.
    const VectorQ f = random_vector(rng, 5);
    CHECK(project_psi_perp(skew_from_wedge(wedge_square(g).apply(wedge_from_skew(embed_five(f))))) == rg.apply(f));
  }
  MatrixQ not_sp = MatrixQ::identity(4);
  not_sp(0, 0) = 2;
  try {
    iso_rho(not_sp);
    FAIL("expected NotSymplectic");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotSymplectic);
  }
}
