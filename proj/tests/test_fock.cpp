#include <doctest.h>

#include <map>
#include <random>

#include "humbert/error.hpp"
#include "humbert/fock/cochain.hpp"
#include "humbert/fock/harmonics.hpp"
#include "humbert/weyl/sl2.hpp"

using namespace humbert;
using namespace humbert::fock;
using weyl::Poly5;

namespace {

std::map<KType, int> table(int d) {
  std::map<KType, int> m;
  for (const auto& c : decompose_degree(d)) m[c.ktype] = c.multiplicity();
  return m;
}

}  // namespace

TEST_CASE("low degree decompositions") {
  const auto d0 = decompose_degree(0);
  REQUIRE(d0.size() == 1);
  CHECK(d0[0].ktype == KType{1, 0});
  CHECK(d0[0].basis.size() == 1);

  CHECK(table(1) == std::map<KType, int>{{{3, 0}, 1}, {{1, 1}, 1}, {{1, -1}, 1}});
  // the character +1 line is spanned by z4 + i z5
  const auto plus = isotypic_component(KType{1, 1}, 1);
  REQUIRE(plus.basis.size() == 1);
  const Poly5 expected = Poly5::z(3) + Poly5::z(4) * GaussRational::i();
  CHECK(same_span(plus.basis, {expected}, 1));

  CHECK(table(2) == std::map<KType, int>{{{5, 0}, 1}, {{1, 0}, 2}, {{3, 1}, 1}, {{3, -1}, 1}, {{1, 2}, 1}, {{1, -2}, 1}});
}

TEST_CASE("dimension bookkeeping up to the cap") {
  for (int d = 0; d <= kDefaultDegreeCap; ++d) {
    std::size_t total = 0;
    for (const auto& c : decompose_degree(d)) {
      CHECK(c.basis.size() % static_cast<std::size_t>(c.ktype.so3_dim) == 0);
      total += c.basis.size();
      for (const auto& p : c.basis) CHECK(p.homogeneous_degree() == d);
    }
    CHECK(total == weyl::monomial_count(d));
  }
  CHECK_THROWS_AS(decompose_degree(7), Error);
  CHECK_THROWS_AS(decompose_degree(9, 9), Error);
  CHECK_NOTHROW(decompose_degree(7, 8));
}

TEST_CASE("components are K-stable") {
  const auto& om = weyl::default_omega();
  for (int d = 0; d <= 3; ++d)
    for (const auto& c : decompose_degree(d))
      for (std::size_t g = 0; g < 4; ++g) {
        std::vector<Poly5> moved = c.basis;
        for (const auto& p : c.basis) moved.push_back(weyl::apply(om[g], p));
        CHECK(poly_span_rank(moved, d) == c.basis.size());
      }
}

TEST_CASE("harmonics and degrees") {
  const auto h1 = harmonics(KType{1, 0});
  CHECK(h1.degree == 0);
  CHECK(same_span(h1.basis, {Poly5(GaussRational(1))}, 0));
  const auto h3 = harmonics(KType{3, 0});
  CHECK(h3.degree == 1);
  CHECK(same_span(h3.basis, {Poly5::z(0), Poly5::z(1), Poly5::z(2)}, 1));
  const auto h5 = harmonics(KType{5, 0});
  CHECK(h5.degree == 2);
  CHECK(h5.basis.size() == 5);
  CHECK(same_span(h5.basis, traceless_quadratics(), 2));
  const auto& t = weyl::sl2_triples();
  for (const auto& p : h5.basis) {
    CHECK(weyl::apply(t.alpha.y, p).is_zero());
    CHECK(weyl::apply(t.mu.y, p).is_zero());
    CHECK(weyl::apply(weyl::weight_operator(), p) == p * GaussRational(Rational(5, 2)));
  }
  // harmonic space is the whole lowest-degree component
  CHECK(h5.basis.size() == isotypic_component(KType{5, 0}, 2).basis.size());
  CHECK(degree_of(KType{1, 0}) == 0);
  CHECK(degree_of(KType{3, 0}) == 1);
  CHECK(degree_of(KType{5, 0}) == 2);
  CHECK_THROWS_AS(degree_of(KType{15, 0}), Error);
}

TEST_CASE("howe truncation") {
  for (const KType k : {KType{1, 0}, KType{3, 0}, KType{5, 0}}) {
    const auto cert = howe_span_check(k, 6);
    CHECK(cert.ok);
    CHECK(cert.rows.size() == 7);
  }
  CHECK(howe_span_check(KType{3, 0}, 1).ok);
  CHECK_THROWS_AS(howe_span_check(KType{1, 0}, 7), Error);
}

TEST_CASE("phi plus") {
  const auto& om = weyl::default_omega();
  const EquivariantCochain phi = phi_plus();
  CHECK(equivariance_failures(phi, om) == 0);
  CHECK(rel_lie_differential(phi, om).is_zero());
  CHECK(rel_lie_differential(phi, weyl::build_omega_so32(-GaussRational::i())).is_zero());
  CHECK(bidegree_support(phi) == std::vector<Bidegree>{{1, 1}});
  CHECK(rel_lie_differential(EquivariantCochain::zero(1), om).is_zero());
  // a non-equivariant perturbation is detected
  EquivariantCochain bad = phi;
  bad.values[0] = Poly5::z(3) * Poly5::z(3);
  CHECK(equivariance_failures(bad, om) > 0);
}

TEST_CASE("wedge 1,1 decomposition and phi plus image") {
  const auto w = wedge_decompose_p11();
  CHECK(w.total_dim == 9);
  std::map<KType, int> mult;
  for (const auto& p : w.pieces) mult[p.ktype] += static_cast<int>(p.basis.size()) / p.ktype.so3_dim;
  CHECK(mult == std::map<KType, int>{{{1, 0}, 1}, {{3, 0}, 1}, {{5, 0}, 1}});

  const auto phi = phi_plus();
  std::vector<Poly5> image;
  for (const auto& p : w.pieces) {
    std::vector<Poly5> im;
    for (const auto& v : p.basis) im.push_back(evaluate_on_bivector(phi, v));
    if (p.ktype == KType{5, 0}) {
      CHECK(poly_span_rank(im, 2) == 5);
      CHECK(same_span(im, traceless_quadratics(), 2));
    }
    if (p.ktype == KType{3, 0})
      for (const auto& q : im) CHECK(q.is_zero());
    image.insert(image.end(), im.begin(), im.end());
  }
  std::vector<Poly5> alpha_quadratics;
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = a; b < 3; ++b) alpha_quadratics.push_back(Poly5::z(a) * Poly5::z(b));
  CHECK(same_span(image, alpha_quadratics, 2));
}

TEST_CASE("random equivariant cochains satisfy d^2 = 0") {
  const auto& om = weyl::default_omega();
  CHECK(equivariant_cochains(1, 2, om).size() == 2);
  CHECK(equivariant_cochains(1, 0, om).empty());
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 6; ++trial) {
    const int k = trial % 2 == 0 ? 1 : 2;
    const auto c = random_equivariant_cochain(k, k == 1 ? std::vector<int>{2} : std::vector<int>{1, 2}, om, rng);
    CHECK_FALSE(c.is_zero());
    CHECK(equivariance_failures(c, om) == 0);
    const auto dc = rel_lie_differential(c, om);
    CHECK(equivariance_failures(dc, om) == 0);
    CHECK(rel_lie_differential(dc, om).is_zero());
  }
}
