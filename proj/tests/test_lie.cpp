#include <doctest.h>

#include <algorithm>
#include <random>

#include "humbert/error.hpp"
#include "humbert/lie/exterior.hpp"
#include "humbert/lie/parabolic.hpp"
#include "humbert/lie/so32.hpp"

using namespace humbert;
using namespace humbert::lie;

namespace {

MatrixG random_element(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-3, 3);
  VectorG c(kAlgebraDim);
  for (auto& x : c) x = GaussRational(Rational(d(rng)), Rational(d(rng)));
  return from_coordinates(c);
}

std::vector<Bidegree> sorted(std::vector<Bidegree> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("basis and cartan split") {
  const auto& b = so32_basis();
  for (const auto& e : b.elements) CHECK(in_so32(e));
  CHECK(b.labels[p_index(1, 4)] == "p14");
  CHECK(b.labels[p_index(3, 5)] == "p35");

  const MatrixG k = b.elements[0] + b.elements[3];
  CHECK(cartan_split(k).k == k);
  CHECK(cartan_split(k).p.is_zero());
  const MatrixG p = b.elements[p_index(2, 5)];
  CHECK(cartan_split(p).k.is_zero());
  CHECK(cartan_split(p).p == p);

  MatrixG bad(5, 5);
  bad(0, 3) = 1;
  CHECK_THROWS_AS(cartan_split(bad), Error);

  std::mt19937_64 rng(1);
  for (int t = 0; t < 20; ++t) {
    const MatrixG x = cartan_split(random_element(rng)).p;
    const MatrixG y = cartan_split(random_element(rng)).p;
    CHECK(cartan_split(bracket(x, y)).p.is_zero());
    const MatrixG z = random_element(rng);
    const auto parts = cartan_split(z);
    CHECK(parts.k + parts.p == z);
  }
}

TEST_CASE("jacobi identity on random triples") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 20; ++t) {
    const MatrixG x = random_element(rng), y = random_element(rng), z = random_element(rng);
    const MatrixG j = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y));
    CHECK(j.is_zero());
    CHECK(in_so32(bracket(x, y)));
  }
}

TEST_CASE("structure constants: [P_am, P_bn] = d_mn e_ab + d_ab e_mn") {
  const auto& b = so32_basis();
  for (int a = 1; a <= 3; ++a)
    for (int m = 4; m <= 5; ++m)
      for (int c = 1; c <= 3; ++c)
        for (int n = 4; n <= 5; ++n) {
          MatrixG expected(5, 5);
          if (m == n && a != c) {
            expected(a - 1, c - 1) += 1;
            expected(c - 1, a - 1) -= 1;
          }
          if (a == c && m != n) {
            expected(m - 1, n - 1) += 1;
            expected(n - 1, m - 1) -= 1;
          }
          CHECK(bracket(b.elements[p_index(a, m)], b.elements[p_index(c, n)]) == expected);
        }
}

TEST_CASE("root vectors are eigenvectors of the torus") {
  const auto& d = root_datum();
  CHECK(d.roots.size() == 8);
  for (std::size_t k = 0; k < d.roots.size(); ++k) {
    const MatrixG& v = d.vectors[k];
    CHECK(in_so32(v));
    for (const auto& [x1, x2] : std::vector<std::pair<long, long>>{{1, 0}, {0, 1}, {2, -3}}) {
      const MatrixG t = torus(x1, x2);
      CHECK(bracket(t, v) == v * evaluate(d.roots[k], x1, x2));
    }
    // compact roots live in k, noncompact ones in p
    const auto parts = cartan_split(v);
    CHECK((d.roots[k].compact() ? parts.p : parts.k).is_zero());
  }
  CHECK(bracket(torus(1, 0), d.vector({1, 0})) == d.vector({1, 0}) * GaussRational::i());
  CHECK(bracket(torus(0, 1), d.vector({1, 1})) == d.vector({1, 1}) * GaussRational::i());
}

TEST_CASE("exterior helpers") {
  const auto s = subsets(5, 2);
  CHECK(s.size() == 10);
  for (std::size_t k = 0; k < s.size(); ++k) CHECK(subset_rank(s[k], 5) == k);
  CHECK(subsets(6, 3).size() == 20);
  // so(2) rotation on C^2: wedge^2 is the trivial (determinant) representation
  MatrixG r(2, 2);
  r(0, 1) = -1;
  r(1, 0) = 1;
  CHECK(wedge_invariants_dim({r}, 2, 2) == 1);
  CHECK(wedge_invariants_dim({r}, 2, 1) == 0);
}

TEST_CASE("parabolic families") {
  const auto q0 = parabolic_from(0, 0);
  CHECK(q0.dim_l() == 10);
  CHECK(q0.family == 1);
  CHECK(sorted(q0.bidegrees) == std::vector<Bidegree>{{0, 0}, {1, 1}, {2, 2}, {3, 3}});
  CHECK(vz_ktype(q0) == KType{1, 0});
  CHECK(cohomology_dim(q0, 0, 0) == 1);

  const auto q1 = parabolic_from(1, 0);
  CHECK(q1.family == 2);
  CHECK(q1.r_plus == 1);
  CHECK(q1.r_minus == 1);
  CHECK(q1.levi_label == "S¹×SO₀(1,2)");
  std::vector<Root> u = q1.u_roots;
  std::sort(u.begin(), u.end());
  CHECK(u == std::vector<Root>{{1, -1}, {1, 0}, {1, 1}});
  CHECK(sorted(q1.bidegrees) == std::vector<Bidegree>{{1, 1}, {2, 2}});
  CHECK(two_rho_u_p(q1) == Root{2, 0});
  CHECK(vz_ktype(q1) == KType{5, 0});
  CHECK(cohomology_dim(q1, 1, 1) == 1);
  CHECK(cohomology_dim(q1, 0, 1) == 0);

  CHECK(parabolic_from(1, 2).bidegrees == std::vector<Bidegree>{{0, 3}});
  CHECK(parabolic_from(1, -2).bidegrees == std::vector<Bidegree>{{3, 0}});
  CHECK(sorted(parabolic_from(1, -1).bidegrees) == std::vector<Bidegree>{{2, 0}, {3, 1}});
  CHECK(sorted(parabolic_from(1, 1).bidegrees) == std::vector<Bidegree>{{0, 2}, {1, 3}});
  CHECK(parabolic_from(2, -1).bidegrees == std::vector<Bidegree>{{2, 1}});
  CHECK(parabolic_from(2, 1).bidegrees == std::vector<Bidegree>{{1, 2}});
}

TEST_CASE("table bidegrees agree with computed cohomology on a grid") {
  for (int x1 = -3; x1 <= 3; ++x1)
    for (int x2 = -3; x2 <= 3; ++x2) {
      const auto q = parabolic_from(x1, x2);
      CAPTURE(x1);
      CAPTURE(x2);
      CHECK(q.dim_l() + 2 * q.dim_u() == 10);
      CHECK(sorted(computed_bidegrees(q)) == sorted(q.bidegrees));
      CHECK_NOTHROW(vz_ktype(q));
      const auto scaled = parabolic_from(Rational(5, 2) * Rational(x1), Rational(5, 2) * Rational(x2));
      CHECK(scaled.u_roots == q.u_roots);
      CHECK(scaled.bidegrees == q.bidegrees);
      CHECK(scaled.family == q.family);
    }
}
