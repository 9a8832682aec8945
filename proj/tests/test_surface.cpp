#include <doctest.h>

#include <random>

#include "humbert/error.hpp"
#include "humbert/plucker/plucker.hpp"
#include "humbert/surface/humbert.hpp"

using namespace humbert;
using namespace humbert::exact;
using namespace humbert::surface;

namespace {

AlgebraElement q_i(long re, long im) { return AlgebraElement(AlgebraSpec::gaussian(), {Rational(re), Rational(im)}); }

SiegelPointExact diag_i_2i() { return SiegelPointExact(q_i(0, 1), q_i(0, 2), q_i(0, 0)); }
SiegelPointExact two_i_i() { return SiegelPointExact(q_i(0, 2), q_i(0, 2), q_i(0, 1)); }
SiegelPointExact i_identity() { return SiegelPointExact(q_i(0, 1), q_i(0, 1), q_i(0, 0)); }
SiegelPointExact diag_i_sqrt_minus2() {
  const auto alg = AlgebraSpec::gaussian_sqrt2();
  return SiegelPointExact(AlgebraElement(alg, {0, 1, 0, 0}), AlgebraElement(alg, {0, 0, 0, 1}),
                          AlgebraElement(alg, {0, 0, 0, 0}));
}

MatrixQ random_word(std::mt19937_64& rng, int length) {
  const auto gens = plucker::symplectic_generators();
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  MatrixQ g = MatrixQ::identity(4);
  for (int k = 0; k < length; ++k) g = g * gens[pick(rng)].matrix;
  return g;
}

Eigen::MatrixXd basis_rows_five(const std::vector<VectorQ>& basis) {
  Eigen::MatrixXd m(basis.size(), 5);
  for (std::size_t r = 0; r < basis.size(); ++r) {
    const VectorQ f = relation_to_five(basis[r]);
    for (std::size_t k = 0; k < 5; ++k) m(r, k) = f[k].to_double();
  }
  return m;
}

}  // namespace

TEST_CASE("discriminant and normal form") {
  CHECK(discriminant({0, 1, 0, 0, 0}) == 1);
  CHECK(discriminant({1, 1, -1, 0, 0}) == 5);
  CHECK(discriminant({1, 0, -1, 0, 0}) == 4);
  CHECK(normal_form(1) == SingularRelation{1, 1, 0, 0, 0});
  CHECK(normal_form(4) == SingularRelation{1, 0, -1, 0, 0});
  CHECK(normal_form(5) == SingularRelation{1, 1, -1, 0, 0});
  for (std::int64_t d = 1; d <= 200; ++d) {
    if (d % 4 == 2 || d % 4 == 3) {
      CHECK_THROWS_AS(normal_form(d), Error);
      continue;
    }
    const auto nf = normal_form(d);
    CHECK(nf.discriminant() == d);
    CHECK(nf.is_primitive());
  }
  for (std::int64_t d : {0L, -3L, -4L, 2L, 7L}) {
    try {
      normal_form(d);
      FAIL("expected BadDiscriminant");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::BadDiscriminant);
    }
  }
  CHECK(SingularRelation{2, 4, 0, -6, 0}.content() == 2);
  CHECK(SingularRelation{}.content() == 0);
}

TEST_CASE("discriminant agrees with plucker delta and is 0,1 mod 4") {
  std::int64_t count = 0;
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b)
      for (int c = -3; c <= 3; ++c)
        for (int d = -3; d <= 3; ++d)
          for (int e = -3; e <= 3; ++e) {
            const SingularRelation rel{a, b, c, d, e};
            const std::int64_t delta = rel.discriminant();
            const std::int64_t r = ((delta % 4) + 4) % 4;
            if (r > 1) FAIL_CHECK("bad residue at " << rel.str());
            if (Rational(delta) != plucker::delta(rel.five_coords())) FAIL_CHECK("delta mismatch at " << rel.str());
            if (!(SingularRelation::from_five_coords(rel.five_coords()) == rel)) FAIL_CHECK("round trip " << rel.str());
            ++count;
          }
  CHECK(count == 16807);
}

TEST_CASE("membership") {
  CHECK(membership(diag_i_2i(), {0, 1, 0, 0, 0}));
  CHECK(membership(i_identity(), {0, 1, 0, 0, 0}));
  CHECK(membership(i_identity(), {1, 0, -1, 0, 0}));
  CHECK_FALSE(membership(diag_i_2i(), {1, 0, -1, 0, 0}));
  CHECK_FALSE(membership(diag_i_2i(), {1, 0, -2, 0, 0}));
  CHECK(membership(diag_i_2i(), {-2, 0, 1, 0, 0}));
  // Invariance under rational scaling of integer relations.
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> dist(-3, 3);
  for (int t = 0; t < 100; ++t) {
    const SingularRelation rel{dist(rng), dist(rng), dist(rng), dist(rng), dist(rng)};
    for (int s : {-2, 3}) {
      const SingularRelation scaled{s * rel.a, s * rel.b, s * rel.c, s * rel.d, s * rel.e};
      CHECK(membership(two_i_i(), rel) == membership(two_i_i(), scaled));
    }
  }
  CHECK_THROWS_AS(SiegelPointExact(q_i(0, 1), q_i(0, 1), AlgebraElement::scalar(AlgebraSpec::rationals(), 0)), Error);
  try {
    SiegelPointExact(q_i(0, -1), q_i(0, 1), q_i(0, 0));
    FAIL("expected NotInSiegelSpace");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotInSiegelSpace);
  }
}

TEST_CASE("Neron-Severi ranks against hand-solved systems") {
  {
    const auto ns = t11_and_ns_rank(diag_i_2i());
    CHECK(ns.kernel_dim() == 3);
    CHECK(ns.ns_rank() == 4);
    for (const auto& v : ns.t11_basis) {
      CHECK((v[0] + Rational(2) * v[2]).is_zero());
      CHECK((v[4] + Rational(2) * v[3]).is_zero());
    }
  }
  {
    const auto ns = t11_and_ns_rank(diag_i_sqrt_minus2());
    CHECK(ns.kernel_dim() == 1);
    CHECK(ns.ns_rank() == 2);
    const VectorQ& v = ns.t11_basis.at(0);
    CHECK(v[0].is_zero());
    CHECK_FALSE(v[1].is_zero());
    CHECK(v[2].is_zero());
    CHECK(v[3].is_zero());
    CHECK(v[4].is_zero());
  }
  {
    const auto ns = t11_and_ns_rank(two_i_i());
    CHECK(ns.kernel_dim() == 3);
    CHECK(ns.ns_rank() == 4);
    for (const auto& v : ns.t11_basis) {
      CHECK((Rational(2) * v[0] + v[1] + Rational(2) * v[2]).is_zero());
      CHECK((v[4] + Rational(3) * v[3]).is_zero());
    }
  }
  // Every basis vector satisfies the relation exactly after clearing denominators.
  for (const auto& tau : {diag_i_2i(), two_i_i(), i_identity(), diag_i_sqrt_minus2()})
    for (const auto& v : t11_and_ns_rank(tau).t11_basis) {
      mpz_class l = 1;
      for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.denominator().get_mpz_t());
      const Rational lr(l);
      auto as_int = [&](const Rational& x) { return (x * lr).to_int64(); };
      CHECK(membership(tau, {as_int(v[0]), as_int(v[1]), as_int(v[2]), as_int(v[3]), as_int(v[4])}));
    }
}

TEST_CASE("tau JSON round trip") {
  const auto tau = diag_i_sqrt_minus2();
  const auto back = SiegelPointExact::from_json(tau.to_json());
  CHECK(back.tau2().coords() == tau.tau2().coords());
  CHECK(t11_and_ns_rank(back).ns_rank() == 2);
  const nlohmann::json named = {{"algebra", "Q(i)"}, {"tau1", {"0", "1"}}, {"tau2", {"0", "2"}}, {"tau12", {"0", "0"}}};
  CHECK(t11_and_ns_rank(SiegelPointExact::from_json(named)).ns_rank() == 4);
  CHECK_THROWS_AS(SiegelPointExact::from_json(nlohmann::json{{"algebra", "Q(i)"}}), Error);
}

TEST_CASE("Z_tau is a positive 3-plane and moves by the contragredient rho") {
  const auto fiber = z_tau(i_identity());
  for (int k = 0; k < 3; ++k) CHECK(fiber.delta_eigenvalues(k) > kPositivityTolerance);
  const Eigen::Matrix2cd t0 = i_identity().numeric();
  std::mt19937_64 rng(22);
  for (int t = 0; t < 20; ++t) {
    const MatrixQ g = t == 0 ? plucker::psi_matrix() : random_word(rng, 5);
    const ZMatrix z = z_tau_numeric(t0);
    const Eigen::MatrixXd moved = (to_eigen(z_action(g)) * z.transpose()).transpose();
    CHECK(subspace_distance(z_tau_numeric(act_numeric(g, t0)), moved) < 1e-6);
  }
  const Eigen::Matrix2cd gen{{std::complex<double>(0.3, 1.1), std::complex<double>(0.2, 0.4)},
                             {std::complex<double>(0.2, 0.4), std::complex<double>(-0.7, 0.9)}};
  for (int t = 0; t < 20; ++t) {
    const MatrixQ g = random_word(rng, 4);
    const Eigen::MatrixXd moved = (to_eigen(z_action(g)) * z_tau_numeric(gen).transpose()).transpose();
    CHECK(subspace_distance(z_tau_numeric(act_numeric(g, gen)), moved) < 1e-6);
  }
}

TEST_CASE("exact symplectic substitution preserves NS rank and moves T11 by rho") {
  std::mt19937_64 rng(23);
  for (const auto& tau : {diag_i_2i(), two_i_i(), diag_i_sqrt_minus2()}) {
    const auto base = t11_and_ns_rank(tau);
    for (int t = 0; t < 5; ++t) {
      const MatrixQ g = random_word(rng, 4);
      const auto moved_tau = act_exact(g, tau);
      const Eigen::Matrix2cd diff = moved_tau.numeric() - act_numeric(g, tau.numeric());
      CHECK(diff.norm() < 1e-9);
      const auto moved = t11_and_ns_rank(moved_tau);
      CHECK(moved.ns_rank() == base.ns_rank());
      // rho-image of each old basis vector is an exact relation at g.tau.
      const MatrixQ r = z_action(g);
      for (const auto& v : base.t11_basis) {
        const VectorQ w = five_to_relation(r.apply(relation_to_five(v)));
        CHECK(span_rank([&] {
                auto all = moved.t11_basis;
                all.push_back(w);
                return all;
              }(),
                        5) == moved.kernel_dim());
      }
    }
  }
}

TEST_CASE("membership iff the relation lies in Z_tau") {
  std::mt19937_64 rng(24);
  std::uniform_int_distribution<int> dist(-3, 3);
  for (const auto& tau : {diag_i_2i(), two_i_i(), i_identity(), diag_i_sqrt_minus2()}) {
    const ZMatrix z = z_tau(tau).z_tau;
    int hits = 0;
    for (int t = 0; t < 400; ++t) {
      const SingularRelation rel{dist(rng), dist(rng), dist(rng), dist(rng), dist(rng)};
      if (rel.content() == 0) continue;
      Eigen::VectorXd v(5);
      const VectorQ f = rel.five_coords();
      for (int k = 0; k < 5; ++k) v(k) = f[k].to_double();
      const bool in_z = distance_to_subspace(v, z) < 1e-6;
      CHECK(membership(tau, rel) == in_z);
      hits += in_z;
    }
    CAPTURE(hits);
  }
  // Relations from the exact T11 basis lie in Z_tau.
  const auto fiber = z_tau(diag_i_2i());
  for (int r = 0; r < 3; ++r)
    CHECK(distance_to_subspace(basis_rows_five(fiber.ns.t11_basis).row(r).transpose(), fiber.z_tau) < 1e-9);
}
