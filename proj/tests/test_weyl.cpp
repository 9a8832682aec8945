#include <doctest.h>

#include <random>

#include "humbert/error.hpp"
#include "humbert/weyl/omega.hpp"
#include "humbert/weyl/sl2.hpp"
#include "humbert/weyl/weyl.hpp"

using namespace humbert;
using namespace humbert::weyl;

namespace {

GaussRational q(long n, long d = 1) { return GaussRational(Rational(n, d)); }

WeylElement random_weyl(std::mt19937_64& rng, int terms = 3, int maxexp = 2) {
  std::uniform_int_distribution<int> e(0, maxexp), c(-3, 3);
  WeylElement w;
  for (int t = 0; t < terms; ++t) {
    Exp a{}, b{};
    for (std::size_t i = 0; i < kVars; ++i) {
      a[i] = static_cast<std::uint8_t>(e(rng) / 2);
      b[i] = static_cast<std::uint8_t>(e(rng) / 2);
    }
    w.add_term(a, b, GaussRational(Rational(c(rng)), Rational(c(rng))));
  }
  return w;
}

Poly5 random_poly(std::mt19937_64& rng, int terms = 4) {
  std::uniform_int_distribution<int> e(0, 3), c(-4, 4);
  Poly5 p;
  for (int t = 0; t < terms; ++t) {
    Exp a{};
    for (auto& x : a) x = static_cast<std::uint8_t>(e(rng));
    p.add_term(a, GaussRational(Rational(c(rng)), Rational(c(rng))));
  }
  return p;
}

}  // namespace

TEST_CASE("canonical commutation and apply") {
  const WeylElement z1 = WeylElement::z(0), d1 = WeylElement::d(0), z2 = WeylElement::z(1);
  CHECK(d1 * z1 == z1 * d1 + WeylElement(q(1)));
  CHECK(z1 * z2 == z2 * z1);
  CHECK(apply(d1 * z1, Poly5(q(1))) == Poly5(q(1)));
  const auto& t = sl2_triples();
  CHECK(apply(t.alpha.h, Poly5::z(0)) == Poly5::z(0) * q(5, 2));
  CHECK(apply(t.alpha.y, Poly5::z(0) * Poly5::z(0) + Poly5::z(1) * Poly5::z(1) + Poly5::z(2) * Poly5::z(2)) ==
        Poly5(q(3)));
  CHECK(apply(t.mu.h, Poly5(q(1))) == Poly5(q(1)));
}

TEST_CASE("multiply is composition and associative") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    const WeylElement a = random_weyl(rng), b = random_weyl(rng), c = random_weyl(rng);
    const Poly5 p = random_poly(rng);
    CHECK(apply(a * b, p) == apply(a, apply(b, p)));
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("text format round trip") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const WeylElement w = random_weyl(rng, 5, 4);
    CHECK(WeylElement::from_text(w.to_text()) == w);
  }
  CHECK(WeylElement().to_text() == "0\n");
  CHECK(WeylElement::from_text("-1/2 * z^(2,0,0,0,0) d^(0,0,0,0,0)\n") == sl2_triples().alpha.x -
        WeylElement::from_text("-1/2 * z^(0,2,0,0,0) d^(0,0,0,0,0)\n-1/2 * z^(0,0,2,0,0) d^(0,0,0,0,0)"));
  CHECK_THROWS_AS(WeylElement::from_text("1 * z^(1,0) d^(0,0,0,0,0)"), Error);
}

TEST_CASE("sl2 triples") {
  const auto& t = sl2_triples();
  for (const Sl2Triple* s : {&t.alpha, &t.mu}) {
    CHECK(commutator(s->h, s->x) == q(2) * s->x);
    CHECK(commutator(s->h, s->y) == q(-2) * s->y);
    CHECK(commutator(s->x, s->y) == s->h);
  }
  for (const WeylElement* a : {&t.alpha.h, &t.alpha.x, &t.alpha.y})
    for (const WeylElement* m : {&t.mu.h, &t.mu.x, &t.mu.y}) CHECK(commutator(*a, *m).is_zero());
}

TEST_CASE("weight operator") {
  const WeylElement hp = weight_operator();
  CHECK(apply(hp, Poly5(q(1))) == Poly5(q(1, 2)));
  CHECK(apply(hp, Poly5::z(0)) == Poly5::z(0) * q(3, 2));
  CHECK(apply(hp, Poly5::z(0) * Poly5::z(1)) == Poly5::z(0) * Poly5::z(1) * q(5, 2));
  CHECK(apply(hp, Poly5::z(3)) == Poly5::z(3) * q(-1, 2));
}

TEST_CASE("star involution") {
  const auto& t = sl2_triples();
  const std::vector<WeylElement> alphabet{t.alpha.h, t.alpha.x, t.alpha.y, t.mu.x};
  const WordSum H = WordSum::letter(0), X = WordSum::letter(1), Y = WordSum::letter(2), Xm = WordSum::letter(3);
  const GaussRational i = GaussRational::i();

  CHECK(evaluate(star(H), alphabet) == -t.alpha.h);
  CHECK(evaluate(star(X * Y), alphabet) == t.alpha.y * t.alpha.x);
  CHECK(evaluate(star(i * Xm), alphabet) == i * t.mu.x);

  // relation words evaluate to zero, and so do their stars
  const WordSum rel = X * Y - Y * X - H;
  CHECK(evaluate(rel, alphabet).is_zero());
  CHECK(evaluate(star(rel), alphabet).is_zero());
  const WordSum rel2 = H * X - X * H - GaussRational(2) * X;
  CHECK(evaluate(star(rel2), alphabet).is_zero());

  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> letter(0, 3), len(0, 4), c(-3, 3);
  auto random_word = [&] {
    std::vector<Word> ws;
    for (int k = 0; k < 3; ++k) {
      Word w{GaussRational(Rational(c(rng)), Rational(c(rng))), {}};
      for (int n = len(rng); n > 0; --n) w.letters.push_back(static_cast<std::size_t>(letter(rng)));
      ws.push_back(w);
    }
    return WordSum(ws);
  };
  for (int trial = 0; trial < 20; ++trial) {
    const WordSum a = random_word(), b = random_word();
    const GaussRational s(Rational(c(rng)), Rational(c(rng)));
    CHECK(evaluate(star(star(a)), alphabet) == evaluate(a, alphabet));
    CHECK(evaluate(star(a * b), alphabet) == evaluate(star(b) * star(a), alphabet));
    CHECK(evaluate(star(s * a + b), alphabet) == evaluate(s.conj() * star(a) + star(b), alphabet));
  }
}

TEST_CASE("omega on so(3,2)") {
  const OmegaMap& om = default_omega();
  CHECK(bracket_failures(om).empty());
  const GaussRational i = GaussRational::i();
  CHECK(om.z_coeff == GaussRational(Rational(0), Rational(-1, 2)));
  CHECK(om.d_coeff == GaussRational(Rational(0), Rational(-2)));
  CHECK(om.z_coeff * om.d_coeff == q(-1));
  for (std::size_t k = lie::kCompactDim; k < lie::kAlgebraDim; ++k) {
    const auto& w = om[k];
    WeylElement raise, lower;
    for (const auto& [key, c] : w.terms()) (total_degree(key.first) == 2 ? raise : lower).add_term(key.first, key.second, c);
    CHECK(raise.has_fock_degree(2));
    CHECK(lower.has_fock_degree(-2));
  }
  CHECK(om[0] == WeylElement::z(0) * WeylElement::d(1) - WeylElement::z(1) * WeylElement::d(0));

  const OmegaMap other = build_omega_so32(-i);
  CHECK(bracket_failures(other).empty());
  CHECK(other.z_coeff * other.d_coeff == q(-1));
}

TEST_CASE("dual sl2") {
  const auto& om = default_omega();
  const auto& t = sl2_triples();
  const DualSl2 d = dual_sl2(om);
  CHECK(d.centralizer_dim == 3);
  CHECK(d.h == t.alpha.h - t.mu.h);
  CHECK(d.h == weight_operator());
  CHECK(commutator(d.e, d.f) == d.h);
  CHECK(commutator(d.h, d.e) == q(2) * d.e);
  CHECK(commutator(d.h, d.f) == q(-2) * d.f);
  CHECK(d.e == t.alpha.x - q(4) * t.mu.y);
  for (std::size_t x = 0; x < lie::kAlgebraDim; ++x) {
    CHECK(commutator(d.e, om[x]).is_zero());
    CHECK(commutator(d.f, om[x]).is_zero());
    CHECK(commutator(d.h, om[x]).is_zero());
  }
  // the sl2 triples commute with the compact part
  for (std::size_t x = 0; x < lie::kCompactDim; ++x)
    for (const WeylElement* w : {&t.alpha.h, &t.alpha.x, &t.alpha.y, &t.mu.h, &t.mu.x, &t.mu.y})
      CHECK(commutator(*w, om[x]).is_zero());

  const DualSl2 d2 = dual_sl2(build_omega_so32(-GaussRational::i()));
  CHECK(d2.e == t.alpha.x - t.mu.y);
  CHECK(d2.f == t.alpha.y - t.mu.x);
}
