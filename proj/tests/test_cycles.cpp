#include <doctest.h>

#include <algorithm>
#include <chrono>
#include <random>

#include "humbert/cycles/cycles.hpp"
#include "humbert/error.hpp"
#include "humbert/plucker/plucker.hpp"
#include "humbert/surface/humbert.hpp"

using namespace humbert;
using namespace humbert::cycles;

namespace {

std::vector<LatticeVector> box_vectors(int b) {
  std::vector<LatticeVector> out;
  for (int a0 = -b; a0 <= b; ++a0)
    for (int a1 = -b; a1 <= b; ++a1)
      for (int a2 = -b; a2 <= b; ++a2)
        for (int a3 = -b; a3 <= b; ++a3)
          for (int a4 = -b; a4 <= b; ++a4) out.push_back({a0, a1, a2, a3, a4});
  return out;
}

exact::VectorQ to_q(const LatticeVector& x) {
  exact::VectorQ v;
  for (auto c : x) v.push_back(exact::Rational(static_cast<long>(c)));
  return v;
}

LatticeVector normal_vector(std::int64_t d) {
  const auto f = surface::normal_form(d).five_coords();
  LatticeVector x{};
  for (std::size_t k = 0; k < 5; ++k) x[k] = f[k].to_int64();
  return x;
}

std::vector<LatticeVector> primitive(std::vector<LatticeVector> vs) {
  vs.erase(std::remove_if(vs.begin(), vs.end(), [](const auto& x) { return content(x) != 1; }), vs.end());
  return vs;
}

// Oracle rank: largest k with a nonzero k x k minor.
std::int64_t det2(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) { return a * d - b * c; }

std::size_t minor_rank_rows(const LatticeVector& x, const LatticeVector& y) {
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      if (det2(x[i], x[j], y[i], y[j]) != 0) return 2;
  return (content(x) != 0 || content(y) != 0) ? 1 : 0;
}

}  // namespace

TEST_CASE("enumerate_box against a brute scan") {
  const auto d1 = enumerate_box(1, 1);
  CHECK(std::find(d1.begin(), d1.end(), LatticeVector{0, 1, 0, 0, 0}) != d1.end());
  CHECK(std::find(d1.begin(), d1.end(), LatticeVector{1, 1, 0, 0, 0}) != d1.end());
  const auto dm4 = enumerate_box(-4, 1);
  CHECK(std::find(dm4.begin(), dm4.end(), LatticeVector{0, 0, 0, 1, 1}) != dm4.end());
  for (int b = 0; b <= 3; ++b) CHECK(enumerate_box(2, b).empty());
  for (std::int64_t d : {-4, 0, 1, 4, 5}) {
    std::vector<LatticeVector> oracle;
    for (const auto& x : box_vectors(2))
      if (plucker::delta(to_q(x)) == exact::Rational(static_cast<long>(d))) oracle.push_back(x);
    CHECK(enumerate_box(d, 2) == oracle);
    CHECK(enumerate_box(d, 2, {}, 3) == oracle);
    auto neg = oracle;
    for (auto& x : neg)
      for (auto& c : x) c = -c;
    std::sort(neg.begin(), neg.end());
    CHECK(neg == oracle);
  }
  const CongClass cc{{1, 0, 0, 0, 0}, 2};
  for (const auto& x : enumerate_box(1, 2, cc)) CHECK(cc.contains(x));
  try {
    enumerate_box(1, 11);
    FAIL("expected BoxCapExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BoxCapExceeded);
  }
}

TEST_CASE("generators and the lattice action") {
  const auto& gens = sp4z_generators();
  for (const auto& g : gens) {
    CAPTURE(g.name);
    CHECK(plucker::is_symplectic(g.g));
    const bool has_inverse = std::any_of(gens.begin(), gens.end(), [&](const Generator& h) {
      return g.g * h.g == exact::MatrixQ::identity(4);
    });
    CHECK(has_inverse);
  }
  const auto j = plucker::psi_matrix();
  for (const auto& x : box_vectors(1)) {
    CHECK(act(exact::MatrixQ::identity(4), x) == x);
    CHECK(delta(act(j, x)) == delta(x));
  }
  // Every generator move preserves delta and content on box 2.
  for (const auto& x : box_vectors(2))
    for (const auto& g : gens) {
      const auto y = apply_rho(g.rho, x);
      if (delta(y) != delta(x) || content(y) != content(x)) FAIL_CHECK(g.name << " at " << str(x));
    }
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  const auto xs = box_vectors(1);
  for (int t = 0; t < 30; ++t) {
    exact::MatrixQ g = exact::MatrixQ::identity(4);
    for (int k = 0; k < 6; ++k) g = g * gens[pick(rng)].g;
    const auto& x = xs[rng() % xs.size()];
    CHECK(content(act(g, x)) == content(x));
    CHECK(pairing(act(g, x), act(g, x)) == delta(x));
  }
}

TEST_CASE("principal congruence words") {
  for (std::int64_t n : {2, 3}) {
    const auto set = congruence_generators(n);
    CAPTURE(n);
    CHECK(!set.words.empty());
    CHECK(set.words.size() == set.rho.size());
    CHECK(set.word_cap == kDefaultWordCap);
    for (const auto& r : set.rho) {
      for (int i = 0; i < 5; ++i)
        for (int k = 0; k < 5; ++k) CHECK(((r[i][k] - (i == k)) % n) == 0);
      // Residues mod n are invariant.
      for (const auto& x : box_vectors(1)) CHECK(reduce_mod(apply_rho(r, x), n) == reduce_mod(x, n));
    }
  }
  CHECK(congruence_generators(1).words.size() == sp4z_generators().size());
}

TEST_CASE("single orbits at level 1") {
  for (std::int64_t d : {1, 4, 5, 8, 9}) {
    CAPTURE(d);
    const auto vs = primitive(enumerate_box(d, 3));
    const auto part = orbit_partition(vs, 1, 12);
    CHECK(part.classes.size() == 1);
    CHECK(part.exact);
    CHECK(part.class_of(normal_vector(d)).has_value());
  }
  // Distinct discriminants never merge.
  auto mixed = primitive(enumerate_box(1, 2));
  const auto five = primitive(enumerate_box(5, 2));
  mixed.insert(mixed.end(), five.begin(), five.end());
  const auto part = orbit_partition(mixed, 1, 10);
  CHECK(part.classes.size() == 2);
  for (const auto& cls : part.classes)
    for (const auto& x : cls) CHECK(delta(x) == delta(cls.front()));
  // Content separates imprimitive vectors.
  const auto four = orbit_partition(enumerate_box(4, 2), 1, 10);
  CHECK(four.classes.size() == 2);
  CHECK(four.exact);
}

TEST_CASE("orbit_partition is independent of input order") {
  auto vs = primitive(enumerate_box(5, 2));
  const auto base = orbit_partition(vs, 2, 8);
  std::mt19937_64 rng(32);
  std::shuffle(vs.begin(), vs.end(), rng);
  const auto shuffled = orbit_partition(vs, 2, 8);
  CHECK(shuffled.classes == base.classes);
  CHECK(shuffled.exact == base.exact);
}

TEST_CASE("level 2 classes keep their residues") {
  const auto part = orbit_partition(enumerate_box(4, 2), 2, 8);
  for (const auto& cls : part.classes)
    for (const auto& x : cls) CHECK(reduce_mod(x, 2) == reduce_mod(cls.front(), 2));
  CHECK(part.generators.label == "Gamma(2)");
  // Height bound below the input vectors is an error.
  try {
    orbit_partition({{3, 0, 0, 0, 0}}, 1, 2);
    FAIL("expected HeightBoundTooSmall");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::HeightBoundTooSmall);
  }
}

TEST_CASE("frame classification") {
  const auto one = frame_classify({{{0, 1, 0, 0, 0}}});
  CHECK(one.nonsingular);
  CHECK(one.nondegenerate);
  const auto zero = frame_classify({{{0, 0, 0, 0, 0}}});
  CHECK_FALSE(zero.nonsingular);
  CHECK(zero.nondegenerate);
  const auto prop = frame_classify({{{0, 1, 0, 0, 0}, {0, 2, 0, 0, 0}}});
  CHECK_FALSE(prop.nonsingular);
  CHECK(prop.nondegenerate);
  // Isotropic vector: rank(gram) = 0 < span 1.
  const auto iso = frame_classify({{{1, 0, 0, 0, 0}}});
  CHECK_FALSE(iso.nonsingular);
  CHECK_FALSE(iso.nondegenerate);
  const Frame three{{{0, 1, 0, 0, 0}, {1, 0, -1, 0, 0}, {0, 0, 0, 1, -1}}};
  CHECK(frame_classify(three).nonsingular);
  CHECK(three.gram() == exact::MatrixQ::from_rows({{1, 0, 0}, {0, 4, 0}, {0, 0, 4}}));
  CHECK_THROWS_AS(frame_classify(Frame{}), Error);

  // Pairs from box 1 against the minors oracle.
  const auto xs = box_vectors(1);
  for (std::size_t i = 0; i < xs.size(); i += 7)
    for (std::size_t j = i; j < xs.size(); j += 5) {
      const auto& x = xs[i];
      const auto& y = xs[j];
      const std::int64_t g11 = pairing(x, x), g12 = pairing(x, y), g22 = pairing(y, y);
      const std::size_t gram_rank = det2(g11, g12, g12, g22) != 0 ? 2 : ((g11 || g12 || g22) ? 1 : 0);
      const std::size_t span = minor_rank_rows(x, y);
      const auto fc = frame_classify({{x, y}});
      if (fc.gram_rank != gram_rank || fc.span_dim != span) FAIL_CHECK(str(x) << " " << str(y));
    }
}

TEST_CASE("cycle report") {
  const auto r = cycle_report(1, LatticeVector{}, 1, 3, 12);
  CHECK(r["orbit_count"] == 1);
  CHECK(r["exact"] == true);
  CHECK(r["stable_range"]["holds"] == true);
  CHECK(r["normal_form"]["class"] == 0);
  const auto five = cycle_report(5, std::nullopt, 1, 3, 12);
  CHECK(five["orbit_count"] == 1);
  const auto lvl2 = cycle_report(4, std::nullopt, 2, 2, 8);
  CHECK(lvl2["generator_set"] == "Gamma(2)");
  CHECK(!lvl2["words"].empty());
}
