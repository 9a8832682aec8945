#include "humbert/acceptance/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "humbert/cycles/cycles.hpp"
#include "humbert/error.hpp"
#include "humbert/fock/cochain.hpp"
#include "humbert/fock/harmonics.hpp"
#include "humbert/lie/parabolic.hpp"
#include "humbert/plucker/plucker.hpp"
#include "humbert/surface/humbert.hpp"
#include "humbert/weyl/omega.hpp"
#include "humbert/weyl/sl2.hpp"
#include "humbert/weyl/weyl.hpp"

namespace humbert::acceptance {

namespace {

using exact::GaussRational;
using exact::MatrixQ;
using exact::Rational;
using weyl::Poly5;
using weyl::WeylElement;

struct Outcome {
  bool pass;
  std::string detail;
};

// Accumulates failed sub-checks; the detail names the first few.
class Ledger {
 public:
  void expect(bool ok, const std::string& what) {
    ++total_;
    if (ok) return;
    if (failed_.size() < 3) failed_.push_back(what);
    ++failures_;
  }
  Outcome finish(std::string summary) const {
    while (!summary.empty() && (summary.back() == ' ' || summary.back() == ';')) summary.pop_back();
    if (failures_ == 0) return {true, summary};
    std::ostringstream os;
    os << failures_ << "/" << total_ << " sub-checks failed:";
    for (const auto& f : failed_) os << " " << f << ";";
    return {false, os.str()};
  }

 private:
  std::size_t total_ = 0, failures_ = 0;
  std::vector<std::string> failed_;
};

MatrixQ random_word(std::mt19937_64& rng, int length) {
  const auto gens = plucker::symplectic_generators();
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  MatrixQ g = MatrixQ::identity(4);
  for (int k = 0; k < length; ++k) g = g * gens[pick(rng)].matrix;
  return g;
}

GaussRational q(long n, long d = 1) { return GaussRational(Rational(n, d)); }

Outcome harmonic_dimensions() {
  Ledger l;
  const std::vector<std::pair<KType, std::vector<Poly5>>> expected{
      {{1, 0}, {Poly5(GaussRational(1))}},
      {{3, 0}, {Poly5::z(0), Poly5::z(1), Poly5::z(2)}},
      {{5, 0}, fock::traceless_quadratics()}};
  std::ostringstream dims;
  for (const auto& [k, basis] : expected) {
    const auto h = fock::harmonics(k);
    dims << k.str() << ":" << h.basis.size() << " ";
    l.expect(h.basis.size() == static_cast<std::size_t>(k.so3_dim), "dim " + k.str());
    l.expect(fock::same_span(h.basis, basis, h.degree), "basis " + k.str());
  }
  return l.finish("dims " + dims.str() + "with bases 1, z1..z3, traceless quadratics");
}

Outcome sl2_relations() {
  Ledger l;
  const auto& om = weyl::default_omega();
  const auto& t = weyl::sl2_triples();
  for (const auto* s : {&t.alpha, &t.mu}) {
    l.expect(weyl::commutator(s->h, s->x) == q(2) * s->x, "[H,X]=2X");
    l.expect(weyl::commutator(s->h, s->y) == q(-2) * s->y, "[H,Y]=-2Y");
    l.expect(weyl::commutator(s->x, s->y) == s->h, "[X,Y]=H");
  }
  for (const WeylElement* a : {&t.alpha.h, &t.alpha.x, &t.alpha.y})
    for (const WeylElement* m : {&t.mu.h, &t.mu.x, &t.mu.y})
      l.expect(weyl::commutator(*a, *m).is_zero(), "alpha/mu commute");
  for (std::size_t x = 0; x < lie::kCompactDim; ++x)
    for (const WeylElement* w : {&t.alpha.h, &t.alpha.x, &t.alpha.y, &t.mu.h, &t.mu.x, &t.mu.y})
      l.expect(weyl::commutator(*w, om[x]).is_zero(), "commutes with omega(k)");
  const auto d = weyl::dual_sl2(om);
  l.expect(d.centralizer_dim == 3, "centralizer dim 3");
  l.expect(weyl::commutator(d.e, d.f) == d.h, "[E',F']=H'");
  l.expect(weyl::commutator(d.h, d.e) == q(2) * d.e, "[H',E']=2E'");
  l.expect(weyl::commutator(d.h, d.f) == q(-2) * d.f, "[H',F']=-2F'");
  l.expect(d.h == weyl::weight_operator(), "H' = H_alpha - H_mu");
  for (std::size_t x = 0; x < lie::kAlgebraDim; ++x)
    for (const WeylElement* w : {&d.e, &d.f, &d.h})
      l.expect(weyl::commutator(*w, om[x]).is_zero(), "dual sl2 commutes with omega(g)");
  return l.finish("alpha, mu and dual sl2 relations exact; cross terms vanish");
}

Outcome omega_homomorphism() {
  const auto om = weyl::build_omega_so32();
  const auto failures = weyl::bracket_failures(om);
  const std::size_t pairs = lie::kAlgebraDim * (lie::kAlgebraDim - 1) / 2;
  std::ostringstream os;
  os << (pairs - failures.size()) << "/" << pairs << " basis pairs satisfy [w(x),w(y)] = w([x,y]); "
     << om.convention();
  return {failures.empty() && pairs == 45, os.str()};
}

Outcome closedness(std::uint64_t seed) {
  Ledger l;
  const auto& om = weyl::default_omega();
  l.expect(fock::rel_lie_differential(fock::phi_plus(), om).is_zero(), "d(phi+) = 0");
  std::mt19937_64 rng(seed);
  int nonzero_d = 0;
  for (int trial = 0; trial < kRandomCochains; ++trial) {
    const int k = trial % 2 == 0 ? 1 : 2;
    const auto c = fock::random_equivariant_cochain(k, k == 1 ? std::vector<int>{2} : std::vector<int>{1, 2, 3}, om, rng);
    l.expect(!c.is_zero(), "random cochain nonzero");
    l.expect(fock::equivariance_failures(c, om) == 0, "random cochain equivariant");
    const auto dc = fock::rel_lie_differential(c, om);
    nonzero_d += !dc.is_zero();
    l.expect(fock::rel_lie_differential(dc, om).is_zero(), "d^2 = 0");
  }
  return l.finish("d(phi+) = 0; d^2 = 0 on " + std::to_string(kRandomCochains) + " random cochains (" +
                  std::to_string(nonzero_d) + " with dc != 0)");
}

Outcome wedge_decomposition() {
  const auto w = fock::wedge_decompose_p11();
  std::map<KType, int> mult;
  for (const auto& p : w.pieces) mult[p.ktype] += static_cast<int>(p.basis.size()) / p.ktype.so3_dim;
  std::ostringstream os;
  for (const auto& [k, m] : mult) os << k.str() << ":" << m << " ";
  os << "total " << w.total_dim;
  const bool ok = w.total_dim == 9 && mult == std::map<KType, int>{{{1, 0}, 1}, {{3, 0}, 1}, {{5, 0}, 1}};
  return {ok, os.str()};
}

Outcome howe_truncation() {
  Ledger l;
  for (const KType k : {KType{1, 0}, KType{3, 0}, KType{5, 0}}) {
    const auto cert = fock::howe_span_check(k, kHoweDegree);
    l.expect(cert.ok && cert.rows.size() == kHoweDegree + 1, "howe " + k.str());
  }
  return l.finish("span check passes for 1x1, 3x1, 5x1 up to degree " + std::to_string(kHoweDegree));
}

Outcome weight_bookkeeping() {
  Ledger l;
  const WeylElement hp = weyl::dual_sl2(weyl::default_omega()).h;
  l.expect(weyl::apply(hp, Poly5(q(1))) == Poly5(q(1, 2)), "1/2 on constants");
  for (std::size_t a = 0; a < 3; ++a) l.expect(weyl::apply(hp, Poly5::z(a)) == Poly5::z(a) * q(3, 2), "3/2 on z_alpha");
  for (const auto& p : fock::harmonics(KType{5, 0}).basis)
    l.expect(weyl::apply(hp, p) == p * q(5, 2), "5/2 on H(K)_5");
  return l.finish("H' = 1/2, 3/2, 5/2 on constants, z_alpha, H(K)_5x1");
}

Outcome vogan_zuckerman() {
  Ledger l;
  std::set<int> families;
  for (const auto& [x1, x2] : lie::table_sample_points()) {
    const auto q = lie::parabolic_from(x1, x2);
    families.insert(q.family);
    auto computed = lie::computed_bidegrees(q);
    auto table = q.bidegrees;
    std::sort(computed.begin(), computed.end());
    std::sort(table.begin(), table.end());
    l.expect(computed == table, "bidegrees at (" + x1.str() + "," + x2.str() + ")");
  }
  l.expect(families == std::set<int>{1, 2, 3, 4, 5}, "all five families sampled");
  const auto q10 = lie::parabolic_from(1, 0);
  l.expect(lie::vz_ktype(q10) == KType{5, 0}, "vz_ktype(1,0) = 5x1");
  l.expect(lie::cohomology_dim(q10, 1, 1) == 1, "cohomology_dim(1,1) = 1");
  return l.finish("computed bidegrees match the table for " + std::to_string(lie::table_sample_points().size()) +
                  " parabolics in 5 families; (1,0): 5x1, h^{1,1} = 1");
}

Outcome isogeny_dictionary(std::uint64_t seed) {
  Ledger l;
  l.expect(plucker::skew_from_wedge(plucker::psi_wedge()) == plucker::psi_matrix(), "psi -> Psi");
  // b and b0 agree on all basis pairs (both bilinear).
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      exact::VectorQ ei(6, Rational(0)), ej(6, Rational(0));
      ei[i] = 1;
      ej[j] = 1;
      l.expect(plucker::b_form(ei, ej) == plucker::b0_form(plucker::skew_from_wedge(ei), plucker::skew_from_wedge(ej)),
               "b = b0");
    }
  l.expect(exact::signature_of_symmetric(plucker::delta_gram()) == exact::Signature{3, 2, 0}, "signature (3,2)");
  l.expect(plucker::iso_rho(-MatrixQ::identity(4)) == MatrixQ::identity(5), "iso_rho(-1) = 1");
  std::mt19937_64 rng(seed);
  const MatrixQ gram = plucker::delta_gram();
  for (int t = 0; t < kIsoRhoWords; ++t) {
    const MatrixQ g = random_word(rng, 6);
    const MatrixQ r = plucker::iso_rho(g);
    l.expect(r.transpose() * gram * r == gram, "rho^t G rho = G");
    l.expect(plucker::wedge_square(g).apply(plucker::psi_wedge()) == plucker::psi_wedge(), "psi fixed");
  }
  return l.finish("psi -> Psi fixed, b = b0, signature (3,2), G preserved on " + std::to_string(kIsoRhoWords) +
                  " words, iso_rho(-1) = 1");
}

Outcome ns_ranks() {
  using exact::AlgebraElement;
  using exact::AlgebraSpec;
  auto qi = [](long re, long im) { return AlgebraElement(AlgebraSpec::gaussian(), {Rational(re), Rational(im)}); };
  const auto q2 = AlgebraSpec::gaussian_sqrt2();
  const std::vector<std::tuple<std::string, surface::SiegelPointExact, std::size_t>> cases{
      {"diag(i,2i)", surface::SiegelPointExact(qi(0, 1), qi(0, 2), qi(0, 0)), 3},
      {"diag(i,sqrt-2)",
       surface::SiegelPointExact(AlgebraElement(q2, {0, 1, 0, 0}), AlgebraElement(q2, {0, 0, 0, 1}),
                                 AlgebraElement(q2, {0, 0, 0, 0})),
       1},
      {"[[2i,i],[i,2i]]", surface::SiegelPointExact(qi(0, 2), qi(0, 2), qi(0, 1)), 3}};
  Ledger l;
  std::ostringstream os;
  for (const auto& [name, tau, kernel] : cases) {
    const auto ns = surface::t11_and_ns_rank(tau);
    os << name << " -> kernel " << ns.kernel_dim() << ", nsRank " << ns.ns_rank() << "; ";
    l.expect(ns.kernel_dim() == kernel && ns.ns_rank() == kernel + 1, name);
  }
  return l.finish(os.str());
}

Outcome discriminant_congruence() {
  std::size_t count = 0, bad = 0;
  const int b = kDiscriminantBox;
  for (std::int64_t x0 = -b; x0 <= b; ++x0)
    for (std::int64_t x1 = -b; x1 <= b; ++x1)
      for (std::int64_t x2 = -b; x2 <= b; ++x2)
        for (std::int64_t x3 = -b; x3 <= b; ++x3)
          for (std::int64_t x4 = -b; x4 <= b; ++x4) {
            const surface::SingularRelation rel{x0, x1, x2, x3, x4};
            const std::int64_t d = rel.discriminant();
            const std::int64_t r = ((d % 4) + 4) % 4;
            if (r > 1 || Rational(d) != plucker::delta(rel.five_coords())) ++bad;
            ++count;
          }
  return {bad == 0, std::to_string(count) + " vectors in [-3,3]^5, " + std::to_string(bad) + " violations"};
}

Outcome single_orbits() {
  Ledger l;
  std::ostringstream os;
  for (std::int64_t d : {1, 4, 5, 8}) {
    auto vs = cycles::enumerate_box(d, kOrbitBox);
    vs.erase(std::remove_if(vs.begin(), vs.end(), [](const auto& x) { return cycles::content(x) != 1; }), vs.end());
    const auto nf_coords = surface::normal_form(d).five_coords();
    cycles::LatticeVector nf{};
    for (std::size_t k = 0; k < 5; ++k) nf[k] = nf_coords[k].to_int64();
    int found = -1;
    for (int h = kOrbitBox; h <= kOrbitMaxHeight && found < 0; ++h) {
      const auto part = cycles::orbit_partition(vs, 1, h);
      if (part.exact && part.classes.size() == 1 && part.class_of(nf)) found = h;
    }
    os << "D=" << d << ": " << vs.size() << " vectors, ";
    if (found < 0)
      os << "not certified by height " << kOrbitMaxHeight << "; ";
    else
      os << "one class at height " << found << "; ";
    l.expect(found >= 0, "single orbit D=" + std::to_string(d));
  }
  return l.finish(os.str());
}

// Oracle ranks from minors, independent of the elimination in frame_classify.
std::size_t minor_gram_rank(std::int64_t g11, std::int64_t g12, std::int64_t g22) {
  if (g11 * g22 - g12 * g12 != 0) return 2;
  return (g11 != 0 || g12 != 0 || g22 != 0) ? 1 : 0;
}

std::size_t minor_span(const cycles::LatticeVector& x, const cycles::LatticeVector& y) {
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      if (x[i] * y[j] - x[j] * y[i] != 0) return 2;
  return (cycles::content(x) != 0 || cycles::content(y) != 0) ? 1 : 0;
}

Outcome frame_classification() {
  std::vector<cycles::LatticeVector> box;
  const int b = kFrameBox;
  for (std::int64_t x0 = -b; x0 <= b; ++x0)
    for (std::int64_t x1 = -b; x1 <= b; ++x1)
      for (std::int64_t x2 = -b; x2 <= b; ++x2)
        for (std::int64_t x3 = -b; x3 <= b; ++x3)
          for (std::int64_t x4 = -b; x4 <= b; ++x4) box.push_back({x0, x1, x2, x3, x4});
  std::size_t frames = 0, bad = 0;
  for (std::size_t i = 0; i < box.size(); ++i) {
    const auto& x = box[i];
    const std::int64_t gxx = cycles::pairing(x, x);
    const std::size_t r1 = gxx != 0 ? 1 : 0, s1 = cycles::content(x) != 0 ? 1 : 0;
    const auto c1 = cycles::frame_classify({{x}});
    bad += c1.nonsingular != (r1 == 1) || c1.nondegenerate != (r1 == s1);
    ++frames;
    for (std::size_t j = i; j < box.size(); ++j) {
      const auto& y = box[j];
      const std::size_t r = minor_gram_rank(gxx, cycles::pairing(x, y), cycles::pairing(y, y));
      const std::size_t s = minor_span(x, y);
      const auto c = cycles::frame_classify({{x, y}});
      bad += c.nonsingular != (r == 2) || c.nondegenerate != (r == s);
      ++frames;
    }
  }
  const auto zero = cycles::frame_classify({{cycles::LatticeVector{}}});
  const bool zero_ok = zero.nondegenerate && !zero.nonsingular;
  return {bad == 0 && zero_ok, std::to_string(frames) + " frames (n = 1, 2), " + std::to_string(bad) +
                                   " mismatches; zero frame nondegenerate but singular: " + (zero_ok ? "yes" : "no")};
}

Outcome ztau_equivariance(std::uint64_t seed) {
  const Eigen::Matrix2cd tau = Eigen::Matrix2cd::Identity() * std::complex<double>(0, 1);
  const surface::ZMatrix z = surface::z_tau_numeric(tau);
  std::mt19937_64 rng(seed);
  double worst = 0;
  for (int t = 0; t < kZTauWords; ++t) {
    const MatrixQ g = t == 0 ? plucker::psi_matrix() : random_word(rng, 5);
    const Eigen::MatrixXd moved = (surface::to_eigen(surface::z_action(g)) * z.transpose()).transpose();
    worst = std::max(worst, surface::subspace_distance(surface::z_tau_numeric(surface::act_numeric(g, tau)), moved));
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "max subspace distance %.3e over %d words (tol %.0e)", worst, kZTauWords,
                kZTauTolerance);
  return {worst < kZTauTolerance, buf};
}

struct Criterion {
  const char* name;
  std::function<Outcome(std::uint64_t)> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list{
      {"harmonic dimensions", [](auto) { return harmonic_dimensions(); }},
      {"sl2 and dual-pair relations", [](auto) { return sl2_relations(); }},
      {"omega bracket homomorphism", [](auto) { return omega_homomorphism(); }},
      {"closedness", closedness},
      {"wedge^{1,1} p decomposition", [](auto) { return wedge_decomposition(); }},
      {"Howe truncation", [](auto) { return howe_truncation(); }},
      {"weight bookkeeping", [](auto) { return weight_bookkeeping(); }},
      {"Vogan-Zuckerman table", [](auto) { return vogan_zuckerman(); }},
      {"isogeny dictionary", isogeny_dictionary},
      {"NS ranks", [](auto) { return ns_ranks(); }},
      {"discriminant congruence", [](auto) { return discriminant_congruence(); }},
      {"single-orbit certification", [](auto) { return single_orbits(); }},
      {"frame classification", [](auto) { return frame_classification(); }},
      {"Z_tau equivariance", ztau_equivariance},
  };
  return list;
}

}  // namespace

CriterionResult run_criterion(int id, std::uint64_t seed) {
  if (id < 1 || id > kCriterionCount) throw std::out_of_range("criterion id " + std::to_string(id));
  const auto& c = criteria()[id - 1];
  CriterionResult r{id, c.name, false, "", 0};
  const auto start = std::chrono::steady_clock::now();
  try {
    const Outcome o = c.run(seed);
    r.pass = o.pass;
    r.detail = o.detail;
  } catch (const std::exception& e) {
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CriterionResult> run_all(std::uint64_t seed) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, seed));
  return out;
}

std::string format_line(const CriterionResult& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, " (%.2f s)", r.seconds);
  char id[8];
  std::snprintf(id, sizeof id, "%02d", r.id);
  return std::string(r.pass ? "PASS" : "FAIL") + " [" + id + "] " + r.name + ": " + r.detail + buf;
}

}  // namespace humbert::acceptance
