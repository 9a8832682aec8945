#include "humbert/weyl/omega.hpp"

#include <algorithm>
#include <map>

#include "humbert/error.hpp"

namespace humbert::weyl {

namespace {

using exact::MatrixG;
using exact::VectorG;

constexpr std::size_t kUnknowns = 2 * lie::kNoncompactDim;

struct PGenerators {
  std::array<WeylElement, lie::kNoncompactDim> zz;  // z_alpha z_mu
  std::array<WeylElement, lie::kNoncompactDim> dd;  // d_alpha d_mu
};

const PGenerators& p_generators() {
  static const PGenerators g = [] {
    PGenerators out;
    for (int a = 1; a <= 3; ++a)
      for (int m = 4; m <= 5; ++m) {
        const std::size_t k = lie::p_index(a, m) - lie::kCompactDim;
        out.zz[k] = WeylElement::z(a - 1) * WeylElement::z(m - 1);
        out.dd[k] = WeylElement::d(a - 1) * WeylElement::d(m - 1);
      }
    return out;
  }();
  return g;
}

// Accumulates linear equations sum_u coeff_u * unknown_u = rhs, one per
// normal-ordered monomial.
class LinearSystem {
 public:
  explicit LinearSystem(std::size_t unknowns) : n_(unknowns) {}

  void add(const WeylElement& w, std::size_t unknown) {
    for (const auto& [key, c] : w.terms()) row(key)[unknown] += c;
  }
  void add_rhs(const WeylElement& w) {
    for (const auto& [key, c] : w.terms()) row(key)[n_] += c;
  }
  void pin(std::size_t unknown, const GaussRational& value) {
    VectorG r(n_ + 1, GaussRational(0));
    r[unknown] = 1;
    r[n_] = value;
    extra_.push_back(std::move(r));
  }
  void flush_equation() {
    for (auto& [key, r] : pending_) rows_.push_back(std::move(r));
    pending_.clear();
  }

  MatrixG lhs() const { return split().first; }
  VectorG rhs() const { return split().second; }

 private:
  VectorG& row(const WeylElement::Key& key) {
    auto it = pending_.find(key);
    if (it == pending_.end()) it = pending_.emplace(key, VectorG(n_ + 1, GaussRational(0))).first;
    return it->second;
  }
  std::pair<MatrixG, VectorG> split() const {
    std::vector<VectorG> all = rows_;
    all.insert(all.end(), extra_.begin(), extra_.end());
    MatrixG a(all.size(), n_);
    VectorG b(all.size());
    for (std::size_t i = 0; i < all.size(); ++i) {
      for (std::size_t j = 0; j < n_; ++j) a(i, j) = all[i][j];
      b[i] = all[i][n_];
    }
    return {a, b};
  }

  std::size_t n_;
  std::map<WeylElement::Key, VectorG> pending_;
  std::vector<VectorG> rows_;
  std::vector<VectorG> extra_;
};

}  // namespace

GaussRational default_gauge() { return {Rational(0), Rational(-1, 2)}; }

WeylElement omega_compact(const MatrixG& x) {
  WeylElement w;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j)
      if (!x(i, j).is_zero()) w -= x(i, j) * (WeylElement::z(j) * WeylElement::d(i));
  return w;
}

WeylElement OmegaMap::of(const VectorG& coords) const {
  WeylElement w;
  for (std::size_t i = 0; i < lie::kAlgebraDim; ++i)
    if (!coords[i].is_zero()) w += coords[i] * images[i];
  return w;
}

std::string OmegaMap::convention() const {
  return "omega(e_ij) = z_i d_j - z_j d_i; omega(p_am) = (" + z_coeff.str() + ") z_a z_m + (" + d_coeff.str() +
         ") d_a d_m; gauge fixes the z1 z4 coefficient of omega(p14) to " + gauge.str();
}

OmegaMap build_omega_so32(const GaussRational& gauge) {
  const auto& basis = lie::so32_basis();
  const auto& sc = lie::structure_constants();
  const auto& gens = p_generators();
  std::array<WeylElement, lie::kCompactDim> wk;
  for (std::size_t i = 0; i < lie::kCompactDim; ++i) wk[i] = omega_compact(basis.elements[i]);

  // Unknown 2k is a(p_k), 2k+1 is b(p_k).
  // Stage A: [omega(k_i), omega(p_k)] = omega([k_i, p_k]) is linear.
  LinearSystem stage_a(kUnknowns);
  for (std::size_t i = 0; i < lie::kCompactDim; ++i)
    for (std::size_t k = 0; k < lie::kNoncompactDim; ++k) {
      stage_a.add(commutator(wk[i], gens.zz[k]), 2 * k);
      stage_a.add(commutator(wk[i], gens.dd[k]), 2 * k + 1);
      const VectorG& c = sc[i][lie::kCompactDim + k];
      for (std::size_t l = 0; l < lie::kNoncompactDim; ++l) {
        const GaussRational& cl = c[lie::kCompactDim + l];
        if (cl.is_zero()) continue;
        stage_a.add(-cl * gens.zz[l], 2 * l);
        stage_a.add(-cl * gens.dd[l], 2 * l + 1);
      }
      stage_a.flush_equation();
    }
  stage_a.pin(0, gauge);
  const MatrixG a_lhs = stage_a.lhs();
  const VectorG a_rhs = stage_a.rhs();
  const auto particular = exact::solve(a_lhs, std::span<const GaussRational>(a_rhs));
  if (!particular) throw Error(ErrorCode::NoSolution, "k-p bracket constraints are inconsistent");
  const auto free_dirs = exact::kernel_basis(a_lhs);
  for (const auto& v : free_dirs)
    for (std::size_t k = 0; k < lie::kNoncompactDim; ++k)
      if (!v[2 * k].is_zero())
        throw Error(ErrorCode::UnderdeterminedAfterGauge, "z-coefficients not fixed by the gauge");

  // Stage B: with the z-coefficients known, [omega(p_k), omega(p_l)] =
  // omega([p_k, p_l]) is affine in the remaining free directions t_m.
  const VectorG& u0 = *particular;
  LinearSystem stage_b(free_dirs.size());
  for (std::size_t k = 0; k < lie::kNoncompactDim; ++k)
    for (std::size_t l = k + 1; l < lie::kNoncompactDim; ++l) {
      const WeylElement zd = commutator(gens.zz[k], gens.dd[l]);
      const WeylElement dz = commutator(gens.dd[k], gens.zz[l]);
      for (std::size_t m = 0; m < free_dirs.size(); ++m) {
        const VectorG& v = free_dirs[m];
        stage_b.add(u0[2 * k] * v[2 * l + 1] * zd + v[2 * k + 1] * u0[2 * l] * dz, m);
      }
      WeylElement target;
      const VectorG& c = sc[lie::kCompactDim + k][lie::kCompactDim + l];
      for (std::size_t i = 0; i < lie::kCompactDim; ++i)
        if (!c[i].is_zero()) target += c[i] * wk[i];
      target -= u0[2 * k] * u0[2 * l + 1] * zd + u0[2 * k + 1] * u0[2 * l] * dz;
      stage_b.add_rhs(target);
      stage_b.flush_equation();
    }
  VectorG u = u0;
  if (!free_dirs.empty()) {
    const MatrixG b_lhs = stage_b.lhs();
    const VectorG b_rhs = stage_b.rhs();
    const auto t = exact::solve(b_lhs, std::span<const GaussRational>(b_rhs));
    if (!t) throw Error(ErrorCode::NoSolution, "p-p bracket constraints are inconsistent with the ansatz");
    if (exact::rank(b_lhs) < free_dirs.size())
      throw Error(ErrorCode::UnderdeterminedAfterGauge, "d-coefficients not fixed after the gauge");
    for (std::size_t m = 0; m < free_dirs.size(); ++m)
      for (std::size_t x = 0; x < kUnknowns; ++x) u[x] += (*t)[m] * free_dirs[m][x];
  }

  OmegaMap om;
  om.gauge = gauge;
  for (std::size_t i = 0; i < lie::kCompactDim; ++i) om.images[i] = wk[i];
  for (std::size_t k = 0; k < lie::kNoncompactDim; ++k)
    om.images[lie::kCompactDim + k] = u[2 * k] * gens.zz[k] + u[2 * k + 1] * gens.dd[k];
  om.z_coeff = u[0];
  om.d_coeff = u[1];
  for (std::size_t k = 0; k < lie::kNoncompactDim; ++k)
    if (!(u[2 * k] == om.z_coeff) || !(u[2 * k + 1] == om.d_coeff)) {
      om.z_coeff = GaussRational(0);
      om.d_coeff = GaussRational(0);
      break;
    }
  if (!bracket_failures(om).empty()) throw Error(ErrorCode::NoSolution, "solved ansatz fails the bracket check");
  return om;
}

const OmegaMap& default_omega() {
  static const OmegaMap om = build_omega_so32();
  return om;
}

std::vector<BracketFailure> bracket_failures(const OmegaMap& om) {
  std::vector<BracketFailure> out;
  const auto& sc = lie::structure_constants();
  for (std::size_t i = 0; i < lie::kAlgebraDim; ++i)
    for (std::size_t j = i + 1; j < lie::kAlgebraDim; ++j)
      if (!(commutator(om[i], om[j]) == om.of(sc[i][j]))) out.push_back({i, j});
  return out;
}

DualSl2 dual_sl2(const OmegaMap& om) {
  const auto& t = sl2_triples();
  const std::array<WeylElement, 6> cand{t.alpha.x, t.mu.x, t.alpha.y, t.mu.y, t.alpha.h, t.mu.h};
  auto centralizer = [&](const std::vector<std::size_t>& allowed) {
    LinearSystem sys(cand.size());
    for (std::size_t x = 0; x < lie::kAlgebraDim; ++x) {
      for (std::size_t j = 0; j < cand.size(); ++j) sys.add(commutator(cand[j], om[x]), j);
      sys.flush_equation();
    }
    for (std::size_t j = 0; j < cand.size(); ++j)
      if (std::find(allowed.begin(), allowed.end(), j) == allowed.end()) sys.pin(j, GaussRational(0));
    return exact::kernel_basis(sys.lhs());
  };
  auto combine = [&](const VectorG& c) {
    WeylElement w;
    for (std::size_t j = 0; j < cand.size(); ++j) w += c[j] * cand[j];
    return w;
  };

  DualSl2 out;
  const auto full = centralizer({0, 1, 2, 3, 4, 5});
  out.centralizer_dim = full.size();
  if (full.size() != 3)
    throw Error(ErrorCode::CentralizerDimensionUnexpected,
                "centralizer has dimension " + std::to_string(full.size()));
  out.h = weight_operator();
  const auto hc = exact::coordinates_in_span(full, VectorG{0, 0, 0, 0, 1, -1});
  if (!hc) throw Error(ErrorCode::CentralizerDimensionUnexpected, "H_alpha - H_mu is not in the centralizer");

  // E' lives in the +2 eigenspace of ad(H') spanned by X_alpha, Y_mu; F' in
  // the -2 eigenspace spanned by Y_alpha, X_mu.
  const auto ev = centralizer({0, 3});
  const auto fv = centralizer({2, 1});
  if (ev.size() != 1 || fv.size() != 1)
    throw Error(ErrorCode::CentralizerDimensionUnexpected, "raising/lowering parts are not one-dimensional");
  VectorG e = ev[0];
  const GaussRational scale = e[0].is_zero() ? e[3].inverse() : e[0].inverse();
  for (auto& x : e) x *= scale;
  out.e = combine(e);
  WeylElement f0 = combine(fv[0]);
  const WeylElement ef = commutator(out.e, f0);
  // [E', F0] = lambda H'; read lambda off the constant term of H'.
  const GaussRational h_const = out.h.coefficient(Exp{}, Exp{});
  const GaussRational lambda = ef.coefficient(Exp{}, Exp{}) / h_const;
  out.f = f0 * lambda.inverse();
  if (!(commutator(out.e, out.f) == out.h))
    throw Error(ErrorCode::CentralizerDimensionUnexpected, "centralizer does not close into sl2");
  return out;
}

}  // namespace humbert::weyl
