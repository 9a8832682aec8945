#include "humbert/fock/cochain.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

#include "humbert/error.hpp"
#include "humbert/lie/exterior.hpp"
#include "humbert/lie/so32.hpp"

namespace humbert::fock {

namespace {

constexpr std::size_t kP = lie::kNoncompactDim;

// Coordinates of [k_i, p_j] in the p basis.
VectorG k_on_p(std::size_t i, std::size_t j) {
  const VectorG& c = lie::structure_constants()[i][lie::kCompactDim + j];
  return VectorG(c.begin() + lie::kCompactDim, c.end());
}

VectorG unit(std::size_t j) {
  VectorG v(kP, GaussRational(0));
  v[j] = 1;
  return v;
}

// Sorts a subset, returning the sign, or 0 when it has a repeated index.
int sort_with_sign(std::vector<std::size_t>& s) {
  int sign = 1;
  for (std::size_t x = 0; x < s.size(); ++x)
    for (std::size_t y = x + 1; y < s.size(); ++y) {
      if (s[x] == s[y]) return 0;
      if (s[x] > s[y]) {
        std::swap(s[x], s[y]);
        sign = -sign;
      }
    }
  return sign;
}

GaussRational det(std::vector<std::vector<GaussRational>> m) {
  const std::size_t n = m.size();
  if (n == 0) return GaussRational(1);
  exact::MatrixG a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = m[i][j];
  return exact::determinant(a);
}

std::vector<VectorG> noncompact_root_vectors(bool plus) {
  std::vector<VectorG> out;
  const auto& d = lie::root_datum();
  for (std::size_t k = 0; k < d.roots.size(); ++k) {
    const lie::Root& r = d.roots[k];
    if (plus ? !r.in_p_plus() : !r.in_p_minus()) continue;
    const VectorG c = lie::coordinates(d.vectors[k]);
    out.emplace_back(c.begin() + lie::kCompactDim, c.end());
  }
  return out;
}

}  // namespace

EquivariantCochain EquivariantCochain::zero(int degree) {
  if (degree < 0 || degree > static_cast<int>(kP)) throw Error(ErrorCode::DimensionMismatch, "cochain degree");
  return {degree, std::vector<Poly5>(lie::subsets(kP, static_cast<std::size_t>(degree)).size())};
}

const Poly5& EquivariantCochain::at(const std::vector<std::size_t>& subset) const {
  return values.at(lie::subset_rank(subset, kP));
}

bool EquivariantCochain::is_zero() const {
  for (const auto& v : values)
    if (!v.is_zero()) return false;
  return true;
}

EquivariantCochain phi_plus() {
  EquivariantCochain c = EquivariantCochain::zero(2);
  const auto subs = lie::subsets(kP, 2);
  for (std::size_t k = 0; k < subs.size(); ++k) {
    // p index j corresponds to alpha = j/2 + 1, mu = 4 + j%2.
    const std::size_t x = subs[k][0], y = subs[k][1];
    const std::size_t ax = x / 2, ay = y / 2;
    const bool x4 = x % 2 == 0, y4 = y % 2 == 0;
    if (x4 == y4) continue;
    const Poly5 q = Poly5::z(ax) * Poly5::z(ay);
    c.values[k] = x4 ? q : -q;
  }
  return c;
}

Poly5 evaluate(const EquivariantCochain& c, const std::vector<VectorG>& args) {
  if (args.size() != static_cast<std::size_t>(c.degree))
    throw Error(ErrorCode::DimensionMismatch, "cochain evaluated on wrong number of arguments");
  const auto subs = lie::subsets(kP, args.size());
  Poly5 out;
  for (std::size_t k = 0; k < subs.size(); ++k) {
    if (c.values[k].is_zero()) continue;
    std::vector<std::vector<GaussRational>> m(args.size(), std::vector<GaussRational>(args.size()));
    for (std::size_t a = 0; a < args.size(); ++a)
      for (std::size_t b = 0; b < args.size(); ++b) m[a][b] = args[b][subs[k][a]];
    const GaussRational coeff = det(m);
    if (!coeff.is_zero()) out += c.values[k] * coeff;
  }
  return out;
}

std::size_t equivariance_failures(const EquivariantCochain& c, const weyl::OmegaMap& om) {
  const auto subs = lie::subsets(kP, static_cast<std::size_t>(c.degree));
  std::size_t failures = 0;
  for (std::size_t i = 0; i < lie::kCompactDim; ++i)
    for (std::size_t k = 0; k < subs.size(); ++k) {
      Poly5 rhs;
      for (std::size_t pos = 0; pos < subs[k].size(); ++pos) {
        std::vector<VectorG> args;
        for (std::size_t t = 0; t < subs[k].size(); ++t) args.push_back(t == pos ? k_on_p(i, subs[k][t]) : unit(subs[k][t]));
        rhs += evaluate(c, args);
      }
      if (!(weyl::apply(om[i], c.values[k]) == rhs)) ++failures;
    }
  return failures;
}

EquivariantCochain rel_lie_differential(const EquivariantCochain& c, const weyl::OmegaMap& om) {
  EquivariantCochain out = EquivariantCochain::zero(c.degree + 1);
  const auto subs = lie::subsets(kP, static_cast<std::size_t>(c.degree + 1));
  for (std::size_t k = 0; k < subs.size(); ++k) {
    Poly5 v;
    for (std::size_t i = 0; i < subs[k].size(); ++i) {
      std::vector<std::size_t> rest;
      for (std::size_t t = 0; t < subs[k].size(); ++t)
        if (t != i) rest.push_back(subs[k][t]);
      const Poly5 term = weyl::apply(om[lie::kCompactDim + subs[k][i]], c.at(rest));
      if (i % 2 == 0)
        v += term;
      else
        v -= term;
    }
    out.values[k] = std::move(v);
  }
  return out;
}

std::vector<VectorG> p_plus_vectors() { return noncompact_root_vectors(true); }
std::vector<VectorG> p_minus_vectors() { return noncompact_root_vectors(false); }

std::vector<Bidegree> bidegree_support(const EquivariantCochain& c) {
  std::vector<VectorG> probes = p_plus_vectors();
  const auto minus = p_minus_vectors();
  probes.insert(probes.end(), minus.begin(), minus.end());
  std::vector<Bidegree> out;
  for (const auto& s : lie::subsets(probes.size(), static_cast<std::size_t>(c.degree))) {
    std::vector<VectorG> args;
    int np = 0;
    for (auto idx : s) {
      args.push_back(probes[idx]);
      if (idx < 3) ++np;
    }
    const Bidegree b{np, c.degree - np};
    if (std::find(out.begin(), out.end(), b) != out.end()) continue;
    if (!evaluate(c, args).is_zero()) out.push_back(b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<EquivariantCochain> equivariant_cochains(int k, int e, const weyl::OmegaMap& om) {
  const auto subs = lie::subsets(kP, static_cast<std::size_t>(k));
  const weyl::MonomialBasis mb(e);
  const std::size_t nm = mb.size();
  const std::size_t unknowns = subs.size() * nm;
  exact::MatrixG constraints(0, unknowns);
  for (std::size_t i = 0; i < lie::kCompactDim; ++i) {
    const exact::MatrixG rot = operator_matrix(om[i], e, e);
    for (std::size_t s = 0; s < subs.size(); ++s) {
      // rows indexed by monomials of the value at subset s
      std::vector<VectorG> rows(nm, VectorG(unknowns, GaussRational(0)));
      for (std::size_t r = 0; r < nm; ++r)
        for (std::size_t col = 0; col < nm; ++col)
          if (!rot(r, col).is_zero()) rows[r][s * nm + col] += rot(r, col);
      for (std::size_t pos = 0; pos < subs[s].size(); ++pos) {
        const VectorG img = k_on_p(i, subs[s][pos]);
        for (std::size_t j = 0; j < kP; ++j) {
          if (img[j].is_zero()) continue;
          auto t = subs[s];
          t[pos] = j;
          const int sign = sort_with_sign(t);
          if (sign == 0) continue;
          const std::size_t ts = lie::subset_rank(t, kP);
          const GaussRational f = sign > 0 ? img[j] : -img[j];
          for (std::size_t r = 0; r < nm; ++r) rows[r][ts * nm + r] -= f;
        }
      }
      for (const auto& row : rows) constraints.append_row(std::span<const GaussRational>(row));
    }
  }
  std::vector<EquivariantCochain> out;
  for (const auto& v : exact::kernel_basis(constraints)) {
    EquivariantCochain c = EquivariantCochain::zero(k);
    for (std::size_t s = 0; s < subs.size(); ++s)
      c.values[s] = mb.to_poly(VectorG(v.begin() + static_cast<std::ptrdiff_t>(s * nm),
                                       v.begin() + static_cast<std::ptrdiff_t>((s + 1) * nm)));
    out.push_back(std::move(c));
  }
  return out;
}

EquivariantCochain random_equivariant_cochain(int k, const std::vector<int>& value_degrees,
                                              const weyl::OmegaMap& om, std::mt19937_64& rng) {
  static std::mutex mutex;
  static std::map<std::tuple<int, int, std::string>, std::vector<EquivariantCochain>> cache;
  std::uniform_int_distribution<int> dist(-5, 5);
  EquivariantCochain out = EquivariantCochain::zero(k);
  for (int e : value_degrees) {
    const auto key = std::make_tuple(k, e, om.gauge.str());
    std::vector<EquivariantCochain> basis;
    {
      std::lock_guard lock(mutex);
      auto it = cache.find(key);
      if (it == cache.end()) it = cache.emplace(key, equivariant_cochains(k, e, om)).first;
      basis = it->second;
    }
    for (const auto& b : basis) {
      const GaussRational c(Rational(dist(rng)), Rational(dist(rng)));
      for (std::size_t s = 0; s < out.values.size(); ++s) out.values[s] += b.values[s] * c;
    }
  }
  return out;
}

WedgeDecomposition wedge_decompose_p11() {
  const auto plus = p_plus_vectors();
  const auto minus = p_minus_vectors();
  // Action of k_i on p+ and p- in the root-vector bases.
  auto restricted = [](const std::vector<VectorG>& basis, std::size_t i) {
    exact::MatrixG m(basis.size(), basis.size());
    for (std::size_t c = 0; c < basis.size(); ++c) {
      VectorG img(kP, GaussRational(0));
      for (std::size_t j = 0; j < kP; ++j) {
        if (basis[c][j].is_zero()) continue;
        const VectorG kj = k_on_p(i, j);
        for (std::size_t t = 0; t < kP; ++t) img[t] += basis[c][j] * kj[t];
      }
      const auto coords = exact::coordinates_in_span(basis, img);
      if (!coords) throw Error(ErrorCode::NotInAlgebra, "k does not preserve p+/p-");
      for (std::size_t r = 0; r < basis.size(); ++r) m(r, c) = (*coords)[r];
    }
    return m;
  };
  KAction action;
  for (std::size_t i = 0; i < lie::kCompactDim; ++i) {
    const exact::MatrixG ap = restricted(plus, i), am = restricted(minus, i);
    exact::MatrixG m(9, 9);
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 3; ++b)
        for (std::size_t t = 0; t < 3; ++t) {
          m(3 * t + b, 3 * a + b) += ap(t, a);
          m(3 * a + t, 3 * a + b) += am(t, b);
        }
    action[i] = std::move(m);
  }
  WedgeDecomposition out;
  const auto subs = lie::subsets(kP, 2);
  for (auto& piece : isotypic_decompose(action, 2, 2)) {
    IsotypicPiece converted{piece.ktype, {}};
    for (const auto& v : piece.basis) {
      VectorG w(subs.size(), GaussRational(0));
      for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b) {
          const GaussRational& coeff = v[3 * a + b];
          if (coeff.is_zero()) continue;
          for (std::size_t s = 0; s < subs.size(); ++s) {
            const std::size_t x = subs[s][0], y = subs[s][1];
            w[s] += coeff * (plus[a][x] * minus[b][y] - plus[a][y] * minus[b][x]);
          }
        }
      converted.basis.push_back(std::move(w));
    }
    out.total_dim += converted.basis.size();
    out.pieces.push_back(std::move(converted));
  }
  return out;
}

Poly5 evaluate_on_bivector(const EquivariantCochain& c, const VectorG& w) {
  if (c.degree != 2) throw Error(ErrorCode::DimensionMismatch, "bivector evaluation needs a degree-2 cochain");
  Poly5 out;
  for (std::size_t s = 0; s < w.size(); ++s)
    if (!w[s].is_zero()) out += c.values[s] * w[s];
  return out;
}

}  // namespace humbert::fock
