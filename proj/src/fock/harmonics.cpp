#include "humbert/fock/harmonics.hpp"

#include <map>
#include <mutex>

#include "humbert/error.hpp"
#include "humbert/fock/isotypic.hpp"
#include "humbert/weyl/sl2.hpp"

namespace humbert::fock {

namespace {

using weyl::Exp;
using weyl::MonomialBasis;

int alpha_degree(const Exp& e) { return e[0] + e[1] + e[2]; }

void check_cap(int d, int cap) {
  if (cap > kMaxDegreeCap || cap < 0)
    throw Error(ErrorCode::DegreeCapExceeded, "degree cap " + std::to_string(cap) + " exceeds " +
                                                  std::to_string(kMaxDegreeCap));
  if (d < 0 || d > cap)
    throw Error(ErrorCode::DegreeCapExceeded, "degree " + std::to_string(d) + " outside 0.." + std::to_string(cap));
}

std::vector<KTypeComponent> compute_degree(int d) {
  const MonomialBasis mb(d);
  const auto& om = weyl::default_omega();
  std::map<KType, KTypeComponent> merged;
  for (int da = 0; da <= d; ++da) {
    std::vector<Exp> block;
    std::map<Exp, std::size_t> index;
    for (std::size_t k = 0; k < mb.size(); ++k)
      if (alpha_degree(mb[k]) == da) {
        index[mb[k]] = block.size();
        block.push_back(mb[k]);
      }
    KAction action;
    for (std::size_t g = 0; g < 4; ++g) {
      MatrixG m(block.size(), block.size());
      for (std::size_t c = 0; c < block.size(); ++c) {
        const Poly5 img = weyl::apply(om[g], Poly5::monomial(block[c]));
        for (const auto& [e, coeff] : img.terms()) m(index.at(e), c) = coeff;
      }
      action[g] = std::move(m);
    }
    for (auto& piece : isotypic_decompose(action, d - da, da)) {
      auto [it, inserted] = merged.try_emplace(piece.ktype, KTypeComponent{piece.ktype, d, {}});
      for (const auto& v : piece.basis) {
        Poly5 p;
        for (std::size_t k = 0; k < block.size(); ++k) p.add_term(block[k], v[k]);
        it->second.basis.push_back(std::move(p));
      }
    }
  }
  std::vector<KTypeComponent> out;
  for (auto& [k, comp] : merged) out.push_back(std::move(comp));
  return out;
}

MatrixG poly_matrix(const std::vector<Poly5>& ps, const MonomialBasis& mb) {
  MatrixG m(ps.size(), mb.size());
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const VectorG v = mb.to_vector(ps[i]);
    for (std::size_t j = 0; j < mb.size(); ++j) m(i, j) = v[j];
  }
  return m;
}

}  // namespace

exact::MatrixG operator_matrix(const weyl::WeylElement& w, int from_degree, int to_degree) {
  const MonomialBasis src(from_degree), dst(to_degree);
  MatrixG m(dst.size(), src.size());
  for (std::size_t c = 0; c < src.size(); ++c) {
    const Poly5 img = weyl::apply(w, Poly5::monomial(src[c]));
    for (const auto& [e, coeff] : img.terms()) m(dst.index(e), c) = coeff;
  }
  return m;
}

const std::vector<KTypeComponent>& decompose_degree(int d, int cap) {
  check_cap(d, cap);
  static std::mutex mutex;
  static std::map<int, std::vector<KTypeComponent>> cache;
  {
    std::lock_guard lock(mutex);
    const auto it = cache.find(d);
    if (it != cache.end()) return it->second;
  }
  auto computed = compute_degree(d);
  std::lock_guard lock(mutex);
  return cache.try_emplace(d, std::move(computed)).first->second;
}

KTypeComponent isotypic_component(const KType& ktype, int d, int cap) {
  for (const auto& c : decompose_degree(d, cap))
    if (c.ktype == ktype) return c;
  return KTypeComponent{ktype, d, {}};
}

int degree_of(const KType& ktype, int cap) {
  for (int d = 0; d <= cap; ++d)
    if (!isotypic_component(ktype, d, cap).basis.empty()) return d;
  throw Error(ErrorCode::KTypeNotFound, ktype.str() + " does not occur up to degree " + std::to_string(cap));
}

KTypeComponent harmonics(const KType& ktype, int cap) {
  const int d = degree_of(ktype, cap);
  const KTypeComponent iso = isotypic_component(ktype, d, cap);
  if (d < 2) return iso;
  const auto& t = weyl::sl2_triples();
  const MonomialBasis lower(d - 2);
  // Coefficients c with Y(sum c_k b_k) = 0 for both lowering operators.
  MatrixG constraints(0, iso.basis.size());
  for (const weyl::WeylElement* y : {&t.alpha.y, &t.mu.y}) {
    std::vector<VectorG> images;
    for (const auto& b : iso.basis) images.push_back(lower.to_vector(weyl::apply(*y, b)));
    for (std::size_t r = 0; r < lower.size(); ++r) {
      VectorG row(iso.basis.size());
      for (std::size_t k = 0; k < iso.basis.size(); ++k) row[k] = images[k][r];
      constraints.append_row(std::span<const GaussRational>(row));
    }
  }
  KTypeComponent out{ktype, d, {}};
  for (const auto& c : exact::kernel_basis(constraints)) {
    Poly5 p;
    for (std::size_t k = 0; k < c.size(); ++k)
      if (!c[k].is_zero()) p += iso.basis[k] * c[k];
    out.basis.push_back(std::move(p));
  }
  return out;
}

HoweCertificate howe_span_check(const KType& ktype, int dmax, int cap) {
  check_cap(dmax, cap);
  const auto& t = weyl::sl2_triples();
  const KTypeComponent h = harmonics(ktype, cap);
  HoweCertificate cert;
  std::vector<Poly5> level;  // spanning set of the current degree (reduced)
  for (int d = 0; d <= dmax; ++d) {
    std::vector<Poly5> spanning;
    if (d == h.degree) spanning = h.basis;
    if (d >= h.degree + 2 && (d - h.degree) % 2 == 0)
      for (const auto& p : level) {
        spanning.push_back(weyl::apply(t.alpha.x, p));
        spanning.push_back(weyl::apply(t.mu.x, p));
      }
    const MonomialBasis mb(d);
    // Row-reduce the spanning set so the next degree starts from a basis.
    std::vector<Poly5> reduced;
    if (!spanning.empty()) {
      const auto ech = exact::row_reduce(poly_matrix(spanning, mb));
      for (std::size_t r = 0; r < ech.pivots.size(); ++r) reduced.push_back(mb.to_poly(ech.reduced.row(r)));
    }
    const KTypeComponent iso = isotypic_component(ktype, d, cap);
    std::vector<Poly5> both = iso.basis;
    both.insert(both.end(), reduced.begin(), reduced.end());
    const std::size_t joint = poly_span_rank(both, d);
    const HoweRow row{d, iso.basis.size(), reduced.size(), joint == iso.basis.size()};
    cert.ok = cert.ok && row.contained && row.span_dim == row.isotypic_dim;
    cert.rows.push_back(row);
    if (d >= h.degree && (d - h.degree) % 2 == 0) level = std::move(reduced);
  }
  return cert;
}

std::vector<Poly5> traceless_quadratics() {
  const Poly5 z1 = Poly5::z(0), z2 = Poly5::z(1), z3 = Poly5::z(2);
  return {z1 * z2, z1 * z3, z2 * z3, z1 * z1 - z2 * z2, z1 * z1 - z3 * z3};
}

std::size_t poly_span_rank(const std::vector<Poly5>& ps, int d) {
  if (ps.empty()) return 0;
  return exact::rank(poly_matrix(ps, MonomialBasis(d)));
}

bool same_span(const std::vector<Poly5>& a, const std::vector<Poly5>& b, int d) {
  std::vector<Poly5> both = a;
  both.insert(both.end(), b.begin(), b.end());
  const std::size_t r = poly_span_rank(both, d);
  return r == poly_span_rank(a, d) && r == poly_span_rank(b, d);
}

}  // namespace humbert::fock
