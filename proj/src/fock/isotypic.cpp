#include "humbert/fock/isotypic.hpp"

#include "humbert/error.hpp"

namespace humbert::fock {

namespace {

MatrixG shifted(const MatrixG& m, const GaussRational& lambda) {
  MatrixG out = m;
  for (std::size_t i = 0; i < m.rows(); ++i) out(i, i) -= lambda;
  return out;
}

}  // namespace

std::vector<IsotypicPiece> isotypic_decompose(const KAction& action, int max_char, int max_spin) {
  const std::size_t n = action[3].rows();
  MatrixG casimir(n, n);
  for (int k = 0; k < 3; ++k) casimir -= action[k] * action[k];

  std::vector<IsotypicPiece> out;
  std::size_t found = 0;
  for (int ch = -max_char; ch <= max_char; ++ch) {
    const auto eig = exact::kernel_with_free_columns(shifted(action[3], GaussRational(Rational(0), Rational(ch))));
    const std::size_t m = eig.vectors.size();
    if (m == 0) continue;
    // Casimir preserves the eigenspace; kernel basis vectors are read off at
    // their free columns.
    MatrixG restricted(m, m);
    for (std::size_t c = 0; c < m; ++c) {
      const VectorG img = casimir.apply(std::span<const GaussRational>(eig.vectors[c]));
      for (std::size_t r = 0; r < m; ++r) restricted(r, c) = img[eig.free_columns[r]];
    }
    std::size_t local = 0;
    for (int l = 0; l <= max_spin && local < m; ++l) {
      const auto sub = exact::kernel_basis(shifted(restricted, GaussRational(Rational(l * (l + 1)))));
      if (sub.empty()) continue;
      IsotypicPiece piece{KType{2 * l + 1, ch}, {}};
      for (const auto& coeffs : sub) {
        VectorG v(n, GaussRational(0));
        for (std::size_t k = 0; k < m; ++k)
          if (!coeffs[k].is_zero())
            for (std::size_t t = 0; t < n; ++t) v[t] += coeffs[k] * eig.vectors[k][t];
        piece.basis.push_back(std::move(v));
      }
      local += piece.basis.size();
      out.push_back(std::move(piece));
    }
    found += local;
  }
  if (found != n)
    throw Error(ErrorCode::DimensionMismatch,
                "isotypic pieces cover " + std::to_string(found) + " of " + std::to_string(n) + " dimensions");
  return out;
}

}  // namespace humbert::fock
