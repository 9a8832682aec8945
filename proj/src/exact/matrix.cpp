#include "humbert/exact/matrix.hpp"

namespace humbert::exact {

namespace {

// Simultaneous row/column operation: row_i += f*row_j, col_i += f*col_j.
void add_multiple(MatrixQ& m, std::size_t i, std::size_t j, const Rational& f) {
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) m(i, c) += f * m(j, c);
  for (std::size_t r = 0; r < n; ++r) m(r, i) += f * m(r, j);
}

void swap_index(MatrixQ& m, std::size_t i, std::size_t j) {
  if (i == j) return;
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) std::swap(m(i, c), m(j, c));
  for (std::size_t r = 0; r < n; ++r) std::swap(m(r, i), m(r, j));
}

}  // namespace

Signature signature_of_symmetric(const MatrixQ& input) {
  if (!input.is_symmetric()) throw Error(ErrorCode::NotSymmetric, "signature requires a symmetric matrix");
  MatrixQ m = input;
  const std::size_t n = m.rows();
  Signature sig;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = n;
    for (std::size_t i = k; i < n && p == n; ++i)
      if (!m(i, i).is_zero()) p = i;
    if (p == n) {
      // All remaining diagonal entries vanish; an off-diagonal entry (i,j)
      // yields a nonzero diagonal after row_i += row_j.
      std::size_t oi = n, oj = n;
      for (std::size_t i = k; i < n && oi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (!m(i, j).is_zero()) {
            oi = i;
            oj = j;
            break;
          }
      if (oi == n) {
        sig.zero += static_cast<int>(n - k);
        break;
      }
      add_multiple(m, oi, oj, Rational(1));
      p = oi;
    }
    swap_index(m, k, p);
    const Rational inv = m(k, k).inverse();
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k).is_zero()) continue;
      add_multiple(m, i, k, -(m(i, k) * inv));
    }
    if (m(k, k).sign() > 0)
      ++sig.plus;
    else
      ++sig.minus;
  }
  return sig;
}

std::vector<std::string> to_strings(std::span<const Rational> v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const Rational& x : v) out.push_back(x.str());
  return out;
}

}  // namespace humbert::exact
