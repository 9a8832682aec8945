#include "humbert/lie/exterior.hpp"

#include <algorithm>

namespace humbert::lie {

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t r) {
  std::vector<std::vector<std::size_t>> out;
  if (r > n) return out;
  std::vector<std::size_t> s(r);
  for (std::size_t k = 0; k < r; ++k) s[k] = k;
  while (true) {
    out.push_back(s);
    std::size_t k = r;
    while (k > 0 && s[k - 1] == n - r + k - 1) --k;
    if (k == 0) break;
    ++s[k - 1];
    for (std::size_t t = k; t < r; ++t) s[t] = s[t - 1] + 1;
  }
  return out;
}

std::size_t subset_rank(const std::vector<std::size_t>& s, std::size_t n) {
  // Count subsets lexicographically before s.
  auto binom = [](std::size_t a, std::size_t b) {
    if (b > a) return std::size_t{0};
    std::size_t c = 1;
    for (std::size_t k = 1; k <= b; ++k) c = c * (a - b + k) / k;
    return c;
  };
  const std::size_t r = s.size();
  std::size_t rank = 0;
  std::size_t prev = 0;
  for (std::size_t k = 0; k < r; ++k) {
    for (std::size_t v = (k == 0 ? 0 : prev + 1); v < s[k]; ++v) rank += binom(n - v - 1, r - k - 1);
    prev = s[k];
  }
  return rank;
}

exact::MatrixG wedge_derivation(const exact::MatrixG& a, std::size_t r) {
  const std::size_t n = a.rows();
  const auto basis = subsets(n, r);
  exact::MatrixG out(basis.size(), basis.size());
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const auto& s = basis[col];
    for (std::size_t pos = 0; pos < r; ++pos) {
      for (std::size_t i = 0; i < n; ++i) {
        const auto& coeff = a(i, s[pos]);
        if (coeff.is_zero()) continue;
        auto t = s;
        t[pos] = i;
        if (i != s[pos] && std::find(s.begin(), s.end(), i) != s.end()) continue;
        // Sort t, tracking the parity of the permutation.
        int sign = 1;
        for (std::size_t x = 0; x < r; ++x)
          for (std::size_t y = x + 1; y < r; ++y)
            if (t[x] > t[y]) {
              std::swap(t[x], t[y]);
              sign = -sign;
            }
        const std::size_t row = subset_rank(t, n);
        out(row, col) += sign > 0 ? coeff : -coeff;
      }
    }
  }
  return out;
}

std::size_t wedge_invariants_dim(const std::vector<exact::MatrixG>& actions, std::size_t n, std::size_t r) {
  const std::size_t dim = subsets(n, r).size();
  if (actions.empty()) return dim;
  exact::MatrixG stacked(0, dim);
  for (const auto& a : actions) {
    const auto w = wedge_derivation(a, r);
    for (std::size_t i = 0; i < w.rows(); ++i) {
      const auto row = w.row(i);
      stacked.append_row(std::span<const exact::GaussRational>(row));
    }
  }
  return dim - exact::rank(stacked);
}

}  // namespace humbert::lie
