#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "humbert/exact/matrix.hpp"

namespace humbert::cycles {

using exact::MatrixQ;

/// Coordinates (a, b, c, d, e) in the rescaled dual basis {f1, f2/2, f3, f4, f5}.
using LatticeVector = std::array<std::int64_t, 5>;
using IntMatrix5 = std::array<std::array<std::int64_t, 5>, 5>;

constexpr int kMaxBox = 10;
constexpr int kDefaultWordCap = 4;
constexpr std::size_t kMaxCongruenceWords = 48;

std::int64_t delta(const LatticeVector& x);
/// Polarization of delta: (x, x) = delta(x).
std::int64_t pairing(const LatticeVector& x, const LatticeVector& y);
std::int64_t content(const LatticeVector& x);
std::int64_t height(const LatticeVector& x);
std::string str(const LatticeVector& x);
nlohmann::json to_json(const LatticeVector& x);

struct CongClass {
  LatticeVector h{};
  std::int64_t level = 1;

  bool contains(const LatticeVector& x) const;
};

LatticeVector reduce_mod(const LatticeVector& x, std::int64_t n);

/// HUMBERT_KERNEL_THREADS, clamped to [1, 64]; 1 when unset.
unsigned kernel_threads();

/// Vectors of [-B, B]^5 with the given discriminant (and congruence class),
/// in lexicographic order; throws BoxCapExceeded unless 0 <= B <= kMaxBox.
std::vector<LatticeVector> enumerate_box(std::int64_t delta_target, int box, const std::optional<CongClass>& cc = {},
                                         unsigned threads = 0);

struct Generator {
  std::string name;
  MatrixQ g;
  IntMatrix5 rho;
};

/// J, J^-1 and the six transvection pairs, closed under inverses.
const std::vector<Generator>& sp4z_generators();

IntMatrix5 rho_matrix(const MatrixQ& g);
LatticeVector apply_rho(const IntMatrix5& r, const LatticeVector& x);
/// Lift to Skew(4) orthogonal to Psi, conjugate by g, project back; throws
/// NotSymplectic.
LatticeVector act(const MatrixQ& g, const LatticeVector& x);

/// Elements of the principal congruence subgroup found as generator words of
/// length <= cap (both g = 1 and rho(g) = 1 mod N), shortest first, closed
/// under inverses. Level 1 returns the generators themselves.
struct GeneratorSet {
  std::string label;
  std::int64_t level = 1;
  int word_cap = 0;
  std::vector<std::string> words;
  std::vector<IntMatrix5> rho;
};

GeneratorSet congruence_generators(std::int64_t level, int word_cap = kDefaultWordCap);

struct OrbitInvariants {
  std::int64_t delta;
  std::int64_t content;
  LatticeVector residue;
  auto operator<=>(const OrbitInvariants&) const = default;
};
OrbitInvariants invariants(const LatticeVector& x, std::int64_t level);

struct OrbitPartition {
  /// Sorted vectors per class; classes sorted by first element.
  std::vector<std::vector<LatticeVector>> classes;
  bool exact = false;
  /// Some pair of classes is not separated by (delta, content, x mod N) and
  /// no path joined them within the height bound.
  bool height_bound_too_small = false;
  std::int64_t height_bound = 0;
  std::size_t explored = 0;
  GeneratorSet generators;

  std::optional<std::size_t> class_of(const LatticeVector& x) const;
};

/// Flood fill under generator moves through vectors of height <= bound.
OrbitPartition orbit_partition(std::vector<LatticeVector> vs, std::int64_t level, std::int64_t height_bound,
                               int word_cap = kDefaultWordCap);

struct Frame {
  std::vector<LatticeVector> vectors;

  exact::MatrixQ gram() const;
};

struct FrameClass {
  bool nonsingular;
  bool nondegenerate;
  std::size_t gram_rank;
  std::size_t span_dim;
};

/// nonsingular iff rank(gram) = n; nondegenerate iff rank(gram) = dim span.
FrameClass frame_classify(const Frame& f);

/// Report payload for C_{delta,h,N}: vector count, orbit classes, exactness
/// and the normal form's class.
nlohmann::json cycle_report(std::int64_t delta_target, const std::optional<LatticeVector>& h, std::int64_t level,
                            int box, std::int64_t height_bound, int word_cap = kDefaultWordCap);

}  // namespace humbert::cycles
