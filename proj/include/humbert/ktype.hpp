#pragma once

#include <compare>
#include <string>

namespace humbert {

/// Irreducible SO(3) x SO(2) type: SO(3)-dimension 2l+1 and SO(2)-character
/// n, where the rotation generator e45 acts by i*n.
struct KType {
  int so3_dim = 1;
  int so2_char = 0;

  int spin() const { return (so3_dim - 1) / 2; }
  /// "5x1" for (5, 0), "3x(-1)" style otherwise.
  std::string str() const;
  /// Accepts "5x1" (trivial SO(2) factor), "3x1", or "so3Dim,so2Char".
  static KType parse(const std::string& text);

  friend auto operator<=>(const KType&, const KType&) = default;
};

}  // namespace humbert
