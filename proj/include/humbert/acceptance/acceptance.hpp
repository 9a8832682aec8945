#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace humbert::acceptance {

constexpr std::uint64_t kDefaultSeed = 20261014;
constexpr int kCriterionCount = 14;

constexpr int kRandomCochains = 20;
constexpr int kHoweDegree = 6;
constexpr int kIsoRhoWords = 20;
constexpr int kZTauWords = 10;
constexpr double kZTauTolerance = 1e-6;
constexpr int kDiscriminantBox = 3;
constexpr int kOrbitBox = 3;
constexpr int kOrbitMaxHeight = 12;
constexpr int kFrameBox = 2;

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

/// Throws std::out_of_range unless 1 <= id <= kCriterionCount.
CriterionResult run_criterion(int id, std::uint64_t seed = kDefaultSeed);
std::vector<CriterionResult> run_all(std::uint64_t seed = kDefaultSeed);

/// "PASS [01] name: detail (0.12 s)"
std::string format_line(const CriterionResult& r);

}  // namespace humbert::acceptance
