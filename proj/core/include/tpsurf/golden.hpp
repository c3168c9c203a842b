#pragma once

#include <array>
#include <string>
#include <vector>

#include "tpsurf/cases.hpp"
#include "tpsurf/syzygy.hpp"

namespace tpsurf {

// The a = 2, b = 5, n = 3, dim V = 4 reference instance and its published values.
struct GoldenExample {
  SurfaceInput input;
  int n = 3, dimV = 4;
  std::vector<int> mu{1, 1};
  std::array<std::string, 3> alpha;
  std::array<std::array<std::string, 4>, 3> S;  // S₁, S₂, S₃ entry by entry
  std::size_t strand_size = 20;
  int degF = 10, d = 2;
};

const GoldenExample& golden_example();

// s·u, s·v, t·u, t·v.
SurfaceInput segre_toy();

// Runs the golden suite; one entry per check.
std::vector<IdentityCheck> run_selftest(unsigned threads = 1);

}  // namespace tpsurf
