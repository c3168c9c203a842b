#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tpsurf/syzygy.hpp"

namespace tpsurf {

struct GenSpec {
  int a = 0, b = 0, n = 0;
  int dimV = 0;
  std::vector<int> mu;   // dim3: {μ}; dim4: {μ₁, μ₂}; dim2: empty
  std::uint64_t seed = FieldConfig{}.seed;
  int max_retries = 200;
  bool scramble = false;  // replace the generators by a random invertible combination
};

// Throws InputError unless b >= 2n-1 and the μ-profile is consistent.
void check_spec(const GenSpec& spec);

// Deterministic per seed. Throws HypothesisError once the retry budget is spent.
SurfaceInput generate(const GenSpec& spec);

struct InstanceReport {
  bool ok = false;
  std::vector<std::string> failures;
  int n = -1, dimV = -1;
  std::vector<int> mu;
  int degF = 0, d = 0;
};

// Analysis, case pipeline and oracle verification, compared against spec.
InstanceReport validate_instance(const SurfaceInput& in, const GenSpec& spec);

}  // namespace tpsurf
