#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "tpsurf/gen.hpp"
#include "tpsurf/pipeline.hpp"

namespace tpsurf::cli {

struct Job {
  int a = 0, b = 0;
  std::uint32_t prime = FieldConfig{}.p;
  std::array<std::string, 4> generators;
  PipelineOptions options;
  bool oracle = false;
};

// Parses the JSON layout documented in docs/job-format.md. Throws InputError.
Job parse_job(const nlohmann::json& j);
Job read_job(const std::string& path);  // "-" reads standard input

// Installs the job's prime and parses the generators.
SurfaceInput load_input(const Job& job);

nlohmann::json job_json(const SurfaceInput& in, const GenSpec* spec = nullptr);

}  // namespace tpsurf::cli
