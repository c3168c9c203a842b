#pragma once

#include <iosfwd>

#include <json.hpp>

#include "tpsurf/golden.hpp"
#include "tpsurf/pipeline.hpp"

namespace tpsurf::cli {

nlohmann::json to_json(const XPoly& f);
nlohmann::json to_json(const BasepointReport& r);
nlohmann::json to_json(const AnalysisResult& r);
nlohmann::json to_json(const ImplicitResult& r, bool oracle_details);

void print_analysis(std::ostream& os, const AnalysisResult& r);
void print_basepoint(std::ostream& os, const BasepointReport& r);
void print_implicit(std::ostream& os, const ImplicitResult& r, bool oracle_details);

}  // namespace tpsurf::cli
