#include "job.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "tpsurf/errors.hpp"

namespace tpsurf::cli {

using nlohmann::json;

namespace {

template <class T>
T get(const json& j, const char* key, const char* what) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw InputError(std::string("job: '") + key + "' must be " + what);
  }
}

}  // namespace

Job parse_job(const json& j) {
  if (!j.is_object()) throw InputError("job: top level must be an object");
  for (const auto& [k, v] : j.items())
    if (k != "a" && k != "b" && k != "prime" && k != "generators" && k != "options" && k != "spec")
      throw InputError("job: unknown key '" + k + "'");
  Job job;
  job.a = get<int>(j, "a", "a positive integer");
  job.b = get<int>(j, "b", "a positive integer");
  if (job.a < 1 || job.b < 1) throw InputError("job: a and b must be positive");
  if (j.contains("prime")) {
    const auto p = get<std::uint64_t>(j, "prime", "an odd prime below 2^32");
    if (p > 0xffffffffULL || p < 3 || !field::is_prime(p)) throw InputError("job: prime must be an odd prime below 2^32");
    job.prime = static_cast<std::uint32_t>(p);
  }
  const auto gens = get<std::vector<std::string>>(j, "generators", "an array of 4 strings");
  if (gens.size() != 4) throw InputError("job: 'generators' must have exactly 4 entries");
  std::copy(gens.begin(), gens.end(), job.generators.begin());

  if (j.contains("options")) {
    const json& o = j.at("options");
    if (!o.is_object()) throw InputError("job: 'options' must be an object");
    auto& po = job.options;
    for (const auto& [k, v] : o.items()) {
      if (k == "side") {
        const auto s = get<std::string>(o, "side", "\"uv\" or \"st\"");
        if (s != "uv" && s != "st") throw InputError("job: side must be \"uv\" or \"st\"");
        po.side = s == "st" ? Side::ST : Side::UV;
      } else if (k == "det_mode") {
        const auto s = get<std::string>(o, "det_mode", "\"eval\" or \"interpolate\"");
        if (s != "eval" && s != "interpolate") throw InputError("job: det_mode must be \"eval\" or \"interpolate\"");
        po.det_mode = s == "interpolate" ? DetMode::Interpolate : DetMode::Eval;
      } else if (k == "convention") {
        const auto s = get<std::string>(o, "convention", "\"zero\" or \"one\"");
        if (s != "zero" && s != "one") throw InputError("job: convention must be \"zero\" or \"one\"");
        po.conv = s == "one" ? FreeConvention::One : FreeConvention::Zero;
      } else if (k == "seed") {
        po.seed = get<std::uint64_t>(o, "seed", "an unsigned integer");
      } else if (k == "force") {
        po.force = get<bool>(o, "force", "a boolean");
      } else if (k == "oracle") {
        job.oracle = get<bool>(o, "oracle", "a boolean");
      } else if (k == "threads") {
        po.threads = get<unsigned>(o, "threads", "a non-negative integer");
      } else if (k == "points") {
        po.points = get<int>(o, "points", "a positive integer");
        if (po.points < 1) throw InputError("job: points must be positive");
      } else if (k == "verify_identities") {
        po.verify_identities = get<bool>(o, "verify_identities", "a boolean");
      } else {
        throw InputError("job: unknown option '" + k + "'");
      }
    }
  }
  return job;
}

Job read_job(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    text = os.str();
  } else {
    std::ifstream f(path);
    if (!f) throw InputError("cannot open job file '" + path + "'");
    std::ostringstream os;
    os << f.rdbuf();
    text = os.str();
  }
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("job: invalid JSON: ") + e.what(), e.byte);
  }
  return parse_job(j);
}

SurfaceInput load_input(const Job& job) {
  field::set_modulus(job.prime);
  SurfaceInput in;
  in.a = job.a;
  in.b = job.b;
  in.field = FieldConfig{job.prime, job.options.seed};
  for (std::size_t i = 0; i < 4; ++i) {
    try {
      in.gens[i] = parse_poly(job.generators[i]);
    } catch (const ParseError& e) {
      throw ParseError("generator " + std::to_string(i) + ": " + e.detail(), e.position());
    }
  }
  validate_input(in);
  return in;
}

json job_json(const SurfaceInput& in, const GenSpec* spec) {
  json j;
  j["a"] = in.a;
  j["b"] = in.b;
  j["prime"] = field::modulus();
  j["generators"] = json::array();
  for (const auto& g : in.gens) j["generators"].push_back(g.to_string());
  if (spec) {
    j["spec"] = {{"n", spec->n}, {"dim_v", spec->dimV}, {"mu", spec->mu}, {"seed", spec->seed}};
  }
  return j;
}

}  // namespace tpsurf::cli
