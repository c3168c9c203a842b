#include "report.hpp"

#include <ostream>

namespace tpsurf::cli {

using nlohmann::json;

namespace {

json bideg(BiDegree d) { return json::array({d.ds, d.duv}); }

json syzygies_json(const std::vector<SyzygyColumn>& cols) {
  json out = json::array();
  for (const auto& c : cols) {
    json e = json::array();
    for (const auto& p : c.entries) e.push_back(p.to_string());
    out.push_back({{"bidegree", bideg(c.bidegree)}, {"entries", e}});
  }
  return out;
}

std::string mu_string(const std::vector<int>& mu) {
  if (mu.empty()) return "-";
  std::string s = "(";
  for (std::size_t i = 0; i < mu.size(); ++i) s += (i ? ", " : "") + std::to_string(mu[i]);
  return s + ")";
}

const char* side_name(Side s) { return s == Side::ST ? "st" : "uv"; }

}  // namespace

json to_json(const XPoly& f) {
  json terms = json::array();
  for (const auto& [k, c] : f.terms()) {
    const auto e = XPoly::exponent(k);
    terms.push_back({{"exponent", e}, {"coeff", c.signed_value()}});
  }
  return {{"degree", f.degree()}, {"expression", f.to_string()}, {"terms", terms}};
}

json to_json(const BasepointReport& r) {
  json j{{"status", to_string(r.status)},
         {"G_uv", r.G_uv.to_string('s', 't')},
         {"G_st", r.G_st.to_string('u', 'v')}};
  auto pts = [](const std::vector<ProjectivePoint>& v) {
    json a = json::array();
    for (const auto& p : v) a.push_back(json::array({p.x.value(), p.y.value()}));
    return a;
  };
  if (r.status != BasepointStatus::Free) {
    j["candidates_st"] = pts(r.candidates_st);
    j["candidates_uv"] = pts(r.candidates_uv);
    j["detail"] = r.detail;
  }
  return j;
}

json to_json(const AnalysisResult& r) {
  const auto& v = r.analysis;
  const auto& c = r.cases;
  json g = json::array();
  for (const auto& x : v.g) g.push_back(x.to_string());
  return {{"n", v.n},
          {"dim_v", v.dimV},
          {"kernel_dim", v.kernel_dim},
          {"case", to_string(c.tag)},
          {"mu", c.mu},
          {"g", g},
          {"syzygies", syzygies_json(c.original)},
          {"expected_counts", c.expected_counts}};
}

json to_json(const ImplicitResult& r, bool oracle_details) {
  AnalysisResult ar{r.working, r.analysis, r.cases};
  json j{{"a", r.input.a},
         {"b", r.input.b},
         {"prime", field::modulus()},
         {"side", side_name(r.side)},
         {"basepoint", to_json(r.basepoint)},
         {"analysis", to_json(ar)},
         {"strand_size", r.strand.size},
         {"F", to_json(r.F())},
         {"deg_phi", r.d()},
         {"c", r.c().signed_value()}};
  json cert{{"det_mode", r.det ? "interpolate" : "eval"},
            {"points_checked", r.verify.points_checked},
            {"points_passed", r.verify.points_passed}};
  if (r.det) cert["exact_identity"] = true;
  j["certificate"] = cert;
  if (oracle_details) {
    json o{{"e", r.oracle.e}, {"kernel_dim", r.oracle.kernel_dim}};
    if (r.vanishes) o["vanishes_on_surface"] = *r.vanishes;
    j["oracle"] = o;
  }
  json checks = json::array();
  for (const auto& c : r.cases.checks) checks.push_back({{"name", c.name}, {"ok", c.ok}});
  j["identities"] = checks;
  j["status"] = "PASS";
  return j;
}

void print_analysis(std::ostream& os, const AnalysisResult& r) {
  const auto& v = r.analysis;
  const auto& c = r.cases;
  os << "n = " << v.n << "\n";
  os << "dim V = " << v.dimV << "\n";
  os << "syzygy space dim (0," << v.n << ") = " << v.kernel_dim << "\n";
  os << "case = " << to_string(c.tag) << "\n";
  os << "mu = " << mu_string(c.mu) << "\n";
  os << "g =";
  for (const auto& x : v.g) os << ' ' << x.to_string();
  os << "\n";
  static const char* names[] = {"S", "S1", "S2", "S3"};
  for (std::size_t i = 0; i < c.original.size(); ++i)
    os << names[i] << " bidegree " << c.original[i].bidegree << ", columns " << c.expected_counts[i] << "\n";
  int total = 0;
  for (int k : c.expected_counts) total += k;
  os << "total columns = " << total << "\n";
}

void print_basepoint(std::ostream& os, const BasepointReport& r) {
  os << "basepoints: " << to_string(r.status) << "\n";
  if (r.status == BasepointStatus::Free) return;
  os << "  G (resultants over u,v) = " << r.G_uv.to_string('s', 't') << "\n";
  os << "  G (resultants over s,t) = " << r.G_st.to_string('u', 'v') << "\n";
  for (const auto& p : r.candidates_st) os << "  candidate (s:t) = (" << p.x << ':' << p.y << ")\n";
  for (const auto& p : r.candidates_uv) os << "  candidate (u:v) = (" << p.x << ':' << p.y << ")\n";
  if (!r.detail.empty()) os << "  " << r.detail << "\n";
}

void print_implicit(std::ostream& os, const ImplicitResult& r, bool oracle_details) {
  os << "side = " << side_name(r.side) << "\n";
  print_basepoint(os, r.basepoint);
  print_analysis(os, {r.working, r.analysis, r.cases});
  os << "strand = " << r.strand.size << " x " << r.strand.size << "\n";
  if (oracle_details) {
    os << "oracle: e = " << r.oracle.e << ", kernel dim = " << r.oracle.kernel_dim;
    if (r.vanishes) os << ", vanishes on surface = " << (*r.vanishes ? "yes" : "no");
    os << "\n";
  }
  os << "deg F = " << r.F().degree() << "\n";
  os << "deg phi = " << r.d() << "\n";
  os << "c = " << r.c().signed_value() << "\n";
  os << "F = " << r.F().to_string() << "\n";
  os << "coefficients:\n";
  for (const auto& [k, c] : r.F().terms()) {
    const auto e = XPoly::exponent(k);
    os << "  " << e[0] << ' ' << e[1] << ' ' << e[2] << ' ' << e[3] << "  " << c.signed_value() << "\n";
  }
  os << "certificate: det = c*F^" << r.d() << " at " << r.verify.points_passed << "/" << r.verify.points_checked
     << " points";
  if (r.det) os << ", exact identity after interpolation";
  os << "\n";
  os << "PASS\n";
}

}  // namespace tpsurf::cli
