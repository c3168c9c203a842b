#pragma once

#include <string>
#include <vector>

#include "tpsurf/bipoly.hpp"
#include "tpsurf/syzygy.hpp"

namespace tpsurf::testing {

inline SurfaceInput example_input() {
  return SurfaceInput{2, 5,
                      {parse_poly("-t^2*u^4*v - s^2*v^5"), parse_poly("t^2*u^5 + s^2*u*v^4 - 2*t^2*v^5"),
                       parse_poly("-s^2*u^4*v + 2*t^2*u*v^4 - t^2*v^5"), parse_poly("s^2*u^5 + t^2*u*v^4")},
                      FieldConfig{}};
}

inline SurfaceInput segre_input() {
  return SurfaceInput{1, 1, {parse_poly("s*u"), parse_poly("s*v"), parse_poly("t*u"), parse_poly("t*v")}, FieldConfig{}};
}

// Binary form from a string in u, v.
inline UniHomPoly form(const std::string& s, int degree) { return parse_poly(s).at_st(Fp(1), Fp(0), degree); }

inline bool sums_to_zero(const SyzygyColumn& c, const GenList& g) {
  BiPoly sum;
  for (int i = 0; i < 4; ++i) sum += c.entries[i] * g[i];
  return sum.is_zero();
}

}  // namespace tpsurf::testing
