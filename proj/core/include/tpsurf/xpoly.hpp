#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>

#include "tpsurf/field.hpp"

namespace tpsurf {

using XPoint = std::array<Fp, 4>;
using XExponent = std::array<int, 4>;

// Sparse polynomial in x0..x3, terms ordered lexicographically (x0 > x1 > x2 > x3), descending.
class XPoly {
 public:
  using Terms = std::map<std::uint64_t, Fp, std::greater<>>;

  XPoly() = default;
  explicit XPoly(Fp c);
  static XPoly variable(int i);
  static XPoly monomial(const XExponent& e, Fp c = Fp(1));

  static std::uint64_t key(const XExponent& e) noexcept;
  static XExponent exponent(std::uint64_t key) noexcept;

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  void add_term(const XExponent& e, Fp c);
  Fp coeff(const XExponent& e) const;

  // Total degree of the leading term; -1 for zero.
  int degree() const;
  bool is_homogeneous() const;
  Fp leading_coeff() const { return terms_.empty() ? Fp(0) : terms_.begin()->second; }
  XPoly monic() const;

  Fp eval(const XPoint& x) const;

  XPoly& operator+=(const XPoly& o);
  XPoly& operator-=(const XPoly& o);
  friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
  friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
  friend XPoly operator*(const XPoly& a, const XPoly& b);
  friend XPoly operator*(Fp c, const XPoly& a);
  friend bool operator==(const XPoly& a, const XPoly& b) { return a.terms_ == b.terms_; }
  XPoly pow(unsigned e) const;

  // Lex division; returns (quotient, remainder).
  static std::pair<XPoly, XPoly> divmod(const XPoly& a, const XPoly& b);
  // Exact quotient or nullopt.
  static std::optional<XPoly> divide_exact(const XPoly& a, const XPoly& b);

  std::string to_string() const;

 private:
  Terms terms_;
};

}  // namespace tpsurf
