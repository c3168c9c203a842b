#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "tpsurf/field.hpp"

namespace tpsurf {

struct BiDegree {
  int ds = 0;   // s,t-degree
  int duv = 0;  // u,v-degree

  friend BiDegree operator+(BiDegree x, BiDegree y) { return {x.ds + y.ds, x.duv + y.duv}; }
  friend BiDegree operator-(BiDegree x, BiDegree y) { return {x.ds - y.ds, x.duv - y.duv}; }
  friend bool operator==(BiDegree x, BiDegree y) = default;
};

std::ostream& operator<<(std::ostream& os, BiDegree d);

// s^s t^t u^u v^v; each exponent below 2^16.
struct Monomial {
  int s = 0, t = 0, u = 0, v = 0;

  BiDegree bidegree() const noexcept { return {s + t, u + v}; }
  std::uint64_t key() const noexcept;
  static Monomial from_key(std::uint64_t k) noexcept;

  friend Monomial operator*(Monomial x, Monomial y) { return {x.s + y.s, x.t + y.t, x.u + y.u, x.v + y.v}; }
  friend bool operator==(Monomial x, Monomial y) = default;
};

// Binary form of degree d in (u,v); coefficient k multiplies u^{d-k} v^k.
// A zero form keeps its formal degree; a negative degree denotes the zero
// form of an empty graded piece.
class UniHomPoly {
 public:
  UniHomPoly() = default;  // zero form of degree 0
  UniHomPoly(int degree, std::vector<Fp> coeffs);

  static UniHomPoly zero(int degree) { return UniHomPoly(degree, {}); }
  static UniHomPoly monomial(int degree, int vexp, Fp c = Fp(1));
  static UniHomPoly u() { return monomial(1, 0); }
  static UniHomPoly v() { return monomial(1, 1); }
  static UniHomPoly constant(Fp c) { return UniHomPoly(0, {c}); }
  static UniHomPoly random(int degree, std::mt19937_64& rng);

  int degree() const noexcept { return deg_; }
  const std::vector<Fp>& coeffs() const noexcept { return c_; }
  Fp coeff(int k) const noexcept { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Fp(0); }
  bool is_zero() const noexcept;
  bool is_unit() const noexcept { return deg_ == 0 && !is_zero(); }
  // Index of the first nonzero coefficient, -1 for zero.
  int first_nonzero() const noexcept;

  Fp eval(Fp u, Fp v) const noexcept;
  UniHomPoly with_degree(int degree) const;  // only for the zero form or same degree

  friend UniHomPoly operator+(const UniHomPoly& a, const UniHomPoly& b);
  friend UniHomPoly operator-(const UniHomPoly& a, const UniHomPoly& b);
  friend UniHomPoly operator*(const UniHomPoly& a, const UniHomPoly& b);
  friend UniHomPoly operator*(Fp c, const UniHomPoly& a);
  UniHomPoly operator-() const { return Fp(-1) * *this; }
  // Equal as polynomials: zero forms of any degree compare equal.
  friend bool operator==(const UniHomPoly& a, const UniHomPoly& b);

  // Exact quotient num/den; nullopt if den does not divide num. Throws on den = 0.
  static std::optional<UniHomPoly> divide_exact(const UniHomPoly& num, const UniHomPoly& den);
  // gcd normalized to first nonzero coefficient 1; gcd(0,0) is the zero form.
  static UniHomPoly gcd(const UniHomPoly& a, const UniHomPoly& b);
  static UniHomPoly gcd(const std::vector<UniHomPoly>& fs);

  // Printed with variables (x, y); defaults to (u, v).
  std::string to_string(char x = 'u', char y = 'v') const;

 private:
  int deg_ = 0;
  std::vector<Fp> c_;  // length deg_+1, or empty for zero
};

std::ostream& operator<<(std::ostream& os, const UniHomPoly& p);

class BiPoly {
 public:
  using Terms = std::map<std::uint64_t, Fp, std::greater<>>;

  BiPoly() = default;
  explicit BiPoly(Fp c);
  static BiPoly monomial(Monomial m, Fp c = Fp(1));
  // Embeddings of binary forms: in (u,v), or in (s,t) reading u->s, v->t.
  static BiPoly from_uv(const UniHomPoly& h);
  static BiPoly from_st(const UniHomPoly& h);
  static BiPoly random(BiDegree bd, std::mt19937_64& rng);

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const Terms& terms() const noexcept { return terms_; }
  Fp coeff(Monomial m) const;
  void add_term(Monomial m, Fp c);

  // Bidegree of the first term; (0,0) for zero.
  BiDegree bidegree() const;
  bool is_bihomogeneous() const;
  bool is_bihomogeneous(BiDegree bd) const;

  Fp eval(Fp s, Fp t, Fp u, Fp v) const;
  // Swap s<->u, t<->v.
  BiPoly mirror() const;
  // Substitute (s,t) = (s0,t0): a binary form of degree d in (u,v).
  UniHomPoly at_st(Fp s0, Fp t0, int d) const;
  // Substitute (u,v) = (u0,v0): a binary form of degree c in (s,t) (as u->s, v->t).
  UniHomPoly at_uv(Fp u0, Fp v0, int c) const;
  // Slice by s,t-monomial: entry i is the (u,v)-coefficient form of s^{c-i} t^i.
  std::vector<UniHomPoly> st_slices(int c, int d) const;
  static BiPoly from_st_slices(const std::vector<UniHomPoly>& slices, int c);

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(Fp c, const BiPoly& a);
  friend BiPoly operator*(const BiPoly& a, const UniHomPoly& h) { return a * from_uv(h); }
  friend BiPoly operator*(const UniHomPoly& h, const BiPoly& a) { return a * from_uv(h); }
  BiPoly operator-() const { return Fp(-1) * *this; }
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

  // Terms in the global order, signed coefficients, e.g. "-s^2*u^4*v - s^2*v^5".
  std::string to_string() const;

 private:
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const BiPoly& p);

// Parses an expression in s,t,u,v with integer coefficients and + - * ^ ( ).
// Throws ParseError with the offending position.
BiPoly parse_poly(std::string_view text);

// Monomials of bidegree (c,d): s-exponent descending, then u-exponent descending.
std::vector<Monomial> monomial_basis(int c, int d);
// Position of m in monomial_basis(c,d).
inline int basis_index(Monomial m, int c, int d) { return (c - m.s) * (d + 1) + (d - m.u); }

// Throws InputError if poly is nonzero and not of bidegree (c,d).
std::vector<Fp> coeff_vector(const BiPoly& poly, int c, int d);
BiPoly from_coeff_vector(const std::vector<Fp>& vec, int c, int d);

}  // namespace tpsurf
