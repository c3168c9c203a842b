#pragma once

#include <random>
#include <utility>
#include <vector>

#include "tpsurf/field.hpp"

namespace tpsurf {

// Dense univariate polynomial over F_p, coefficient k multiplies x^k.
// Always trimmed: the zero polynomial has no coefficients.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Fp> coeffs);
  static UPoly x_power(int k, Fp c = Fp(1));

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  Fp coeff(int k) const noexcept { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Fp(0); }
  Fp lead() const noexcept { return c_.empty() ? Fp(0) : c_.back(); }
  const std::vector<Fp>& coeffs() const noexcept { return c_; }

  Fp eval(Fp x) const noexcept;
  UPoly monic() const;

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  // Quotient and remainder; throws std::domain_error on division by zero.
  static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
  // Monic gcd; gcd(0, 0) = 0.
  static UPoly gcd(UPoly a, UPoly b);
  // base^e mod m.
  static UPoly powmod(UPoly base, std::uint64_t e, const UPoly& m);

  // Distinct roots in F_p, ascending by representative.
  std::vector<Fp> roots(std::mt19937_64& rng) const;

 private:
  void trim();
  std::vector<Fp> c_;
};

}  // namespace tpsurf
