#include "tpsurf/univariate.hpp"

#include <algorithm>
#include <stdexcept>

namespace tpsurf {

UPoly::UPoly(std::vector<Fp> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::x_power(int k, Fp c) {
  std::vector<Fp> v(static_cast<std::size_t>(k) + 1);
  v[k] = c;
  return UPoly(std::move(v));
}

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Fp UPoly::eval(Fp x) const noexcept {
  Fp r(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

UPoly UPoly::monic() const {
  if (c_.empty()) return *this;
  const Fp li = lead().inv();
  std::vector<Fp> v(c_);
  for (auto& x : v) x *= li;
  return UPoly(std::move(v));
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Fp> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return UPoly(std::move(v));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  std::vector<Fp> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] -= b.c_[i];
  return UPoly(std::move(v));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Fp> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(v));
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {UPoly{}, a};
  std::vector<Fp> r = a.c_;
  std::vector<Fp> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  const Fp li = b.lead().inv();
  const int db = b.degree();
  for (int k = a.degree(); k >= db; --k) {
    const Fp f = r[k] * li;
    if (f.is_zero()) continue;
    q[k - db] = f;
    for (int j = 0; j <= db; ++j) r[k - db + j] -= f * b.c_[j];
  }
  return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UPoly UPoly::powmod(UPoly base, std::uint64_t e, const UPoly& m) {
  UPoly r(std::vector<Fp>{Fp(1)});
  r = divmod(r, m).second;
  base = divmod(base, m).second;
  while (e != 0) {
    if (e & 1U) r = divmod(r * base, m).second;
    base = divmod(base * base, m).second;
    e >>= 1U;
  }
  return r;
}

namespace {

void split_roots(const UPoly& g, std::mt19937_64& rng, std::vector<Fp>& out) {
  if (g.degree() <= 0) return;
  if (g.degree() == 1) {
    out.push_back(-g.coeff(0) / g.coeff(1));
    return;
  }
  const std::uint64_t half = (field::modulus() - 1) / 2;
  for (;;) {
    const UPoly shift(std::vector<Fp>{Fp::random(rng), Fp(1)});
    const UPoly h = UPoly::gcd(g, UPoly::powmod(shift, half, g) - UPoly(std::vector<Fp>{Fp(1)}));
    if (h.degree() > 0 && h.degree() < g.degree()) {
      split_roots(h, rng, out);
      split_roots(UPoly::divmod(g, h).first, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<Fp> UPoly::roots(std::mt19937_64& rng) const {
  if (degree() <= 0) return {};
  const UPoly f = monic();
  // g = gcd(f, x^p - x) collects the distinct linear factors
  const UPoly xp = powmod(x_power(1), field::modulus(), f);
  const UPoly g = gcd(f, xp - x_power(1));
  std::vector<Fp> out;
  split_roots(g, rng, out);
  std::sort(out.begin(), out.end(), [](Fp a, Fp b) { return a.value() < b.value(); });
  return out;
}

}  // namespace tpsurf
