#include "tpsurf/xpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tpsurf {

XPoly::XPoly(Fp c) {
  if (!c.is_zero()) terms_.emplace(0, c);
}

XPoly XPoly::variable(int i) {
  XExponent e{};
  e.at(i) = 1;
  return monomial(e);
}

XPoly XPoly::monomial(const XExponent& e, Fp c) {
  XPoly p;
  p.add_term(e, c);
  return p;
}

std::uint64_t XPoly::key(const XExponent& e) noexcept {
  return (std::uint64_t(e[0]) << 48) | (std::uint64_t(e[1]) << 32) | (std::uint64_t(e[2]) << 16) | std::uint64_t(e[3]);
}

XExponent XPoly::exponent(std::uint64_t k) noexcept {
  return {int(k >> 48), int((k >> 32) & 0xffff), int((k >> 16) & 0xffff), int(k & 0xffff)};
}

void XPoly::add_term(const XExponent& e, Fp c) {
  if (c.is_zero()) return;
  for (const int x : e)
    if (x < 0 || x > 0xffff) throw std::out_of_range("x exponent out of range");
  auto [it, inserted] = terms_.emplace(key(e), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Fp XPoly::coeff(const XExponent& e) const {
  const auto it = terms_.find(key(e));
  return it == terms_.end() ? Fp(0) : it->second;
}

namespace {
int total(const XExponent& e) { return e[0] + e[1] + e[2] + e[3]; }
}  // namespace

int XPoly::degree() const { return terms_.empty() ? -1 : total(exponent(terms_.begin()->first)); }

bool XPoly::is_homogeneous() const {
  const int d = degree();
  return std::all_of(terms_.begin(), terms_.end(), [&](const auto& kv) { return total(exponent(kv.first)) == d; });
}

XPoly XPoly::monic() const {
  if (terms_.empty()) return *this;
  return leading_coeff().inv() * *this;
}

Fp XPoly::eval(const XPoint& x) const {
  int emax = 0;
  for (const auto& [k, c] : terms_) {
    const auto e = exponent(k);
    emax = std::max({emax, e[0], e[1], e[2], e[3]});
  }
  std::array<std::vector<Fp>, 4> pw;
  for (int i = 0; i < 4; ++i) {
    pw[i].assign(static_cast<std::size_t>(emax) + 1, Fp(1));
    for (int j = 1; j <= emax; ++j) pw[i][j] = pw[i][j - 1] * x[i];
  }
  Fp r(0);
  for (const auto& [k, c] : terms_) {
    const auto e = exponent(k);
    r += c * pw[0][e[0]] * pw[1][e[1]] * pw[2][e[2]] * pw[3][e[3]];
  }
  return r;
}

XPoly& XPoly::operator+=(const XPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(exponent(k), c);
  return *this;
}

XPoly& XPoly::operator-=(const XPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(exponent(k), -c);
  return *this;
}

XPoly operator*(const XPoly& a, const XPoly& b) {
  XPoly r;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) r.add_term(XPoly::exponent(ka + kb), ca * cb);
  return r;
}

XPoly operator*(Fp c, const XPoly& a) {
  XPoly r;
  if (c.is_zero()) return r;
  for (const auto& [k, x] : a.terms_) r.terms_.emplace_hint(r.terms_.end(), k, x * c);
  return r;
}

XPoly XPoly::pow(unsigned e) const {
  XPoly r(Fp(1)), base = *this;
  while (e != 0) {
    if (e & 1U) r = r * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return r;
}

std::pair<XPoly, XPoly> XPoly::divmod(const XPoly& a, const XPoly& b) {
  if (b.is_zero()) throw std::domain_error("XPoly division by zero");
  XPoly q, rem, p = a;
  const XExponent lb = exponent(b.terms_.begin()->first);
  const Fp lc_inv = b.leading_coeff().inv();
  while (!p.is_zero()) {
    const auto [k, c] = *p.terms_.begin();
    const XExponent lp = exponent(k);
    bool divides = true;
    XExponent d{};
    for (int i = 0; i < 4; ++i) {
      d[i] = lp[i] - lb[i];
      divides = divides && d[i] >= 0;
    }
    if (!divides) {
      rem.add_term(lp, c);
      p.terms_.erase(p.terms_.begin());
      continue;
    }
    const Fp f = c * lc_inv;
    q.add_term(d, f);
    const std::uint64_t shift = key(d);
    for (const auto& [kb, cb] : b.terms_) p.add_term(exponent(kb + shift), -(f * cb));
  }
  return {q, rem};
}

std::optional<XPoly> XPoly::divide_exact(const XPoly& a, const XPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

std::string XPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, x] : terms_) {
    const auto e = exponent(k);
    const std::int64_t c = x.signed_value();
    const bool has_var = total(e) > 0;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const std::int64_t mag = c < 0 ? -c : c;
    bool need_star = false;
    if (mag != 1 || !has_var) {
      os << mag;
      need_star = true;
    }
    for (int i = 0; i < 4; ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << '*';
      os << 'x' << i;
      if (e[i] > 1) os << '^' << e[i];
      need_star = true;
    }
  }
  return os.str();
}

}  // namespace tpsurf
