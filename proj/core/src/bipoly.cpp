#include "tpsurf/bipoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "tpsurf/errors.hpp"
#include "tpsurf/univariate.hpp"

namespace tpsurf {

std::ostream& operator<<(std::ostream& os, BiDegree d) { return os << '(' << d.ds << ',' << d.duv << ')'; }

std::uint64_t Monomial::key() const noexcept {
  return (std::uint64_t(s) << 48) | (std::uint64_t(t) << 32) | (std::uint64_t(u) << 16) | std::uint64_t(v);
}

Monomial Monomial::from_key(std::uint64_t k) noexcept {
  return {int(k >> 48), int((k >> 32) & 0xffff), int((k >> 16) & 0xffff), int(k & 0xffff)};
}

// ---------------------------------------------------------------- UniHomPoly

UniHomPoly::UniHomPoly(int degree, std::vector<Fp> coeffs) : deg_(degree), c_(std::move(coeffs)) {
  if (std::all_of(c_.begin(), c_.end(), [](Fp x) { return x.is_zero(); })) {
    c_.clear();
    return;
  }
  if (deg_ < 0 || static_cast<int>(c_.size()) > deg_ + 1)
    throw std::invalid_argument("binary form: coefficient vector longer than degree + 1");
  c_.resize(static_cast<std::size_t>(deg_) + 1);
}

UniHomPoly UniHomPoly::monomial(int degree, int vexp, Fp c) {
  std::vector<Fp> v(static_cast<std::size_t>(degree) + 1);
  v.at(vexp) = c;
  return UniHomPoly(degree, std::move(v));
}

UniHomPoly UniHomPoly::random(int degree, std::mt19937_64& rng) {
  if (degree < 0) return zero(degree);
  std::vector<Fp> v(static_cast<std::size_t>(degree) + 1);
  for (auto& x : v) x = Fp::random(rng);
  return UniHomPoly(degree, std::move(v));
}

bool UniHomPoly::is_zero() const noexcept { return c_.empty(); }

int UniHomPoly::first_nonzero() const noexcept {
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (!c_[k].is_zero()) return static_cast<int>(k);
  return -1;
}

Fp UniHomPoly::eval(Fp u, Fp v) const noexcept {
  Fp acc(0), up(1);
  std::vector<Fp> vpow(c_.size(), Fp(1));
  for (std::size_t k = 1; k < c_.size(); ++k) vpow[k] = vpow[k - 1] * v;
  for (std::size_t i = c_.size(); i-- > 0;) {
    acc += c_[i] * up * vpow[i];
    up *= u;
  }
  return acc;
}

UniHomPoly UniHomPoly::with_degree(int degree) const {
  if (is_zero()) return zero(degree);
  if (degree != deg_) throw std::logic_error("binary form: cannot change degree of a nonzero form");
  return *this;
}

namespace {

int sum_degree(const UniHomPoly& a, const UniHomPoly& b) {
  if (a.is_zero()) return b.is_zero() ? a.degree() : b.degree();
  if (!b.is_zero() && a.degree() != b.degree())
    throw std::logic_error("binary form: adding forms of degrees " + std::to_string(a.degree()) + " and " +
                           std::to_string(b.degree()));
  return a.degree();
}

}  // namespace

UniHomPoly operator+(const UniHomPoly& a, const UniHomPoly& b) {
  const int d = sum_degree(a, b);
  if (a.is_zero()) return b.with_degree(d);
  if (b.is_zero()) return a;
  std::vector<Fp> v(a.c_);
  for (std::size_t k = 0; k < v.size(); ++k) v[k] += b.c_[k];
  return UniHomPoly(d, std::move(v));
}

UniHomPoly operator-(const UniHomPoly& a, const UniHomPoly& b) { return a + (-b); }

UniHomPoly operator*(const UniHomPoly& a, const UniHomPoly& b) {
  const int d = a.deg_ + b.deg_;
  if (a.is_zero() || b.is_zero()) return UniHomPoly::zero(d);
  std::vector<Fp> v(static_cast<std::size_t>(d) + 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return UniHomPoly(d, std::move(v));
}

UniHomPoly operator*(Fp c, const UniHomPoly& a) {
  std::vector<Fp> v(a.c_);
  for (auto& x : v) x *= c;
  return UniHomPoly(a.deg_, std::move(v));
}

bool operator==(const UniHomPoly& a, const UniHomPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.deg_ == b.deg_ && a.c_ == b.c_;
}

std::optional<UniHomPoly> UniHomPoly::divide_exact(const UniHomPoly& num, const UniHomPoly& den) {
  if (den.is_zero()) throw std::domain_error("binary form: division by zero");
  const int dq = num.deg_ - den.deg_;
  if (num.is_zero()) return zero(dq);
  if (dq < 0) return std::nullopt;
  const int t0 = den.first_nonzero();
  const Fp lead_inv = den.c_[t0].inv();
  std::vector<Fp> q(static_cast<std::size_t>(dq) + 1);
  for (int k = 0; k <= dq; ++k) {
    Fp acc = num.coeff(k + t0);
    for (int j = 0; j < k; ++j) acc -= q[j] * den.coeff(k + t0 - j);
    q[k] = acc * lead_inv;
  }
  UniHomPoly quot(dq, std::move(q));
  if (!(quot * den == num)) return std::nullopt;
  return quot;
}

namespace {

// Dehomogenize at u = 1: coefficient of v^k.
UPoly dehom(const UniHomPoly& f) { return UPoly(f.coeffs()); }

}  // namespace

UniHomPoly UniHomPoly::gcd(const UniHomPoly& a, const UniHomPoly& b) { return gcd(std::vector<UniHomPoly>{a, b}); }

UniHomPoly UniHomPoly::gcd(const std::vector<UniHomPoly>& fs) {
  UPoly g;
  int upow = -1;
  for (const auto& f : fs) {
    if (f.is_zero()) continue;
    const UPoly h = dehom(f);
    const int m = f.degree() - h.degree();  // multiplicity of u
    upow = upow < 0 ? m : std::min(upow, m);
    g = UPoly::gcd(g, h);
  }
  if (upow < 0) return zero(fs.empty() ? 0 : fs.front().degree());
  const int d = upow + g.degree();
  std::vector<Fp> c(g.coeffs());
  c.resize(static_cast<std::size_t>(d) + 1);
  UniHomPoly r(d, std::move(c));
  return r.coeff(r.first_nonzero()).inv() * r;
}

std::string UniHomPoly::to_string(char x, char y) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= deg_; ++k) {
    const std::int64_t c = c_[k].signed_value();
    if (c == 0) continue;
    const int ex = deg_ - k, ey = k;
    const bool has_var = ex + ey > 0;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const std::int64_t m = c < 0 ? -c : c;
    bool need_star = false;
    if (m != 1 || !has_var) {
      os << m;
      need_star = true;
    }
    auto var = [&](char name, int e) {
      if (e == 0) return;
      if (need_star) os << '*';
      os << name;
      if (e > 1) os << '^' << e;
      need_star = true;
    };
    var(x, ex);
    var(y, ey);
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const UniHomPoly& p) { return os << p.to_string(); }

// -------------------------------------------------------------------- BiPoly

BiPoly::BiPoly(Fp c) {
  if (!c.is_zero()) terms_.emplace(0, c);
}

BiPoly BiPoly::monomial(Monomial m, Fp c) {
  BiPoly p;
  p.add_term(m, c);
  return p;
}

BiPoly BiPoly::from_uv(const UniHomPoly& h) {
  BiPoly p;
  for (int k = 0; k <= h.degree() && !h.is_zero(); ++k) p.add_term({0, 0, h.degree() - k, k}, h.coeff(k));
  return p;
}

BiPoly BiPoly::from_st(const UniHomPoly& h) {
  BiPoly p;
  for (int k = 0; k <= h.degree() && !h.is_zero(); ++k) p.add_term({h.degree() - k, k, 0, 0}, h.coeff(k));
  return p;
}

BiPoly BiPoly::random(BiDegree bd, std::mt19937_64& rng) {
  BiPoly p;
  for (const Monomial& m : monomial_basis(bd.ds, bd.duv)) p.add_term(m, Fp::random(rng));
  return p;
}

Fp BiPoly::coeff(Monomial m) const {
  const auto it = terms_.find(m.key());
  return it == terms_.end() ? Fp(0) : it->second;
}

void BiPoly::add_term(Monomial m, Fp c) {
  if (c.is_zero()) return;
  if (m.s < 0 || m.t < 0 || m.u < 0 || m.v < 0 || m.s > 0xffff || m.t > 0xffff || m.u > 0xffff || m.v > 0xffff)
    throw std::out_of_range("monomial exponent out of range");
  auto [it, inserted] = terms_.emplace(m.key(), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

BiDegree BiPoly::bidegree() const {
  if (terms_.empty()) return {};
  return Monomial::from_key(terms_.begin()->first).bidegree();
}

bool BiPoly::is_bihomogeneous() const { return is_bihomogeneous(bidegree()); }

bool BiPoly::is_bihomogeneous(BiDegree bd) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const auto& kv) { return Monomial::from_key(kv.first).bidegree() == bd; });
}

namespace {

std::vector<Fp> powers(Fp x, int n) {
  std::vector<Fp> r(static_cast<std::size_t>(std::max(n, 0)) + 1, Fp(1));
  for (int i = 1; i <= n; ++i) r[i] = r[i - 1] * x;
  return r;
}

int max_exponent(const BiPoly::Terms& terms) {
  int e = 0;
  for (const auto& [k, c] : terms) {
    const Monomial m = Monomial::from_key(k);
    e = std::max({e, m.s, m.t, m.u, m.v});
  }
  return e;
}

}  // namespace

Fp BiPoly::eval(Fp s, Fp t, Fp u, Fp v) const {
  const int e = max_exponent(terms_);
  const auto ps = powers(s, e), pt = powers(t, e), pu = powers(u, e), pv = powers(v, e);
  Fp r(0);
  for (const auto& [k, c] : terms_) {
    const Monomial m = Monomial::from_key(k);
    r += c * ps[m.s] * pt[m.t] * pu[m.u] * pv[m.v];
  }
  return r;
}

BiPoly BiPoly::mirror() const {
  BiPoly p;
  for (const auto& [k, c] : terms_) {
    const Monomial m = Monomial::from_key(k);
    p.add_term({m.u, m.v, m.s, m.t}, c);
  }
  return p;
}

UniHomPoly BiPoly::at_st(Fp s0, Fp t0, int d) const {
  const int e = max_exponent(terms_);
  const auto ps = powers(s0, e), pt = powers(t0, e);
  std::vector<Fp> c(static_cast<std::size_t>(std::max(d, 0)) + 1);
  for (const auto& [k, x] : terms_) {
    const Monomial m = Monomial::from_key(k);
    if (m.u + m.v != d) throw InputError("at_st: polynomial is not of u,v-degree " + std::to_string(d));
    c[m.v] += x * ps[m.s] * pt[m.t];
  }
  return UniHomPoly(d, std::move(c));
}

UniHomPoly BiPoly::at_uv(Fp u0, Fp v0, int c) const {
  return mirror().at_st(u0, v0, c);
}

std::vector<UniHomPoly> BiPoly::st_slices(int c, int d) const {
  std::vector<std::vector<Fp>> raw(static_cast<std::size_t>(c) + 1, std::vector<Fp>(static_cast<std::size_t>(d) + 1));
  for (const auto& [k, x] : terms_) {
    const Monomial m = Monomial::from_key(k);
    if (m.s + m.t != c || m.u + m.v != d)
      throw InputError("st_slices: polynomial is not of bidegree (" + std::to_string(c) + "," + std::to_string(d) + ")");
    raw[m.t][m.v] = x;
  }
  std::vector<UniHomPoly> out;
  out.reserve(raw.size());
  for (auto& r : raw) out.emplace_back(d, std::move(r));
  return out;
}

BiPoly BiPoly::from_st_slices(const std::vector<UniHomPoly>& slices, int c) {
  BiPoly p;
  for (int i = 0; i <= c && i < static_cast<int>(slices.size()); ++i) {
    const UniHomPoly& h = slices[i];
    if (h.is_zero()) continue;
    for (int k = 0; k <= h.degree(); ++k) p.add_term({c - i, i, h.degree() - k, k}, h.coeff(k));
  }
  return p;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(Monomial::from_key(k), c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(Monomial::from_key(k), -c);
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  for (const auto& [ka, ca] : a.terms_) {
    const Monomial ma = Monomial::from_key(ka);
    for (const auto& [kb, cb] : b.terms_) r.add_term(ma * Monomial::from_key(kb), ca * cb);
  }
  return r;
}

BiPoly operator*(Fp c, const BiPoly& a) {
  BiPoly r;
  if (c.is_zero()) return r;
  for (const auto& [k, x] : a.terms_) r.terms_.emplace_hint(r.terms_.end(), k, x * c);
  return r;
}

std::string BiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, x] : terms_) {
    const Monomial m = Monomial::from_key(k);
    const std::int64_t c = x.signed_value();
    const bool has_var = m.s + m.t + m.u + m.v > 0;
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
    auto var = [&](char name, int e) {
      if (e == 0) return;
      if (need_star) os << '*';
      os << name;
      if (e > 1) os << '^' << e;
      need_star = true;
    };
    var('s', m.s);
    var('t', m.t);
    var('u', m.u);
    var('v', m.v);
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const BiPoly& p) { return os << p.to_string(); }

// -------------------------------------------------------------------- parser

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  BiPoly parse() {
    BiPoly r = expr();
    skip_ws();
    if (pos_ != s_.size()) fail(std::string("unexpected character '") + s_[pos_] + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  BiPoly expr() {
    skip_ws();
    BiPoly r;
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    r = term();
    if (neg) r = -r;
    for (;;) {
      if (eat('+')) r += term();
      else if (eat('-')) r -= term();
      else return r;
    }
  }

  BiPoly term() {
    BiPoly r = factor();
    while (eat('*')) r = r * factor();
    return r;
  }

  BiPoly factor() {
    BiPoly base = primary();
    if (!eat('^')) return base;
    skip_ws();
    const std::size_t start = pos_;
    std::uint64_t e = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      e = e * 10 + static_cast<std::uint64_t>(s_[pos_] - '0');
      if (e > 4096) fail("exponent too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected a nonnegative integer exponent");
    BiPoly r(Fp(1));
    while (e != 0) {
      if (e & 1U) r = r * base;
      e >>= 1U;
      if (e != 0) base = base * base;
    }
    return r;
  }

  BiPoly primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      BiPoly r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Fp x(0);
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        x = x * Fp(10) + Fp(s_[pos_] - '0');
        ++pos_;
      }
      return BiPoly(x);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const std::string_view name = s_.substr(start, pos_ - start);
      Monomial m;
      if (name == "s") m.s = 1;
      else if (name == "t") m.t = 1;
      else if (name == "u") m.u = 1;
      else if (name == "v") m.v = 1;
      else throw ParseError("unknown variable '" + std::string(name) + "'", start);
      return BiPoly::monomial(m);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

BiPoly parse_poly(std::string_view text) { return Parser(text).parse(); }

// ------------------------------------------------------------ monomial bases

std::vector<Monomial> monomial_basis(int c, int d) {
  std::vector<Monomial> out;
  if (c < 0 || d < 0) return out;
  out.reserve(static_cast<std::size_t>(c + 1) * static_cast<std::size_t>(d + 1));
  for (int i = c; i >= 0; --i)
    for (int k = d; k >= 0; --k) out.push_back({i, c - i, k, d - k});
  return out;
}

std::vector<Fp> coeff_vector(const BiPoly& poly, int c, int d) {
  std::vector<Fp> out(static_cast<std::size_t>(std::max(c + 1, 0)) * static_cast<std::size_t>(std::max(d + 1, 0)));
  for (const auto& [k, x] : poly.terms()) {
    const Monomial m = Monomial::from_key(k);
    if (m.s + m.t != c || m.u + m.v != d) {
      std::ostringstream os;
      os << "polynomial is not bihomogeneous of bidegree (" << c << ',' << d << ")";
      throw InputError(os.str());
    }
    out[basis_index(m, c, d)] = x;
  }
  return out;
}

BiPoly from_coeff_vector(const std::vector<Fp>& vec, int c, int d) {
  const auto basis = monomial_basis(c, d);
  if (vec.size() != basis.size()) throw std::invalid_argument("from_coeff_vector: length mismatch");
  BiPoly p;
  for (std::size_t i = 0; i < basis.size(); ++i) p.add_term(basis[i], vec[i]);
  return p;
}

}  // namespace tpsurf
