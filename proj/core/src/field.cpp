#include "tpsurf/field.hpp"

#include <ostream>
#include <stdexcept>

namespace tpsurf {
namespace field {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

void set_modulus(std::uint32_t p) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("modulus must be an odd prime: " + std::to_string(p));
  detail::g_modulus = p;
  detail::g_mersenne31 = (p == 2147483647u);
}

}  // namespace field

Fp Fp::inv() const {
  if (v_ == 0) throw std::domain_error("inverse of zero in F_p");
  // extended Euclid on (v, p)
  std::int64_t a = v_, b = field::modulus(), x0 = 1, x1 = 0;
  while (b != 0) {
    const std::int64_t q = a / b;
    std::int64_t t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  return Fp(x0);
}

Fp Fp::pow(std::uint64_t e) const noexcept {
  Fp base = *this, r = from_raw(1);
  while (e != 0) {
    if (e & 1U) r *= base;
    base *= base;
    e >>= 1U;
  }
  return r;
}

Fp Fp::random(std::mt19937_64& rng, bool nonzero) {
  std::uniform_int_distribution<std::uint32_t> dist(nonzero ? 1U : 0U, field::modulus() - 1);
  return from_raw(dist(rng));
}

std::ostream& operator<<(std::ostream& os, Fp x) { return os << x.value(); }

}  // namespace tpsurf
