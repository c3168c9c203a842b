#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>

namespace tpsurf {

// Prime field configuration. The modulus is process-wide (see field::set_modulus);
// the seed drives every randomized check so runs are reproducible.
struct FieldConfig {
  std::uint32_t p = 2147483647u;
  std::uint64_t seed = 0x7e5c0ffeeULL;
};

namespace field {

inline constexpr std::uint32_t kDefaultModulus = 2147483647u;

namespace detail {
inline std::uint32_t g_modulus = kDefaultModulus;
inline bool g_mersenne31 = true;
}  // namespace detail

inline std::uint32_t modulus() noexcept { return detail::g_modulus; }

bool is_prime(std::uint64_t n) noexcept;

// Throws std::invalid_argument unless p is an odd prime below 2^32.
// Not thread-safe: set it before any concurrent work starts.
void set_modulus(std::uint32_t p);

// Reduces x < 2^64 modulo the current prime.
inline std::uint32_t reduce(std::uint64_t x) noexcept {
  if (detail::g_mersenne31) {
    constexpr std::uint64_t m = 2147483647u;
    x = (x & m) + (x >> 31);
    x = (x & m) + (x >> 31);
    return static_cast<std::uint32_t>(x >= m ? x - m : x);
  }
  return static_cast<std::uint32_t>(x % detail::g_modulus);
}

// Installs a modulus for the lifetime of the scope, restoring the previous one.
class ScopedModulus {
 public:
  explicit ScopedModulus(std::uint32_t p) : saved_(modulus()) { set_modulus(p); }
  ~ScopedModulus() { set_modulus(saved_); }
  ScopedModulus(const ScopedModulus&) = delete;
  ScopedModulus& operator=(const ScopedModulus&) = delete;

 private:
  std::uint32_t saved_;
};

}  // namespace field

// Element of F_p, always stored as the canonical representative in [0, p).
class Fp {
 public:
  constexpr Fp() noexcept = default;
  Fp(std::int64_t v) noexcept {  // NOLINT(google-explicit-constructor)
    const std::int64_t p = field::modulus();
    std::int64_t r = v % p;
    if (r < 0) r += p;
    v_ = static_cast<std::uint32_t>(r);
  }
  static Fp from_raw(std::uint32_t r) noexcept {
    Fp x;
    x.v_ = r;
    return x;
  }

  std::uint32_t value() const noexcept { return v_; }
  bool is_zero() const noexcept { return v_ == 0; }
  // Signed representative in (-p/2, p/2], used for printing.
  std::int64_t signed_value() const noexcept {
    const std::uint32_t p = field::modulus();
    return v_ > p / 2 ? static_cast<std::int64_t>(v_) - p : static_cast<std::int64_t>(v_);
  }

  Fp operator-() const noexcept { return from_raw(v_ == 0 ? 0 : field::modulus() - v_); }
  Fp& operator+=(Fp o) noexcept {
    std::uint64_t s = std::uint64_t{v_} + o.v_;
    if (s >= field::modulus()) s -= field::modulus();
    v_ = static_cast<std::uint32_t>(s);
    return *this;
  }
  Fp& operator-=(Fp o) noexcept {
    v_ = v_ >= o.v_ ? v_ - o.v_ : static_cast<std::uint32_t>(std::uint64_t{v_} + field::modulus() - o.v_);
    return *this;
  }
  Fp& operator*=(Fp o) noexcept {
    v_ = field::reduce(std::uint64_t{v_} * o.v_);
    return *this;
  }
  Fp& operator/=(Fp o) { return *this *= o.inv(); }

  friend Fp operator+(Fp a, Fp b) noexcept { return a += b; }
  friend Fp operator-(Fp a, Fp b) noexcept { return a -= b; }
  friend Fp operator*(Fp a, Fp b) noexcept { return a *= b; }
  friend Fp operator/(Fp a, Fp b) { return a /= b; }
  friend bool operator==(Fp a, Fp b) noexcept { return a.v_ == b.v_; }
  friend bool operator!=(Fp a, Fp b) noexcept { return a.v_ != b.v_; }

  // Throws std::domain_error on zero.
  Fp inv() const;
  Fp pow(std::uint64_t e) const noexcept;

  // Uniform element; `nonzero` excludes 0.
  static Fp random(std::mt19937_64& rng, bool nonzero = false);

 private:
  std::uint32_t v_ = 0;
};

std::ostream& operator<<(std::ostream& os, Fp x);

}  // namespace tpsurf
