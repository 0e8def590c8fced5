#include <cstdlib>
#include <string>

#include "planarq/gf.hpp"

namespace planarq::gf {

SizeLimits SizeLimits::from_env() {
  SizeLimits limits;
  if (const char* env = std::getenv("PLANARQ_MAX_Q3"); env != nullptr && *env != '\0') {
    try {
      std::size_t used = 0;
      limits.max_enumeration = std::stoull(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw Error(std::string("PLANARQ_MAX_Q3 is not a non-negative integer: ") + env);
    }
  }
  return limits;
}

void SizeLimits::require(std::uint64_t size, std::string_view what) const {
  if (size > max_enumeration) {
    throw SizeLimit(std::string(what) + " needs " + std::to_string(size) +
                    " elements, above the enumeration limit " + std::to_string(max_enumeration) +
                    " (override with PLANARQ_MAX_Q3)");
  }
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (__builtin_mul_overflow(r, base, &r)) {
      throw SizeLimit(std::to_string(base) + "^" + std::to_string(exp) + " overflows 64 bits");
    }
  }
  return r;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  if (mod == 1) return 0;
  unsigned __int128 r = 1;
  unsigned __int128 b = base % mod;
  while (exp > 0) {
    if (exp & 1) r = r * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(r);
}

}  // namespace planarq::gf
