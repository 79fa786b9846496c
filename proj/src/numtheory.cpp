#include "sympal/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sympal::nt {

u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

u64 gcd(u64 a, u64 b) { return std::gcd(a, b); }

u64 lcm(u64 a, u64 b) { return a / gcd(a, b) * b; }

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

u64 pollard_rho(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    auto f = [&](u64 x) { return (mul_mod(x, x, n) + c) % n; };
    u64 x = 2, y = 2, d = 1;
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      d = gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

void factor_into(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  for (u64 p = 2; p < 1000 && p * p <= n; ++p) {
    while (n % p == 0) {
      out.push_back(p);
      n /= p;
    }
  }
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  u64 d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::vector<u64> factor(u64 n) {
  std::vector<u64> out;
  factor_into(n, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<u64> prime_divisors(u64 n) {
  auto f = factor(n);
  f.erase(std::unique(f.begin(), f.end()), f.end());
  return f;
}

std::vector<u64> divisors(u64 n) {
  std::vector<u64> out{1};
  auto f = factor(n);
  for (std::size_t i = 0; i < f.size();) {
    std::size_t j = i;
    while (j < f.size() && f[j] == f[i]) ++j;
    const std::size_t base = out.size();
    u64 pk = 1;
    for (std::size_t e = i; e < j; ++e) {
      pk *= f[i];
      for (std::size_t k = 0; k < base; ++k) out.push_back(out[k] * pk);
    }
    i = j;
  }
  std::sort(out.begin(), out.end());
  return out;
}

u64 multiplicative_order(u64 a, u64 m) {
  if (m < 2 || gcd(a % m, m) != 1) throw std::domain_error("multiplicative_order: a not a unit mod m");
  u64 phi = m;
  for (u64 p : prime_divisors(m)) phi = phi / p * (p - 1);
  u64 ord = phi;
  for (u64 p : prime_divisors(phi)) {
    while (ord % p == 0 && pow_mod(a, ord / p, m) == 1) ord /= p;
  }
  return ord;
}

std::optional<u64> checked_mul(u64 a, u64 b) {
  unsigned __int128 r = static_cast<unsigned __int128>(a) * b;
  if (r > static_cast<unsigned __int128>(~0ULL)) return std::nullopt;
  return static_cast<u64>(r);
}

std::optional<u64> checked_pow(u64 base, unsigned exp) {
  u64 r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    auto next = checked_mul(r, base);
    if (!next) return std::nullopt;
    r = *next;
  }
  return r;
}

u64 factorial(unsigned n) {
  u64 r = 1;
  for (unsigned i = 2; i <= n; ++i) {
    auto next = checked_mul(r, i);
    if (!next) throw std::overflow_error("factorial overflow");
    r = *next;
  }
  return r;
}

u64 inv_mod(u64 a, u64 m) {
  __int128 t = 0, new_t = 1;
  __int128 r = m, new_r = a % m;
  while (new_r != 0) {
    __int128 q = r / new_r;
    __int128 tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw std::domain_error("inv_mod: not invertible");
  if (t < 0) t += m;
  return static_cast<u64>(t);
}

}  // namespace sympal::nt
