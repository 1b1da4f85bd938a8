#include "modular.hpp"

#include <mutex>
#include <vector>

#include "pvialg/kernels/modp.hpp"

namespace pvialg::modular {

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1u) r = r * b % m;
    b = b * b % m;
    e >>= 1u;
  }
  return r;
}

bool is_prime32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t q : {2u, 3u, 5u, 7u, 11u, 13u}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1u) == 0) {
    d >>= 1u;
    ++s;
  }
  for (std::uint64_t a : {2u, 7u, 61u}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = x * x % n;
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeInfo prime_at(std::size_t idx) {
  static std::mutex mu;
  static std::vector<PrimeInfo> cache;
  std::lock_guard<std::mutex> lock(mu);
  std::uint32_t next = cache.empty() ? (1u << kernels::kMaxModulusBits) - 3u : cache.back().p - 4u;
  while (cache.size() <= idx) {
    // candidates stay = 1 mod 4
    while (!is_prime32(next)) next -= 4u;
    std::uint32_t root = 0;
    for (std::uint64_t g = 2;; ++g) {
      if (powmod(g, (next - 1) / 2, next) == next - 1u) {
        root = static_cast<std::uint32_t>(powmod(g, (next - 1) / 4, next));
        break;
      }
    }
    cache.push_back({next, root});
    next -= 4u;
  }
  return cache[idx];
}

bool sqrt_mod(std::uint64_t a, std::uint64_t p, std::uint64_t& out) {
  a %= p;
  if (a == 0) {
    out = 0;
    return true;
  }
  if (powmod(a, (p - 1) / 2, p) != 1) return false;
  std::uint64_t q = p - 1;
  int s = 0;
  while ((q & 1u) == 0) {
    q >>= 1u;
    ++s;
  }
  std::uint64_t z = 2;
  while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
  std::uint64_t m = static_cast<std::uint64_t>(s);
  std::uint64_t c = powmod(z, q, p);
  std::uint64_t t = powmod(a, q, p);
  std::uint64_t r = powmod(a, (q + 1) / 2, p);
  while (t != 1) {
    std::uint64_t i = 0, tt = t;
    while (tt != 1) {
      tt = tt * tt % p;
      ++i;
    }
    std::uint64_t b = c;
    for (std::uint64_t j = 0; j + 1 < m - i; ++j) b = b * b % p;
    m = i;
    c = b * b % p;
    t = t * c % p;
    r = r * b % p;
  }
  out = r;
  return true;
}

}  // namespace pvialg::modular
