#pragma once

// Word-size modular helpers shared by the modular gcd and the coprimality
// certificate.

#include <cstdint>
#include <cstddef>

namespace pvialg::modular {

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m);
inline std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }
bool is_prime32(std::uint32_t n);

struct PrimeInfo {
  std::uint32_t p;
  std::uint32_t root;  // a square root of -1 mod p
};

/// idx-th prime p = 1 (mod 4) counting down from 2^26.
PrimeInfo prime_at(std::size_t idx);

/// Square root mod p (Tonelli-Shanks); false if a is a non-residue.
bool sqrt_mod(std::uint64_t a, std::uint64_t p, std::uint64_t& out);

}  // namespace pvialg::modular
