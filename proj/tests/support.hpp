#pragma once

// Random generators and small helpers shared by the unit tests.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pvialg/catalog.hpp"

namespace pvialg::test {

inline constexpr std::uint64_t kSeed = 20240611;
inline constexpr int kCases = 100;

class Gen {
 public:
  explicit Gen(std::uint64_t seed = kSeed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  mpq_class rational(long range = 9) {
    mpq_class q(integer(-range, range), static_cast<unsigned long>(integer(1, range)));
    q.canonicalize();
    return q;
  }
  mpq_class nonzero_rational(long range = 9) {
    mpq_class q;
    do q = rational(range);
    while (q == 0);
    return q;
  }

  GaussRational gauss(bool complex = true) {
    return complex && coin() ? GaussRational(rational(), rational()) : GaussRational(rational());
  }

  QPoly qpoly(int max_deg, char var = 'u', bool complex = true) {
    int d = static_cast<int>(integer(0, max_deg));
    std::vector<GaussRational> c;
    for (int k = 0; k <= d; ++k) c.push_back(gauss(complex));
    return QPoly(std::move(c), var);
  }
  QPoly nonzero_qpoly(int max_deg, char var = 'u', bool complex = true) {
    QPoly p(var);
    do p = qpoly(max_deg, var, complex);
    while (p.is_zero());
    return p;
  }

  RatFunc ratfunc(int max_deg = 2, bool complex = true) {
    return RatFunc(qpoly(max_deg, 'u', complex), nonzero_qpoly(max_deg, 'u', complex));
  }

  ExtScalar ext(const FieldPtr& f, int max_deg = 2, bool complex = true) {
    return ExtScalar(ratfunc(max_deg, complex), ratfunc(max_deg, complex), f);
  }
  ExtScalar nonzero_ext(const FieldPtr& f, int max_deg = 2) {
    ExtScalar e;
    do e = ext(f, max_deg);
    while (e.is_zero());
    return e;
  }

  /// Polynomial in x with coefficients in Q(s), integer-valued parts.
  XPoly xpoly(int max_deg, int min_deg = 0) {
    int d = static_cast<int>(integer(min_deg, max_deg));
    std::vector<ExtScalar> c;
    for (int k = 0; k <= d; ++k) {
      std::vector<GaussRational> sc;
      for (int j = 0, n = static_cast<int>(integer(0, 2)); j <= n; ++j) sc.push_back(GaussRational(integer(-5, 5)));
      c.emplace_back(RatFunc(QPoly(std::move(sc), 's')));
    }
    if (c.back().is_zero()) c.back() = ExtScalar(1L);
    return XPoly(std::move(c), 'x');
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline const Catalog& cat() { return Catalog::builtin(); }

inline XPoly poly_of(const std::string& name) { return cat().value(name).num(); }

inline FieldPtr w10() { return cat().field("w10"); }

/// Parses an expression in the parameter `param`, optionally over `field`.
inline RatX parse(const std::string& text, char param = 's', const FieldPtr& field = nullptr) {
  ParseContext ctx;
  ctx.param = param;
  ctx.field = field;
  ctx.lookup = [](const std::string& n) -> const RatX* {
    return cat().contains(n) ? &cat().value(n) : nullptr;
  };
  return parse_expression(text, ctx);
}

inline ExtScalar scalar(const std::string& text, char param = 'u', const FieldPtr& field = nullptr) {
  return parse(text, param, field).constant_value();
}

}  // namespace pvialg::test
