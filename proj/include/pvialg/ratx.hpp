#pragma once

#include <string>

#include "pvialg/quadext.hpp"

namespace pvialg {

using XPoly = Poly<ExtScalar>;

/// gcd over Q(i)(u)(w). A single modular image (u, w and i specialised
/// into F_p) certifies coprimality through the resultant; otherwise the
/// gcd is computed by Euclid's algorithm.
XPoly gcd(XPoly a, XPoly b);

/// True when one modular image proves gcd(a, b) = 1. False means unknown.
bool certainly_coprime(const XPoly& a, const XPoly& b);

/// Substitute param := image (and w accordingly) in every coefficient.
XPoly apply(const ParamSubstitution& sub, const XPoly& p);

/// sum_k p_k a^k b^(n-k) for polynomials over any field.
template <class K>
Poly<K> homogenize_compose(const Poly<K>& p, const Poly<K>& a, const Poly<K>& b, int n) {
  char v = Poly<K>::merge_var(a, b);
  Poly<K> acc(v);
  if (p.is_zero()) return acc;
  std::vector<Poly<K>> bpow{Poly<K>(K(1), v)};
  for (int k = 1; k <= n; ++k) bpow.push_back(bpow.back() * b);
  Poly<K> apow(K(1), v);
  for (int k = 0; k <= p.degree(); ++k) {
    if (k > 0) apow *= a;
    const K& c = p.coeffs()[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    acc += (apow * bpow[static_cast<std::size_t>(n - k)]) * c;
  }
  return acc;
}

/// Rational function num/den in x over ExtScalar, reduced with den monic.
class RatX {
 public:
  RatX() : num_('x'), den_(ExtScalar(1L), 'x') {}
  RatX(const ExtScalar& c) : num_(c, 'x'), den_(ExtScalar(1L), 'x') {}  // NOLINT
  RatX(long c) : RatX(ExtScalar(c)) {}                                  // NOLINT
  RatX(XPoly num);                                                     // NOLINT
  RatX(XPoly num, XPoly den);

  /// Skips the gcd: the caller guarantees num and den are coprime.
  static RatX coprime(XPoly num, XPoly den);
  static RatX variable() { return RatX(XPoly::variable('x')); }

  const XPoly& num() const { return num_; }
  const XPoly& den() const { return den_; }
  int degree() const { return std::max(num_.degree(), den_.degree()); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  bool is_polynomial() const { return den_.degree() == 0; }
  ExtScalar constant_value() const;

  RatX operator-() const;
  RatX& operator+=(const RatX& o);
  RatX& operator-=(const RatX& o);
  RatX& operator*=(const RatX& o);
  RatX& operator/=(const RatX& o);
  friend RatX operator+(RatX a, const RatX& b) { return a += b; }
  friend RatX operator-(RatX a, const RatX& b) { return a -= b; }
  friend RatX operator*(RatX a, const RatX& b) { return a *= b; }
  friend RatX operator/(RatX a, const RatX& b) { return a /= b; }
  friend bool operator==(const RatX& a, const RatX& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RatX& a, const RatX& b) { return !(a == b); }

  RatX inverse() const;
  RatX pow(int e) const;
  RatX derivative() const;

  /// x := (a x + b) / (c x + d); coprimality is preserved when ad - bc != 0.
  RatX moebius(const ExtScalar& a, const ExtScalar& b, const ExtScalar& c, const ExtScalar& d) const;
  /// x := r.
  RatX compose(const RatX& r) const;
  RatX apply(const ParamSubstitution& sub) const;

  ExtScalar eval(const ExtScalar& x) const;

  std::string str() const;

 private:
  void normalize_den();

  XPoly num_;
  XPoly den_;
};

}  // namespace pvialg
